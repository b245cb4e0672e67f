#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "qf3/repr.hpp"

namespace qf3 {

// Binary layout, all integers little-endian:
//   "QF3THETA" | 0x01 | a b c r s t (i64 each) | N (u64) | counts[0..N] (u64 each)

std::vector<std::uint8_t> encode_theta(const ThetaSeries& th);
ThetaSeries decode_theta(std::span<const std::uint8_t> bytes);

std::filesystem::path theta_cache_path(const std::filesystem::path& dir, const TernaryForm& f, i64 bound);

void write_theta_cache(const std::filesystem::path& file, const ThetaSeries& th);

/// Loads the file when it exists, parses, and matches (f, bound) exactly.
std::optional<ThetaSeries> read_theta_cache(const std::filesystem::path& file, const TernaryForm& f, i64 bound);

/// Cache-backed theta: load on exact match, otherwise compute and (re)write.
/// An empty dir disables caching.
ThetaSeries cached_theta(const TernaryForm& f, i64 bound, const std::filesystem::path& dir, unsigned workers = 1,
                         bool* loaded = nullptr);

}  // namespace qf3
