#include "qf3/theta_cache.hpp"

#include <cstring>
#include <fstream>
#include <iterator>

namespace qf3 {

namespace {

constexpr char kMagic[8] = {'Q', 'F', '3', 'T', 'H', 'E', 'T', 'A'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kHeader = 8 + 1 + 6 * 8 + 8;

void put_u64(std::vector<std::uint8_t>& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

u64 get_u64(std::span<const std::uint8_t> in, std::size_t at) {
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(in[at + i]) << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_theta(const ThetaSeries& th) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.reserve(kHeader + th.counts.size() * 8);
  out.push_back(kVersion);
  for (i64 c : th.form.coefficients()) put_u64(out, static_cast<u64>(c));
  put_u64(out, static_cast<u64>(th.bound));
  for (u64 c : th.counts) put_u64(out, c);
  return out;
}

ThetaSeries decode_theta(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeader || std::memcmp(bytes.data(), kMagic, 8) != 0)
    throw Error(ErrorKind::ParseError, "not a QF3THETA file");
  if (bytes[8] != kVersion) throw Error(ErrorKind::ParseError, "unsupported QF3THETA version");
  std::array<i64, 6> c{};
  for (int i = 0; i < 6; ++i) c[i] = static_cast<i64>(get_u64(bytes, 9 + 8 * i));
  const u64 bound = get_u64(bytes, 9 + 48);
  if (bound > (u64{1} << 40) || bytes.size() != kHeader + (bound + 1) * 8)
    throw Error(ErrorKind::ParseError, "QF3THETA length does not match its bound");
  ThetaSeries th{make_form(c[0], c[1], c[2], c[3], c[4], c[5]), static_cast<i64>(bound), {}};
  th.counts.resize(bound + 1);
  for (u64 n = 0; n <= bound; ++n) th.counts[n] = get_u64(bytes, kHeader + 8 * n);
  return th;
}

std::filesystem::path theta_cache_path(const std::filesystem::path& dir, const TernaryForm& f, i64 bound) {
  std::string name = "theta";
  for (i64 c : f.coefficients()) name += "_" + std::to_string(c);
  name += "_N" + std::to_string(bound) + ".qf3";
  return dir / name;
}

void write_theta_cache(const std::filesystem::path& file, const ThetaSeries& th) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto bytes = encode_theta(th);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorKind::IoError, "cannot write " + tmp);
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!os) throw Error(ErrorKind::IoError, "short write to " + tmp);
  }
  std::filesystem::rename(tmp, file);
}

std::optional<ThetaSeries> read_theta_cache(const std::filesystem::path& file, const TernaryForm& f, i64 bound) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  try {
    ThetaSeries th = decode_theta(bytes);
    if (th.form != f || th.bound != bound) return std::nullopt;
    return th;
  } catch (const Error&) {
    return std::nullopt;
  }
}

ThetaSeries cached_theta(const TernaryForm& f, i64 bound, const std::filesystem::path& dir, unsigned workers,
                         bool* loaded) {
  if (loaded) *loaded = false;
  if (dir.empty()) return theta(f, bound, {workers, {}});
  const auto file = theta_cache_path(dir, f, bound);
  if (auto hit = read_theta_cache(file, f, bound)) {
    if (loaded) *loaded = true;
    return std::move(*hit);
  }
  ThetaSeries th = theta(f, bound, {workers, {}});
  write_theta_cache(file, th);
  return th;
}

}  // namespace qf3
