#include "qf3/io.hpp"

#include <sstream>

namespace qf3 {

Json to_json(const Vec3i& v) { return Json::array({v[0], v[1], v[2]}); }

Json to_json(const UniversalityReport& r) {
  Json j;
  j["form"] = r.form.to_string();
  j["d"] = r.spec.d;
  j["r"] = r.spec.r;
  j["n0"] = r.spec.n0;
  j["constraint"] = r.spec.constraint.to_string();
  j["N"] = r.bound;
  j["verified"] = r.verified;
  if (r.vacuous) j["vacuous"] = true;
  j["counterexamples"] = r.counterexamples;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const SuiteEntry& e) {
  Json j;
  j["id"] = e.theorem_case->id;
  j["kind"] = std::string(to_string(e.theorem_case->kind));
  j["status"] = e.status;
  j["report"] = to_json(e.report);
  return j;
}

Json to_json(const ScaledIsometry& e) {
  Json j;
  j["tag"] = e.tag;
  j["source"] = e.source.to_string();
  j["target"] = e.target.to_string();
  j["scale"] = e.scale;
  Json m = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 3; ++k) {
      const Rational q = e.entry(i, k);
      row.push_back(to_string(q.num()) + "/" + to_string(q.den()));
    }
    m.push_back(row);
  }
  j["matrix"] = m;
  Json pre = Json::array();
  for (const auto& p : e.preconditions) pre.push_back(p.to_string());
  j["preconditions"] = pre;
  j["expected"] = std::string(to_string(e.expected));
  if (!e.corrects.empty()) j["corrects"] = e.corrects;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json to_json(const PipelineResult& r) {
  Json j;
  j["value"] = r.value;
  j["rep"] = to_json(r.rep);
  j["witness"] = r.witness;
  j["trace"] = r.trace;
  return j;
}

Json to_json(const DescentResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.trace) steps.push_back({{"x", s.x}, {"y", s.y}, {"k", s.k}, {"eps", s.eps}});
  return {{"u", r.u}, {"v", r.v}, {"trace", steps}};
}

Json to_json(const EscapeResult& r) {
  Json path = Json::array();
  for (const auto& v : r.path) path.push_back(to_json(v));
  return {{"rep", to_json(r.rep)}, {"path", path}, {"fell_back", r.fell_back}};
}

Json catalog_json() {
  Json j = Json::array();
  for (const auto& e : builtin_catalog()) j.push_back(to_json(e));
  return j;
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(std::move(v));
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(std::move(v));
  }
  return j;
}

std::string csv_header_report() { return "id,status,form,d,r,n0,constraint,N,verified,counterexamples,elapsed_ms"; }

std::string csv_row(const UniversalityReport& r, const std::string& id, const std::string& status) {
  std::ostringstream os;
  std::string cex;
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) cex += (i ? " " : "") + std::to_string(r.counterexamples[i]);
  os << id << "," << status << ",\"" << r.form.to_string() << "\"," << r.spec.d << "," << r.spec.r << "," << r.spec.n0
     << ",\"" << r.spec.constraint.to_string() << "\"," << r.bound << "," << (r.verified ? "true" : "false") << ",\""
     << cex << "\"," << r.elapsed_ms;
  return os.str();
}

}  // namespace qf3
