#include "thinbase/io.hpp"

#include <fstream>
#include <stdexcept>

namespace thinbase {

FiniteGroup group_from_json(const Json& j) {
  std::string name = j.value("name", "");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "permutation") {
    int degree = j.at("degree").get<int>();
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    return FiniteGroup::from_generators(degree, gens, name);
  }
  if (kind == "table") {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    return FiniteGroup::from_table(std::move(table), name);
  }
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

FiniteGroup load_group(const std::string& path) { return group_from_json(read_json(path)); }

CharacterTable table_from_json(const Json& j) {
  CharacterTable t;
  t.group_name = j.value("group", "");
  t.group_order = j.at("order").get<long long>();
  for (const auto& c : j.at("classes")) {
    TableClass tc;
    tc.label = c.at("label").get<std::string>();
    tc.size = c.at("size").get<long long>();
    tc.rep_order = c.at("rep_order").get<int>();
    t.classes.push_back(std::move(tc));
  }
  for (const auto& row : j.at("chars")) {
    std::vector<std::complex<double>> r;
    for (const auto& v : row) r.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    t.chars.push_back(std::move(r));
  }
  return t;
}

CharacterTable load_character_table(const std::string& path) { return table_from_json(read_json(path)); }

Json mask_to_json(const SubsetMask& m) { return Json(m.indices()); }

Json certificate_to_json(const DecompositionCertificate& cert) {
  Json j;
  j["x_target"] = cert.x_target;
  j["verified"] = cert.verified;
  j["X"] = mask_to_json(cert.X);
  j["Y"] = mask_to_json(cert.Y);
  j["x_size"] = cert.X.count();
  j["y_size"] = cert.Y.count();
  Json trace = Json::array();
  for (const auto& s : cert.trace) {
    trace.push_back({{"case", s.case_label},
                     {"group_order", s.group_order},
                     {"x", s.x_used},
                     {"subgroup_order", s.subgroup_order},
                     {"quotient_order", s.quotient_order}});
  }
  j["trace"] = trace;
  return j;
}

Json thin_pair_to_json(const ThinPairResult& r) {
  Json j;
  j["certified"] = r.certified;
  j["feasible"] = r.feasible;
  j["attempts"] = r.attempts;
  j["seed"] = r.seed;
  j["x0_size"] = r.X0.count();
  j["y0_size"] = r.Y0.count();
  j["uncovered"] = r.uncovered.count();
  j["uncovered_history"] = r.uncovered_history;
  return j;
}

Json stratified_to_json(const StratifiedReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["w1"] = rep.w1;
  j["w2"] = rep.w2;
  j["certified"] = rep.certified;
  j["images_exact"] = rep.images_exact;
  j["x_total"] = rep.x_total;
  j["y_total"] = rep.y_total;
  j["ratio_x"] = rep.ratio_x;
  j["ratio_y"] = rep.ratio_y;
  j["z1_max_fixed"] = rep.z1_max_fixed;
  j["tail_min_fixed"] = rep.tail_min_fixed;
  j["tail_count"] = rep.tail_count;
  if (!rep.error.empty()) j["error"] = rep.error;
  Json strata = Json::array();
  for (const auto& s : rep.strata) {
    Json e;
    e["label"] = s.label;
    e["z_size"] = s.z_size;
    e["certified"] = s.certified;
    if (!s.c1_type.empty()) {
      e["c1_type"] = s.c1_type;
      e["c2_type"] = s.c2_type;
      e["c1_size"] = s.c1_size;
      e["c2_size"] = s.c2_size;
      e["x0"] = s.x0;
      e["y0"] = s.y0;
      e["attempts"] = s.attempts;
    }
    if (!s.error.empty()) e["error"] = s.error;
    strata.push_back(std::move(e));
  }
  j["strata"] = strata;
  return j;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

}  // namespace thinbase
