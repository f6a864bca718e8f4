// Command-line front end: loads groups and character tables from JSON,
// dispatches to the library, and writes certification reports.
//
// Exit codes: 0 success with every certification passing, 1 an uncertified
// result, 2 usage or data errors.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thinbase/char_table.hpp"
#include "thinbase/cover.hpp"
#include "thinbase/decompose.hpp"
#include "thinbase/io.hpp"
#include "thinbase/minkowski.hpp"
#include "thinbase/perm_stats.hpp"
#include "thinbase/sampler.hpp"
#include "thinbase/subgroups.hpp"
#include "thinbase/tail_bounds.hpp"
#include "thinbase/word.hpp"

using namespace thinbase;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  std::string out;
  bool verify = true;
  bool stable = false;
  uint64_t seed = 0;
  int attempts = 20;
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--out", o.out, "write a JSON report to this path");
  cmd->add_flag("--verify,!--no-verify", o.verify, "run the independent brute-force oracle (default on)");
  cmd->add_flag("--stable", o.stable, "zero out timings for byte-stable reports");
}

int emit(const CommonOpts& o, const std::string& command, Json config, Json results, bool certified,
         const Stopwatch& watch) {
  Json rep;
  rep["artifact_version"] = kVersion;
  rep["command"] = command;
  rep["config"] = std::move(config);
  rep["results"] = std::move(results);
  rep["certified"] = certified;
  rep["timings_ms"] = {{"total", o.stable ? 0.0 : watch.ms()}};
  if (!o.out.empty()) write_json(o.out, rep);
  std::cout << rep.dump(2) << "\n";
  return certified ? 0 : 1;
}

int class_index(const CharacterTable& t, const std::string& key) {
  for (int i = 0; i < t.num_classes(); ++i)
    if (t.classes[static_cast<size_t>(i)].label == key) return i;
  try {
    int idx = std::stoi(key);
    if (idx >= 0 && idx < t.num_classes()) return idx;
  } catch (...) {
  }
  throw std::invalid_argument("no class with label or index '" + key + "'");
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

int run_decompose(const CommonOpts& o, const std::string& group_path, double x) {
  Stopwatch watch;
  FiniteGroup G = load_group(group_path);
  DecompositionCertificate cert = group_decompose(G, x);
  bool oracle_ok = true;
  if (o.verify)
    oracle_ok = cover_oracle(G, cert.X, cert.Y, SubsetMask::full_set(G.order())).none();
  Json results = certificate_to_json(cert);
  results["oracle_recheck"] = oracle_ok;
  results["y_bound"] = 2.0 * G.order() / x;
  return emit(o, "decompose", {{"group", group_path}, {"x", x}, {"verify", o.verify}}, results,
              cert.verified && oracle_ok, watch);
}

int run_square_root(const CommonOpts& o, const std::string& group_path) {
  Stopwatch watch;
  FiniteGroup G = load_group(group_path);
  SquareRootResult r = square_root(G);
  bool oracle_ok = true;
  if (o.verify) oracle_ok = cover_oracle(G, r.root, r.root, SubsetMask::full_set(G.order())).none();
  Json results;
  results["root"] = mask_to_json(r.root);
  results["root_size"] = r.root.count();
  results["bound"] = r.bound;
  results["oracle_recheck"] = oracle_ok;
  results["certificate"] = certificate_to_json(r.certificate);
  return emit(o, "square-root", {{"group", group_path}, {"verify", o.verify}}, results,
              r.verified && oracle_ok, watch);
}

int run_thin_base(const CommonOpts& o, const std::string& group_path, int x0, int y0,
                  const std::string& sweep_csv, const std::string& csv_path) {
  Stopwatch watch;
  FiniteGroup G = load_group(group_path);
  const int n = G.order();
  SubsetMask full = SubsetMask::full_set(n);

  if (x0 <= 0) x0 = static_cast<int>(std::ceil(std::sqrt(size_threshold(n, 1.0))));
  if (y0 <= 0) y0 = x0;
  x0 = std::min(x0, n);
  y0 = std::min(y0, n);

  Json results;
  ThinPairResult main_run = sample_thin_pair(G, full, full, full, x0, y0, o.seed, o.attempts);
  results["main"] = thin_pair_to_json(main_run);
  results["threshold_product"] = size_threshold(n, 1.0);

  bool oracle_ok = true;
  if (o.verify && main_run.certified)
    oracle_ok = cover_oracle(G, main_run.X0, main_run.Y0, full).none();
  results["oracle_recheck"] = oracle_ok;

  if (!sweep_csv.empty()) {
    Json sweep = Json::array();
    std::string csv_text = "size,attempt,uncovered,coverage\n";
    for (int size : parse_int_list(sweep_csv)) {
      int s = std::min(size, n);
      ThinPairResult r = sample_thin_pair(G, full, full, full, s, s, o.seed, o.attempts);
      Json entry;
      entry["size"] = s;
      entry["certified"] = r.certified;
      entry["attempts"] = r.attempts;
      Json fracs = Json::array();
      for (size_t i = 0; i < r.uncovered_history.size(); ++i) {
        double frac = 1.0 - static_cast<double>(r.uncovered_history[i]) / static_cast<double>(n);
        fracs.push_back(frac);
        csv_text += std::to_string(s) + "," + std::to_string(i + 1) + "," +
                    std::to_string(r.uncovered_history[i]) + "," + std::to_string(frac) + "\n";
      }
      entry["coverage_fractions"] = fracs;
      sweep.push_back(entry);
    }
    results["sweep"] = sweep;
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      f << csv_text;
    }
  }
  return emit(o, "thin-base",
              {{"group", group_path}, {"x0", x0}, {"y0", y0}, {"seed", o.seed}, {"attempts", o.attempts}},
              results, main_run.certified && oracle_ok, watch);
}

int run_waring(const CommonOpts& o, const std::string& group_path, const std::string& w1s,
               const std::string& w2s) {
  Stopwatch watch;
  FiniteGroup G = load_group(group_path);
  FreeWord w1 = FreeWord::parse(w1s);
  FreeWord w2 = FreeWord::parse(w2s);
  WordImage im1 = word_image_exhaustive(G, w1);
  WordImage im2 = word_image_exhaustive(G, w2);
  SubsetMask uncovered = product_cover_check(G, im1.image, im2.image, SubsetMask::full_set(G.order()));
  bool covered = uncovered.none();
  bool oracle_ok = true;
  if (o.verify)
    oracle_ok = cover_oracle(G, im1.image, im2.image, SubsetMask::full_set(G.order())) == uncovered;
  Json results;
  results["w1_image_size"] = im1.image.count();
  results["w2_image_size"] = im2.image.count();
  results["covered"] = covered;
  results["uncovered_count"] = uncovered.count();
  results["oracle_recheck"] = oracle_ok;
  return emit(o, "waring-check", {{"group", group_path}, {"w1", w1s}, {"w2", w2s}}, results,
              covered && oracle_ok, watch);
}

int run_frobenius(const CommonOpts& o, const std::string& table_path, const std::string& group_path,
                  const std::string& c1, const std::string& c2, const std::string& c3, bool want_sum) {
  Stopwatch watch;
  CharacterTable t = load_character_table(table_path);
  ValidationReport val = t.validate();
  if (!val.valid) throw std::invalid_argument("character table invalid: " + val.summary());

  int i = class_index(t, c1), j = class_index(t, c2), k = class_index(t, c3);
  Json results;
  bool certified = true;
  if (want_sum) {
    std::complex<double> csum = t.char_sum(i, j, k);
    results["char_sum"] = {{"re", csum.real()}, {"im", csum.imag()}};
    results["modulus"] = std::abs(csum);
    double count = t.frobenius_count(i, j, k);
    double s1 = static_cast<double>(t.classes[static_cast<size_t>(i)].size);
    double s2 = static_cast<double>(t.classes[static_cast<size_t>(j)].size);
    results["relation_residual"] =
        std::abs(csum.real() - (count * static_cast<double>(t.group_order) / (s1 * s2) - 1.0));
  } else {
    double count = t.frobenius_count(i, j, k);
    results["count"] = std::llround(count);
    results["residual"] = std::abs(count - std::llround(count));
  }

  if (!group_path.empty()) {
    FiniteGroup G = load_group(group_path);
    if (G.order() != t.group_order)
      throw std::invalid_argument("table order " + std::to_string(t.group_order) +
                                  " does not match group order " + std::to_string(G.order()));
    ValidationReport vg = t.validate(&G);
    if (!vg.valid) throw std::invalid_argument("table does not match group: " + vg.summary());
    if (o.verify) {
      ClassMatching match = match_classes(t, G);
      if (!match.ok) throw std::invalid_argument("class matching failed: " + match.error);
      auto counts = class_product_counts(G);
      long long brute = counts[static_cast<size_t>(match.table_to_group[static_cast<size_t>(i)])]
                              [static_cast<size_t>(match.table_to_group[static_cast<size_t>(j)])]
                              [static_cast<size_t>(match.table_to_group[static_cast<size_t>(k)])];
      results["brute_force_count"] = brute;
      certified = (brute == std::llround(t.frobenius_count(i, j, k)));
    }
  }
  return emit(o, want_sum ? "char-sum" : "frobenius",
              {{"table", table_path}, {"group", group_path}, {"c1", c1}, {"c2", c2}, {"c3", c3}},
              results, certified, watch);
}

int run_perm_stats(const CommonOpts& o, const std::string& image_csv, const std::string& type_csv,
                   int n, int min_fixed) {
  Stopwatch watch;
  Json results;
  std::vector<int> image;
  if (!image_csv.empty()) {
    image = parse_int_list(image_csv);
  } else if (!type_csv.empty()) {
    std::vector<int> type = parse_int_list(type_csv);
    int total = 0;
    for (int len : type) total += len;
    if (n < total) n = total;
    image.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i;
    int pos = 0;
    for (int len : type) {
      for (int i = 0; i < len; ++i) image[static_cast<size_t>(pos + i)] = pos + (i + 1) % len;
      pos += len;
    }
  } else {
    throw std::invalid_argument("perm-stats needs --image or --cycle-type");
  }
  PermStat st = perm_stat(image);
  results["n"] = st.n;
  results["cycle_type"] = st.cycle_type;
  results["fixed_points"] = st.fixed_points;
  results["sigma"] = st.sigma;
  results["e"] = st.e;
  results["E"] = st.E;
  if (min_fixed >= 0) {
    MinFixedCount mc = count_min_fixed(st.n, min_fixed);
    results["min_fixed"] = {{"m", min_fixed}, {"exact", mc.exact}, {"bound", mc.factorial_bound}};
  }
  return emit(o, "perm-stats", {{"image", image_csv}, {"cycle_type", type_csv}, {"n", n}}, results,
              true, watch);
}

int run_stratified(const CommonOpts& o, int n, const std::string& w1s, const std::string& w2s,
                   int x0, int y0) {
  Stopwatch watch;
  StratifiedParams params;
  params.x0 = x0;
  params.y0 = y0;
  params.max_attempts = o.attempts;
  StratifiedReport rep =
      stratified_thin_base(n, FreeWord::parse(w1s), FreeWord::parse(w2s), params, o.seed);
  bool oracle_ok = true;
  if (o.verify && rep.certified) {
    FiniteGroup A = alternating_group(n);
    oracle_ok = cover_oracle(A, rep.X, rep.Y, SubsetMask::full_set(A.order())).none();
  }
  Json results = stratified_to_json(rep);
  results["oracle_recheck"] = oracle_ok;
  return emit(o, "stratified",
              {{"n", n}, {"w1", w1s}, {"w2", w2s}, {"seed", o.seed}, {"attempts", o.attempts}},
              results, rep.certified && oracle_ok, watch);
}

int run_mink_dim(const CommonOpts& o, int cantor_depth, int torus_d, int torus_depth) {
  Stopwatch watch;
  Json results;
  bool certified = true;
  if (cantor_depth > 0) {
    CantorPair cp = cantor_sets(cantor_depth);
    std::vector<Rational> scales;
    for (int j = 4; j <= std::min(10, cantor_depth); ++j) scales.push_back(Rational::pow4(-j));
    if (scales.empty()) scales.push_back(Rational::pow4(-cantor_depth));
    DimensionEstimate da = dimension_estimate(cp.A_points, scales);
    DimensionEstimate db = dimension_estimate(cp.B_points, scales);
    auto cover = sumset_cover_check(cp.A, cp.B, Rational(-1), Rational(1), Rational::pow4(-cantor_depth));
    results["cantor"] = {{"depth", cantor_depth},
                         {"dim_a", da.slope},
                         {"dim_b", db.slope},
                         {"residual_a", da.max_residual},
                         {"residual_b", db.max_residual},
                         {"scales", da.scales},
                         {"counts_a", da.counts},
                         {"counts_b", db.counts},
                         {"sum_covers", cover.covered},
                         {"worst_gap", cover.max_gap}};
    certified = certified && cover.covered;
  }
  if (torus_d > 0) {
    TorusSquareRoot t = torus_square_root(torus_d, torus_depth);
    results["torus"] = {{"d", t.dim},
                        {"depth", t.depth},
                        {"cover_certified", t.cover_certified},
                        {"worst_gap", t.worst_gap},
                        {"grid_delta", t.grid_delta},
                        {"grid_points", t.grid_points},
                        {"dim_x", t.dim_x.slope},
                        {"dim_y", t.dim_y.slope},
                        {"residual_x", t.dim_x.max_residual},
                        {"residual_y", t.dim_y.max_residual},
                        {"x_factors", t.x_factors},
                        {"y_factors", t.y_factors}};
    certified = certified && t.cover_certified &&
                std::abs(t.dim_x.slope - torus_d / 2.0) <= 0.05 * torus_d &&
                std::abs(t.dim_y.slope - torus_d / 2.0) <= 0.05 * torus_d;
  }
  if (results.empty()) throw std::invalid_argument("mink-dim needs --cantor-depth or --torus-d");
  return emit(o, "mink-dim",
              {{"cantor_depth", cantor_depth}, {"torus_d", torus_d}, {"torus_depth", torus_depth}},
              results, certified, watch);
}

int run_tail_bounds(const CommonOpts& o, long long n, long long a, long long b, long long k,
                    long long sweep_max) {
  Stopwatch watch;
  Json results;
  bool certified = true;
  if (sweep_max > 0) {
    long long violations = 0, checked = 0;
    for (long long nn = 2; nn <= sweep_max; ++nn)
      for (long long aa = 1; aa <= nn; ++aa)
        for (long long bb = 1; bb <= nn; ++bb) {
          auto d = disjoint_prob(nn, aa, bb);
          auto t = small_intersection_prob(nn, aa, bb);
          ++checked;
          if (d.exact > d.bound || t.exact > t.bound) ++violations;
        }
    results["sweep_max"] = sweep_max;
    results["triples_checked"] = checked;
    results["violations"] = violations;
    certified = (violations == 0);
  } else {
    auto d = disjoint_prob(n, a, b);
    auto t = small_intersection_prob(n, a, b, k);
    results["disjoint"] = {{"exact", d.exact}, {"bound", d.bound}};
    results["tail"] = {{"k", t.k}, {"exact", t.exact}, {"bound", t.bound}, {"degenerate", t.degenerate}};
    certified = d.exact <= d.bound && (t.degenerate || t.exact <= t.bound);
  }
  return emit(o, "tail-bounds", {{"n", n}, {"a", a}, {"b", b}, {"k", k}, {"sweep_max", sweep_max}},
              results, certified, watch);
}

int run_report_merge(const CommonOpts& o, const std::vector<std::string>& inputs) {
  if (o.out.empty()) throw std::invalid_argument("report-merge requires --out");
  Json merged = Json::array();
  for (const auto& path : inputs) merged.push_back(read_json(path));
  write_json(o.out, merged);
  std::cout << "merged " << inputs.size() << " report(s) into " << o.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thin bases, square roots, and covering certificates for finite groups"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string group_path, table_path, word = "a", w1, w2;
  std::string image_csv, type_csv, sweep_csv, csv_path;
  std::vector<std::string> merge_inputs;
  double x = 2.0;
  int x0 = 0, y0 = 0, n = 0, min_fixed = -1;
  int cantor_depth = 0, torus_d = 0, torus_depth = 6;
  long long tb_n = 10, tb_a = 2, tb_b = 2, tb_k = -1, sweep_max = 0;
  std::string c1 = "0", c2 = "0", c3 = "0";

  auto* dec = app.add_subcommand("decompose", "G = XY with |X| <= x, |Y| <= 2|G|/x, verified");
  dec->add_option("--group", group_path)->required();
  dec->add_option("--x", x)->required();
  add_common(dec, o);

  auto* sq = app.add_subcommand("square-root", "R with R^2 = G and |R| <= sqrt(8|G|)");
  sq->add_option("--group", group_path)->required();
  add_common(sq, o);

  auto* tb = app.add_subcommand("thin-base", "random thin pair X0 Y0 covering G");
  tb->add_option("--group", group_path)->required();
  tb->add_option("--x0", x0);
  tb->add_option("--y0", y0);
  tb->add_option("--sweep", sweep_csv, "comma-separated sizes to sweep");
  tb->add_option("--csv", csv_path, "write the sweep as CSV");
  tb->add_option("--seed", o.seed);
  tb->add_option("--attempts", o.attempts);
  add_common(tb, o);

  auto* wc = app.add_subcommand("waring-check", "does w1(G) w2(G) = G?");
  wc->add_option("--group", group_path)->required();
  wc->add_option("--word", word, "use the same word on both sides");
  wc->add_option("--w1", w1);
  wc->add_option("--w2", w2);
  add_common(wc, o);

  auto* fr = app.add_subcommand("frobenius", "class-triple representation count from a table");
  fr->add_option("--table", table_path)->required();
  fr->add_option("--group", group_path, "cross-check against this group");
  fr->add_option("--c1", c1)->required();
  fr->add_option("--c2", c2)->required();
  fr->add_option("--c3", c3)->required();
  add_common(fr, o);

  auto* cs = app.add_subcommand("char-sum", "nontrivial-character sum for a class triple");
  cs->add_option("--table", table_path)->required();
  cs->add_option("--c1", c1)->required();
  cs->add_option("--c2", c2)->required();
  cs->add_option("--c3", c3)->required();
  add_common(cs, o);

  auto* ps = app.add_subcommand("perm-stats", "cycle statistics and the E exponent");
  ps->add_option("--image", image_csv, "permutation image array, comma separated");
  ps->add_option("--cycle-type", type_csv, "cycle lengths, comma separated");
  ps->add_option("--n", n, "domain size (pads with fixed points)");
  ps->add_option("--min-fixed", min_fixed, "also count permutations with >= m fixed points");
  add_common(ps, o);

  auto* st = app.add_subcommand("stratified", "stratified thin-base cover of A_n");
  st->add_option("--n", n)->required();
  st->add_option("--word", word);
  st->add_option("--w1", w1);
  st->add_option("--w2", w2);
  st->add_option("--x0", x0);
  st->add_option("--y0", y0);
  st->add_option("--seed", o.seed);
  st->add_option("--attempts", o.attempts);
  add_common(st, o);

  auto* mk = app.add_subcommand("mink-dim", "packing dimensions, Cantor sumsets, torus square roots");
  mk->add_option("--cantor-depth", cantor_depth);
  mk->add_option("--torus-d", torus_d);
  mk->add_option("--depth", torus_depth);
  add_common(mk, o);

  auto* tbnd = app.add_subcommand("tail-bounds", "exact hypergeometric probabilities vs their exponential bounds");
  tbnd->add_option("--n", tb_n);
  tbnd->add_option("--a", tb_a);
  tbnd->add_option("--b", tb_b);
  tbnd->add_option("--k", tb_k);
  tbnd->add_option("--sweep-max", sweep_max, "certify all triples with n up to this bound");
  add_common(tbnd, o);

  auto* rm = app.add_subcommand("report-merge", "merge JSON reports into one array");
  rm->add_option("inputs", merge_inputs)->required();
  add_common(rm, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dec->parsed()) return run_decompose(o, group_path, x);
    if (sq->parsed()) return run_square_root(o, group_path);
    if (tb->parsed()) return run_thin_base(o, group_path, x0, y0, sweep_csv, csv_path);
    if (wc->parsed())
      return run_waring(o, group_path, w1.empty() ? word : w1, w2.empty() ? (w1.empty() ? word : w1) : w2);
    if (fr->parsed()) return run_frobenius(o, table_path, group_path, c1, c2, c3, false);
    if (cs->parsed()) return run_frobenius(o, table_path, group_path, c1, c2, c3, true);
    if (ps->parsed()) return run_perm_stats(o, image_csv, type_csv, n, min_fixed);
    if (st->parsed())
      return run_stratified(o, n, w1.empty() ? word : w1, w2.empty() ? (w1.empty() ? word : w1) : w2, x0, y0);
    if (mk->parsed()) return run_mink_dim(o, cantor_depth, torus_d, torus_depth);
    if (tbnd->parsed()) return run_tail_bounds(o, tb_n, tb_a, tb_b, tb_k, sweep_max);
    if (rm->parsed()) return run_report_merge(o, merge_inputs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
