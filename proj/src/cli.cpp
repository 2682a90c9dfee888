#include "fockbench/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fockbench/boundedness.hpp"
#include "fockbench/json_io.hpp"
#include "fockbench/onemode.hpp"
#include "fockbench/opalg.hpp"
#include "fockbench/subproduct.hpp"

namespace fock::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Io {
  std::ostream& out;
  std::ostream& err;

  void emit(const std::string& text, const std::string& path) const {
    if (path.empty()) out << text;
    else write_file_atomic(path, text);
  }
  void emit(const json& j, const std::string& path) const { emit(dump_json(j), path); }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      try {
        out.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error("cannot parse '" + item + "' as an integer");
      }
    }
  return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json growth_json(const GrowthFit& g) {
  return json{{"slope", g.slope}, {"log_intercept", g.log_intercept}, {"label", g.label}};
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      const double v = row[i];
      s += v == std::floor(v) && std::abs(v) < 1e15 ? std::to_string(static_cast<long long>(v)) : format_double(v);
    }
    s += '\n';
  }
  return s;
}

// --- deform / validate / build / verify -------------------------------------

struct DeformArgs {
  std::string kind = "q";
  double q = 0.0;
  int d = 2;
  int N = 3;
  int param = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string ranks;
  std::string in;
  std::string out;
};

std::vector<Index> default_ranks(int d, int N) {
  std::vector<Index> r{1};
  Index full = 1;
  for (int n = 1; n <= N; ++n) {
    full *= d;
    r.push_back(std::min(full, d * r.back()));
  }
  return r;
}

int cmd_deform(const DeformArgs& a, const Io& io) {
  DeformationFamily family{TruncatedFockSpace(1, 0), {identity(1)}};
  if (a.kind == "q") {
    family = q_fock(TruncatedFockSpace(a.d, a.N), a.q);
  } else if (a.kind == "monotone") {
    family = discrete_monotone(TruncatedFockSpace(a.d, a.N));
  } else if (a.kind == "identity") {
    family = identity_family(TruncatedFockSpace(a.d, a.N));
  } else if (a.kind == "random") {
    std::vector<Index> ranks;
    if (a.ranks.empty()) {
      ranks = default_ranks(a.d, a.N);
    } else {
      ranks.push_back(1);
      for (int r : parse_int_list(a.ranks)) ranks.push_back(r);
    }
    family = random_poi_family(a.d, a.N, ranks, a.seed);
  } else if (a.kind == "grid") {
    family = grid_family(a.param > 0 ? a.param : 4);
  } else if (a.kind == "block") {
    family = block_family(a.param > 0 ? a.param : 3);
  } else if (a.kind == "two-space") {
    family = two_space_family(identity(a.d));
  } else if (a.kind == "file") {
    if (a.in.empty()) throw Error("deform --kind file needs --in");
    family = family_from_json(read_json_file(a.in));
  } else {
    throw Error("unknown --kind '" + a.kind + "'");
  }
  io.emit(family_to_json(family), a.out);
  return kExitPass;
}

json validation_json(const ValidationReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels)
    levels.push_back(json{{"level", l.level},
                          {"min_eigenvalue", l.min_eigenvalue},
                          {"max_eigenvalue", l.max_eigenvalue},
                          {"hermitian_defect", l.hermitian_defect},
                          {"symmetrized", l.symmetrized},
                          {"psd", l.psd},
                          {"kernel_dim", l.kernel_dim},
                          {"kernel_violation", l.kernel_violation},
                          {"kernel_ok", l.kernel_ok}});
  return json{{"passed", r.passed()},
              {"vacuum_ok", r.vacuum_ok},
              {"psd_ok", r.psd_ok},
              {"kernel_ok", r.kernel_ok},
              {"levels", levels}};
}

struct Tolerances {
  double rank_tol = kRankTol;
  double psd_tol = 1e-10;
  double residual_tol = 1e-9;

  BuildOptions build() const { return BuildOptions{rank_tol, psd_tol, residual_tol}; }
  ValidationOptions validation() const {
    ValidationOptions v;
    v.psd_tol = psd_tol;
    v.rank_tol = rank_tol;
    return v;
  }
};

int cmd_validate(const std::string& path, const std::string& report, const Tolerances& tol, const Io& io) {
  const auto family = family_from_json(read_json_file(path));
  const auto r = validate(family, tol.validation());
  json j = validation_json(r);
  if (r.passed()) {
    const auto k = factor_K(family, 1.0, tol.rank_tol);  // residual reported, not enforced here
    j["K_residuals"] = k.residuals;
  }
  io.emit(j, report);
  return r.passed() ? kExitPass : kExitNegative;
}

int cmd_build(const std::string& path, const std::string& out, const Tolerances& tol, const Io& io) {
  const auto family = family_from_json(read_json_file(path));
  const auto r = validate(family, tol.validation());
  if (!r.passed()) {
    io.err << "build: the family fails validation (psd " << (r.psd_ok ? "ok" : "FAILED") << ", kernel condition "
           << (r.kernel_ok ? "ok" : "FAILED") << ")\n";
    return kExitNegative;
  }
  io.emit(space_to_json(build(family, tol.build())), out);
  return kExitPass;
}

int cmd_verify(const std::string& path, const std::string& report, const Io& io) {
  const auto space = space_from_json(read_json_file(path));
  const auto r = verify(space);
  const bool pass = r.max_residual() <= 1e-8 && r.vacuum_ok && r.spanning_ok;
  io.emit(json{{"passed", pass},
               {"ranks", space.ranks},
               {"gram", r.gram},
               {"isometry", r.isometry},
               {"embedding", r.embedding},
               {"well_definedness", r.well_definedness},
               {"intertwining", r.intertwining},
               {"lambda_recursion", r.lambda_recursion},
               {"vacuum_ok", r.vacuum_ok},
               {"spanning_ok", r.spanning_ok},
               {"max_residual", r.max_residual()}},
          report);
  return pass ? kExitPass : kExitNegative;
}

// --- onemode / bounds ---------------------------------------------------------

int cmd_onemode(const std::string& path, int N, const std::string& report, const Io& io) {
  const json j = read_json_file(path);
  const json& arr = j.is_object() && j.contains("moments") ? j.at("moments") : j;
  if (!arr.is_array()) throw Error("moments JSON must be an array or {\"moments\": [...]}");
  std::vector<double> moments;
  for (const auto& m : arr) moments.push_back(m.get<double>());
  if (moments.empty()) throw Error("empty moment sequence");
  const auto jac = jacobi_from_moments(moments);
  // -N caps the level count; the moments themselves cap it at floor((len - 1) / 2).
  const int levels = N >= 0 ? std::min(N, jac.N()) : jac.N();
  const auto space = onemode_space(jac, levels);
  const int M = std::min(static_cast<int>(moments.size()) - 1, 2 * levels + 1);
  const auto vm = vacuum_moments(space, M);
  double roundtrip = 0.0;
  for (int m = 0; m <= M; ++m) {
    const double want = moments[static_cast<std::size_t>(m)];
    roundtrip = std::max(roundtrip, std::abs(vm[static_cast<std::size_t>(m)] - want) / std::max(1.0, std::abs(want)));
  }
  const double orth = orthogonality_residual(jac, moments);
  const bool pass = roundtrip <= 1e-9;
  io.emit(json{{"k", jac.k},
               {"ell", jac.ell},
               {"levels", levels},
               {"polynomials", polynomials(jac)},
               {"vacuum_moments", vm},
               {"roundtrip_residual", roundtrip},
               {"orthogonality_residual", orth},
               {"passed", pass}},
          report);
  return pass ? kExitPass : kExitNegative;
}

int cmd_bounds(const std::string& path, const std::string& x_path, std::uint64_t seed, const std::string& report,
               const Io& io) {
  const auto space = space_from_json(read_json_file(path));
  const Vec x = x_path.empty() ? unit_vector(space.d(), 0) : vector_from_json(read_json_file(x_path));
  if (x.size() != space.d()) throw Error("--x has dimension " + std::to_string(x.size()) + ", expected " +
                                         std::to_string(space.d()));
  const auto r = bounds_report(space, x, seed);
  json levels = json::array();
  for (const auto& l : r.levels)
    levels.push_back(json{{"level", l.level},
                          {"creator_norm", l.creator_norm},
                          {"kappa_form_norm", l.kappa_form_norm},
                          {"pencil_constant", l.pencil_constant},
                          {"kernel_compat", l.kernel_compat}});
  json map = json::array();
  for (const auto& c : r.creator_map)
    map.push_back(json{{"level", c.level}, {"value", c.value}, {"exact", c.exact}});
  double top = 0.0;
  for (const auto& l : r.levels) top = std::max(top, l.creator_norm);
  io.emit(json{{"levels", levels},
               {"creator_map", map},
               {"x_norm", r.x_norm},
               {"kappa_norm", r.kappa_norm},
               {"kappa_bound_holds", top <= r.kappa_norm * r.x_norm + 1e-9},
               {"growth", growth_json(r.creator_growth)}},
          report);
  return kExitPass;
}

// --- demos ------------------------------------------------------------------------

struct DemoArgs {
  std::string name;
  int param = -1;
  int basis = -1;
  int samples = 1000;
  double max_entry = 100.0;
  std::uint64_t seed = kDefaultSeed;
  std::string csv_path;
  std::string report;
};

int cmd_demo(const DemoArgs& a, const Io& io) {
  json report;
  std::string table;
  bool pass = false;
  if (a.name == "bLunbex") {
    const int top = a.param > 0 ? a.param : 400;
    if (top < 4) throw Error("bLunbex needs --param >= 4");
    std::vector<int> grids;
    for (int m = 4; m < top; m *= 2) grids.push_back(m);
    grids.push_back(top);
    const auto demo = demo_bounded_L_unbounded_creators(grids);
    std::vector<std::vector<double>> rows;
    json jr = json::array();
    double lmax = 0.0;
    for (const auto& r : demo.rows) {
      rows.push_back({static_cast<double>(r.m), r.ratio, r.L_max});
      jr.push_back(json{{"m", r.m}, {"ratio", r.ratio}, {"L_max", r.L_max}});
      lmax = std::max(lmax, r.L_max);
    }
    table = csv({"m", "ratio", "L_max"}, rows);
    pass = demo.growth.label == "diverging" && lmax <= 1.0;
    report = json{{"demo", a.name},    {"rows", jr},           {"growth_factor", demo.growth_factor},
                  {"L_max", lmax},     {"growth", growth_json(demo.growth)}};
  } else if (a.name == "bA*unbL" || a.name == "bAunbL") {
    const int top = a.param > 0 ? a.param : 40;
    if (top < 2) throw Error("bA*unbL needs --param >= 2");
    std::vector<std::vector<double>> rows;
    json jr = json::array();
    std::vector<double> ks, norms;
    double worst = 0.0;
    bool norm_ok = true;
    for (int K = 2; K <= top; ++K) {
      const auto demo = demo_bounded_creators_unbounded_L(K, a.seed);
      rows.push_back({static_cast<double>(K), demo.L2_norm, demo.max_constant});
      jr.push_back(json{{"K", K}, {"L2_norm", demo.L2_norm}, {"max_constant", demo.max_constant}, {"probes", demo.probes}});
      ks.push_back(K);
      norms.push_back(demo.L2_norm);
      worst = std::max(worst, demo.max_constant);
      norm_ok = norm_ok && std::abs(demo.L2_norm - K) <= 1e-9 * K;
    }
    const auto g = diagnose_growth(ks, norms);
    table = csv({"K", "L2_norm", "max_constant"}, rows);
    pass = worst <= 1.0 + 1e-10 && norm_ok && g.label == "diverging";
    report = json{{"demo", "bA*unbL"}, {"rows", jr}, {"max_constant", worst}, {"L2_growth", growth_json(g)}};
  } else if (a.name == "kappaunb") {
    const int top = a.param > 0 ? a.param : 500;
    const auto demo = demo_unbounded_squeezing(top);
    std::vector<std::vector<double>> rows;
    for (std::size_t n = 0; n < demo.ratios.size(); ++n) rows.push_back({static_cast<double>(n + 1), demo.ratios[n]});
    table = csv({"N", "ratio"}, rows);
    pass = demo.strictly_increasing && demo.growth.label == "diverging";
    report = json{{"demo", a.name},
                  {"N", top},
                  {"final_ratio", demo.ratios.back()},
                  {"strictly_increasing", demo.strictly_increasing},
                  {"growth", growth_json(demo.growth)}};
  } else if (a.name == "phicb") {
    const int B = a.basis > 0 ? a.basis : (a.param > 0 ? a.param : 50);
    const auto F = random_functional(B, a.max_entry, a.seed);
    const auto r = rescale_functional(F, a.seed + 1, a.samples);
    std::vector<std::vector<double>> rows;
    for (std::size_t n = 0; n < r.f.size(); ++n) rows.push_back({static_cast<double>(n + 1), r.f[n], r.c[n]});
    table = csv({"n", "f", "c"}, rows);
    pass = r.certified();
    report = json{{"demo", a.name},
                  {"basis", B},
                  {"samples", r.samples},
                  {"entry_bound_ok", r.entry_bound_ok},
                  {"exact_norm", r.exact_norm},
                  {"maximizer_ratio", r.maximizer_ratio},
                  {"max_ratio", r.max_random_ratio},
                  {"bound", r.bound}};
  } else {
    throw Error("unknown demo '" + a.name + "' (bLunbex, bA*unbL, kappaunb, phicb)");
  }
  report["verdict"] = pass ? "pass" : "fail";
  if (!a.csv_path.empty()) write_file_atomic(a.csv_path, table);
  io.emit(report, a.report);
  return pass ? kExitPass : kExitNegative;
}

// --- subproduct -----------------------------------------------------------------

json certificate_json(const SubproductCertificate& c, const ProjectionFamily& f) {
  json pairs = json::array();
  for (const auto& p : c.pairwise) pairs.push_back(json{{"m", p.m}, {"n", p.n}, {"violation", p.violation}});
  return json{{"subproduct_system", c.subproduct_system()},
              {"pirec_ok", c.pirec_ok},
              {"spsker_ok", c.spsker_ok},
              {"pairwise_ok", c.pairwise_ok},
              {"inconsistent", c.inconsistent},
              {"pirec", c.pirec},
              {"spsker", c.spsker},
              {"pairwise", pairs},
              {"max_pirec", c.max_pirec},
              {"max_spsker", c.max_spsker},
              {"max_pairwise", c.max_pairwise},
              {"products_checked", c.products_checked},
              {"coisometry_residual", c.coisometry_residual},
              {"associativity_residual", c.associativity_residual},
              {"tol", c.tol},
              {"ranks", f.ranks},
              {"pi1_is_identity", f.pi1_is_identity}};
}

int cmd_certify(const std::string& path, const std::string& report, const Io& io) {
  const auto family = projection_family_from_json(read_json_file(path));
  const auto c = certify(family);
  io.emit(certificate_json(c, family), report);
  const bool pass = c.subproduct_system() && !c.inconsistent && c.coisometry_residual <= c.tol &&
                    c.associativity_residual <= c.tol;
  return pass ? kExitPass : kExitNegative;
}

int cmd_pi_build(const std::string& path, const std::string& out, const std::string& report, const Io& io) {
  const auto family = projection_family_from_json(read_json_file(path));
  const auto c = certify(family);
  if (!c.pirec_ok) {
    io.err << "subproduct build: π_{n+1} <= id⊗π_n fails (violation " << format_double(c.max_pirec) << ")\n";
    io.emit(json{{"pirec_ok", false}, {"max_pirec", c.max_pirec}}, report);
    return kExitNegative;
  }
  const auto ps = pi_space(family);
  if (!out.empty()) write_file_atomic(out, dump_json(space_to_json(ps.space)));
  const bool pass = ps.max_deviation() <= 1e-10;
  const json summary{{"pirec_ok", true},
                     {"ranks", ps.space.ranks},
                     {"L_deviation", ps.L_deviation},
                     {"lambda_deviation", ps.lambda_deviation},
                     {"kappa_deviation", ps.kappa_deviation},
                     {"max_deviation", ps.max_deviation()},
                     {"passed", pass}};
  if (!report.empty() || out.empty()) io.emit(summary, report);
  return pass ? kExitPass : kExitNegative;
}

struct GenerateArgs {
  std::string kind = "random";
  int d = 2;
  int N = 4;
  std::string ranks;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, const Io& io) {
  const TruncatedFockSpace space(a.d, a.N);
  ProjectionFamily f;
  if (a.kind == "random") {
    std::vector<int> ranks{1};
    const auto given = parse_int_list(a.ranks);
    if (!given.empty() && static_cast<int>(given.size()) != a.N)
      throw Error("--ranks needs N = " + std::to_string(a.N) + " entries r1..rN");
    for (int n = 1; n <= a.N; ++n) ranks.push_back(given.empty() ? -1 : given[static_cast<std::size_t>(n - 1)]);
    f = random_adjacent_family(a.d, a.N, ranks, a.seed);
  } else if (a.kind == "symmetric") {
    f = symmetrizer_family(space);
  } else if (a.kind == "full") {
    f = full_projection_family(space);
  } else if (a.kind == "product") {
    f = product_tensor_family(a.d, a.N);
  } else {
    throw Error("unknown --kind '" + a.kind + "' (random, symmetric, full, product)");
  }
  io.emit(projection_family_to_json(f), a.out);
  return kExitPass;
}

int cmd_two_sided(const std::string& path, const std::string& report, const Io& io) {
  const auto space = space_from_json(read_json_file(path));
  const auto r = two_sided_test(space);
  io.emit(json{{"exists", r.exists},
               {"right_kernel_residual", r.right_kernel_residual},
               {"factorization_residual", r.factorization_residual},
               {"kappa_prime_norms", r.kappa_prime_norms},
               {"kappa_norms", r.kappa_norms},
               {"kappa_contraction", r.kappa_contraction},
               {"kappa_prime_contraction", r.kappa_prime_contraction}},
          report);
  return r.exists ? kExitPass : kExitNegative;
}

// --- opalg --------------------------------------------------------------------------

struct OpalgArgs {
  std::string path;
  std::string example;
  std::string which;
  int horizon = -1;
  std::string report;
};

int cmd_opalg(const OpalgArgs& a, const Io& io) {
  InteractingSpace space;
  if (!a.example.empty()) {
    if (a.example != "two-space") throw Error("unknown --example '" + a.example + "' (two-space)");
    space = build(two_space_family(identity(3)));
  } else {
    if (a.path.empty()) throw Error("opalg needs a space file or --example");
    space = space_from_json(read_json_file(a.path));
  }
  std::vector<SpanKind> kinds;
  if (a.which.empty()) kinds = all_span_kinds();
  else
    for (const auto& name : parse_name_list(a.which)) kinds.push_back(parse_span_kind(name));
  const int W = a.horizon > 0 ? a.horizon : default_horizon(space);

  std::vector<OperatorSpan> spans;
  json jspans = json::object();
  for (auto k : kinds) {
    spans.push_back(span_build(space, k, W));
    const auto& s = spans.back();
    jspans[s.name] = json{{"rank", s.rank}, {"stabilized", s.stabilized}, {"rank_by_length", s.rank_by_length}};
  }
  json inclusions = json::array();
  json ternary = json::object();
  json actions = json::array();
  const auto scalars = scalar_span(space);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const bool mi = is_module_kind(kinds[i]);
    if (mi) ternary[spans[i].name] = check_ternary(spans[i]);
    for (std::size_t j = 0; j < spans.size(); ++j) {
      if (i == j) continue;
      const bool mj = is_module_kind(kinds[j]);
      if (mi == mj) {
        const double res = containment(spans[i], spans[j]);
        inclusions.push_back(json{{"sub", spans[i].name}, {"super", spans[j].name}, {"residual", res},
                                  {"contained", res <= 1e-10}});
      } else if (!mi && mj) {
        const auto act = check_left_action(spans[i], spans[j]);
        actions.push_back(json{{"algebra", spans[i].name}, {"module", spans[j].name},
                               {"invariance_residual", act.invariance_residual},
                               {"product_rank", act.product_rank}, {"module_rank", spans[j].rank},
                               {"invariant", act.invariant}, {"nondegenerate", act.nondegenerate}});
      }
    }
    if (mi) {
      const auto act = check_left_action(scalars, spans[i]);
      actions.push_back(json{{"algebra", "C"}, {"module", spans[i].name},
                             {"invariance_residual", act.invariance_residual},
                             {"product_rank", act.product_rank}, {"module_rank", spans[i].rank},
                             {"invariant", act.invariant}, {"nondegenerate", act.nondegenerate}});
    }
  }
  io.emit(json{{"horizon", W},
               {"ranks", space.ranks},
               {"spans", jspans},
               {"inclusions", inclusions},
               {"ternary_residual", ternary},
               {"left_actions", actions}},
          a.report);
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Io io{out, err};
  CLI::App app{"fockbench: truncated interacting Fock spaces, numerically", "fockbench"};
  app.require_subcommand(1);
  std::function<int()> action;

  Tolerances tol;
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--rank-tol", tol.rank_tol, "relative rank threshold")->check(CLI::PositiveNumber);
    sub->add_option("--psd-tol", tol.psd_tol, "allowed negative eigenvalue, relative")->check(CLI::PositiveNumber);
    sub->add_option("--residual-tol", tol.residual_tol, "creator well-definedness tolerance")->check(CLI::PositiveNumber);
  };

  DeformArgs deform;
  auto* s_deform = app.add_subcommand("deform", "construct a deformation family");
  s_deform->add_option("--kind", deform.kind, "q | monotone | identity | random | grid | block | two-space | file");
  s_deform->add_option("--q", deform.q, "deformation parameter in [-1, 1]");
  s_deform->add_option("-d", deform.d, "one-particle dimension");
  s_deform->add_option("-N", deform.N, "level cutoff");
  s_deform->add_option("--param", deform.param, "grid cells (grid) or block count (block)");
  s_deform->add_option("--ranks", deform.ranks, "level ranks r1,..,rN (random)");
  s_deform->add_option("--seed", deform.seed, "random seed");
  s_deform->add_option("--in", deform.in, "input family (file)");
  s_deform->add_option("--out", deform.out, "output path");
  s_deform->callback([&] { action = [&] { return cmd_deform(deform, io); }; });

  std::string path, out_path, report;
  auto* s_validate = app.add_subcommand("validate", "positivity and kernel condition of a family");
  s_validate->add_option("family", path, "family JSON")->required();
  s_validate->add_option("--report", report, "report path");
  add_tolerances(s_validate);
  s_validate->callback([&] { action = [&] { return cmd_validate(path, report, tol, io); }; });

  auto* s_build = app.add_subcommand("build", "build the interacting Fock space of a family");
  s_build->add_option("family", path, "family JSON")->required();
  s_build->add_option("--out", out_path, "space JSON");
  add_tolerances(s_build);
  s_build->callback([&] { action = [&] { return cmd_build(path, out_path, tol, io); }; });

  auto* s_verify = app.add_subcommand("verify", "residuals of the structural identities of a space");
  s_verify->add_option("space", path, "space JSON")->required();
  s_verify->add_option("--report", report, "report path");
  s_verify->callback([&] { action = [&] { return cmd_verify(path, report, io); }; });

  int onemode_N = -1;
  auto* s_onemode = app.add_subcommand("onemode", "moments -> Jacobi parameters -> vacuum moments");
  s_onemode->add_option("--moments", path, "moments JSON")->required();
  s_onemode->add_option("-N", onemode_N, "level cutoff (default: all moments)");
  s_onemode->add_option("--report", report, "report path");
  s_onemode->callback([&] { action = [&] { return cmd_onemode(path, onemode_N, report, io); }; });

  std::string x_path;
  std::uint64_t seed = kDefaultSeed;
  auto* s_bounds = app.add_subcommand("bounds", "creator norms and operator-inequality constants");
  s_bounds->add_option("space", path, "space JSON")->required();
  s_bounds->add_option("--x", x_path, "one-particle vector JSON (default e_0)");
  s_bounds->add_option("--seed", seed, "seed for the creator-map search");
  s_bounds->add_option("--report", report, "report path");
  s_bounds->callback([&] { action = [&] { return cmd_bounds(path, x_path, seed, report, io); }; });

  DemoArgs demo;
  auto* s_demo = app.add_subcommand("demo", "growth tables of the counterexample families");
  s_demo->add_option("name", demo.name, "bLunbex | bA*unbL | kappaunb | phicb")->required();
  s_demo->add_option("--param", demo.param, "largest grid / block count / N / basis size");
  s_demo->add_option("--basis", demo.basis, "basis size (phicb)");
  s_demo->add_option("--samples", demo.samples, "random vectors (phicb)");
  s_demo->add_option("--max-entry", demo.max_entry, "largest functional entry (phicb)");
  s_demo->add_option("--seed", demo.seed, "random seed");
  s_demo->add_option("--csv", demo.csv_path, "growth table path");
  s_demo->add_option("--report", demo.report, "JSON verdict path");
  s_demo->callback([&] { action = [&] { return cmd_demo(demo, io); }; });

  auto* s_sub = app.add_subcommand("subproduct", "projection families and subproduct systems");
  s_sub->require_subcommand(1);
  auto* s_certify = s_sub->add_subcommand("certify", "check id⊗π_n >= π_{n+1} <= π_n⊗id and the products");
  s_certify->add_option("family", path, "projection family JSON")->required();
  s_certify->add_option("--report", report, "report path");
  s_certify->callback([&] { action = [&] { return cmd_certify(path, report, io); }; });
  auto* s_pbuild = s_sub->add_subcommand("build", "the π-interacting Fock space");
  s_pbuild->add_option("family", path, "projection family JSON")->required();
  s_pbuild->add_option("--out", out_path, "space JSON");
  s_pbuild->add_option("--report", report, "report path");
  s_pbuild->callback([&] { action = [&] { return cmd_pi_build(path, out_path, report, io); }; });
  GenerateArgs gen;
  auto* s_gen = s_sub->add_subcommand("generate", "seeded projection families");
  s_gen->add_option("--kind", gen.kind, "random | symmetric | full | product");
  s_gen->add_option("-d", gen.d, "one-particle dimension");
  s_gen->add_option("-N", gen.N, "level cutoff");
  s_gen->add_option("--ranks", gen.ranks, "ranks r1,..,rN; -1 draws a random admissible rank");
  s_gen->add_option("--seed", gen.seed, "random seed");
  s_gen->add_option("--out", gen.out, "output path");
  s_gen->callback([&] { action = [&] { return cmd_generate(gen, io); }; });
  auto* s_two = s_sub->add_subcommand("twosided", "right-kernel condition and κ′ of a space");
  s_two->add_option("space", path, "space JSON")->required();
  s_two->add_option("--report", report, "report path");
  s_two->callback([&] { action = [&] { return cmd_two_sided(path, report, io); }; });

  OpalgArgs op;
  auto* s_op = app.add_subcommand("opalg", "word-algebra spans and their relations");
  s_op->add_option("space", op.path, "space JSON");
  s_op->add_option("--example", op.example, "built-in space instead of a file: two-space");
  s_op->add_option("--which", op.which, "comma list of E_A*, E_NC, E_I, E, B_A*, B_NC, B_I, B (default all)");
  s_op->add_option("--horizon", op.horizon, "longest word (default 2N + 2)");
  s_op->add_option("--report", op.report, "report path");
  s_op->callback([&] { action = [&] { return cmd_opalg(op, io); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    return action();
  } catch (const std::exception& e) {
    err << "fockbench: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fock::cli
