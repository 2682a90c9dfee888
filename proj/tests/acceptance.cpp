// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fockbench/boundedness.hpp"
#include "fockbench/cli.hpp"
#include "fockbench/onemode.hpp"
#include "fockbench/opalg.hpp"
#include "fockbench/random.hpp"
#include "fockbench/subproduct.hpp"
#include "oracles.hpp"

using namespace fock;

namespace {

namespace tol {
constexpr double kCommutation = 1e-9;     // Frobenius, per level
constexpr double kPsd = 1e-10;            // relative to λ_max
constexpr double kNaiveRecursive = 1e-12; // relative Frobenius
constexpr double kJacobi = 1e-8;
constexpr double kMomentRoundTrip = 1e-9; // relative
constexpr double kSqueezing = 1e-9;
constexpr double kIntertwining = 1e-9;
constexpr double kLambdaRecursion = 1e-8;
constexpr double kWordGram = 1e-8;
constexpr double kSubproduct = 1e-10;
constexpr double kSpsker = 0.9;           // minimal violation for the negative example
constexpr double kPiDeviation = 1e-10;
constexpr double kGridGrowth = 9.0;
constexpr double kBlockConstant = 1.0 + 1e-10;
constexpr double kBlockNorm = 1e-12;      // relative
constexpr double kSqueezingRatio = 5.0;
constexpr double kFunctionalBound = 1.0 / 3.0;
constexpr double kSpanResidual = 1e-9;
}  // namespace tol

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("failed: ") + what;
  }
}

void note(Outcome& o, const std::string& what) { o.detail += (o.detail.empty() ? "" : "; ") + what; }

Mat level_block(const InteractingSpace& s, const Mat& op, int n) {
  const auto off = s.offsets();
  const Index r = s.ranks[static_cast<std::size_t>(n)];
  return op.block(off[static_cast<std::size_t>(n)], off[static_cast<std::size_t>(n)], r, r);
}

Mat word_gram(const InteractingSpace& s, int n) {
  const int d = s.d();
  Index count = 1;
  for (int k = 0; k < n; ++k) count *= d;
  std::vector<Vec> vecs;
  for (Index flat = 0; flat < count; ++flat) {
    Word w;
    for (int i : decode_index(static_cast<std::size_t>(flat), n, d)) w.push_back(Letter{true, unit_vector(d, i)});
    vecs.push_back(apply_word(w, s).coords);
  }
  Mat g = Mat::Zero(count, count);
  for (Index i = 0; i < count; ++i)
    for (Index j = 0; j < count; ++j)
      if (vecs[static_cast<std::size_t>(i)].size()) g(i, j) = vecs[static_cast<std::size_t>(i)].dot(vecs[static_cast<std::size_t>(j)]);
  return g;
}

// --- 1 ------------------------------------------------------------------------
Outcome q_commutation() {
  Outcome o;
  Rng rng(101);
  double worst = 0.0;
  for (double q : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    const auto s = build(q_fock(TruncatedFockSpace(2, 5), q));
    for (int t = 0; t < 20; ++t) {
      const Vec x = rng.gaussian_vector(2), y = rng.gaussian_vector(2);
      const Mat a_x = s.creator_operator(x).adjoint();
      const Mat a_star_y = s.creator_operator(y);
      const Mat rel = a_x * a_star_y - q * a_star_y * a_x - x.dot(y) * identity(s.total_dim());
      for (int n = 0; n < 5; ++n) worst = std::max(worst, level_block(s, rel, n).norm());
    }
  }
  require(o, worst <= tol::kCommutation, "residual " + sci(worst));
  note(o, "max Frobenius residual " + sci(worst));
  return o;
}

// --- 2 ------------------------------------------------------------------------
Outcome q_positivity() {
  Outcome o;
  double worst_neg = 0.0, worst_diff = 0.0;
  for (int d = 1; d <= 3; ++d)
    for (double q : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
      const TruncatedFockSpace space(d, 6);
      const auto naive = q_fock(space, q, QFockPath::Naive);
      const auto rec = q_fock_recursive(space, q);
      for (int n = 1; n <= 6; ++n) {
        const Mat& L = naive.L[static_cast<std::size_t>(n)];
        Eigen::SelfAdjointEigenSolver<Mat> es(L, Eigen::EigenvaluesOnly);
        const double lmin = es.eigenvalues().minCoeff(), lmax = es.eigenvalues().maxCoeff();
        worst_neg = std::max(worst_neg, -lmin / lmax);
        worst_diff = std::max(worst_diff, rel_diff(L, rec.L[static_cast<std::size_t>(n)]));
      }
    }
  require(o, worst_neg <= tol::kPsd, "negative eigenvalue ratio " + sci(worst_neg));
  require(o, worst_diff <= tol::kNaiveRecursive, "naive vs recursive " + sci(worst_diff));
  note(o, "worst -λmin/λmax " + sci(worst_neg) + ", naive vs recursive " + sci(worst_diff));
  return o;
}

// --- 3 ------------------------------------------------------------------------
Outcome onemode_round_trip() {
  Outcome o;
  const std::vector<double> gauss{1, 0, 1, 0, 3, 0, 15, 0, 105};
  const std::vector<double> catalan{1, 0, 1, 0, 2, 0, 5, 0, 14};
  double k_err = 0.0, oracle_err = 0.0, moment_err = 0.0;
  for (const auto* m : {&gauss, &catalan}) {
    const auto j = jacobi_from_moments(*m);
    const auto ell = oracle::gram_schmidt_norms(*m);
    for (int n = 1; n <= 4; ++n) {
      const double want = m == &gauss ? n : 1.0;
      const double k = j.k[static_cast<std::size_t>(n - 1)];
      k_err = std::max(k_err, std::abs(k - want) / want);
      const double gs = ell[static_cast<std::size_t>(n)] / ell[static_cast<std::size_t>(n - 1)];
      oracle_err = std::max(oracle_err, std::abs(k - gs) / gs);
    }
    const auto s = onemode_space(j, j.N());
    const auto vm = vacuum_moments(s, j.N());
    for (int p = 0; p <= j.N(); ++p)
      moment_err = std::max(moment_err, std::abs(vm[static_cast<std::size_t>(p)] - (*m)[static_cast<std::size_t>(p)]) /
                                            std::max(1.0, std::abs((*m)[static_cast<std::size_t>(p)])));
  }
  require(o, k_err <= tol::kJacobi, "k error " + sci(k_err));
  require(o, oracle_err <= tol::kJacobi, "Gram–Schmidt oracle " + sci(oracle_err));
  require(o, moment_err <= tol::kMomentRoundTrip, "moment round trip " + sci(moment_err));
  note(o, "k error " + sci(k_err) + ", oracle " + sci(oracle_err) + ", moments " + sci(moment_err));
  return o;
}

// --- 4 ------------------------------------------------------------------------
std::vector<Index> random_ranks(Rng& rng, int d, int N) {
  std::vector<Index> r{1};
  Index full = 1;
  for (int n = 1; n <= N; ++n) {
    full *= d;
    const Index hi = std::min(full, d * r.back());
    r.push_back(rng.uniform_int(1, static_cast<int>(hi)));
  }
  return r;
}

Outcome squeezing_round_trip() {
  Outcome o;
  Rng rng(404);
  double sq = 0.0, inter = 0.0, rec = 0.0, gram = 0.0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto s = build(random_poi_family(2, 4, random_ranks(rng, 2, 4), seed));
    const auto kappa = squeezing_of(s);
    const auto own = check_squeezing(kappa, 2), rel = check_squeezing_for(s, kappa);
    sq = std::max({sq, own.vanishing_residual, own.range_residual, rel.vanishing_residual, rel.range_residual});
    const auto r = verify(s);
    inter = std::max(inter, r.intertwining);
    rec = std::max(rec, r.lambda_recursion);
    const auto t = space_from_squeezing(kappa, s.space);
    for (int n = 1; n <= 4; ++n) gram = std::max(gram, rel_diff(word_gram(s, n), word_gram(t, n)));
  }
  require(o, sq <= tol::kSqueezing, "squeezing invariants " + sci(sq));
  require(o, inter <= tol::kIntertwining, "intertwining " + sci(inter));
  require(o, rec <= tol::kLambdaRecursion, "λ recursion " + sci(rec));
  require(o, gram <= tol::kWordGram, "word Gram " + sci(gram));
  note(o, "squeezing " + sci(sq) + ", intertwining " + sci(inter) + ", λ recursion " + sci(rec) + ", word Gram " + sci(gram));
  return o;
}

// --- 5 and 6 ----------------------------------------------------------------------
std::vector<ProjectionFamily> random_families() {
  std::vector<ProjectionFamily> out;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) out.push_back(random_adjacent_family(2, 4, {1, -1, -1, -1, -1}, seed));
  return out;
}

Outcome subproduct_conditions(const std::vector<ProjectionFamily>& families) {
  Outcome o;
  double pair = 0.0, cois = 0.0, assoc = 0.0;
  int systems = 0, checked = 0;
  for (const auto& f : families) {
    const auto c = certify(f, tol::kSubproduct);
    systems += c.subproduct_system();
    checked += c.products_checked;
    pair = std::max(pair, c.max_pairwise);
    cois = std::max(cois, c.coisometry_residual);
    assoc = std::max(assoc, c.associativity_residual);
  }
  require(o, systems == 100 && checked == 100, "adjacent chains on " + std::to_string(systems) + "/100");
  require(o, pair <= tol::kSubproduct, "pairwise " + sci(pair));
  require(o, cois <= tol::kSubproduct, "coisometry " + sci(cois));
  require(o, assoc <= tol::kSubproduct, "associativity " + sci(assoc));
  const auto sym = certify(symmetrizer_family(TruncatedFockSpace(3, 4)));
  require(o, sym.subproduct_system() && sym.pairwise_ok, "symmetrizer family");
  const auto prod = certify(product_tensor_family(4, 4));
  require(o, prod.pirec_ok && !prod.spsker_ok && prod.max_spsker >= tol::kSpsker, "product-tensor family");
  note(o, "pairwise " + sci(pair) + ", coisometry " + sci(cois) + ", associativity " + sci(assoc) +
              ", product-tensor violation " + sci(prod.max_spsker));
  return o;
}

Outcome pi_equalities(const std::vector<ProjectionFamily>& families) {
  Outcome o;
  std::vector<ProjectionFamily> all(families);
  all.push_back(symmetrizer_family(TruncatedFockSpace(3, 4)));
  all.push_back(full_projection_family(TruncatedFockSpace(2, 4)));
  all.push_back(product_tensor_family(4, 4));
  double worst = 0.0;
  int used = 0;
  for (const auto& f : all) {
    if (!certify(f).pirec_ok) continue;
    ++used;
    worst = std::max(worst, pi_space(f).max_deviation());
  }
  require(o, used == static_cast<int>(all.size()), "pirec failed on " + std::to_string(all.size() - used) + " families");
  require(o, worst <= tol::kPiDeviation, "deviation " + sci(worst));
  note(o, std::to_string(used) + " families, max deviation " + sci(worst));
  return o;
}

// --- 7 ------------------------------------------------------------------------
Outcome boundedness_examples() {
  Outcome o;
  const auto grid = demo_bounded_L_unbounded_creators({4, 8, 16, 32, 64, 128, 256, 400});
  require(o, grid.growth_factor >= tol::kGridGrowth, "grid growth " + sci(grid.growth_factor));
  double worst_c = 0.0, worst_norm = 0.0;
  for (int K = 2; K <= 40; ++K) {
    const auto b = demo_bounded_creators_unbounded_L(K, static_cast<std::uint64_t>(K));
    worst_c = std::max(worst_c, b.max_constant);
    worst_norm = std::max(worst_norm, std::abs(b.L2_norm - K) / K);
  }
  require(o, worst_c <= tol::kBlockConstant, "block constant " + sci(worst_c));
  require(o, worst_norm <= tol::kBlockNorm, "‖L_2‖ - K " + sci(worst_norm));
  const auto sq = demo_unbounded_squeezing(500);
  require(o, sq.strictly_increasing, "squeezing ratios not increasing");
  require(o, sq.ratios.back() >= tol::kSqueezingRatio, "squeezing ratio " + sci(sq.ratios.back()));
  note(o, "grid factor " + sci(grid.growth_factor) + ", block constant " + sci(worst_c) + ", squeezing ratio " +
              sci(sq.ratios.back()));
  return o;
}

// --- 8 ------------------------------------------------------------------------
Outcome functional_certificate() {
  Outcome o;
  const auto F = random_functional(50, 100.0, 808);
  const auto r = rescale_functional(F, 809, 1000);
  require(o, r.samples == 1000, "sample count");
  require(o, r.entry_bound_ok, "entry bound");
  require(o, r.max_random_ratio <= tol::kFunctionalBound, "random ratio " + sci(r.max_random_ratio));
  require(o, r.exact_norm <= tol::kFunctionalBound, "exact norm " + sci(r.exact_norm));
  note(o, "max sampled ratio " + sci(r.max_random_ratio) + ", exact norm " + sci(r.exact_norm));
  return o;
}

// --- 9 ------------------------------------------------------------------------
Outcome word_algebras() {
  Outcome o;
  const auto s = build(two_space_family(identity(3)));
  const int W = default_horizon(s);
  std::vector<OperatorSpan> e, b;
  for (auto k : {SpanKind::E_Astar, SpanKind::E_NC, SpanKind::E_I, SpanKind::E}) e.push_back(span_build(s, k, W));
  for (auto k : {SpanKind::B_Astar, SpanKind::B_NC, SpanKind::B_I, SpanKind::B}) b.push_back(span_build(s, k, W));
  const std::vector<Index> want_e{6, 6, 6, 6}, want_b{10, 10, 11, 11};
  std::string dims;
  for (std::size_t i = 0; i < 4; ++i) {
    require(o, e[i].rank == want_e[i], e[i].name + " = " + std::to_string(e[i].rank));
    require(o, b[i].rank == want_b[i], b[i].name + " = " + std::to_string(b[i].rank));
    require(o, e[i].stabilized && b[i].stabilized, "span not stabilised");
    dims += (i ? "," : "") + std::to_string(e[i].rank);
  }
  dims += " / ";
  for (std::size_t i = 0; i < 4; ++i) dims += (i ? "," : "") + std::to_string(b[i].rank);
  double chain = 0.0;
  for (std::size_t i = 0; i + 1 < 4; ++i) chain = std::max({chain, containment(e[i], e[i + 1]), containment(b[i], b[i + 1])});
  require(o, chain <= tol::kSpanResidual, "inclusion chain " + sci(chain));
  const auto act = check_left_action(b[0], e[3], tol::kSpanResidual);
  require(o, act.invariant && !act.nondegenerate, "B_A* action on E not detected as degenerate");
  note(o, "dims " + dims + ", chain residual " + sci(chain) + ", B_A*·E rank " + std::to_string(act.product_rank) + "/" +
              std::to_string(e[3].rank));
  return o;
}

// --- 10 -----------------------------------------------------------------------
std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fockbench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("fockbench_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return (dir / name).string(); };
  auto session = [&] {
    std::string all;
    all += run_cli({"deform", "--kind", "random", "-d", "2", "-N", "4", "--seed", "5", "--out", p("f.json")});
    all += run_cli({"build", p("f.json"), "--out", p("s.json")});
    all += run_cli({"verify", p("s.json"), "--report", p("v.json")});
    all += run_cli({"bounds", p("s.json"), "--seed", "3", "--report", p("b.json")});
    all += run_cli({"subproduct", "generate", "-d", "2", "-N", "4", "--seed", "6", "--out", p("pi.json")});
    all += run_cli({"subproduct", "certify", p("pi.json"), "--report", p("c.json")});
    all += run_cli({"demo", "phicb", "--basis", "50", "--seed", "1", "--report", p("phi.json"), "--csv", p("phi.csv")});
    all += run_cli({"demo", "bA*unbL", "--param", "12", "--seed", "2"});
    all += run_cli({"opalg", "--example", "two-space"});
    for (const char* f : {"f.json", "s.json", "v.json", "b.json", "pi.json", "c.json", "phi.json", "phi.csv"}) all += slurp(p(f));
    return all;
  };
  const std::string first = session(), second = session();
  fs::remove_all(dir);
  require(o, first == second, "reports differ between runs");
  note(o, std::to_string(first.size()) + " bytes compared");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const auto families = random_families();
  const std::vector<Criterion> criteria{
      {1, "q-commutation relations", q_commutation},
      {2, "q-Fock positivity and construction agreement", q_positivity},
      {3, "one-mode moment round trip", onemode_round_trip},
      {4, "squeezing round trip", squeezing_round_trip},
      {5, "subproduct pairwise inequalities and products", [&] { return subproduct_conditions(families); }},
      {6, "pi = L = lambda = kappa", [&] { return pi_equalities(families); }},
      {7, "boundedness counterexamples", boundedness_examples},
      {8, "rescaled functional certificate", functional_certificate},
      {9, "word algebras on the two-space example", word_algebras},
      {10, "byte-identical seeded reports", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("[%s] %2d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
