#include "fockbench/opalg.hpp"

#include <algorithm>
#include <map>

namespace fock {

std::vector<Signature> signatures(int n, int total, bool nc) {
  if (n < 0) throw Error("signatures: n >= 0 required");
  if (n == 0) return total == 0 ? std::vector<Signature>{Signature{}} : std::vector<Signature>{};
  if (n > 30) throw Error("signatures: n too large to enumerate");
  std::vector<Signature> out;
  if (std::abs(total) > n || (n - total) % 2 != 0) return out;
  // Bit b of the mask (from the most significant end) set means +1; the
  // masks in increasing order give lexicographic order with -1 < +1.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Signature s(static_cast<std::size_t>(n));
    int sum = 0;
    for (int b = 0; b < n; ++b) {
      s[static_cast<std::size_t>(b)] = (mask >> (n - 1 - b)) & 1 ? 1 : -1;
      sum += s[static_cast<std::size_t>(b)];
    }
    if (sum != total) continue;
    if (nc && !is_nc(s)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

bool is_nc(const Signature& s) {
  int partial = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    partial += *it;
    if (partial < 0) return false;
  }
  return true;
}

Signature adjoint_signature(const Signature& s) {
  Signature out(s.rbegin(), s.rend());
  for (int& e : out) e = -e;
  return out;
}

bool has_annihilator_creator_factor(const Signature& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == -1 && s[i + 1] == 1) return true;
  return false;
}

std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::string span_name(SpanKind kind) {
  switch (kind) {
    case SpanKind::E_Astar: return "E_A*";
    case SpanKind::B_Astar: return "B_A*";
    case SpanKind::E_I: return "E_I";
    case SpanKind::B_I: return "B_I";
    case SpanKind::E_NC: return "E_NC";
    case SpanKind::B_NC: return "B_NC";
    case SpanKind::E: return "E";
    case SpanKind::B: return "B";
  }
  return "?";
}

SpanKind parse_span_kind(const std::string& name) {
  for (auto k : all_span_kinds())
    if (span_name(k) == name) return k;
  if (name == "E_Astar") return SpanKind::E_Astar;
  if (name == "B_Astar") return SpanKind::B_Astar;
  throw Error("unknown span '" + name + "' (expected E_A*, B_A*, E_I, B_I, E_NC, B_NC, E or B)");
}

std::vector<SpanKind> all_span_kinds() {
  return {SpanKind::E_Astar, SpanKind::E_NC, SpanKind::E_I, SpanKind::E,
          SpanKind::B_Astar, SpanKind::B_NC, SpanKind::B_I, SpanKind::B};
}

bool is_module_kind(SpanKind kind) {
  return kind == SpanKind::E_Astar || kind == SpanKind::E_I || kind == SpanKind::E_NC || kind == SpanKind::E;
}

Mat SpanAccumulator::residual(const Mat& m) const {
  Mat r = m;
  // Two passes of classical Gram-Schmidt for stability.
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis_) r -= b * (b.conjugate().cwiseProduct(r)).sum();
  return r;
}

bool SpanAccumulator::add(const Mat& m) {
  if (m.rows() != dim_ || m.cols() != dim_) throw Error("SpanAccumulator: operator has wrong shape");
  const double scale = m.norm();
  if (scale == 0.0) return false;
  const Mat r = residual(m);
  const double rest = r.norm();
  if (rest <= tol_ * scale) return false;
  basis_.push_back(r / rest);
  return true;
}

double SpanAccumulator::distance(const Mat& m) const { return residual(m).norm(); }

double OperatorSpan::distance(const Mat& m) const {
  Mat r = m;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) r -= b * (b.conjugate().cwiseProduct(r)).sum();
  return r.norm();
}

int default_horizon(const InteractingSpace& space) { return 2 * space.N() + 2; }

namespace {

struct Letters {
  std::vector<Mat> up;    // a*(e_i)
  std::vector<Mat> down;  // a(e_i)
};

Letters letters_of(const InteractingSpace& space) {
  Letters l;
  for (int i = 0; i < space.d(); ++i) {
    l.up.push_back(space.creator_operator(unit_vector(space.d(), i)));
    l.down.push_back(l.up.back().adjoint());
  }
  return l;
}

OperatorSpan finish(const std::string& name, const SpanAccumulator& acc, int horizon,
                    std::vector<Index> by_length) {
  OperatorSpan s;
  s.name = name;
  s.dim = acc.dim();
  s.basis = acc.basis();
  s.rank = acc.rank();
  s.horizon = horizon;
  s.rank_by_length = std::move(by_length);
  const auto& r = s.rank_by_length;
  s.stabilized = r.size() >= 3 && r[r.size() - 1] == r[r.size() - 3];
  return s;
}

OperatorSpan block_span(const InteractingSpace& space, SpanKind kind) {
  const int degree = kind == SpanKind::E ? 1 : 0;
  const auto off = space.offsets();
  const Index R = space.total_dim();
  OperatorSpan s;
  s.name = span_name(kind);
  s.dim = R;
  for (int n = 0; n + degree <= space.N(); ++n) {
    const auto src = static_cast<std::size_t>(n);
    const auto dst = static_cast<std::size_t>(n + degree);
    for (Index a = 0; a < space.ranks[dst]; ++a)
      for (Index b = 0; b < space.ranks[src]; ++b) {
        Mat e = Mat::Zero(R, R);
        e(off[dst] + a, off[src] + b) = 1.0;
        s.basis.push_back(std::move(e));
      }
  }
  s.rank = static_cast<Index>(s.basis.size());
  return s;
}

// E_A*: a*(a a*)^k; B_A*: (a a*)^k with k >= 1. Words grow by two letters
// on the left.
OperatorSpan alternating_span(const InteractingSpace& space, SpanKind kind, int horizon) {
  const auto l = letters_of(space);
  const Index R = space.total_dim();
  const bool module = kind == SpanKind::E_Astar;
  SpanAccumulator total(R);
  SpanAccumulator layer(R);
  if (module) {
    for (const auto& c : l.up) layer.add(c);
  } else {
    for (const auto& a : l.down)
      for (const auto& c : l.up) layer.add(a * c);
  }
  int length = module ? 1 : 2;
  std::vector<Index> by_length;
  for (int len = 1; len <= horizon; ++len) {
    if (len == length) {
      for (const auto& m : layer.basis()) total.add(m);
      SpanAccumulator next(R);
      for (const auto& m : layer.basis())
        for (const auto& a : l.down)
          for (const auto& c : l.up) next.add(module ? Mat(c * a * m) : Mat(a * c * m));
      layer = std::move(next);
      length += 2;
    }
    by_length.push_back(total.rank());
  }
  return finish(span_name(kind), total, horizon, std::move(by_length));
}

OperatorSpan word_span(const InteractingSpace& space, SpanKind kind, int horizon) {
  const auto l = letters_of(space);
  const Index R = space.total_dim();
  const int N = space.N();
  const bool nc = kind == SpanKind::E_NC || kind == SpanKind::B_NC;
  const int target = (kind == SpanKind::E_I || kind == SpanKind::E_NC) ? 1 : 0;
  std::map<int, SpanAccumulator> layer;
  layer.emplace(0, SpanAccumulator(R));
  layer.at(0).add(identity(R));
  SpanAccumulator total(R);
  std::vector<Index> by_length;
  for (int len = 1; len <= horizon; ++len) {
    std::map<int, SpanAccumulator> next;
    for (const auto& [s, acc] : layer) {
      // Degrees beyond ±N act as zero on the truncation.
      if (s + 1 <= N) {
        auto& dst = next.try_emplace(s + 1, R).first->second;
        for (const auto& m : acc.basis())
          for (const auto& c : l.up) dst.add(c * m);
      }
      if (s - 1 >= -N && !(nc && s - 1 < 0)) {
        auto& dst = next.try_emplace(s - 1, R).first->second;
        for (const auto& m : acc.basis())
          for (const auto& a : l.down) dst.add(a * m);
      }
    }
    layer.clear();
    for (auto& [s, acc] : next)
      if (acc.rank() > 0) layer.emplace(s, std::move(acc));
    if (auto it = layer.find(target); it != layer.end())
      for (const auto& m : it->second.basis()) total.add(m);
    by_length.push_back(total.rank());
  }
  return finish(span_name(kind), total, horizon, std::move(by_length));
}

}  // namespace

OperatorSpan span_build(const InteractingSpace& space, SpanKind kind, int horizon) {
  if (horizon < 1) throw Error("span_build: horizon must be at least 1");
  switch (kind) {
    case SpanKind::E:
    case SpanKind::B:
      return block_span(space, kind);
    case SpanKind::E_Astar:
    case SpanKind::B_Astar:
      return alternating_span(space, kind, horizon);
    default:
      return word_span(space, kind, horizon);
  }
}

OperatorSpan span_of(const std::string& name, const std::vector<Mat>& generators) {
  if (generators.empty()) throw Error("span_of: no generators");
  SpanAccumulator acc(generators.front().rows());
  for (const auto& g : generators) acc.add(g);
  OperatorSpan s;
  s.name = name;
  s.dim = acc.dim();
  s.basis = acc.basis();
  s.rank = acc.rank();
  return s;
}

OperatorSpan scalar_span(const InteractingSpace& space) { return span_of("C", {identity(space.total_dim())}); }

double check_ternary(const OperatorSpan& f) {
  double worst = 0.0;
  for (const auto& x : f.basis)
    for (const auto& y : f.basis) {
      const Mat xy = x * y.adjoint();
      for (const auto& z : f.basis) worst = std::max(worst, f.distance(xy * z));
    }
  return worst;
}

LeftAction check_left_action(const OperatorSpan& c, const OperatorSpan& f, double tol) {
  LeftAction out;
  SpanAccumulator products(f.dim);
  for (const auto& a : c.basis)
    for (const auto& b : f.basis) {
      const Mat p = a * b;
      out.invariance_residual = std::max(out.invariance_residual, f.distance(p));
      products.add(p);
    }
  out.product_rank = products.rank();
  out.invariant = out.invariance_residual <= tol;
  out.nondegenerate = out.invariant && out.product_rank == f.rank;
  return out;
}

double containment(const OperatorSpan& a, const OperatorSpan& b) {
  double worst = 0.0;
  for (const auto& m : a.basis) worst = std::max(worst, b.distance(m));
  return worst;
}

}  // namespace fock
