#pragma once

// Word algebras over a truncated interacting Fock space. Operators act on the
// stacked quotient coordinates ⊕_n C^{r_n}; spans live in the vectorised
// matrix space with the Frobenius inner product.
//
// A signature (ε_n, ..., ε_1) is stored in written order: element 0 is the
// leftmost exponent ε_n, the last element is ε_1, which acts first. Partial
// sums Σ_{i<=k} ε_i are therefore taken from the right.

#include <cstdint>
#include <string>
#include <vector>

#include "fockbench/interacting.hpp"

namespace fock {

using Signature = std::vector<int>;

/// All ±1 tuples of length n with the given total, lexicographic (-1 < +1);
/// with `nc`, only those whose partial sums from the right are all >= 0.
std::vector<Signature> signatures(int n, int total, bool nc);

bool is_nc(const Signature& s);

/// Signature of the adjoint word: reversed and negated.
Signature adjoint_signature(const Signature& s);

/// True when some adjacent pair reads (-1, +1) in written order, i.e. the
/// word contains a factor a(x) a*(y).
bool has_annihilator_creator_factor(const Signature& s);

std::uint64_t catalan(int m);

enum class SpanKind { E_Astar, B_Astar, E_I, B_I, E_NC, B_NC, E, B };

std::string span_name(SpanKind kind);
SpanKind parse_span_kind(const std::string& name);  // throws on unknown names
std::vector<SpanKind> all_span_kinds();
bool is_module_kind(SpanKind kind);  // degree one (E-type)

inline constexpr double kSpanTol = 1e-10;

/// Incrementally orthonormalised set of vectorised operators.
class SpanAccumulator {
public:
  explicit SpanAccumulator(Index dim, double tol = kSpanTol) : dim_(dim), tol_(tol) {}

  /// Adds m if it is not already in the span (relative tolerance); returns
  /// whether the rank grew.
  bool add(const Mat& m);
  Index rank() const { return static_cast<Index>(basis_.size()); }
  Index dim() const { return dim_; }
  const std::vector<Mat>& basis() const { return basis_; }
  /// Frobenius distance of m from the span.
  double distance(const Mat& m) const;

private:
  Mat residual(const Mat& m) const;
  Index dim_;
  double tol_;
  std::vector<Mat> basis_;  // dim_ × dim_ matrices, orthonormal in Frobenius
};

struct OperatorSpan {
  std::string name;
  Index dim = 0;              // operators are dim × dim
  std::vector<Mat> basis;     // orthonormal
  Index rank = 0;
  int horizon = 0;            // longest word used; 0 for directly built spans
  bool stabilized = true;     // rank at horizon W equals rank at W - 2
  std::vector<Index> rank_by_length;

  double distance(const Mat& m) const;
};

/// Default horizon 2N + 2.
int default_horizon(const InteractingSpace& space);

OperatorSpan span_build(const InteractingSpace& space, SpanKind kind, int horizon);

OperatorSpan span_of(const std::string& name, const std::vector<Mat>& generators);

/// The scalar multiples of the identity.
OperatorSpan scalar_span(const InteractingSpace& space);

/// max over basis triples of dist(x y* z, F).
double check_ternary(const OperatorSpan& f);

struct LeftAction {
  double invariance_residual = 0.0;  // max dist(c f, F)
  Index product_rank = 0;            // rank of span{c f}
  bool invariant = false;
  bool nondegenerate = false;        // span{c f} = F
};

LeftAction check_left_action(const OperatorSpan& c, const OperatorSpan& f, double tol = 1e-9);

/// max dist(a, B) over the basis of A; zero when A ⊆ B.
double containment(const OperatorSpan& a, const OperatorSpan& b);

}  // namespace fock
