#pragma once

// The index poset I_{d,n}: strictly increasing d-tuples in {1..n} under the
// componentwise (Bruhat) order. Everything else in the library is built on
// this discrete skeleton: enumeration, lattice operations, lengths and
// dimensions, intervals, cover boundaries, entry exchanges, and the
// order-reversing complement map.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "richgrass/numeric.hpp"

namespace richgrass {

class PluckerIndex;

/// Ambient parameters (d, n) with 1 <= d < n.
class GrassContext {
 public:
  GrassContext(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }

  /// Number of indices, binomial(n, d).
  Int index_count() const;

  /// (1, ..., d), the bottom of the poset.
  PluckerIndex bottom() const;
  /// (n+1-d, ..., n), the top of the poset.
  PluckerIndex top() const;

  /// Throws std::invalid_argument unless the index has d entries in [1, n].
  void validate(const PluckerIndex& index) const;

  /// Parses "d,n", e.g. "2,4".
  static GrassContext parse(const std::string& text);

  bool operator==(const GrassContext&) const = default;

 private:
  int d_;
  int n_;
};

/// A strictly increasing tuple (i_1 < ... < i_d); the index of a Plucker
/// coordinate, a T-fixed point, and a Schubert/opposite cell all at once.
/// Constructors sort and validate; duplicates are rejected.
///
/// operator<=> is the lexicographic order used for canonical storage and
/// deterministic output. It is NOT the Bruhat order; see bruhat_leq.
class PluckerIndex {
 public:
  PluckerIndex() = default;
  explicit PluckerIndex(std::vector<int> entries);

  /// Parses comma-separated entries, e.g. "2,4".
  static PluckerIndex parse(const std::string& text);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool contains(int value) const;

  /// "2,4"
  std::string str() const;

  bool operator==(const PluckerIndex&) const = default;
  auto operator<=>(const PluckerIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// An entry exchange on an index: drop `removed`, insert `added`. Encodes a
/// root in tau(R+ \ R_P+) together with the action of its reflection.
struct RootPair {
  int removed = 0;
  int added = 0;

  bool operator==(const RootPair&) const = default;
  auto operator<=>(const RootPair&) const = default;
};

/// The pair (w, v) with w >= v naming the (nonempty) variety X_w^v.
/// v = bottom gives a Schubert variety, w = top an opposite one.
class RichardsonId {
 public:
  /// Throws std::domain_error when w >= v fails (the empty variety).
  RichardsonId(PluckerIndex w, PluckerIndex v);

  /// Empty-variety-tolerant construction.
  static std::optional<RichardsonId> try_make(PluckerIndex w, PluckerIndex v);

  const PluckerIndex& w() const { return w_; }
  const PluckerIndex& v() const { return v_; }

  bool operator==(const RichardsonId&) const = default;
  auto operator<=>(const RichardsonId&) const = default;

 private:
  PluckerIndex w_;
  PluckerIndex v_;
};

enum class BoundarySide { plus, minus };

/// All binomial(n, d) indices in lexicographic order.
std::vector<PluckerIndex> enumerate_indices(const GrassContext& ctx);

/// a <= b componentwise. Throws std::invalid_argument on mismatched sizes.
bool bruhat_leq(const PluckerIndex& a, const PluckerIndex& b);
bool bruhat_less(const PluckerIndex& a, const PluckerIndex& b);
bool bruhat_comparable(const PluckerIndex& a, const PluckerIndex& b);

/// Componentwise min/max; I_{d,n} is a distributive lattice under these.
PluckerIndex meet(const PluckerIndex& a, const PluckerIndex& b);
PluckerIndex join(const PluckerIndex& a, const PluckerIndex& b);

/// X_{w1}^{v1} cap X_{w2}^{v2} = X_{w1^w2}^{v1 v v2}, or nullopt when empty.
std::optional<RichardsonId> intersect_richardson(const RichardsonId& x1,
                                                 const RichardsonId& x2);

/// Length of the minimal coset representative: sum of (a_t - t). Equals the
/// dimension of the Schubert variety X_a.
int length(const PluckerIndex& a);

/// dim X_w^v = length(w) - length(v).
int dim_richardson(const RichardsonId& x);

/// All tau with w >= tau >= v, lexicographic order. These are exactly the
/// indices whose coordinate does not vanish identically on X_w^v.
std::vector<PluckerIndex> interval(const GrassContext& ctx, const RichardsonId& x);

/// b covers a: a < b with length(b) = length(a) + 1 (the poset is graded).
bool covers(const PluckerIndex& a, const PluckerIndex& b);

/// Cover-level boundary used by the Pieri and multiplicity recursions.
/// plus:  all w' with w > w' >= tau and length(w') = length(w) - 1
///        (requires w > tau);
/// minus: all v' with tau >= v' > v and length(v') = length(v) + 1
///        (requires tau > v).
/// Throws std::domain_error when the requested side is inapplicable.
std::vector<PluckerIndex> boundary(const GrassContext& ctx, const RichardsonId& x,
                                   const PluckerIndex& tau, BoundarySide side);

/// sorted((entries(tau) \ {removed}) + {added}); the reflection s_beta tau
/// reduced mod W_P. Throws std::invalid_argument on membership violations.
PluckerIndex reflect(const PluckerIndex& tau, const RootPair& r);

/// a |-> sorted{n+1-a_t}: an order-reversing involution exchanging Schubert
/// and opposite Schubert data.
PluckerIndex w0_conjugate(const GrassContext& ctx, const PluckerIndex& a);

/// X_w = X_w^{(1..d)}.
RichardsonId schubert_variety(const GrassContext& ctx, const PluckerIndex& w);
/// X^v = X_{(n+1-d..n)}^v.
RichardsonId opposite_variety(const GrassContext& ctx, const PluckerIndex& v);
RichardsonId whole_grassmannian(const GrassContext& ctx);

bool in_interval(const RichardsonId& x, const PluckerIndex& tau);

/// Validates w >= tau >= v; throws std::domain_error otherwise.
void require_in_interval(const RichardsonId& x, const PluckerIndex& tau);

}  // namespace richgrass
