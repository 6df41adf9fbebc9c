#pragma once

// The straightening algorithm: detection of non-standard monomials in the
// Plucker coordinates, quadratic exchange relations, rewriting of arbitrary
// monomials into integer combinations of standard monomials, and restriction
// of combinations to a Richardson variety.
//
// A monomial p_{t1}...p_{tm} is standard when t1 >= ... >= tm in the Bruhat
// order, and standard on X_w^v when additionally w >= t1 and tm >= v.

#include <map>
#include <optional>
#include <vector>

#include "richgrass/numeric.hpp"
#include "richgrass/plucker.hpp"
#include "richgrass/poset.hpp"

namespace richgrass {

/// A product of Plucker coordinates, kept as the sequence of its factors.
/// The factor order is preserved as given (standardness is a property of the
/// stored sequence); canonical() reorders commutatively for use as a lookup
/// key. The empty sequence is the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<PluckerIndex> factors);

  const std::vector<PluckerIndex>& factors() const { return factors_; }
  int degree() const { return static_cast<int>(factors_.size()); }

  /// t1 >= ... >= tm in the Bruhat order (vacuous for degree <= 1).
  bool is_standard() const;

  /// The least t (1-based) with t-th factor not dominated by its
  /// predecessor, or nullopt when the stored sequence is standard.
  std::optional<int> first_violation() const;

  /// Factors sorted descending lexicographically. For a multiset that forms
  /// a Bruhat chain this is exactly the weakly decreasing arrangement, so
  /// canonical standard monomials are stored largest factor first.
  Monomial canonical() const;

  /// Parses "1,4;2,3" (semicolon-separated indices).
  static Monomial parse(const std::string& text);
  std::string str() const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<PluckerIndex> factors_;
};

/// A finite formal sum of monomials with exact integer coefficients. Keys
/// are canonical monomials; zero coefficients are dropped; all stored
/// monomials must share one degree.
class Combination {
 public:
  void add(const Monomial& m, const Int& coefficient);
  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  bool operator==(const Combination&) const = default;

 private:
  std::map<Monomial, Int> terms_;
};

/// The straightening relation for a non-comparable pair: the expression of
/// p_a p_b as an integer combination of standard degree-2 monomials. Every
/// term p_alpha p_beta has alpha above both a and b and beta below both, and
/// all coefficients are +-1. Results are memoized per (context, pair) and
/// certified by evaluation on random rational matrices before being cached;
/// a certification failure throws std::logic_error. Comparable inputs throw
/// std::invalid_argument.
Combination quadratic_relation(const GrassContext& ctx, const PluckerIndex& a,
                               const PluckerIndex& b);

/// The single exchange step behind quadratic_relation: the shuffle syzygy at
/// the first violating position of (a, b), as signed (possibly still
/// non-standard) degree-2 monomials summing to p_a p_b. Exposed for tests.
std::vector<std::pair<Int, Monomial>> shuffle_step(const PluckerIndex& a,
                                                   const PluckerIndex& b);

/// Rewrites any monomial as an integer combination of standard monomials of
/// the same degree, equal to it as a function on the Grassmannian. Each
/// rewrite strictly increases the termination measure
/// N_F = sum length(t_i) * N^(m-i) with N = d(n-d)+1; the increase is
/// asserted in-loop.
Combination straighten(const GrassContext& ctx, const Monomial& m);

/// Drops every monomial containing a factor outside [v, w]; realizes the
/// restriction map onto the coordinate ring of X_w^v.
Combination restrict_to(const Combination& c, const RichardsonId& x);

Rat evaluate(const Monomial& m, const MatrixPoint& point);
Rat evaluate(const Combination& c, const MatrixPoint& point);

/// The termination measure N_F of a factor sequence (base N = d(n-d)+1).
Int chain_measure(const GrassContext& ctx, const std::vector<PluckerIndex>& factors);

}  // namespace richgrass
