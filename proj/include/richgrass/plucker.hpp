#pragma once

// Exact evaluation of Plucker coordinates on explicit n x d matrices, the
// affine patch centered at a T-fixed point, the local functions
// f_{theta,tau} = p_theta / p_tau, and scaling-based measurement of their
// homogeneity degree. All arithmetic is exact rational; there is no floating
// point anywhere in the library.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "richgrass/numeric.hpp"
#include "richgrass/poset.hpp"

namespace richgrass {

/// A point of the Grassmannian presented as an n x d matrix of exact
/// rationals (columns span the subspace). Rows are 1-based to match the
/// index convention.
class MatrixPoint {
 public:
  MatrixPoint(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int row, int col);
  const Rat& at(int row, int col) const;

  /// Reads `rows` lines of `cols` whitespace-separated rationals ("p/q" or
  /// integers).
  static MatrixPoint read(std::istream& in, int rows, int cols);

 private:
  int rows_;
  int cols_;
  std::vector<Rat> data_;
};

/// Values for the free coordinates of the affine patch at e_tau: one rational
/// per (row not in tau, column in 1..d). Exactly d(n-d) labels.
class PatchAssignment {
 public:
  void set(int row, int col, Rat value);
  const Rat& get(int row, int col) const;
  bool has(int row, int col) const;
  size_t size() const { return values_.size(); }

  const std::map<std::pair<int, int>, Rat>& values() const { return values_; }

  /// Every value multiplied by lambda.
  PatchAssignment scaled(const Rat& lambda) const;

 private:
  std::map<std::pair<int, int>, Rat> values_;
};

/// Deterministic, seedable source of small random rationals; numerators in
/// [-20, 20], denominators in [1, 7]. Passed explicitly by callers so there
/// is no hidden global state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next();
  long int_in(long lo, long hi);
  Rat rational();
  /// A rational guaranteed nonzero.
  Rat nonzero_rational();

 private:
  std::uint64_t state_;
};

/// det of the d x d submatrix of A with rows theta, in order.
Rat plucker(const MatrixPoint& a, const PluckerIndex& theta);

/// The matrix of the affine patch at e_tau: row tau_j is the j-th unit row;
/// every other row carries the assigned free values. The assignment must
/// cover exactly the free labels.
MatrixPoint patch_point(const GrassContext& ctx, const PluckerIndex& tau,
                        const PatchAssignment& assignment);

/// f_{theta,tau} = p_theta / p_tau evaluated on the patch (p_tau there is
/// +-1, never 0).
Rat local_fn(const GrassContext& ctx, const PluckerIndex& theta,
             const PluckerIndex& tau, const PatchAssignment& assignment);

/// Homogeneity degree of f_{theta,tau}, measured by evaluating at a random
/// assignment a and at lambda*a for three distinct lambda and solving
/// f(lambda*a) = lambda^k f(a). Retries with fresh randomness when f(a) = 0;
/// throws std::runtime_error when retries are exhausted.
int measured_degree(const GrassContext& ctx, const PluckerIndex& theta,
                    const PluckerIndex& tau, Rng& rng);

/// n x d matrix with every entry drawn from rng.
MatrixPoint random_matrix(const GrassContext& ctx, Rng& rng);

/// Assignment with every free label of the patch at e_tau drawn from rng.
PatchAssignment random_assignment(const GrassContext& ctx, const PluckerIndex& tau,
                                  Rng& rng);

}  // namespace richgrass
