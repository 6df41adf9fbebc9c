#include "richgrass/plucker.hpp"

#include <istream>
#include <stdexcept>

namespace richgrass {

MatrixPoint::MatrixPoint(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rat(0)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("empty matrix");
}

Rat& MatrixPoint::at(int row, int col) {
  if (row < 1 || row > rows_ || col < 1 || col > cols_)
    throw std::invalid_argument("matrix entry out of range");
  return data_[static_cast<size_t>(row - 1) * cols_ + (col - 1)];
}

const Rat& MatrixPoint::at(int row, int col) const {
  return const_cast<MatrixPoint*>(this)->at(row, col);
}

MatrixPoint MatrixPoint::read(std::istream& in, int rows, int cols) {
  MatrixPoint m(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      std::string token;
      if (!(in >> token))
        throw std::invalid_argument("matrix file ends after " +
                                    std::to_string((i - 1) * cols + j - 1) +
                                    " entries, expected " + std::to_string(rows * cols));
      m.at(i, j) = parse_rational(token);
    }
  return m;
}

void PatchAssignment::set(int row, int col, Rat value) {
  values_[{row, col}] = std::move(value);
}

const Rat& PatchAssignment::get(int row, int col) const {
  auto it = values_.find({row, col});
  if (it == values_.end())
    throw std::invalid_argument("patch assignment missing label x_{" +
                                std::to_string(row) + "," + std::to_string(col) + "}");
  return it->second;
}

bool PatchAssignment::has(int row, int col) const {
  return values_.count({row, col}) > 0;
}

PatchAssignment PatchAssignment::scaled(const Rat& lambda) const {
  PatchAssignment out;
  for (const auto& [label, value] : values_) out.values_[label] = value * lambda;
  return out;
}

std::uint64_t Rng::next() {
  // splitmix64; self-contained so streams are reproducible everywhere.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::int_in(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

Rat Rng::rational() {
  Rat value(int_in(-20, 20), int_in(1, 7));
  value.canonicalize();
  return value;
}

Rat Rng::nonzero_rational() {
  for (;;) {
    Rat value = rational();
    if (value != 0) return value;
  }
}

Rat plucker(const MatrixPoint& a, const PluckerIndex& theta) {
  const int d = a.cols();
  if (theta.size() != d)
    throw std::invalid_argument("index size does not match matrix columns");
  std::vector<std::vector<Rat>> minor(d, std::vector<Rat>(d));
  for (int r = 0; r < d; ++r) {
    const int row = theta.entries()[r];
    if (row < 1 || row > a.rows())
      throw std::invalid_argument("index row outside matrix");
    for (int c = 0; c < d; ++c) minor[r][c] = a.at(row, c + 1);
  }
  return det_rational(std::move(minor));
}

MatrixPoint patch_point(const GrassContext& ctx, const PluckerIndex& tau,
                        const PatchAssignment& assignment) {
  ctx.validate(tau);
  const int n = ctx.n();
  const int d = ctx.d();
  if (assignment.size() != static_cast<size_t>(d) * (n - d))
    throw std::invalid_argument("patch assignment has " +
                                std::to_string(assignment.size()) + " labels, expected " +
                                std::to_string(d * (n - d)));
  MatrixPoint m(n, d);
  for (int j = 1; j <= d; ++j) m.at(tau.entries()[j - 1], j) = 1;
  for (int i = 1; i <= n; ++i) {
    if (tau.contains(i)) continue;
    for (int j = 1; j <= d; ++j) m.at(i, j) = assignment.get(i, j);
  }
  return m;
}

Rat local_fn(const GrassContext& ctx, const PluckerIndex& theta,
             const PluckerIndex& tau, const PatchAssignment& assignment) {
  ctx.validate(theta);
  const MatrixPoint m = patch_point(ctx, tau, assignment);
  return plucker(m, theta) / plucker(m, tau);
}

int measured_degree(const GrassContext& ctx, const PluckerIndex& theta,
                    const PluckerIndex& tau, Rng& rng) {
  const int d = ctx.d();
  constexpr int kMaxRetries = 64;
  const Rat lambdas[3] = {Rat(2), Rat(3), Rat(5)};

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const PatchAssignment base = random_assignment(ctx, tau, rng);
    const Rat f0 = local_fn(ctx, theta, tau, base);
    if (f0 == 0) continue;

    int degree = -1;
    bool consistent = true;
    for (const Rat& lambda : lambdas) {
      const Rat f1 = local_fn(ctx, theta, tau, base.scaled(lambda));
      const Rat ratio = f1 / f0;
      int k = -1;
      Rat power(1);
      for (int cand = 0; cand <= d; ++cand) {
        if (ratio == power) {
          k = cand;
          break;
        }
        power *= lambda;
      }
      if (k < 0 || (degree >= 0 && k != degree)) {
        consistent = false;
        break;
      }
      degree = k;
    }
    if (consistent && degree >= 0) return degree;
  }
  throw std::runtime_error("degree measurement failed for theta = " + theta.str() +
                           ", tau = " + tau.str());
}

MatrixPoint random_matrix(const GrassContext& ctx, Rng& rng) {
  MatrixPoint m(ctx.n(), ctx.d());
  for (int i = 1; i <= ctx.n(); ++i)
    for (int j = 1; j <= ctx.d(); ++j) m.at(i, j) = rng.rational();
  return m;
}

PatchAssignment random_assignment(const GrassContext& ctx, const PluckerIndex& tau,
                                  Rng& rng) {
  PatchAssignment a;
  for (int i = 1; i <= ctx.n(); ++i) {
    if (tau.contains(i)) continue;
    for (int j = 1; j <= ctx.d(); ++j) a.set(i, j, rng.rational());
  }
  return a;
}

}  // namespace richgrass
