#include "richgrass/numeric.hpp"

#include <stdexcept>

namespace richgrass {

Int binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return result;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;

  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        // Bareiss: division by the previous pivot is exact.
        m[i][j] = num / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;

  Rat det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat factor = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

int rank_rational(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  int rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t pivot = pivot_row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot_row], m[pivot]);
    for (size_t i = pivot_row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat factor = m[i][col] / m[pivot_row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[pivot_row][j];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<Rat> interpolate_at(const std::vector<long>& points,
                                const std::vector<Int>& values) {
  if (points.size() != values.size() || points.empty())
    throw std::invalid_argument("interpolation needs matching nonempty point lists");
  const size_t count = points.size();
  std::vector<Rat> coeffs(count, Rat(0));
  for (size_t i = 0; i < count; ++i) {
    // Expand prod_{j != i} (x - points[j]) / (points[i] - points[j]).
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      basis.push_back(0);
      for (size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - Rat(points[j]) * basis[k];
      basis[0] = -Rat(points[j]) * basis[0];
      denom *= Rat(points[i] - points[j]);
    }
    const Rat scale = Rat(values[i]) / denom;
    for (size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
  }
  return coeffs;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  Int num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Int(text);
    } else {
      num = Int(text.substr(0, slash));
      den = Int(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in: " + text);
  Rat value(num, den);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace richgrass
