#pragma once

// Exact arithmetic helpers shared across the library: arbitrary-precision
// integers and rationals (GMP), binomials with the "C(a,b) = 0 for b < 0"
// convention, and exact determinants.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace richgrass {

using Int = mpz_class;
using Rat = mpq_class;

/// Binomial coefficient C(a, b); zero whenever b < 0 or b > a.
Int binomial(long a, long b);

Int factorial(long n);

/// Determinant of a square integer matrix, fraction-free (Bareiss)
/// elimination. Every intermediate division is exact.
Int det_bareiss(std::vector<std::vector<Int>> m);

/// Determinant of a square rational matrix, exact Gaussian elimination.
Rat det_rational(std::vector<std::vector<Rat>> m);

/// Rank of a rational matrix (not necessarily square), exact elimination.
int rank_rational(std::vector<std::vector<Rat>> m);

/// Coefficients (constant term first) of the unique polynomial of degree
/// < points.size() through (points[i], values[i]), by exact Lagrange
/// interpolation.
std::vector<Rat> interpolate_at(const std::vector<long>& points,
                                const std::vector<Int>& values);

/// Parses "p/q" or "p" into an exact rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const Rat& value);

}  // namespace richgrass
