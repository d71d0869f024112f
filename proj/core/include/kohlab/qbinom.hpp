#pragma once

/**
 * @file qbinom.hpp
 * @brief Gaussian (q-binomial) coefficients and strictness classifiers.
 *
 * gauss_box(m, n) is the generating polynomial of partitions fitting in an
 * m x n box, graded by size: symmetric of degree m*n, with coefficient sum
 * C(m+n, m). It is computed by the Pascal-type recurrence over exact
 * polynomials (no polynomial division) and memoized under a shared cache
 * that is safe for concurrent readers and writers.
 */

#include <cstddef>

#include "kohlab/qpoly.hpp"

namespace kohlab {

/// Box dimensions for a Gaussian polynomial.
struct GaussParams {
  unsigned width = 0;   ///< m: maximum number of parts
  unsigned height = 0;  ///< n: maximum part size
};

/// The q-binomial coefficient binom(m+n, m)_q.
QPoly gauss_box(unsigned m, unsigned n);
QPoly gauss_box(GaussParams box);

/// Total q-binomial in top/bottom notation: binom(top, k)_q.
/// Returns gauss_box(k, top - k) when 0 <= k <= top and the zero
/// polynomial when k < 0, k > top, or top < 0. The zero convention keeps
/// products of such factors well-defined for all index choices.
QPoly qbin(long long top, long long k);

/// Strict-unimodality classifier for gauss_box(b, c) with c >= b >= 2:
/// unimodal, and strictly increasing from degree i-1 to i for every
/// 2 <= i <= floor(b*c/2). The step from degree 0 to 1 is exempt.
/// Parameters outside c >= b >= 2 are rejected.
bool classify_strict(int b, int c);

/// True iff gauss_box(b, c) increases strictly from degree i-1 to i for
/// every even i with 2 <= i <= floor(b*c/2). Requires b, c >= 1.
bool even_strict_increase(int b, int c);

/// Cache controls. The cache never evicts; once `max_entries` is reached
/// further results are computed but not retained.
void set_gauss_cache_capacity(std::size_t max_entries);
std::size_t gauss_cache_size();
void clear_gauss_cache();

}  // namespace kohlab
