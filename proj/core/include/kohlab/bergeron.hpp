#pragma once

/**
 * @file bergeron.hpp
 * @brief Difference-of-q-binomials checks over quadruple sweeps.
 *
 * A Quadruple (a, b, c, d) has positive entries, a minimal and ad = bc.
 * The polynomial under test is gauss_box(b, c) - gauss_box(d, a), which is
 * symmetric of ambient degree bc; the sweep asserts it is also nonnegative
 * and unimodal for every quadruple up to a product bound.
 */

#include <functional>
#include <vector>

#include "kohlab/qpoly.hpp"

namespace kohlab {

struct Quadruple {
  long long a = 1, b = 1, c = 1, d = 1;

  /// Checks positivity, minimality of a, and a*d == b*c; throws
  /// std::invalid_argument naming the violated condition.
  static Quadruple validated(long long a, long long b, long long c, long long d);

  bool operator==(const Quadruple&) const = default;
};

/// gauss_box(b, c) - gauss_box(d, a), exact. Validates the quadruple.
QPoly difference(const Quadruple& quad);

/// Symmetry / nonnegativity / unimodality of the difference, with the
/// ambient degree b*c. The all-equal quadruple gives the zero polynomial,
/// which passes every predicate by convention.
CheckReport check(const Quadruple& quad);

/// Every quadruple with b*c <= max_product, canonicalized with b <= c,
/// in lexicographic (a, b, c) order without duplicates. a <= d follows
/// from a being minimal.
std::vector<Quadruple> enumerate_quadruples(long long max_product);

struct QuadrupleCheck {
  Quadruple quad;
  CheckReport report;
};

/// Runs check() on every enumerated quadruple using `jobs` workers and
/// delivers every result, in enumeration order, on the calling thread.
/// Output is identical for any worker count.
void for_each_check(long long max_product, unsigned jobs,
                    const std::function<void(const Quadruple&, const CheckReport&)>& consume);

/// Failures only (expected empty); order is the enumeration order.
std::vector<QuadrupleCheck> sweep(long long max_product, unsigned jobs = 1);

}  // namespace kohlab
