#pragma once

/**
 * @file qpoly.hpp
 * @brief Exact univariate polynomials over arbitrary-precision integers.
 *
 * QPoly is the value type every other module computes with: coefficient
 * sequences are stored lowest degree first and kept in canonical form
 * (no trailing zero entries), so equality is plain structural comparison.
 * The zero polynomial is the empty sequence; its degree is "minus
 * infinity", rendered as an empty optional.
 *
 * Alongside the ring operations this header provides the order-theoretic
 * predicates the rest of the project is built on: symmetry about a given
 * degree, the nonnegativity/unimodality report, degreewise dominance, and
 * the truncated first difference (coefficient differences kept only up to
 * half the degree).
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kohlab {

using BigInt = mpz_class;

class QPoly {
 public:
  /// The zero polynomial.
  QPoly() = default;

  /// Takes ownership of a coefficient sequence (lowest degree first) and
  /// canonicalizes it.
  explicit QPoly(std::vector<BigInt> coefficients);

  /// Convenience for literals in tests and small constructions.
  QPoly(std::initializer_list<long> coefficients);

  static QPoly zero() { return QPoly{}; }
  static QPoly one();
  static QPoly monomial(BigInt coefficient, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or an empty optional for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;

  /// Number of stored coefficients (degree + 1 for nonzero polynomials).
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of q^deg; zero beyond the stored range.
  const BigInt& coeff(std::size_t deg) const noexcept;

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// Value at q = 1, i.e. the coefficient sum.
  BigInt value_at_one() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly operator-() const;

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }

  /// Exact convolution. Uses schoolbook multiplication below the Karatsuba
  /// threshold and Karatsuba splitting above it.
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);

  bool operator==(const QPoly&) const = default;

  /// Human-readable form, e.g. "1 + q + 2*q^2".
  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<BigInt> coeffs_;
};

/// q^k * p. Negative k is a usage error and is rejected.
QPoly shift(const QPoly& p, long long k);

/// 1 + q + ... + q^max_degree (max_degree + 1 ones).
QPoly range_poly(std::size_t max_degree);

/// q^lo + q^(lo+1) + ... + q^hi; zero when hi < lo.
QPoly interval_poly(std::size_t lo, std::size_t hi);

/// Palindrome test about the polynomial's own degree. The zero polynomial
/// is symmetric by convention.
bool is_symmetric(const QPoly& p);

/// Symmetry about `ambient_degree`: coeff(i) == coeff(ambient_degree - i)
/// for all i, treating missing coefficients as zero. This is the right
/// test for polynomials supported on [e, ambient_degree - e].
bool is_symmetric(const QPoly& p, std::size_t ambient_degree);

/// Verdict for one polynomial (or one difference of two): symmetry,
/// nonnegativity and unimodality, each with the first violating degree
/// when it fails. `difference_degree` records the ambient degree the
/// symmetry test ran against.
struct CheckReport {
  bool symmetric = true;
  bool nonnegative = true;
  bool unimodal = true;
  std::optional<std::size_t> first_symmetry_break;
  std::optional<std::size_t> first_negative_degree;
  std::optional<std::size_t> first_unimodality_break;
  std::size_t difference_degree = 0;

  bool all_pass() const noexcept { return symmetric && nonnegative && unimodal; }

  /// Smallest degree at which any predicate fails.
  std::optional<std::size_t> first_violation_degree() const noexcept;

  bool operator==(const CheckReport&) const = default;
};

/// Full report with the symmetry test about `ambient_degree`.
/// Unimodality uses the no-strict-increase-after-a-strict-decrease rule;
/// the zero polynomial passes every predicate by convention.
CheckReport analyze(const QPoly& p, std::size_t ambient_degree);

/// Report about the polynomial's own degree.
CheckReport unimodality_report(const QPoly& p);

/// Truncated first difference: d(0) = p(0), d(i) = p(i) - p(i-1) for
/// 1 <= i <= middle_degree. Requires p nonzero with nonnegative constant
/// term. For a symmetric nonnegative p truncated at its own half degree,
/// "all coefficients of d nonnegative" is equivalent to "p unimodal".
QPoly truncated_first_difference(const QPoly& p, std::size_t middle_degree);

/// Same, truncated at floor(degree(p) / 2).
QPoly truncated_first_difference(const QPoly& p);

struct DominanceReport {
  bool holds = true;
  std::optional<std::size_t> first_failing_degree;

  bool operator==(const DominanceReport&) const = default;
};

/// Degreewise comparison: true iff coeff_p(i) >= coeff_r(i) for every i
/// (missing coefficients are zero).
DominanceReport dominates(const QPoly& p, const QPoly& r);

/// Length at or above which multiplication switches to Karatsuba
/// splitting. Purely a tuning knob; results are identical on both paths.
std::size_t karatsuba_threshold() noexcept;
void set_karatsuba_threshold(std::size_t min_length) noexcept;

}  // namespace kohlab
