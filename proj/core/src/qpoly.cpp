#include "kohlab/qpoly.hpp"

#include <algorithm>
#include <atomic>
#include <span>
#include <sstream>
#include <stdexcept>

namespace kohlab {

namespace {

std::atomic<std::size_t> g_karatsuba_threshold{64};

const BigInt kZero{0};

using CoeffSpan = std::span<const BigInt>;

// dst[offset + i] += src[i]
void add_at(std::vector<BigInt>& dst, std::size_t offset, const std::vector<BigInt>& src) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[offset + i] += src[i];
  }
}

std::vector<BigInt> mul_schoolbook(CoeffSpan a, CoeffSpan b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      // out[i+j] += a[i] * b[j], without a temporary
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<BigInt> elementwise_sum(CoeffSpan a, CoeffSpan b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<BigInt> mul_recursive(CoeffSpan a, CoeffSpan b, std::size_t threshold) {
  if (std::min(a.size(), b.size()) < threshold) {
    return mul_schoolbook(a, b);
  }
  const std::size_t split = std::max(a.size(), b.size()) / 2;
  const CoeffSpan a_lo = a.subspan(0, std::min(split, a.size()));
  const CoeffSpan b_lo = b.subspan(0, std::min(split, b.size()));
  const CoeffSpan a_hi = a.size() > split ? a.subspan(split) : CoeffSpan{};
  const CoeffSpan b_hi = b.size() > split ? b.subspan(split) : CoeffSpan{};

  std::vector<BigInt> out(a.size() + b.size() - 1);
  if (a_hi.empty() || b_hi.empty()) {
    // Unbalanced operands: only one operand actually splits.
    std::vector<BigInt> lo = mul_recursive(a_lo, b_lo, threshold);
    add_at(out, 0, lo);
    if (!a_hi.empty()) {
      std::vector<BigInt> hi = mul_recursive(a_hi, b_lo, threshold);
      add_at(out, split, hi);
    } else if (!b_hi.empty()) {
      std::vector<BigInt> hi = mul_recursive(a_lo, b_hi, threshold);
      add_at(out, split, hi);
    }
    return out;
  }

  // Karatsuba: (a_lo + x^m a_hi)(b_lo + x^m b_hi) with three products.
  std::vector<BigInt> z0 = mul_recursive(a_lo, b_lo, threshold);
  std::vector<BigInt> z2 = mul_recursive(a_hi, b_hi, threshold);
  const std::vector<BigInt> sa = elementwise_sum(a_lo, a_hi);
  const std::vector<BigInt> sb = elementwise_sum(b_lo, b_hi);
  std::vector<BigInt> z1 = mul_recursive(sa, sb, threshold);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  add_at(out, 0, z0);
  add_at(out, split, z1);
  add_at(out, 2 * split, z2);
  return out;
}

}  // namespace

QPoly::QPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  canonicalize();
}

QPoly::QPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long value : coefficients) coeffs_.emplace_back(value);
  canonicalize();
}

QPoly QPoly::one() { return QPoly{1}; }

QPoly QPoly::monomial(BigInt coefficient, std::size_t degree) {
  if (sgn(coefficient) == 0) return QPoly{};
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = std::move(coefficient);
  return QPoly{std::move(coeffs)};
}

void QPoly::canonicalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const BigInt& QPoly::coeff(std::size_t deg) const noexcept {
  return deg < coeffs_.size() ? coeffs_[deg] : kZero;
}

BigInt QPoly::value_at_one() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly QPoly::operator-() const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return QPoly{std::move(out)};
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return QPoly{};
  return QPoly{mul_recursive(lhs.coeffs_, rhs.coeffs_, karatsuba_threshold())};
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) out << (sgn(coeffs_[i]) < 0 ? " - " : " + ");
    else if (sgn(coeffs_[i]) < 0) out << "-";
    first = false;
    const BigInt magnitude = abs(coeffs_[i]);
    if (i == 0) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

QPoly shift(const QPoly& p, long long k) {
  if (k < 0) {
    throw std::invalid_argument("shift: negative exponent " + std::to_string(k));
  }
  if (p.is_zero() || k == 0) return p;
  std::vector<BigInt> out(static_cast<std::size_t>(k) + p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(k) + i] = p.coeffs()[i];
  return QPoly{std::move(out)};
}

QPoly range_poly(std::size_t max_degree) {
  return QPoly{std::vector<BigInt>(max_degree + 1, BigInt{1})};
}

QPoly interval_poly(std::size_t lo, std::size_t hi) {
  if (hi < lo) return QPoly{};
  return shift(range_poly(hi - lo), static_cast<long long>(lo));
}

bool is_symmetric(const QPoly& p) {
  if (p.is_zero()) return true;
  return is_symmetric(p, *p.degree());
}

bool is_symmetric(const QPoly& p, std::size_t ambient_degree) {
  if (p.is_zero()) return true;
  if (*p.degree() > ambient_degree) return false;
  for (std::size_t i = 0; 2 * i <= ambient_degree; ++i) {
    if (p.coeff(i) != p.coeff(ambient_degree - i)) return false;
  }
  return true;
}

std::optional<std::size_t> CheckReport::first_violation_degree() const noexcept {
  std::optional<std::size_t> result;
  for (const auto& candidate :
       {first_symmetry_break, first_negative_degree, first_unimodality_break}) {
    if (candidate && (!result || *candidate < *result)) result = candidate;
  }
  return result;
}

CheckReport analyze(const QPoly& p, std::size_t ambient_degree) {
  CheckReport report;
  report.difference_degree = ambient_degree;
  if (p.is_zero()) return report;

  if (*p.degree() > ambient_degree) {
    report.symmetric = false;
    report.first_symmetry_break = ambient_degree + 1;
  } else {
    for (std::size_t i = 0; 2 * i <= ambient_degree; ++i) {
      if (p.coeff(i) != p.coeff(ambient_degree - i)) {
        report.symmetric = false;
        report.first_symmetry_break = i;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p.coeff(i)) < 0) {
      report.nonnegative = false;
      report.first_negative_degree = i;
      break;
    }
  }

  bool decreased = false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const int step = cmp(p.coeff(i), p.coeff(i - 1));
    if (step > 0 && decreased) {
      report.unimodal = false;
      report.first_unimodality_break = i;
      break;
    }
    if (step < 0) decreased = true;
  }
  return report;
}

CheckReport unimodality_report(const QPoly& p) {
  return analyze(p, p.degree().value_or(0));
}

QPoly truncated_first_difference(const QPoly& p, std::size_t middle_degree) {
  if (p.is_zero()) {
    throw std::invalid_argument("truncated_first_difference: zero polynomial");
  }
  if (sgn(p.coeff(0)) < 0) {
    throw std::invalid_argument("truncated_first_difference: negative constant term");
  }
  std::vector<BigInt> out(middle_degree + 1);
  out[0] = p.coeff(0);
  for (std::size_t i = 1; i <= middle_degree; ++i) {
    out[i] = p.coeff(i) - p.coeff(i - 1);
  }
  return QPoly{std::move(out)};
}

QPoly truncated_first_difference(const QPoly& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("truncated_first_difference: zero polynomial");
  }
  return truncated_first_difference(p, *p.degree() / 2);
}

DominanceReport dominates(const QPoly& p, const QPoly& r) {
  const std::size_t limit = std::max(p.size(), r.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (p.coeff(i) < r.coeff(i)) {
      return DominanceReport{false, i};
    }
  }
  return DominanceReport{};
}

std::size_t karatsuba_threshold() noexcept {
  return g_karatsuba_threshold.load(std::memory_order_relaxed);
}

void set_karatsuba_threshold(std::size_t min_length) noexcept {
  // Threshold below 2 would never terminate the recursion.
  g_karatsuba_threshold.store(std::max<std::size_t>(2, min_length), std::memory_order_relaxed);
}

}  // namespace kohlab
