#include <doctest.h>

#include <random>

#include "kohlab/qbinom.hpp"
#include "kohlab/qpoly.hpp"
#include "oracles.hpp"

using namespace kohlab;

namespace {

QPoly random_poly(std::mt19937& rng, std::size_t max_len, long magnitude) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<long> coeff_dist(-magnitude, magnitude);
  std::vector<BigInt> coeffs(len_dist(rng));
  for (BigInt& c : coeffs) c = coeff_dist(rng);
  return QPoly{std::move(coeffs)};
}

// Random symmetric polynomial with nonnegative coefficients. The outer
// coefficient is kept nonzero so canonicalization preserves the palindrome.
QPoly random_symmetric(std::mt19937& rng, std::size_t max_half, long magnitude) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_half);
  std::uniform_int_distribution<long> coeff_dist(0, magnitude);
  std::uniform_int_distribution<int> parity(0, 1);
  const std::size_t half = len_dist(rng);
  std::vector<BigInt> coeffs;
  for (std::size_t i = 0; i < half; ++i) coeffs.emplace_back(coeff_dist(rng));
  coeffs[0] = coeffs[0] + 1;
  std::vector<BigInt> mirrored(coeffs.rbegin(), coeffs.rend());
  if (parity(rng) == 0) coeffs.emplace_back(coeff_dist(rng));  // odd-length middle
  coeffs.insert(coeffs.end(), mirrored.begin(), mirrored.end());
  return QPoly{std::move(coeffs)};
}

}  // namespace

TEST_CASE("canonical form and zero polynomial") {
  CHECK(QPoly{}.is_zero());
  CHECK(QPoly{0, 0, 0}.is_zero());
  CHECK(!QPoly{}.degree().has_value());
  CHECK(QPoly{1, 0, 0} == QPoly{1});
  CHECK(QPoly{0, 0, 1}.degree() == 2);
  CHECK(QPoly{5}.coeff(0) == 5);
  CHECK(QPoly{5}.coeff(7) == 0);
}

TEST_CASE("ring operation examples") {
  CHECK(QPoly{1, 1} + QPoly{0, 1} == QPoly{1, 2});
  CHECK(QPoly{1, 2, 3} * QPoly{} == QPoly{});
  CHECK(QPoly{} * QPoly{1, 2, 3} == QPoly{});
  CHECK(QPoly{1, 1, 1} * QPoly{1, 1, 1} == QPoly{1, 2, 3, 2, 1});
  CHECK(QPoly{1, 1, 1} * QPoly{1, 1, 1} ==
        oracle::convolve_reference(QPoly{1, 1, 1}, QPoly{1, 1, 1}));
  CHECK(QPoly{1, 1} - QPoly{1, 1} == QPoly{});
}

TEST_CASE("range_poly and interval_poly") {
  CHECK(range_poly(0) == QPoly{1});
  CHECK(range_poly(3) == QPoly{1, 1, 1, 1});
  CHECK(range_poly(1) * range_poly(1) == QPoly{1, 2, 1});
  CHECK(interval_poly(2, 4) == QPoly{0, 0, 1, 1, 1});
  CHECK(interval_poly(3, 2).is_zero());
}

TEST_CASE("shift") {
  CHECK(shift(QPoly{1, 2}, 2) == QPoly{0, 0, 1, 2});
  CHECK(shift(QPoly{}, 5).is_zero());
  CHECK(shift(QPoly{1}, 0) == QPoly{1});
  CHECK_THROWS_AS(shift(QPoly{1}, -1), std::invalid_argument);
}

TEST_CASE("symmetry predicate") {
  CHECK(is_symmetric(QPoly{1, 2, 1}));
  CHECK(!is_symmetric(QPoly{1, 2, 3}));
  CHECK(is_symmetric(QPoly{}));  // zero polynomial, by convention
  CHECK(is_symmetric(gauss_box(3, 4)));
  // Support [2, 2] inside ambient degree 4: symmetric about 2, not about
  // its own canonical degree.
  CHECK(is_symmetric(QPoly{0, 0, 1}, 4));
  CHECK(!is_symmetric(QPoly{0, 0, 1}));
  CHECK(!is_symmetric(QPoly{0, 0, 1}, 1));  // degree exceeds ambient
}

TEST_CASE("unimodality report") {
  const CheckReport mound = unimodality_report(QPoly{1, 2, 1});
  CHECK(mound.unimodal);
  CHECK(mound.nonnegative);
  CHECK(mound.symmetric);
  CHECK(!mound.first_violation_degree().has_value());

  const CheckReport valley = unimodality_report(QPoly{1, 0, 1});
  CHECK(!valley.unimodal);
  CHECK(valley.first_unimodality_break == 2);
  CHECK(valley.nonnegative);

  const CheckReport negative = unimodality_report(QPoly{1, -1, 1});
  CHECK(!negative.nonnegative);
  CHECK(negative.first_negative_degree == 1);

  const CheckReport zero = unimodality_report(QPoly{});
  CHECK(zero.unimodal);
  CHECK(zero.nonnegative);
  CHECK(zero.symmetric);
}

TEST_CASE("unimodality of a difference computed from box oracles") {
  // gauss_box(3,4) - gauss_box(6,2), built from enumeration only
  const QPoly diff = oracle::box_polynomial(3, 4) - oracle::box_polynomial(6, 2);
  CHECK(diff == interval_poly(3, 9));
  const CheckReport report = analyze(diff, 12);
  CHECK(report.symmetric);
  CHECK(report.nonnegative);
  CHECK(report.unimodal);
}

TEST_CASE("truncated first difference") {
  CHECK(truncated_first_difference(oracle::box_polynomial(2, 2)) == QPoly{1, 0, 1});
  CHECK(truncated_first_difference(QPoly{1, 1, 1, 1, 1}) == QPoly{1, 0, 0});
  CHECK_THROWS_AS(truncated_first_difference(QPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(truncated_first_difference(QPoly{-1, 1, 1}), std::invalid_argument);

  // Definition restated for binom(d+3,3)_q: 1 + sum (a_i - a_{i-1}) q^i
  // through floor(3d/2).
  for (int d : {2, 5, 8}) {
    const QPoly g = gauss_box(3, static_cast<unsigned>(d));
    std::vector<BigInt> expected(static_cast<std::size_t>(3 * d / 2) + 1);
    expected[0] = g.coeff(0);
    for (std::size_t i = 1; i < expected.size(); ++i) {
      expected[i] = g.coeff(i) - g.coeff(i - 1);
    }
    CHECK(truncated_first_difference(g) == QPoly{std::move(expected)});
  }

  // Explicit middle degree: the cutoff, not the polynomial, decides.
  CHECK(truncated_first_difference(QPoly{1, 1, 1, 1}, 1) == QPoly{1});
  CHECK(truncated_first_difference(QPoly{1, 2}, 4) == QPoly{1, 1, -2});
}

TEST_CASE("dominates") {
  CHECK(dominates(QPoly{1, 2, 1}, QPoly{1, 1, 1}).holds);
  const DominanceReport fails = dominates(QPoly{1, 0}, QPoly{1, 1});
  CHECK(!fails.holds);
  CHECK(fails.first_failing_degree == 1);
  CHECK(dominates(QPoly{}, QPoly{}).holds);
  CHECK(dominates(QPoly{1}, QPoly{1, 0, 0}).holds);  // missing coefficients are zero
}

TEST_CASE("dominance instance of the main inequality at (6,4)") {
  // Left: sum over i in {1}, j in {1..jmax} of
  // (1+...+q^{ci-4i}) (q^{6i+2j}+...+q^{ci+2i+cj}); right: q^8+...+q^{10}.
  const int b = 6, c = 4, d = 8;
  QPoly lhs;
  const int jmax = (b * c - 4 * 1 * (c - 1)) / (2 * c);
  for (int j = 1; j <= jmax; ++j) {
    lhs += range_poly(static_cast<std::size_t>(c - 4)) *
           interval_poly(static_cast<std::size_t>(6 + 2 * j),
                         static_cast<std::size_t>(c + 2 + c * j));
  }
  QPoly rhs = interval_poly(8, static_cast<std::size_t>(d + 2));
  CHECK(dominates(lhs, rhs).holds);

  // Cross-check the right side against the direct spike+run expansion at i=1.
  QPoly direct = interval_poly(6 * 1 + 2, static_cast<std::size_t>(d + 2 * 1));
  CHECK(rhs == direct);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20240817);
  for (int round = 0; round < 200; ++round) {
    const QPoly a = random_poly(rng, 12, 50);
    const QPoly b = random_poly(rng, 12, 50);
    const QPoly c = random_poly(rng, 12, 50);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) {
      CHECK(*(a * b).degree() == *a.degree() + *b.degree());
    }
    CHECK(a * b == oracle::convolve_reference(a, b));
  }
}

TEST_CASE("karatsuba path agrees with schoolbook") {
  std::mt19937 rng(7);
  const std::size_t saved = karatsuba_threshold();
  for (int round = 0; round < 50; ++round) {
    const QPoly a = random_poly(rng, 200, 1000000);
    const QPoly b = random_poly(rng, 150, 1000000);
    set_karatsuba_threshold(2);  // force splitting all the way down
    const QPoly split = a * b;
    set_karatsuba_threshold(100000);  // pure schoolbook
    const QPoly school = a * b;
    CHECK(split == school);
  }
  // Huge coefficients through the split path
  set_karatsuba_threshold(4);
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 300);
  std::vector<BigInt> coeffs(96, big);
  const QPoly wide{std::move(coeffs)};
  set_karatsuba_threshold(100000);
  const QPoly expected = wide * wide;
  set_karatsuba_threshold(4);
  CHECK(wide * wide == expected);
  set_karatsuba_threshold(saved);
}

TEST_CASE("first-difference equivalence for symmetric nonnegative polynomials") {
  std::mt19937 rng(99);
  for (int round = 0; round < 300; ++round) {
    const QPoly p = random_symmetric(rng, 10, 6);
    if (p.is_zero()) continue;
    const bool unimodal = unimodality_report(p).unimodal;
    const QPoly diff = truncated_first_difference(p);
    bool all_nonneg = true;
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (sgn(diff.coeff(i)) < 0) all_nonneg = false;
    }
    CHECK(unimodal == all_nonneg);
  }
}

TEST_CASE("dominates is a partial order") {
  std::mt19937 rng(123);
  for (int round = 0; round < 200; ++round) {
    const QPoly a = random_poly(rng, 8, 4);
    const QPoly b = random_poly(rng, 8, 4);
    const QPoly c = random_poly(rng, 8, 4);
    CHECK(dominates(a, a).holds);  // reflexive
    if (dominates(a, b).holds && dominates(b, a).holds) CHECK(a == b);  // antisymmetric
    if (dominates(a, b).holds && dominates(b, c).holds) CHECK(dominates(a, c).holds);
  }
}

TEST_CASE("shift preserves coefficients and adds to every degree") {
  std::mt19937 rng(5150);
  for (int round = 0; round < 100; ++round) {
    const QPoly p = random_poly(rng, 10, 100);
    const long long k = static_cast<long long>(rng() % 7);
    const QPoly shifted = shift(p, k);
    if (p.is_zero()) {
      CHECK(shifted.is_zero());
      continue;
    }
    CHECK(*shifted.degree() == *p.degree() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(shifted.coeff(i + static_cast<std::size_t>(k)) == p.coeff(i));
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
      CHECK(shifted.coeff(i) == 0);
    }
  }
}

TEST_CASE("to_string") {
  CHECK(QPoly{}.to_string() == "0");
  CHECK(QPoly{1, 1, 2}.to_string() == "1 + q + 2*q^2");
  CHECK(QPoly{0, -1}.to_string() == "-q");
  CHECK(QPoly{2, 0, -3}.to_string() == "2 - 3*q^2");
}
