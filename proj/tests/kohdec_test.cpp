#include <doctest.h>

#include <algorithm>

#include "kohlab/kohdec.hpp"
#include "kohlab/qbinom.hpp"
#include "oracles.hpp"

using namespace kohlab;

TEST_CASE("Partition validates and reports") {
  const Partition p{{3, 2, 1}};
  CHECK(p.weight() == 6);
  CHECK(p.length() == 3);
  CHECK(p.part(1) == 3);
  CHECK(p.part(3) == 1);
  CHECK(p.part(4) == 0);  // parts are zero past the end
  CHECK(p.to_string() == "(3,2,1)");
  CHECK_THROWS_AS((Partition{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS((Partition{{2, 0}}), std::invalid_argument);
}

TEST_CASE("enumerate_partitions order and counts") {
  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition{{1}}});
  CHECK(enumerate_partitions(3) ==
        std::vector<Partition>{Partition{{3}}, Partition{{2, 1}}, Partition{{1, 1, 1}}});
  CHECK(enumerate_partitions(10).size() == 42);
  CHECK(enumerate_partitions(10).size() ==
        static_cast<std::size_t>(oracle::partition_count(10)));
  for (int m = 1; m <= 14; ++m) {
    const auto all = enumerate_partitions(m);
    CHECK(all.size() == static_cast<std::size_t>(oracle::partition_count(m)));
    for (const Partition& p : all) CHECK(p.weight() == m);
    // reverse-lexicographic: strictly descending as sequences
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Partition& x, const Partition& y) {
      return std::lexicographical_compare(y.parts().begin(), y.parts().end(),
                                          x.parts().begin(), x.parts().end());
    }));
  }
  CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(-2), std::invalid_argument);
}

TEST_CASE("partial sums") {
  CHECK(partial_sums(Partition{{2, 1}}) == std::vector<long long>{0, 2, 3, 3});
  CHECK(partial_sums(Partition{{3}}) == std::vector<long long>{0, 3, 3});
  CHECK(partial_sums(Partition{{1, 1, 1}}) == std::vector<long long>{0, 1, 2, 3, 3});
  const Partition p{{4, 2}};
  CHECK(p.prefix_sum(0) == 0);
  CHECK(p.prefix_sum(1) == 4);
  CHECK(p.prefix_sum(9) == 6);
}

TEST_CASE("koh_term matches the weight-3 decomposition termwise") {
  for (unsigned d : {5u, 7u, 11u}) {
    const KohTerm three = koh_term(Partition{{3}}, d);
    CHECK(three.exponent == 6);
    CHECK(three.value == shift(qbin(d - 1, 3), 6));

    const KohTerm two_one = koh_term(Partition{{2, 1}}, d);
    CHECK(two_one.exponent == 2);
    CHECK(two_one.value == shift(qbin(d - 1, 1) * qbin(2 * d - 1, 1), 2));

    const KohTerm ones = koh_term(Partition{{1, 1, 1}}, d);
    CHECK(ones.exponent == 0);
    CHECK(ones.value == qbin(3 * d + 1, 1));

    CHECK(three.value + two_one.value + ones.value == gauss_box(3, d));
  }
}

TEST_CASE("koh_term records factors including k = 0 positions") {
  const KohTerm term = koh_term(Partition{{1, 1, 1}}, 4);
  REQUIRE(term.factors.size() == 3);
  CHECK(term.factors[0] == KohFactor{4, 0});
  CHECK(term.factors[1] == KohFactor{8, 0});
  CHECK(term.factors[2] == KohFactor{13, 1});
}

TEST_CASE("k = 0 factors contribute 1 even with negative top") {
  // (1,1) at n = 0: first factor has top 0 and k 0; the term survives.
  CHECK(koh_term(Partition{{1, 1}}, 0).value == QPoly{1});
  // (2,2) at n = 0: j=1 has top -2 with k 0 (harmless), j=2 kills the term.
  CHECK(koh_term(Partition{{2, 2}}, 0).value.is_zero());
}

TEST_CASE("koh_sum identity") {
  CHECK(koh_sum(3, 8) == gauss_box(3, 8));
  CHECK(koh_sum(6, 4) == gauss_box(6, 4));
  for (unsigned n = 0; n <= 9; ++n) CHECK(koh_sum(1, n) == range_poly(n));
  for (int m = 1; m <= 7; ++m) {
    for (unsigned n = 0; n <= 7; ++n) {
      CHECK(koh_sum(m, n) == gauss_box(static_cast<unsigned>(m), n));
    }
  }
}

TEST_CASE("each KOH term is symmetric about mn/2, nonnegative, unimodal") {
  for (int m = 1; m <= 8; ++m) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (const Partition& lambda : enumerate_partitions(m)) {
        const QPoly value = koh_term(lambda, n).value;
        if (value.is_zero()) continue;
        const std::size_t ambient = static_cast<std::size_t>(m) * n;
        CHECK(*value.degree() <= ambient);
        const CheckReport report = analyze(value, ambient);
        CHECK_MESSAGE(report.symmetric, lambda.to_string(), " n=", n);
        CHECK(report.nonnegative);
        CHECK(report.unimodal);
      }
    }
  }
}

TEST_CASE("lambda family indices and partitions") {
  CHECK(lambda_family(6, 4, 1, 1) == Partition{{3, 2, 1}});
  CHECK(lambda_family(9, 4, 1, 1) == Partition{{3, 2, 1, 1, 1, 1}});
  CHECK(lambda_i_max(9) == 2);
  CHECK(lambda_j_max(9, 4, 2) == 1);
  CHECK_NOTHROW(lambda_family(9, 4, 2, 1));
  CHECK_THROWS_AS(lambda_family(9, 4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(lambda_family(9, 4, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_family(9, 4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_family(7, 4, 1, 1), std::invalid_argument);  // not a multiple of 3
  CHECK_THROWS_AS(lambda_family(9, 3, 1, 1), std::invalid_argument);  // c < 4
  // Degenerate boundary: c = 4, b - 3i even, j at its upper bound.
  CHECK(lambda_family(9, 4, 1, 3) == Partition{{3, 2, 2, 2}});
}

TEST_CASE("lambda family part counts") {
  for (int b = 6; b <= 18; b += 3) {
    for (int c = 4; c <= 8; ++c) {
      for (int i = 1; i <= lambda_i_max(b); ++i) {
        for (int j = 1; j <= lambda_j_max(b, c, i); ++j) {
          const Partition lambda = lambda_family(b, c, i, j);
          CHECK(lambda.weight() == b);
          CHECK(lambda.length() == static_cast<std::size_t>(b - 2 * i - j));
          const long long threes = std::count(lambda.parts().begin(), lambda.parts().end(), 3);
          const long long twos = std::count(lambda.parts().begin(), lambda.parts().end(), 2);
          CHECK(threes == i);
          CHECK(twos == j);
        }
      }
    }
  }
}

TEST_CASE("closed_form_lambda equals the generic term away from the degenerate boundary") {
  for (int b = 6; b <= 18; b += 3) {
    for (int c = 4; c <= 8; ++c) {
      for (int i = 1; i <= lambda_i_max(b); ++i) {
        for (int j = 1; j <= lambda_j_max(b, c, i); ++j) {
          const Partition lambda = lambda_family(b, c, i, j);
          const QPoly closed = closed_form_lambda(b, c, i, j);
          const QPoly generic = koh_term(lambda, static_cast<unsigned>(c)).value;
          if (b - 3 * i - 2 * j >= 1) {
            CHECK_MESSAGE(closed == generic, "b=", b, " c=", c, " i=", i, " j=", j);
          } else {
            CHECK(closed != generic);
            CHECK(dominates(closed, generic).holds);
          }
        }
      }
    }
  }
}

TEST_CASE("degenerate boundary pair (9,4,1,3) pinned") {
  const QPoly generic = koh_term(Partition{{3, 2, 2, 2}}, 4).value;
  const QPoly closed = closed_form_lambda(9, 4, 1, 3);
  CHECK(generic == shift(gauss_box(2, 6), 12));
  CHECK(closed == shift(range_poly(6) * range_poly(6), 12));
  CHECK(closed != generic);
  CHECK(dominates(closed, generic).holds);
}

TEST_CASE("lambda first-difference product formula at the ambient middle") {
  for (int b = 6; b <= 15; b += 3) {
    for (int c = 4; c <= 7; ++c) {
      const std::size_t mid = static_cast<std::size_t>(b) * c / 2;
      for (int i = 1; i <= lambda_i_max(b); ++i) {
        for (int j = 1; j <= lambda_j_max(b, c, i); ++j) {
          const QPoly expected =
              range_poly(static_cast<std::size_t>((c - 4) * i)) *
              interval_poly(static_cast<std::size_t>(6 * i + 2 * j),
                            static_cast<std::size_t>((c + 2) * i + c * j));
          CHECK(truncated_first_difference(closed_form_lambda(b, c, i, j), mid) == expected);
        }
      }
    }
  }
}

TEST_CASE("mu family") {
  CHECK(mu_family(6, 1) == Partition{{2, 1, 1, 1, 1}});
  CHECK(mu_family(6, 2) == Partition{{2, 2, 1, 1}});
  CHECK(mu_i_max(6) == 2);
  CHECK(mu_i_max(7) == 3);
  CHECK_THROWS_AS(mu_family(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(mu_family(6, 0), std::invalid_argument);
}

TEST_CASE("closed_form_mu equals the generic term and its first difference is one run") {
  for (int b = 3; b <= 16; ++b) {
    for (int c = 4; c <= 8; ++c) {
      const std::size_t mid = static_cast<std::size_t>(b) * c / 2;
      for (int i = 1; i <= mu_i_max(b); ++i) {
        const QPoly closed = closed_form_mu(b, c, i);
        CHECK(closed == koh_term(mu_family(b, i), static_cast<unsigned>(c)).value);
        CHECK(truncated_first_difference(closed, mid) ==
              interval_poly(2 * static_cast<std::size_t>(i),
                            static_cast<std::size_t>(c * i)));
      }
    }
  }
  CHECK(truncated_first_difference(closed_form_mu(6, 4, 1), 12) == interval_poly(2, 4));
}

TEST_CASE("expand_d3") {
  SUBCASE("weight 3 reduces to the three-term decomposition") {
    QPoly sum;
    for (const QPoly& term : expand_d3(3, 4)) sum += term;
    CHECK(sum == gauss_box(3, 4));
    CHECK(expand_d3(3, 4).size() == 3);
  }
  SUBCASE("weight 6") {
    const auto terms = expand_d3(6, 4);
    CHECK(terms.size() == 5);
    CHECK(terms[0] == QPoly::monomial(1, 12));  // head q^{2b} with an empty box
    QPoly sum;
    for (const QPoly& term : terms) sum += term;
    CHECK(sum == gauss_box(3, 8));
  }
  SUBCASE("head term equals the all-threes KOH term") {
    for (int b = 3; b <= 18; b += 3) {
      for (int c = 4; c <= 8; ++c) {
        std::vector<int> parts(static_cast<std::size_t>(b / 3), 3);
        const QPoly head = koh_term(Partition{std::move(parts)},
                                    static_cast<unsigned>(c)).value;
        CHECK(expand_d3(b, c)[0] == head);
      }
    }
  }
  SUBCASE("identity across the grid") {
    for (int b = 3; b <= 24; b += 3) {
      for (int c = 4; c <= 10; ++c) {
        QPoly sum;
        for (const QPoly& term : expand_d3(b, c)) sum += term;
        CHECK(sum == gauss_box(3, static_cast<unsigned>(b * c / 3)));
      }
    }
  }
  SUBCASE("stays total for small c") {
    for (int c = 0; c <= 3; ++c) {
      QPoly sum;
      for (const QPoly& term : expand_d3(6, c)) sum += term;
      CHECK(sum == gauss_box(3, static_cast<unsigned>(2 * c)));
    }
  }
  CHECK_THROWS_AS(expand_d3(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(expand_d3(0, 4), std::invalid_argument);
}
