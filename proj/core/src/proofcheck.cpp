#include "kohlab/proofcheck.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "kohlab/kohdec.hpp"
#include "kohlab/parallel.hpp"
#include "kohlab/qbinom.hpp"

namespace kohlab {

namespace {

struct StepNameEntry {
  StepId id;
  std::string_view name;
};

constexpr StepNameEntry kStepNames[] = {
    {StepId::A2Coeff, "A2_COEFF"}, {StepId::A2Even, "A2_EVEN"},
    {StepId::EqA, "EQ_A"},         {StepId::EqAa, "EQ_AA"},
    {StepId::Ineq1, "INEQ_1"},     {StepId::Ineq2, "INEQ_2"},
    {StepId::Rl, "RL"},            {StepId::Eq66Dominance, "EQ_66_DOMINANCE"},
    {StepId::FinalA3, "FINAL_A3"},
};

long long ceil_half(long long value) { return (value + 1) / 2; }

// q^{6i+2} + ... + q^{d+2i} summed over 1 <= i <= (b-3)/3: the right side
// of the main inequality.
QPoly shifted_runs(int b, long long d) {
  QPoly sum;
  for (int i = 1; i <= lambda_i_max(b); ++i) {
    sum += interval_poly(6 * i + 2, static_cast<std::size_t>(d + 2 * i));
  }
  return sum;
}

// (1+...+q^{ci-4i})(q^{6i+2j}+...+q^{ci+2i+cj}): the first difference of
// one lambda-family product term.
QPoly lambda_difference_term(int c, int i, int j) {
  const long long ci = static_cast<long long>(c) * i;
  return range_poly(static_cast<std::size_t>(ci - 4 * i)) *
         interval_poly(static_cast<std::size_t>(6 * i + 2 * j),
                       static_cast<std::size_t>(ci + 2 * i + static_cast<long long>(c) * j));
}

// Left side of the main inequality: all lambda-family first differences.
QPoly lambda_difference_sum(int b, int c) {
  QPoly sum;
  for (int i = 1; i <= lambda_i_max(b); ++i) {
    for (int j = 1; j <= lambda_j_max(b, c, i); ++j) {
      sum += lambda_difference_term(c, i, j);
    }
  }
  return sum;
}

// sum_{1<=i<=ceil(b/2)-1} (q^{2i}+...+q^{ci}): the mu-family first
// differences.
QPoly mu_difference_sum(int b, int c) {
  QPoly sum;
  for (int i = 1; i <= mu_i_max(b); ++i) {
    sum += interval_poly(2 * static_cast<std::size_t>(i),
                         static_cast<std::size_t>(static_cast<long long>(c) * i));
  }
  return sum;
}

// (q^2+...+q^d) + sum_{1<=i<=(b-3)/3} q^{6i}: what the mu differences must
// dominate.
QPoly base_run_plus_spikes(int b, long long d) {
  QPoly sum = interval_poly(2, static_cast<std::size_t>(d));
  for (int i = 1; i <= lambda_i_max(b); ++i) {
    sum += QPoly::monomial(1, 6 * static_cast<std::size_t>(i));
  }
  return sum;
}

void require_degree3_params(const char* where, int b, int c, int min_b = 3) {
  if (b < min_b || b % 3 != 0) {
    throw std::invalid_argument(std::string(where) + ": b must be a multiple of 3, b >= " +
                                std::to_string(min_b));
  }
  if (c < 4) {
    throw std::invalid_argument(std::string(where) + ": c must be at least 4");
  }
}

StepVerdict make_verdict(StepId id, std::vector<std::pair<std::string, long long>> params) {
  StepVerdict verdict;
  verdict.id = id;
  verdict.params = std::move(params);
  return verdict;
}

void record_dominance(StepVerdict& verdict, const DominanceReport& report) {
  verdict.pass = report.holds;
  if (!report.holds) {
    verdict.detail = static_cast<long long>(*report.first_failing_degree);
  }
}

}  // namespace

std::string_view step_name(StepId id) {
  for (const auto& entry : kStepNames) {
    if (entry.id == id) return entry.name;
  }
  return "UNKNOWN";
}

std::optional<StepId> step_from_name(std::string_view name) {
  for (const auto& entry : kStepNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

const std::vector<StepId>& all_steps() {
  static const std::vector<StepId> steps = [] {
    std::vector<StepId> all;
    for (const auto& entry : kStepNames) all.push_back(entry.id);
    return all;
  }();
  return steps;
}

StepVerdict check_a2_coeffs(int d) {
  if (d < 1) {
    throw std::invalid_argument("check_a2_coeffs: d must be positive");
  }
  StepVerdict verdict = make_verdict(StepId::A2Coeff, {{"d", d}});
  const QPoly g = gauss_box(2, static_cast<unsigned>(d));
  for (long long i = 0; i <= d; ++i) {
    if (g.coeff(static_cast<std::size_t>(i)) != static_cast<long>(ceil_half(i + 1))) {
      verdict.pass = false;
      verdict.detail = i;
      break;
    }
  }
  return verdict;
}

StepVerdict check_a2(int b, int c) {
  if (b < 3 || c < b) {
    throw std::invalid_argument("check_a2: requires c >= b >= 3");
  }
  if ((static_cast<long long>(b) * c) % 2 != 0) {
    throw std::invalid_argument("check_a2: bc must be even");
  }
  StepVerdict verdict = make_verdict(StepId::A2Even, {{"b", b}, {"c", c}});
  const long long half = static_cast<long long>(b) * c / 2;
  const QPoly small = gauss_box(2, static_cast<unsigned>(half));
  const QPoly large = gauss_box(static_cast<unsigned>(b), static_cast<unsigned>(c));
  for (long long i = 1; i <= half; ++i) {
    const std::size_t at = static_cast<std::size_t>(i);
    if (large.coeff(at) - large.coeff(at - 1) < small.coeff(at) - small.coeff(at - 1)) {
      verdict.pass = false;
      verdict.detail = i;
      break;
    }
  }
  return verdict;
}

StepVerdict check_eq_a(int b, int c) {
  require_degree3_params("check_eq_a", b, c);
  StepVerdict verdict = make_verdict(StepId::EqA, {{"b", b}, {"c", c}});
  const long long d = static_cast<long long>(b) * c / 3;
  QPoly sum;
  for (const QPoly& term : expand_d3(b, c)) sum += term;
  const QPoly expected = gauss_box(3, static_cast<unsigned>(d));
  if (sum != expected) {
    verdict.pass = false;
    const QPoly residue = sum - expected;
    for (std::size_t i = 0; i < residue.size(); ++i) {
      if (sgn(residue.coeff(i)) != 0) {
        verdict.detail = static_cast<long long>(i);
        break;
      }
    }
  }
  return verdict;
}

StepVerdict check_eq_aa(int b, int c) {
  require_degree3_params("check_eq_aa", b, c);
  StepVerdict verdict = make_verdict(StepId::EqAa, {{"b", b}, {"c", c}});
  const long long d = static_cast<long long>(b) * c / 3;
  const std::size_t mid = static_cast<std::size_t>(3 * d / 2);

  QPoly indexed_sum;  // the expand_d3 terms without the head
  for (int i = 0; i <= lambda_i_max(b); ++i) {
    indexed_sum += shift(qbin(d - 4 * i - 1, 1) * qbin(2 * d - 8 * i - 1, 1), 6LL * i + 2);
    indexed_sum += shift(qbin(3 * d - 12 * i + 1, 1), 6LL * i);
  }
  const QPoly lhs = truncated_first_difference(indexed_sum, mid);

  QPoly rhs;
  for (int i = 0; i <= lambda_i_max(b); ++i) {
    rhs += QPoly::monomial(1, 6 * static_cast<std::size_t>(i));
    rhs += interval_poly(6 * i + 2, static_cast<std::size_t>(d + 2 * i));
  }
  // Truncate the right side at mid as well; for c >= 4 nothing exceeds it.
  {
    std::vector<BigInt> kept(mid + 1);
    for (std::size_t i = 0; i <= mid; ++i) kept[i] = rhs.coeff(i);
    rhs = QPoly{std::move(kept)};
  }

  if (lhs != rhs) {
    verdict.pass = false;
    const QPoly residue = lhs - rhs;
    for (std::size_t i = 0; i < residue.size(); ++i) {
      if (sgn(residue.coeff(i)) != 0) {
        verdict.detail = static_cast<long long>(i);
        break;
      }
    }
  }
  return verdict;
}

StepVerdict check_ineq_1(int b, int c) {
  require_degree3_params("check_ineq_1", b, c, 6);
  StepVerdict verdict = make_verdict(StepId::Ineq1, {{"b", b}, {"c", c}});
  const long long d = static_cast<long long>(b) * c / 3;
  record_dominance(verdict, dominates(lambda_difference_sum(b, c), shifted_runs(b, d)));
  return verdict;
}

StepVerdict check_ineq_2(int b, int c, int i) {
  require_degree3_params("check_ineq_2", b, c, 6);
  if (c <= 4) {
    throw std::invalid_argument("check_ineq_2: requires c > 4");
  }
  if (c == 5 && b < 18) {
    throw std::invalid_argument("check_ineq_2: c = 5 requires b >= 18");
  }
  const int base = b / 6;
  if (i < base + 1 || i > lambda_i_max(b)) {
    throw std::invalid_argument("check_ineq_2: i out of range [floor(b/6)+1, (b-3)/3]");
  }
  StepVerdict verdict = make_verdict(StepId::Ineq2, {{"b", b}, {"c", c}, {"i", i}});
  const long long d = static_cast<long long>(b) * c / 3;
  const int shifted = i - base;

  QPoly lhs;
  for (int j = 1; j <= lambda_j_max(b, c, shifted); ++j) {
    lhs += interval_poly(1, static_cast<std::size_t>((c - 4) * shifted)) *
           interval_poly(static_cast<std::size_t>(6 * shifted + 2 * j),
                         static_cast<std::size_t>((c + 2) * shifted + c * j));
  }
  const QPoly rhs = interval_poly(6 * i + 2, static_cast<std::size_t>(d + 2 * i));

  std::size_t lhs_begin = 0;
  while (lhs_begin < lhs.size() && sgn(lhs.coeff(lhs_begin)) == 0) ++lhs_begin;
  const bool begins_ok = !lhs.is_zero() && lhs_begin <= static_cast<std::size_t>(6 * i + 2);
  const bool ends_ok = !lhs.is_zero() && *lhs.degree() >= static_cast<std::size_t>(d + 2 * i);
  if (!begins_ok || !ends_ok) {
    verdict.pass = false;
    verdict.detail = begins_ok ? static_cast<long long>(d + 2 * i) : 6 * i + 2;
    return verdict;
  }
  record_dominance(verdict, dominates(lhs, rhs));
  return verdict;
}

StepVerdict check_rl(int b) {
  if (b <= 6 || b % 2 != 0 || b % 3 != 0) {
    throw std::invalid_argument("check_rl: b must be an even multiple of 3 greater than 6");
  }
  const int c = 4;
  StepVerdict verdict = make_verdict(StepId::Rl, {{"b", b}});
  const long long d = static_cast<long long>(b) * c / 3;
  const std::size_t at = static_cast<std::size_t>(2 * b - 6);

  const BigInt right = shifted_runs(b, d).coeff(at);
  const BigInt left = lambda_difference_sum(b, c).coeff(at);

  bool pairs_contribute = true;
  const std::pair<int, int> designated[] = {
      {(b - 6) / 3, 2}, {(b - 6) / 3, 3}, {(b - 9) / 3, 3}, {(b - 9) / 3, 4}};
  for (const auto& [i, j] : designated) {
    if (i < 1 || i > lambda_i_max(b) || j < 1 || j > lambda_j_max(b, c, i) ||
        sgn(lambda_difference_term(c, i, j).coeff(at)) <= 0) {
      pairs_contribute = false;
      break;
    }
  }

  verdict.pass = (right == 2) && (left >= 4) && (left > right) && pairs_contribute;
  if (!verdict.pass) verdict.detail = static_cast<long long>(at);
  return verdict;
}

StepVerdict check_66(int b, int c) {
  require_degree3_params("check_66", b, c, 6);
  StepVerdict verdict = make_verdict(StepId::Eq66Dominance, {{"b", b}, {"c", c}});
  const long long d = static_cast<long long>(b) * c / 3;
  const long long guard = static_cast<long long>(c) * (ceil_half(b) - 2) + 1;

  if (guard > 2 * b - 6) {
    verdict.branch = "dominance";
    record_dominance(verdict, dominates(mu_difference_sum(b, c), base_run_plus_spikes(b, d)));
    return verdict;
  }
  // Guard failed: the top spike degree may be covered only once.
  if (b == 6) {
    verdict.branch = "direct";
    verdict.pass = check_final_a3(b, c).pass;
  } else if (c == 4 && b % 2 == 0) {
    verdict.branch = "rl-reserve";
    verdict.pass = check_rl(b).pass && check_final_a3(b, c).pass;
  } else {
    verdict.branch = "dominance";
    record_dominance(verdict, dominates(mu_difference_sum(b, c), base_run_plus_spikes(b, d)));
  }
  if (!verdict.pass && !verdict.detail) verdict.detail = 2 * b - 6;
  return verdict;
}

StepVerdict check_final_a3(int b, int c) {
  require_degree3_params("check_final_a3", b, c, 6);
  StepVerdict verdict = make_verdict(StepId::FinalA3, {{"b", b}, {"c", c}});
  const long long d = static_cast<long long>(b) * c / 3;
  const QPoly narrow = truncated_first_difference(gauss_box(3, static_cast<unsigned>(d)));
  const QPoly wide = truncated_first_difference(
      gauss_box(static_cast<unsigned>(b), static_cast<unsigned>(c)));
  record_dominance(verdict, dominates(wide, narrow));
  return verdict;
}

std::vector<StepVerdict> run_a2_case(int bmax, int cmax, unsigned jobs) {
  std::vector<std::function<StepVerdict()>> tasks;
  const long long dmax = static_cast<long long>(bmax) * cmax / 2;
  for (int d = 1; d <= dmax; ++d) {
    tasks.push_back([d] { return check_a2_coeffs(d); });
  }
  for (int b = 3; b <= bmax; ++b) {
    for (int c = b; c <= cmax; ++c) {
      if ((static_cast<long long>(b) * c) % 2 != 0) continue;
      tasks.push_back([b, c] { return check_a2(b, c); });
    }
  }
  return parallel_map<StepVerdict>(tasks.size(), jobs,
                                   [&](std::size_t i) { return tasks[i](); });
}

std::vector<StepVerdict> run_a3_case(int bmax, int cmax, const std::set<StepId>& steps,
                                     unsigned jobs) {
  std::vector<std::function<StepVerdict()>> tasks;
  const auto want = [&](StepId id) { return steps.contains(id); };

  for (StepId id : all_steps()) {
    if (!want(id)) continue;
    switch (id) {
      case StepId::EqA:
      case StepId::EqAa:
        for (int b = 3; b <= bmax; b += 3) {
          for (int c = 4; c <= cmax; ++c) {
            tasks.push_back([id, b, c] {
              return id == StepId::EqA ? check_eq_a(b, c) : check_eq_aa(b, c);
            });
          }
        }
        break;
      case StepId::Ineq1:
        for (int b = 6; b <= bmax; b += 3) {
          for (int c = 4; c <= cmax; ++c) {
            tasks.push_back([b, c] { return check_ineq_1(b, c); });
          }
        }
        break;
      case StepId::Ineq2:
        for (int b = 6; b <= bmax; b += 3) {
          for (int c = 5; c <= cmax; ++c) {
            if (c == 5 && b < 18) continue;
            for (int i = b / 6 + 1; i <= lambda_i_max(b); ++i) {
              tasks.push_back([b, c, i] { return check_ineq_2(b, c, i); });
            }
          }
        }
        break;
      case StepId::Rl:
        for (int b = 12; b <= bmax; b += 6) {
          tasks.push_back([b] { return check_rl(b); });
        }
        break;
      case StepId::Eq66Dominance:
        for (int b = 6; b <= bmax; b += 3) {
          for (int c = 4; c <= cmax; ++c) {
            tasks.push_back([b, c] { return check_66(b, c); });
          }
        }
        break;
      case StepId::FinalA3:
        for (int b = 6; b <= bmax; b += 3) {
          for (int c = 4; c <= cmax; ++c) {
            tasks.push_back([b, c] { return check_final_a3(b, c); });
          }
        }
        break;
      case StepId::A2Coeff:
      case StepId::A2Even:
        break;  // degree-2 steps run under run_a2_case
    }
  }
  return parallel_map<StepVerdict>(tasks.size(), jobs,
                                   [&](std::size_t i) { return tasks[i](); });
}

}  // namespace kohlab
