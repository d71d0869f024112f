#pragma once

/**
 * @file proofcheck.hpp
 * @brief Mechanical verification of the degree-2 and degree-3 argument
 *        steps at concrete parameters.
 *
 * Each step rebuilds both sides of one displayed identity or degreewise
 * inequality from qpoly/qbinom/kohdec primitives and compares them, so a
 * failure localizes to a single step. First differences of decomposition
 * terms are always truncated at the ambient middle degree floor(bc/2)
 * (equivalently floor(3d/2) with d = bc/3).
 */

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kohlab/qpoly.hpp"

namespace kohlab {

enum class StepId {
  A2Coeff,         ///< coefficients of gauss_box(2, d) equal ceil((i+1)/2) up to degree d
  A2Even,          ///< first differences of gauss_box(b, c) dominate those of gauss_box(2, bc/2)
  EqA,             ///< expand_d3 terms sum to gauss_box(3, bc/3)
  EqAa,            ///< truncated first difference of the indexed terms equals the spike+run sum
  Ineq1,           ///< lambda-family products dominate the shifted runs
  Ineq2,           ///< shifted-index lambda products dominate one run, with degree bounds
  Rl,              ///< at degree 2b-6, c = 4: right coefficient is 2, left is at least 4
  Eq66Dominance,   ///< mu-family runs dominate the base run plus the spikes
  FinalA3,         ///< first difference of gauss_box(3, d) dominated by that of gauss_box(b, c)
};

/// Wire names used by the CLI: "A2_COEFF", "EQ_A", "INEQ_1", ...
std::string_view step_name(StepId id);
std::optional<StepId> step_from_name(std::string_view name);
const std::vector<StepId>& all_steps();

struct StepVerdict {
  StepId id = StepId::A2Coeff;
  std::vector<std::pair<std::string, long long>> params;
  bool pass = true;
  /// First failing degree or index when pass is false.
  std::optional<long long> detail;
  /// Which verification branch ran (check_66 only).
  std::string branch;
};

/// Coefficients of gauss_box(2, d): a_i = ceil((i+1)/2) for 0 <= i <= d.
StepVerdict check_a2_coeffs(int d);

/// b_i - b_{i-1} >= a_i - a_{i-1} for 1 <= i <= bc/2, with a from
/// gauss_box(2, bc/2) and b from gauss_box(b, c). Requires c >= b >= 3 and
/// bc even.
StepVerdict check_a2(int b, int c);

/// Sum of expand_d3(b, c) equals gauss_box(3, bc/3) exactly.
StepVerdict check_eq_a(int b, int c);

/// Truncated first difference of the indexed expand_d3 terms (head
/// excluded) equals sum_i (q^{6i} + q^{6i+2} + ... + q^{d+2i}), both
/// truncated at floor(3d/2).
StepVerdict check_eq_aa(int b, int c);

/// sum_{i,j} (1+...+q^{ci-4i})(q^{6i+2j}+...+q^{ci+2i+cj})
///   >= sum_{1<=i<=(b-3)/3} (q^{6i+2}+...+q^{d+2i}) degreewise,
/// over 1 <= i <= (b-3)/3, 1 <= j <= lambda_j_max(b, c, i).
StepVerdict check_ineq_1(int b, int c);

/// For one index i in [floor(b/6)+1, (b-3)/3] with c > 4 (and b >= 18 when
/// c = 5): the shifted-index products begin no later and end no earlier
/// than q^{6i+2}+...+q^{d+2i}, and dominate it degreewise.
StepVerdict check_ineq_2(int b, int c, int i);

/// c = 4, b an even multiple of 3 greater than 6: at degree 2b-6 the right
/// side of the main inequality has coefficient exactly 2 while the left
/// side has coefficient at least 4, with all four designated (i, j) index
/// pairs contributing.
StepVerdict check_rl(int b);

/// sum_{1<=i<=ceil(b/2)-1}(q^{2i}+...+q^{ci}) >= (q^2+...+q^d) + spikes
/// q^{6i} degreewise. When the guard c(ceil(b/2)-2)+1 > 2b-6 fails the
/// dominance is not attempted: b = 6 verifies the final inequality
/// directly, and c = 4 with even b > 6 additionally requires check_rl.
StepVerdict check_66(int b, int c);

/// End-to-end: truncated_first_difference(gauss_box(3, d)) is dominated
/// by truncated_first_difference(gauss_box(b, c)), d = bc/3. This is the
/// ground truth all other steps must be consistent with.
StepVerdict check_final_a3(int b, int c);

/// Degree-2 grid: A2_COEFF for 1 <= d <= floor(bmax*cmax/2), then A2_EVEN
/// for 3 <= b <= bmax, b <= c <= cmax with bc even.
std::vector<StepVerdict> run_a2_case(int bmax, int cmax, unsigned jobs = 1);

/// Degree-3 grid over b in {3, 6, ..., bmax} (per-step lower bounds apply)
/// and c in {4, ..., cmax}, restricted to `steps`. Deterministic order.
std::vector<StepVerdict> run_a3_case(int bmax, int cmax, const std::set<StepId>& steps,
                                     unsigned jobs = 1);

}  // namespace kohlab
