#pragma once

/**
 * @file kohdec.hpp
 * @brief Integer partitions and the KOH decomposition of q-binomials.
 *
 * The KOH identity writes binom(m+n, m)_q as a sum over partitions
 * lambda of m of terms
 *
 *   F_lambda(q) = q^(2 * sum_i C(lambda_i, 2))
 *                 * prod_j binom(j(n+2) - Y_{j-1} - Y_{j+1}, lambda_j - lambda_{j+1})_q
 *
 * where Y_i is the sum of the first i parts (and parts are zero past the
 * end). Each nonzero term is symmetric about m*n/2, nonnegative and
 * unimodal. This header also provides the two special families of
 * partitions used in the degree-3 analysis -- lambda^{i,j} with parts of
 * sizes 3/2/1 and mu^i with parts of sizes 2/1 -- together with their
 * product closed forms, and the expansion of binom(d+3, 3)_q into
 * explicit head-plus-indexed terms.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "kohlab/qpoly.hpp"

namespace kohlab {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  /// Validates that parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }

  /// 1-based part access; zero past the last part.
  int part(std::size_t index) const noexcept;

  /// Y_i = sum of the first i parts; Y_i = weight for i >= length.
  long long prefix_sum(std::size_t i) const noexcept;

  bool operator==(const Partition&) const = default;

  std::string to_string() const;  // "(3,2,1)"

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of m, each exactly once, in reverse-lexicographic order
/// (largest first): (m), ..., (1,1,...,1). Rejects m <= 0.
std::vector<Partition> enumerate_partitions(int m);

/// [Y_0, Y_1, ..., Y_{length+1}]; the trailing entries equal the weight.
std::vector<long long> partial_sums(const Partition& lambda);

/// One qbin factor of a KOH term.
struct KohFactor {
  long long top = 0;
  int k = 0;

  bool operator==(const KohFactor&) const = default;
};

/// A partition together with its KOH term data:
/// value = q^exponent * prod qbin(factor.top, factor.k).
struct KohTerm {
  Partition partition;
  unsigned long long exponent = 0;  ///< 2 * sum_i C(lambda_i, 2)
  std::vector<KohFactor> factors;   ///< one entry per part position
  QPoly value;
};

/// The KOH term of `lambda` in the decomposition of binom(m+n, m)_q.
/// Factors with k = 0 contribute 1; a factor with negative top and k > 0
/// makes the whole term zero.
KohTerm koh_term(const Partition& lambda, unsigned n);

/// Sum of koh_term over all partitions of m; equals gauss_box(m, n).
QPoly koh_sum(int m, unsigned n);

/// Index bounds for the lambda^{i,j} family: 1 <= i <= (b-3)/3 and
/// 1 <= j <= floor(b/2 - 2i(c-1)/c), the floor computed entirely in
/// integers as floor((b*c - 4i(c-1)) / (2c)).
int lambda_i_max(int b);
int lambda_j_max(int b, int c, int i);

/// lambda^{i,j}: i parts of 3, j parts of 2, b - 3i - 2j parts of 1.
/// Requires b a positive multiple of 3, c >= 4 and (i, j) within the
/// bounds above; out-of-range indices are rejected. At the j upper bound
/// with c = 4 and b - 3i even the family degenerates to a partition with
/// no parts of size 1.
Partition lambda_family(int b, int c, int i, int j);

/// q^(6i+2j) * qbin(ci-4i+1, 1) * qbin(ci-4i+cj-2j+1, 1)
///           * qbin(bc-2ci-4i-cj-2j+1, 1).
/// Equals koh_term(lambda_family(b,c,i,j), c).value whenever the partition
/// has at least one part of each size 1, 2, 3; at the degenerate c = 4
/// boundary it dominates the generic term degreewise instead.
QPoly closed_form_lambda(int b, int c, int i, int j);

/// Index bound for the mu^i family: 1 <= i <= ceil(b/2) - 1.
int mu_i_max(int b);

/// mu^i: i parts of 2 and b - 2i parts of 1.
Partition mu_family(int b, int i);

/// q^(2i) * qbin(ci-2i+1, 1) * qbin(bc-ci-2i+1, 1); equals
/// koh_term(mu_family(b,i), c).value. Its first difference truncated at
/// floor(bc/2) is exactly q^(2i) + q^(2i+1) + ... + q^(ci).
QPoly closed_form_mu(int b, int c, int i);

/// Terms of the iterated decomposition of binom(d+3, 3)_q with d = bc/3:
/// first the head q^(2b) * qbin(d - 4b/3 + 3, 3), then for each
/// 0 <= i <= (b-3)/3 the pair
///   q^(6i+2) * qbin(d-4i-1, 1) * qbin(2d-8i-1, 1)  and
///   q^(6i)   * qbin(3d-12i+1, 1).
/// The terms sum to gauss_box(3, d). Rejects b not divisible by 3.
std::vector<QPoly> expand_d3(int b, int c);

}  // namespace kohlab
