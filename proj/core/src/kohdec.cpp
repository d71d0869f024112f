#include "kohlab/kohdec.hpp"

#include <sstream>
#include <stdexcept>

#include "kohlab/qbinom.hpp"

namespace kohlab {

namespace {

// Floor division for possibly negative numerators, positive denominators.
long long floor_div(long long numerator, long long denominator) {
  long long quotient = numerator / denominator;
  if (numerator % denominator != 0 && (numerator < 0) != (denominator < 0)) --quotient;
  return quotient;
}

Partition repeated_parts(int threes, int twos, int ones) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(threes + twos + ones));
  parts.insert(parts.end(), static_cast<std::size_t>(threes), 3);
  parts.insert(parts.end(), static_cast<std::size_t>(twos), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return Partition{std::move(parts)};
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    weight_ += parts_[i];
  }
}

int Partition::part(std::size_t index) const noexcept {
  if (index == 0 || index > parts_.size()) return 0;
  return parts_[index - 1];
}

long long Partition::prefix_sum(std::size_t i) const noexcept {
  long long sum = 0;
  for (std::size_t j = 0; j < i && j < parts_.size(); ++j) sum += parts_[j];
  return sum;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

std::vector<Partition> enumerate_partitions(int m) {
  if (m <= 0) {
    throw std::invalid_argument("enumerate_partitions: m must be positive");
  }
  std::vector<Partition> result;
  std::vector<int> current;
  // Descending first parts give reverse-lexicographic order directly.
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      current.push_back(next);
      self(self, remaining - next, next);
      current.pop_back();
    }
  };
  recurse(recurse, m, m);
  return result;
}

std::vector<long long> partial_sums(const Partition& lambda) {
  std::vector<long long> sums(lambda.length() + 2);
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] = lambda.prefix_sum(i);
  return sums;
}

KohTerm koh_term(const Partition& lambda, unsigned n) {
  KohTerm term{lambda, 0, {}, QPoly::one()};
  for (int part : lambda.parts()) {
    term.exponent += static_cast<unsigned long long>(part) * (part - 1);
  }
  bool vanished = false;
  for (std::size_t j = 1; j <= lambda.length(); ++j) {
    const long long top = static_cast<long long>(j) * (static_cast<long long>(n) + 2) -
                          lambda.prefix_sum(j - 1) - lambda.prefix_sum(j + 1);
    const int k = lambda.part(j) - lambda.part(j + 1);
    term.factors.push_back(KohFactor{top, k});
    if (k == 0 || vanished) continue;  // k = 0 factors contribute 1
    const QPoly factor = qbin(top, k);
    if (factor.is_zero()) {
      vanished = true;
      continue;
    }
    term.value = term.value * factor;
  }
  term.value = vanished ? QPoly{} : shift(term.value, static_cast<long long>(term.exponent));
  return term;
}

QPoly koh_sum(int m, unsigned n) {
  QPoly sum;
  for (const Partition& lambda : enumerate_partitions(m)) {
    sum += koh_term(lambda, n).value;
  }
  return sum;
}

int lambda_i_max(int b) { return (b - 3) / 3; }

int lambda_j_max(int b, int c, int i) {
  return static_cast<int>(floor_div(static_cast<long long>(b) * c - 4LL * i * (c - 1), 2LL * c));
}

namespace {

void validate_lambda_indices(int b, int c, int i, int j) {
  if (b < 3 || b % 3 != 0) {
    throw std::invalid_argument("lambda family: b must be a positive multiple of 3");
  }
  if (c < 4) {
    throw std::invalid_argument("lambda family: c must be at least 4");
  }
  if (i < 1 || i > lambda_i_max(b)) {
    throw std::invalid_argument("lambda family: i out of range [1, (b-3)/3]");
  }
  if (j < 1 || j > lambda_j_max(b, c, i)) {
    throw std::invalid_argument("lambda family: j out of range [1, floor(b/2 - 2i(c-1)/c)]");
  }
}

}  // namespace

Partition lambda_family(int b, int c, int i, int j) {
  validate_lambda_indices(b, c, i, j);
  return repeated_parts(i, j, b - 3 * i - 2 * j);
}

QPoly closed_form_lambda(int b, int c, int i, int j) {
  validate_lambda_indices(b, c, i, j);
  const long long bc = static_cast<long long>(b) * c;
  const long long ci = static_cast<long long>(c) * i;
  const long long cj = static_cast<long long>(c) * j;
  QPoly product = qbin(ci - 4 * i + 1, 1) * qbin(ci - 4 * i + cj - 2 * j + 1, 1) *
                  qbin(bc - 2 * ci - 4 * i - cj - 2 * j + 1, 1);
  return shift(product, 6LL * i + 2LL * j);
}

int mu_i_max(int b) { return (b + 1) / 2 - 1; }

namespace {

void validate_mu_indices(int b, int i) {
  if (b < 1) {
    throw std::invalid_argument("mu family: b must be positive");
  }
  if (i < 1 || i > mu_i_max(b)) {
    throw std::invalid_argument("mu family: i out of range [1, ceil(b/2) - 1]");
  }
}

}  // namespace

Partition mu_family(int b, int i) {
  validate_mu_indices(b, i);
  return repeated_parts(0, i, b - 2 * i);
}

QPoly closed_form_mu(int b, int c, int i) {
  validate_mu_indices(b, i);
  const long long bc = static_cast<long long>(b) * c;
  const long long ci = static_cast<long long>(c) * i;
  return shift(qbin(ci - 2 * i + 1, 1) * qbin(bc - ci - 2 * i + 1, 1), 2LL * i);
}

std::vector<QPoly> expand_d3(int b, int c) {
  if (b < 3 || b % 3 != 0) {
    throw std::invalid_argument("expand_d3: b must be a positive multiple of 3");
  }
  if (c < 0) {
    throw std::invalid_argument("expand_d3: c must be nonnegative");
  }
  const long long d = static_cast<long long>(b) * c / 3;
  std::vector<QPoly> terms;
  terms.push_back(shift(qbin(d - 4LL * b / 3 + 3, 3), 2LL * b));
  for (int i = 0; i <= (b - 3) / 3; ++i) {
    terms.push_back(
        shift(qbin(d - 4 * i - 1, 1) * qbin(2 * d - 8 * i - 1, 1), 6LL * i + 2));
    terms.push_back(shift(qbin(3 * d - 12 * i + 1, 1), 6LL * i));
  }
  return terms;
}

}  // namespace kohlab
