#include "kohlab/bergeron.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kohlab/parallel.hpp"
#include "kohlab/qbinom.hpp"

namespace kohlab {

Quadruple Quadruple::validated(long long a, long long b, long long c, long long d) {
  if (a < 1 || b < 1 || c < 1 || d < 1) {
    throw std::invalid_argument("quadruple: all entries must be positive");
  }
  if (a > b || a > c || a > d) {
    throw std::invalid_argument("quadruple: a must be minimal (a <= b, c, d)");
  }
  if (a * d != b * c) {
    throw std::invalid_argument("quadruple: a*d != b*c (" + std::to_string(a * d) +
                                " != " + std::to_string(b * c) + ")");
  }
  return Quadruple{a, b, c, d};
}

QPoly difference(const Quadruple& quad) {
  const Quadruple q = Quadruple::validated(quad.a, quad.b, quad.c, quad.d);
  return gauss_box(static_cast<unsigned>(q.b), static_cast<unsigned>(q.c)) -
         gauss_box(static_cast<unsigned>(q.d), static_cast<unsigned>(q.a));
}

CheckReport check(const Quadruple& quad) {
  const QPoly diff = difference(quad);
  return analyze(diff, static_cast<std::size_t>(quad.b * quad.c));
}

std::vector<Quadruple> enumerate_quadruples(long long max_product) {
  if (max_product < 1) {
    throw std::invalid_argument("enumerate_quadruples: max_product must be positive");
  }
  std::vector<Quadruple> result;
  for (long long a = 1; a * a <= max_product; ++a) {
    for (long long b = a; b * b <= max_product; ++b) {
      for (long long c = b; b * c <= max_product; ++c) {
        const long long product = b * c;
        if (product % a != 0) continue;
        const long long d = product / a;
        if (d < a) continue;  // cannot happen for a <= b <= c, kept for clarity
        result.push_back(Quadruple{a, b, c, d});
      }
    }
  }
  return result;
}

void for_each_check(long long max_product, unsigned jobs,
                    const std::function<void(const Quadruple&, const CheckReport&)>& consume) {
  const std::vector<Quadruple> quads = enumerate_quadruples(max_product);
  parallel_for_ordered<CheckReport>(
      quads.size(), jobs, [&](std::size_t i) { return check(quads[i]); },
      [&](std::size_t i, CheckReport&& report) { consume(quads[i], report); });
}

std::vector<QuadrupleCheck> sweep(long long max_product, unsigned jobs) {
  std::vector<QuadrupleCheck> failures;
  for_each_check(max_product, jobs, [&](const Quadruple& quad, const CheckReport& report) {
    if (!report.all_pass()) failures.push_back(QuadrupleCheck{quad, report});
  });
  return failures;
}

}  // namespace kohlab
