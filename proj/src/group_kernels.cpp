#include "ade/group_kernels.hpp"

#include <atomic>

#include "ade/errors.hpp"

namespace ade::kernels {

std::size_t find_element(std::span<const GroupElement> elements, const GroupElement& x,
                         double tol) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].distance(x) < tol) return i;
  }
  return elements.size();
}

std::vector<std::uint32_t> multiplication_table_serial(std::span<const GroupElement> elements,
                                                       double tol) {
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = find_element(elements, elements[i] * elements[j], tol);
      if (k == n) throw ClosureOverflow("element set is not closed under multiplication");
      table[i * n + j] = static_cast<std::uint32_t>(k);
    }
  }
  return table;
}

std::vector<std::uint32_t> multiplication_table(std::span<const GroupElement> elements,
                                                double tol) {
  const long n = static_cast<long>(elements.size());
  std::vector<std::uint32_t> table(n * n);
  std::atomic<bool> missing{false};
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const std::size_t k = find_element(elements, elements[i] * elements[j], tol);
      if (k == static_cast<std::size_t>(n)) missing = true;
      table[i * n + j] = static_cast<std::uint32_t>(k);
    }
  }
  if (missing) throw ClosureOverflow("element set is not closed under multiplication");
  return table;
}

namespace {
void structure_row(const GammaGroup& g, std::size_t i, std::vector<long>& a) {
  const std::size_t k = g.classes.size();
  const std::size_t n = g.order();
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t z = g.classes[l].front();
    for (std::size_t x : g.classes[i]) {
      const std::size_t y = g.product[g.inverse[x] * n + z];
      a[(i * k + g.class_of[y]) * k + l] += 1;
    }
  }
}
}  // namespace

std::vector<long> class_structure_constants_serial(const GammaGroup& g) {
  const std::size_t k = g.classes.size();
  std::vector<long> a(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i) structure_row(g, i, a);
  return a;
}

std::vector<long> class_structure_constants(const GammaGroup& g) {
  const long k = static_cast<long>(g.classes.size());
  std::vector<long> a(k * k * k, 0);
  // Rows i write disjoint slices of a.
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < k; ++i) structure_row(g, static_cast<std::size_t>(i), a);
  return a;
}

}  // namespace ade::kernels
