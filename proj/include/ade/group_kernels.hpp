#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ade/gamma_group.hpp"

// Data-parallel kernels behind gamma_group. Each has an OpenMP version and a
// serial reference; tests check they agree and bench_kernels times them.
namespace ade::kernels {

// Index of x in elements within tol, or elements.size() if absent.
std::size_t find_element(std::span<const GroupElement> elements, const GroupElement& x,
                         double tol);

// Row-major |G| x |G| product table. Throws ClosureOverflow if a product is
// not found (the elements are not closed).
std::vector<std::uint32_t> multiplication_table(std::span<const GroupElement> elements, double tol);
std::vector<std::uint32_t> multiplication_table_serial(std::span<const GroupElement> elements,
                                                       double tol);

// a[(i * k + j) * k + l] = #{x in C_i : x^-1 z_l in C_j}, z_l the first
// element of class l, k the class count.
std::vector<long> class_structure_constants(const GammaGroup& g);
std::vector<long> class_structure_constants_serial(const GammaGroup& g);

}  // namespace ade::kernels
