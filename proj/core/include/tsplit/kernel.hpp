#ifndef TSPLIT_KERNEL_HPP
#define TSPLIT_KERNEL_HPP

#include <cstddef>
#include <vector>

#include "tsplit/linalg.hpp"
#include "tsplit/sheaf_map.hpp"
#include "tsplit/splitting.hpp"

namespace tsplit {

// Coefficient matrix of the map on global sections after twisting by O(twist).
// Source block j has max(0, b_j + twist + 1) columns, ordered by t-exponent.
template <class K>
Matrix<K> section_matrix(const GradedSheafMap<K>& m, int twist);

template <class K>
std::size_t section_kernel_dim(const GradedSheafMap<K>& m, int twist);

// Rank over the function field, estimated at (1,0), (0,1), (1,1) and a few seeded points.
template <class K>
std::size_t generic_rank(const GradedSheafMap<K>& m);

// Splitting type of ker m from the nullity scan. Throws CertificationError if the
// counts do not stabilize at the expected rank inside the window.
template <class K>
SplittingType splitting_of_kernel(const GradedSheafMap<K>& m);

// Minimal generators of ker m as columns, source twists in descending order.
template <class K>
GradedSheafMap<K> kernel_matrix(const GradedSheafMap<K>& m);

// dual(kernel_matrix(dual(n))); n must have full rank everywhere.
template <class K>
GradedSheafMap<K> cokernel_matrix(const GradedSheafMap<K>& n);

// Determinant of a square matrix of binary forms by fraction-free elimination.
template <class K>
BinaryForm<K> form_determinant(std::vector<std::vector<BinaryForm<K>>> rows);

template <class K>
std::vector<BinaryForm<K>> maximal_minors(const GradedSheafMap<K>& m);

template <class K>
bool full_rank_everywhere(const GradedSheafMap<K>& m);

template <class K>
bool check_smooth_along_curve(const IdealCombination<K>& f);

struct EulerRoutes {
  long long via_delta = 0;
  long long via_gradient = 0;
  bool agree() const { return via_delta == via_gradient; }
};

// Kernel dimensions at twist m (>= -1) by the delta route and by the gradient route.
template <class K>
EulerRoutes euler_routes(const IdealCombination<K>& f, int m);

template <class K>
bool h0_euler_crosscheck(const IdealCombination<K>& f, int m) {
  return euler_routes(f, m).agree();
}

}  // namespace tsplit

#endif
