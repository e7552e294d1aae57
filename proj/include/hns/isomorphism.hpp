#ifndef HNS_ISOMORPHISM_HPP
#define HNS_ISOMORPHISM_HPP

// Brute-force search for unit-fixing basis permutations between small systems.

#include "hns/finite_system.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace hns {

/// p[i-1] is the image of e_i. Unit-fixing permutations have p[0] = e_1.
using Permutation = std::vector<BasisIndex>;

inline constexpr int default_search_cap = 8;

Permutation identity_permutation(int dimension);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer after inner
Permutation inverse(const Permutation& p);
bool is_unit_fixing_permutation(const Permutation& p, int dimension);
std::string to_string(const Permutation& p);

/// Tensor relabelled so that C'[p(i)][p(j)][p(k)] = C[i][j][k].
template <class Scalar>
BasicFiniteHNS<Scalar> relabel(const BasicFiniteHNS<Scalar>& sys, const Permutation& p) {
  const int m = sys.dimension();
  if (!is_unit_fixing_permutation(p, m))
    throw PreconditionError("relabel: not a unit-fixing permutation of 1.." + std::to_string(m));
  std::vector<Matrix<Scalar>> slices(m, Matrix<Scalar>::Zero(m, m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        slices[p[i].offset()](p[k].offset(), p[j].offset()) = sys.slices()[i](k, j);
  return BasicFiniteHNS<Scalar>(std::move(slices));
}

namespace detail {

inline void require_within_cap(int dimension, int cap) {
  if (dimension > cap)
    throw CapacityError("permutation search over dimension " + std::to_string(dimension) +
                        " exceeds the cap of " + std::to_string(cap));
}

/// relabel(a, p) == b, without materialising the relabelled tensor.
template <class Scalar>
bool maps_onto(const BasicFiniteHNS<Scalar>& a, const BasicFiniteHNS<Scalar>& b,
               const Permutation& p) {
  const int m = a.dimension();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (a.slices()[i](k, j) != b.slices()[p[i].offset()](p[k].offset(), p[j].offset()))
          return false;
  return true;
}

/// Visits unit-fixing permutations in lexicographic order until visit returns false.
template <class Visit>
void for_each_unit_fixing_permutation(int dimension, Visit&& visit) {
  Permutation p = identity_permutation(dimension);
  do {
    if (!visit(p)) return;
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

}  // namespace detail

/// Lexicographically smallest unit-fixing p with relabel(a, p) == b.
/// Throws PreconditionError on a dimension mismatch and CapacityError when
/// the dimension exceeds cap.
template <class Scalar>
std::optional<Permutation> find_permutation_isomorphism(const BasicFiniteHNS<Scalar>& a,
                                                        const BasicFiniteHNS<Scalar>& b,
                                                        int cap = default_search_cap) {
  if (a.dimension() != b.dimension())
    throw PreconditionError("isomorphism search between dimensions " +
                            std::to_string(a.dimension()) + " and " +
                            std::to_string(b.dimension()));
  detail::require_within_cap(a.dimension(), cap);
  std::optional<Permutation> found;
  detail::for_each_unit_fixing_permutation(a.dimension(), [&](const Permutation& p) {
    if (!detail::maps_onto(a, b, p)) return true;
    found = p;
    return false;
  });
  return found;
}

/// Every unit-fixing permutation preserving the tensor, in lexicographic order.
template <class Scalar>
std::vector<Permutation> automorphism_group(const BasicFiniteHNS<Scalar>& sys,
                                            int cap = default_search_cap) {
  detail::require_within_cap(sys.dimension(), cap);
  std::vector<Permutation> out;
  detail::for_each_unit_fixing_permutation(sys.dimension(), [&](const Permutation& p) {
    if (detail::maps_onto(sys, sys, p)) out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace hns

#endif  // HNS_ISOMORPHISM_HPP
