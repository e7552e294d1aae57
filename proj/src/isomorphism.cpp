#include "hns/isomorphism.hpp"

namespace hns {

Permutation identity_permutation(int dimension) {
  Permutation p;
  p.reserve(static_cast<std::size_t>(std::max(dimension, 0)));
  for (int k = 1; k <= dimension; ++k) p.push_back(basis(k));
  return p;
}

bool is_unit_fixing_permutation(const Permutation& p, int dimension) {
  if (dimension < 1 || static_cast<int>(p.size()) != dimension || p.front() != basis(1))
    return false;
  std::vector<bool> seen(static_cast<std::size_t>(dimension), false);
  for (BasisIndex i : p) {
    if (i.label() < 1 || i.label() > dimension || seen[i.offset()]) return false;
    seen[i.offset()] = true;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw PreconditionError("compose: size mismatch");
  Permutation out;
  out.reserve(inner.size());
  for (BasisIndex i : inner) out.push_back(outer.at(i.offset()));
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size(), basis(0));
  for (std::size_t k = 0; k < p.size(); ++k)
    out.at(p[k].offset()) = BasisIndex::from_offset(static_cast<Eigen::Index>(k));
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (BasisIndex i : p) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i.label());
  }
  return out;
}

}  // namespace hns
