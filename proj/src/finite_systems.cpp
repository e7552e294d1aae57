#include "hns/finite_systems.hpp"

#include <string>

namespace hns {

namespace {

void require_dimension(int dimension, const char* op) {
  if (dimension < 1)
    throw PreconditionError(std::string(op) + ": dimension must be >= 1, got " +
                            std::to_string(dimension));
}

}  // namespace

FiniteHNS build_quotient_system(int dimension) {
  require_dimension(dimension, "build_quotient_system");
  const int m = dimension;
  const Rational half(1, 2);
  std::vector<RationalMatrix> slices(m, RationalMatrix::Zero(m, m));
  for (int n = 0; n < m; ++n) {
    for (int k = 0; k < m; ++k) {
      const int sum = (n + k) % m;
      const int diff = (n >= k ? n - k : k - n) % m;
      slices[n](sum, k) += half;
      slices[n](diff, k) += half;
    }
  }
  return FiniteHNS(std::move(slices));
}

BasisIndex project_index(std::int64_t n, int dimension) {
  require_dimension(dimension, "project_index");
  if (n < 0) throw PreconditionError("project_index: negative index " + std::to_string(n));
  return BasisIndex::from_offset(static_cast<Eigen::Index>(n % dimension));
}

HypercomplexNumber project_element(const GammaElement& x, const SystemHandle<Rational>& target) {
  if (!target) throw PreconditionError("project_element: null target system");
  const int m = target->dimension();
  RationalVector coeffs = RationalVector::Zero(m);
  for (const auto& [n, c] : x.terms()) coeffs(project_index(n, m).offset()) += c;
  return {target, std::move(coeffs)};
}

HypercomplexNumber project_element(const GammaElement& x, int dimension) {
  return project_element(x, share(build_quotient_system(dimension)));
}

std::optional<Involution> parse_involution(std::string_view name) {
  if (name == "identity") return Involution::identity;
  if (name == "reflection") return Involution::reflection;
  return std::nullopt;
}

std::string_view to_string(Involution choice) {
  return choice == Involution::identity ? "identity" : "reflection";
}

BasisIndex involution_index(BasisIndex i, int dimension, Involution choice) {
  require_dimension(dimension, "involution_index");
  if (i.label() < 1 || i.label() > dimension)
    throw PreconditionError("involution_index: basis index " + std::to_string(i.label()) +
                            " outside 1.." + std::to_string(dimension));
  if (choice == Involution::identity) return i;
  return BasisIndex::from_offset((dimension - i.offset()) % dimension);
}

std::string_view to_string(StructureCondition c) {
  switch (c) {
    case StructureCondition::positivity: return "positivity";
    case StructureCondition::unit_diagonal: return "unit_diagonal";
    case StructureCondition::adjoint_symmetry: return "adjoint_symmetry";
  }
  return "unknown";
}

std::string_view to_string(AlgebraLaw law) {
  switch (law) {
    case AlgebraLaw::unitality: return "unitality";
    case AlgebraLaw::commutativity: return "commutativity";
    case AlgebraLaw::associativity: return "associativity";
  }
  return "unknown";
}

}  // namespace hns
