#ifndef HNS_FINITE_SYSTEMS_HPP
#define HNS_FINITE_SYSTEMS_HPP

// Construction of G_M = Gamma / A_M and exhaustive checks over its table.

#include "hns/finite_system.hpp"
#include "hns/hypercomplex_number.hpp"
#include "hns/infinite_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hns {

/// G_M: with n = i-1 and m = j-1, e_i . e_j puts 1/2 on the class of n+m and
/// 1/2 on the class of |n-m| (classes taken mod M), merging into a single 1
/// when both land on the same class. Throws PreconditionError for M < 1.
FiniteHNS build_quotient_system(int dimension);

/// Coset map Gamma -> G_M: n -> e_{(n mod M) + 1}.
BasisIndex project_index(std::int64_t n, int dimension);

/// Sums x's coefficients classwise into G_M. The overload taking a handle
/// binds the result to that system, which must have dimension M.
HypercomplexNumber project_element(const GammaElement& x, const SystemHandle<Rational>& target);
HypercomplexNumber project_element(const GammaElement& x, int dimension);

template <class Scalar>
Vector<Scalar> multiply_basis(const BasicFiniteHNS<Scalar>& sys, BasisIndex i, BasisIndex j) {
  return sys.product(i, j);
}

/// Canonical: every basis product is zero or a single basis element with
/// coefficient +1 or -1.
template <class Scalar>
bool is_canonical(const BasicFiniteHNS<Scalar>& sys) {
  for (const auto& slice : sys.slices()) {
    for (Eigen::Index j = 0; j < slice.cols(); ++j) {
      int nonzero = 0;
      for (Eigen::Index k = 0; k < slice.rows(); ++k) {
        const Scalar& c = slice(k, j);
        if (c == 0) continue;
        if (++nonzero > 1 || (c != Scalar(1) && c != Scalar(-1))) return false;
      }
    }
  }
  return true;
}

enum class Involution { identity, reflection };

std::optional<Involution> parse_involution(std::string_view name);
std::string_view to_string(Involution choice);

/// Star map on G_M: identity, or the image of n -> -n mod M.
BasisIndex involution_index(BasisIndex i, int dimension, Involution choice);

enum class StructureCondition { positivity, unit_diagonal, adjoint_symmetry };

std::string_view to_string(StructureCondition c);

/// One failed instance of a structure condition. For positivity lhs is
/// C[i][j][k] and rhs is 0; for the unit diagonal (i, j = i*, k = 1) lhs is
/// C[i][i*][1] and rhs 0; for adjoint symmetry lhs is C[i][j][k] and rhs is
/// C[k][i*][j].
template <class Scalar>
struct ConditionWitness {
  StructureCondition condition;
  BasisIndex i, j, k;
  Scalar lhs, rhs;
};

template <class Scalar>
struct BasicConditionReport {
  bool positivity_holds = true;
  bool unit_diagonal_holds = true;
  bool adjoint_symmetry_holds = true;
  std::vector<ConditionWitness<Scalar>> failure_witnesses;

  [[nodiscard]] bool all_hold() const noexcept {
    return positivity_holds && unit_diagonal_holds && adjoint_symmetry_holds;
  }
};

using ConditionReport = BasicConditionReport<Rational>;

/// Evaluates C[i][j][k] >= 0, C[i][i*][1] > 0 and C[i][j][k] = C[k][i*][j]
/// over every index triple. Never throws on a violated condition; every
/// failure is listed in scan order (i, then j, then k).
template <class Scalar>
BasicConditionReport<Scalar> check_structure_conditions(const BasicFiniteHNS<Scalar>& sys,
                                                        Involution choice) {
  BasicConditionReport<Scalar> report;
  const int m = sys.dimension();
  const BasisIndex unit = basis(1);

  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c) {
        const Scalar& v = sys.constant(basis(a), basis(b), basis(c));
        if (v < 0) {
          report.positivity_holds = false;
          report.failure_witnesses.push_back(
              {StructureCondition::positivity, basis(a), basis(b), basis(c), v, Scalar(0)});
        }
      }

  for (int a = 1; a <= m; ++a) {
    const BasisIndex star = involution_index(basis(a), m, choice);
    const Scalar& v = sys.constant(basis(a), star, unit);
    if (!(v > 0)) {
      report.unit_diagonal_holds = false;
      report.failure_witnesses.push_back(
          {StructureCondition::unit_diagonal, basis(a), star, unit, v, Scalar(0)});
    }
  }

  for (int a = 1; a <= m; ++a) {
    const BasisIndex star = involution_index(basis(a), m, choice);
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c) {
        const Scalar& lhs = sys.constant(basis(a), basis(b), basis(c));
        const Scalar& rhs = sys.constant(basis(c), star, basis(b));
        if (lhs != rhs) {
          report.adjoint_symmetry_holds = false;
          report.failure_witnesses.push_back(
              {StructureCondition::adjoint_symmetry, basis(a), basis(b), basis(c), lhs, rhs});
        }
      }
  }
  return report;
}

enum class AlgebraLaw { unitality, commutativity, associativity };

std::string_view to_string(AlgebraLaw law);

/// A failed law instance. unitality: e_i . e_j vs the expected basis vector
/// (k unused, set to i or j); commutativity: e_i e_j vs e_j e_i (k unused);
/// associativity: ((e_i e_j) e_k) vs (e_i (e_j e_k)). coordinate is the first
/// component s where the two sides differ.
template <class Scalar>
struct LawWitness {
  AlgebraLaw law;
  BasisIndex i, j, k;
  BasisIndex coordinate;
  Scalar lhs, rhs;
};

template <class Scalar>
struct BasicLawReport {
  bool unital = true;
  bool commutative = true;
  bool associative = true;
  std::vector<LawWitness<Scalar>> witnesses;

  [[nodiscard]] bool all_hold() const noexcept { return unital && commutative && associative; }
};

using LawReport = BasicLawReport<Rational>;

namespace detail {

template <class Scalar>
std::optional<Eigen::Index> first_difference(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  for (Eigen::Index s = 0; s < a.size(); ++s)
    if (a(s) != b(s)) return s;
  return std::nullopt;
}

}  // namespace detail

/// Exhaustive unitality, commutativity and associativity scan. Associativity
/// compares sum_r C[i][j][r] C[r][k][.] against sum_r C[j][k][r] C[i][r][.]
/// for every triple, recording one witness per failing triple.
template <class Scalar>
BasicLawReport<Scalar> check_algebra_laws(const BasicFiniteHNS<Scalar>& sys) {
  BasicLawReport<Scalar> report;
  const int m = sys.dimension();
  const auto& L = sys.slices();
  const Matrix<Scalar> identity = Matrix<Scalar>::Identity(m, m);

  auto record = [&](AlgebraLaw law, int i, int j, int k, const Vector<Scalar>& lhs,
                    const Vector<Scalar>& rhs) {
    if (const auto s = detail::first_difference(lhs, rhs)) {
      report.witnesses.push_back({law, basis(i + 1), basis(j + 1), basis(k + 1),
                                  BasisIndex::from_offset(*s), lhs(*s), rhs(*s)});
      return true;
    }
    return false;
  };

  for (int j = 0; j < m; ++j) {
    const Vector<Scalar> expected = identity.col(j);
    if (record(AlgebraLaw::unitality, 0, j, j, L[0].col(j), expected)) report.unital = false;
    if (record(AlgebraLaw::unitality, j, 0, j, L[j].col(0), expected)) report.unital = false;
  }

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (record(AlgebraLaw::commutativity, i, j, j, L[i].col(j), L[j].col(i)))
        report.commutative = false;

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vector<Scalar> ij = L[i].col(j);
      for (int k = 0; k < m; ++k) {
        Vector<Scalar> lhs = Vector<Scalar>::Zero(m);
        for (int r = 0; r < m; ++r)
          if (ij(r) != 0) lhs += ij(r) * L[r].col(k);
        const Vector<Scalar> rhs = L[i] * L[j].col(k);
        if (record(AlgebraLaw::associativity, i, j, k, lhs, rhs)) report.associative = false;
      }
    }
  return report;
}

}  // namespace hns

#endif  // HNS_FINITE_SYSTEMS_HPP
