#ifndef HNS_FINITE_SYSTEM_HPP
#define HNS_FINITE_SYSTEM_HPP

#include "hns/errors.hpp"
#include "hns/rational.hpp"

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hns {

/// 1-based basis label e_1 ... e_M. Storage is 0-based; offset() is the only
/// place the shift happens.
class BasisIndex {
 public:
  constexpr explicit BasisIndex(int label) noexcept : label_(label) {}

  static constexpr BasisIndex from_offset(Eigen::Index offset) noexcept {
    return BasisIndex(static_cast<int>(offset) + 1);
  }

  [[nodiscard]] constexpr int label() const noexcept { return label_; }
  [[nodiscard]] constexpr Eigen::Index offset() const noexcept { return label_ - 1; }

  constexpr auto operator<=>(const BasisIndex&) const = default;

 private:
  int label_;
};

/// Shorthand for BasisIndex(label).
constexpr BasisIndex basis(int label) noexcept { return BasisIndex(label); }

inline std::string to_string(BasisIndex i) { return "e_" + std::to_string(i.label()); }

/// Finite hypercomplex number system: dimension M and the M x M x M
/// structure-constant tensor C, where C[i][j][k] is the coefficient of e_k in
/// e_i . e_j. e_1 is the unit.
///
/// The tensor is stored as M left-multiplication matrices: column j of
/// left_multiplication(i) is the coefficient vector of e_i . e_j, so the
/// (k, j) entry of slice i is C[i][j][k].
template <class Scalar>
class BasicFiniteHNS {
 public:
  using scalar_type = Scalar;
  using matrix_type = Matrix<Scalar>;
  using vector_type = Vector<Scalar>;

  /// Throws PreconditionError unless the slices form an M x M x M tensor
  /// (M >= 1) in which e_1 acts as a two-sided unit.
  explicit BasicFiniteHNS(std::vector<matrix_type> left_multiplication)
      : slices_(std::move(left_multiplication)) {
    validate();
  }

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(slices_.size()); }

  [[nodiscard]] bool contains(BasisIndex i) const noexcept {
    return i.label() >= 1 && i.label() <= dimension();
  }

  void require(BasisIndex i) const {
    if (!contains(i))
      throw PreconditionError("basis index " + std::to_string(i.label()) +
                              " outside 1.." + std::to_string(dimension()));
  }

  [[nodiscard]] const Scalar& constant(BasisIndex i, BasisIndex j, BasisIndex k) const {
    require(i);
    require(j);
    require(k);
    return slices_[i.offset()](k.offset(), j.offset());
  }

  /// Coefficient vector of e_i . e_j.
  [[nodiscard]] vector_type product(BasisIndex i, BasisIndex j) const {
    require(i);
    require(j);
    return slices_[i.offset()].col(j.offset());
  }

  [[nodiscard]] const matrix_type& left_multiplication(BasisIndex i) const {
    require(i);
    return slices_[i.offset()];
  }

  [[nodiscard]] const std::vector<matrix_type>& slices() const noexcept { return slices_; }

  /// Copy with C[i][j][k] replaced. The result must still be unital.
  [[nodiscard]] BasicFiniteHNS with_constant(BasisIndex i, BasisIndex j, BasisIndex k,
                                             const Scalar& value) const {
    require(i);
    require(j);
    require(k);
    auto slices = slices_;
    slices[i.offset()](k.offset(), j.offset()) = value;
    return BasicFiniteHNS(std::move(slices));
  }

  friend bool operator==(const BasicFiniteHNS& a, const BasicFiniteHNS& b) {
    if (a.slices_.size() != b.slices_.size()) return false;
    for (std::size_t i = 0; i < a.slices_.size(); ++i)
      if (a.slices_[i] != b.slices_[i]) return false;
    return true;
  }

 private:
  void validate() const {
    const auto m = static_cast<Eigen::Index>(slices_.size());
    if (m < 1) throw PreconditionError("finite system needs dimension >= 1");
    for (const auto& s : slices_)
      if (s.rows() != m || s.cols() != m)
        throw PreconditionError("structure tensor is not " + std::to_string(m) + "x" +
                                std::to_string(m) + "x" + std::to_string(m));
    const matrix_type identity = matrix_type::Identity(m, m);
    if (slices_[0] != identity)
      throw PreconditionError("e_1 is not a left unit: e_1 . e_j != e_j");
    for (Eigen::Index i = 0; i < m; ++i)
      if (slices_[i].col(0) != identity.col(i))
        throw PreconditionError("e_1 is not a right unit: e_" + std::to_string(i + 1) +
                                " . e_1 != e_" + std::to_string(i + 1));
  }

  std::vector<matrix_type> slices_;
};

using FiniteHNS = BasicFiniteHNS<Rational>;

template <class Scalar>
using SystemHandle = std::shared_ptr<const BasicFiniteHNS<Scalar>>;

template <class Scalar>
SystemHandle<Scalar> share(BasicFiniteHNS<Scalar> sys) {
  return std::make_shared<const BasicFiniteHNS<Scalar>>(std::move(sys));
}

}  // namespace hns

#endif  // HNS_FINITE_SYSTEM_HPP
