#ifndef HNS_HYPERCOMPLEX_NUMBER_HPP
#define HNS_HYPERCOMPLEX_NUMBER_HPP

#include "hns/finite_system.hpp"

#include <utility>

namespace hns {

/// x = sum_i x_i e_i over a fixed finite system.
template <class Scalar>
class BasicHypercomplexNumber {
 public:
  using system_type = BasicFiniteHNS<Scalar>;
  using vector_type = Vector<Scalar>;

  BasicHypercomplexNumber(SystemHandle<Scalar> system, vector_type coeffs)
      : system_(std::move(system)), coeffs_(std::move(coeffs)) {
    if (!system_) throw PreconditionError("hypercomplex number without a system");
    if (coeffs_.size() != system_->dimension())
      throw PreconditionError("coefficient vector has length " + std::to_string(coeffs_.size()) +
                              ", system has dimension " + std::to_string(system_->dimension()));
  }

  [[nodiscard]] const system_type& system() const noexcept { return *system_; }
  [[nodiscard]] const SystemHandle<Scalar>& system_handle() const noexcept { return system_; }
  [[nodiscard]] const vector_type& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] int dimension() const noexcept { return system_->dimension(); }
  [[nodiscard]] const Scalar& operator[](BasisIndex i) const {
    system_->require(i);
    return coeffs_(i.offset());
  }

  [[nodiscard]] bool same_system(const BasicHypercomplexNumber& other) const {
    return system_ == other.system_ || *system_ == *other.system_;
  }

  friend bool operator==(const BasicHypercomplexNumber& a, const BasicHypercomplexNumber& b) {
    return a.same_system(b) && a.coeffs_ == b.coeffs_;
  }

 private:
  SystemHandle<Scalar> system_;
  vector_type coeffs_;
};

using HypercomplexNumber = BasicHypercomplexNumber<Rational>;

template <class Scalar>
BasicHypercomplexNumber<Scalar> zero_element(const SystemHandle<Scalar>& sys) {
  return {sys, Vector<Scalar>::Zero(sys->dimension())};
}

template <class Scalar>
BasicHypercomplexNumber<Scalar> basis_element(const SystemHandle<Scalar>& sys, BasisIndex i) {
  sys->require(i);
  Vector<Scalar> v = Vector<Scalar>::Zero(sys->dimension());
  v(i.offset()) = Scalar(1);
  return {sys, std::move(v)};
}

template <class Scalar>
BasicHypercomplexNumber<Scalar> unit_element(const SystemHandle<Scalar>& sys) {
  return basis_element(sys, basis(1));
}

namespace detail {

template <class Scalar>
void require_same_system(const BasicHypercomplexNumber<Scalar>& x,
                         const BasicHypercomplexNumber<Scalar>& y, const char* op) {
  if (!x.same_system(y))
    throw PreconditionError(std::string(op) + ": operands belong to different systems");
}

}  // namespace detail

template <class Scalar>
BasicHypercomplexNumber<Scalar> hnum_add(const BasicHypercomplexNumber<Scalar>& x,
                                         const BasicHypercomplexNumber<Scalar>& y) {
  detail::require_same_system(x, y, "hnum_add");
  return {x.system_handle(), x.coefficients() + y.coefficients()};
}

/// Matrix of y -> x . y acting on coefficient vectors: sum_i x_i L_i.
template <class Scalar>
Matrix<Scalar> left_regular_matrix(const BasicHypercomplexNumber<Scalar>& x) {
  const auto m = x.dimension();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const Scalar& c = x.coefficients()(i);
    if (c != 0) out += c * x.system().slices()[i];
  }
  return out;
}

/// (x . y)_k = sum_{i,j} x_i y_j C[i][j][k], summed straight off the tensor.
template <class Scalar>
BasicHypercomplexNumber<Scalar> hnum_multiply(const BasicHypercomplexNumber<Scalar>& x,
                                              const BasicHypercomplexNumber<Scalar>& y) {
  detail::require_same_system(x, y, "hnum_multiply");
  const auto& sys = x.system();
  const auto m = sys.dimension();
  Vector<Scalar> out = Vector<Scalar>::Zero(m);
  for (int i = 0; i < m; ++i) {
    const Scalar& xi = x.coefficients()(i);
    if (xi == 0) continue;
    for (int j = 0; j < m; ++j) {
      const Scalar& yj = y.coefficients()(j);
      if (yj == 0) continue;
      const Scalar w = xi * yj;
      out += w * sys.slices()[i].col(j);
    }
  }
  return {x.system_handle(), std::move(out)};
}

template <class Scalar>
BasicHypercomplexNumber<Scalar> operator+(const BasicHypercomplexNumber<Scalar>& x,
                                          const BasicHypercomplexNumber<Scalar>& y) {
  return hnum_add(x, y);
}

template <class Scalar>
BasicHypercomplexNumber<Scalar> operator*(const BasicHypercomplexNumber<Scalar>& x,
                                          const BasicHypercomplexNumber<Scalar>& y) {
  return hnum_multiply(x, y);
}

}  // namespace hns

#endif  // HNS_HYPERCOMPLEX_NUMBER_HPP
