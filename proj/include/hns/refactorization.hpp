#ifndef HNS_REFACTORIZATION_HPP
#define HNS_REFACTORIZATION_HPP

// Quotients of a finite system by a partition of its basis.

#include "hns/finite_system.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace hns {

/// Partition of {1..M} into disjoint nonempty classes. The class holding e_1
/// comes first; indices inside a class are kept ascending.
class BasisPartition {
 public:
  using class_type = std::vector<BasisIndex>;

  /// Throws PreconditionError when the classes are empty, overlap, miss an
  /// index, or the first class does not contain e_1.
  BasisPartition(int dimension, std::vector<class_type> classes);

  [[nodiscard]] int dimension() const noexcept { return dimension_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(classes_.size()); }
  [[nodiscard]] const std::vector<class_type>& classes() const noexcept { return classes_; }
  [[nodiscard]] const class_type& operator[](int class_offset) const {
    return classes_.at(static_cast<std::size_t>(class_offset));
  }

  /// 0-based position of the class containing i.
  [[nodiscard]] int class_of(BasisIndex i) const { return owner_.at(i.offset()); }

  friend bool operator==(const BasisPartition&, const BasisPartition&) = default;

 private:
  int dimension_;
  std::vector<class_type> classes_;
  std::vector<int> owner_;
};

/// Classes grouped by (i-1) mod d: d classes of size M/d.
/// Throws PreconditionError unless d >= 1 and d divides M.
BasisPartition divisor_partition(int dimension, int divisor);

/// Non-unit basis elements whose square is exactly e_1.
template <class Scalar>
std::vector<BasisIndex> find_self_inverse_elements(const BasicFiniteHNS<Scalar>& sys) {
  const int m = sys.dimension();
  const Vector<Scalar> unit = Vector<Scalar>::Unit(m, 0);
  std::vector<BasisIndex> out;
  for (int t = 2; t <= m; ++t)
    if (sys.product(basis(t), basis(t)) == unit) out.push_back(basis(t));
  return out;
}

/// Classes are 1-based (class 1 holds e_1).
template <class Scalar>
struct CongruenceWitness {
  int left_class, right_class;  // P, Q
  BasisIndex i, j;              // reference representatives
  BasisIndex other_i, other_j;  // disagreeing representatives
  int target_class;             // R
  Scalar reference_sum, other_sum;
};

template <class Scalar>
struct CongruenceResult {
  bool holds = true;
  std::optional<CongruenceWitness<Scalar>> witness;

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

template <class Scalar>
std::string scalar_text(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return to_string(v);
  else
    return std::to_string(v);
}

}  // namespace detail

template <class Scalar>
std::string describe(const CongruenceWitness<Scalar>& w) {
  return "class pair (" + std::to_string(w.left_class) + "," + std::to_string(w.right_class) +
         "): " + to_string(w.i) + "." + to_string(w.j) + " sums to " +
         detail::scalar_text(w.reference_sum) + " on class " + std::to_string(w.target_class) + " but " +
         to_string(w.other_i) + "." + to_string(w.other_j) + " sums to " +
         detail::scalar_text(w.other_sum);
}

/// Thrown by quotient_system when the partition is not a congruence.
class CongruenceError : public PreconditionError {
 public:
  CongruenceError(const std::string& what, int left_class, int right_class)
      : PreconditionError(what), left_class_(left_class), right_class_(right_class) {}

  [[nodiscard]] int left_class() const noexcept { return left_class_; }
  [[nodiscard]] int right_class() const noexcept { return right_class_; }

 private:
  int left_class_, right_class_;
};

namespace detail {

template <class Scalar>
void require_partition_of(const BasicFiniteHNS<Scalar>& sys, const BasisPartition& p) {
  if (p.dimension() != sys.dimension())
    throw PreconditionError("partition covers 1.." + std::to_string(p.dimension()) +
                            " but the system has dimension " + std::to_string(sys.dimension()));
}

template <class Scalar>
Vector<Scalar> classwise_sums(const Vector<Scalar>& row, const BasisPartition& p) {
  Vector<Scalar> out = Vector<Scalar>::Zero(p.size());
  for (Eigen::Index k = 0; k < row.size(); ++k) out(p.class_of(BasisIndex::from_offset(k))) += row(k);
  return out;
}

/// Scans every representative pair of (left, right) against the pair of
/// smallest representatives.
template <class Scalar>
std::optional<CongruenceWitness<Scalar>> find_disagreement(const BasicFiniteHNS<Scalar>& sys,
                                                           const BasisPartition& p, int left,
                                                           int right) {
  const BasisIndex i0 = p[left].front();
  const BasisIndex j0 = p[right].front();
  const Vector<Scalar> reference = classwise_sums(sys.product(i0, j0), p);
  for (BasisIndex i : p[left])
    for (BasisIndex j : p[right]) {
      const Vector<Scalar> sums = classwise_sums(sys.product(i, j), p);
      for (Eigen::Index r = 0; r < sums.size(); ++r)
        if (sums(r) != reference(r))
          return CongruenceWitness<Scalar>{left + 1, right + 1, i0, j0, i, j,
                                           static_cast<int>(r) + 1, reference(r), sums(r)};
    }
  return std::nullopt;
}

}  // namespace detail

/// Classwise sums of e_i . e_j for i in class a, j in class b (1-based class
/// numbers), provided every representative pair agrees; nullopt otherwise.
template <class Scalar>
std::optional<Vector<Scalar>> classwise_product(const BasicFiniteHNS<Scalar>& sys,
                                                const BasisPartition& p, int left_class,
                                                int right_class) {
  detail::require_partition_of(sys, p);
  if (left_class < 1 || left_class > p.size() || right_class < 1 || right_class > p.size())
    throw PreconditionError("class number outside 1.." + std::to_string(p.size()));
  if (detail::find_disagreement(sys, p, left_class - 1, right_class - 1)) return std::nullopt;
  return detail::classwise_sums(sys.product(p[left_class - 1].front(), p[right_class - 1].front()),
                                p);
}

/// True iff classwise-summed products are independent of the chosen
/// representatives for every pair of classes. Returns the first witness in
/// class-pair order on failure.
template <class Scalar>
CongruenceResult<Scalar> verify_congruence(const BasicFiniteHNS<Scalar>& sys,
                                           const BasisPartition& p) {
  detail::require_partition_of(sys, p);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (auto w = detail::find_disagreement(sys, p, a, b)) return {false, std::move(w)};
  return {};
}

/// System on the classes: C'[a][b][c] = sum over k in class c of C[i][j][k]
/// for any i in class a, j in class b. Throws CongruenceError when the
/// partition is not a congruence.
template <class Scalar>
BasicFiniteHNS<Scalar> quotient_system(const BasicFiniteHNS<Scalar>& sys, const BasisPartition& p) {
  const auto check = verify_congruence(sys, p);
  if (!check) {
    const auto& w = *check.witness;
    throw CongruenceError("partition is not a congruence: " + describe(w), w.left_class,
                          w.right_class);
  }
  const int d = p.size();
  std::vector<Matrix<Scalar>> slices(d, Matrix<Scalar>::Zero(d, d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      slices[a].col(b) = detail::classwise_sums(sys.product(p[a].front(), p[b].front()), p);
  return BasicFiniteHNS<Scalar>(std::move(slices));
}

}  // namespace hns

#endif  // HNS_REFACTORIZATION_HPP
