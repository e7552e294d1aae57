#ifndef HNS_INFINITE_ALGEBRA_HPP
#define HNS_INFINITE_ALGEBRA_HPP

// Group algebra of the integers, its reflection involution, and the folded
// hypergroup on the nonnegative integers obtained by identifying n with -n.

#include "hns/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

namespace hns {

/// Signed integer indices: the group Z.
struct IntegerIndices {
  static constexpr bool admits(std::int64_t) noexcept { return true; }
  static constexpr const char* name = "ZElement";
};

/// Nonnegative indices: the classes {n, -n} of Z under reflection.
struct NaturalIndices {
  static constexpr bool admits(std::int64_t n) noexcept { return n >= 0; }
  static constexpr const char* name = "GammaElement";
};

/// Finitely supported formal sum of basis deltas with exact rational
/// coefficients. Zero coefficients are never stored, so two sums are equal
/// exactly when their stored maps are equal.
template <class Domain>
class FormalSum {
 public:
  using index_type = std::int64_t;
  using map_type = std::map<index_type, Rational>;

  FormalSum() = default;
  FormalSum(std::initializer_list<std::pair<const index_type, Rational>> terms);
  explicit FormalSum(const map_type& terms);

  /// Coefficient at n, zero outside the support.
  [[nodiscard]] Rational coefficient(index_type n) const;
  [[nodiscard]] const map_type& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t support_size() const noexcept { return terms_.size(); }

  /// Sum of all coefficients.
  [[nodiscard]] Rational mass() const;

  /// Adds c at index n, dropping the entry if it cancels.
  void accumulate(index_type n, const Rational& c);

  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    for (const auto& [n, c] : b.terms_) a.accumulate(n, c);
    return a;
  }

  friend FormalSum operator*(const Rational& s, const FormalSum& a) {
    FormalSum out;
    if (s == 0) return out;
    for (const auto& [n, c] : a.terms_) out.terms_.emplace(n, s * c);
    return out;
  }

 private:
  map_type terms_;
};

using ZElement = FormalSum<IntegerIndices>;
using GammaElement = FormalSum<NaturalIndices>;

/// Basis delta at n in the group algebra of Z.
ZElement z_delta(std::int64_t n);

/// Group-algebra product: delta_n * delta_m = delta_{n+m}, extended bilinearly.
ZElement z_convolve(const ZElement& a, const ZElement& b);

/// Reflection n -> -n applied to indices.
ZElement z_involute(const ZElement& a);

/// (a + z_involute(a)) / 2.
ZElement symmetrize(const ZElement& a);

/// True when a is fixed by z_involute.
bool is_reflection_invariant(const ZElement& a);

/// Collapses a reflection-invariant element onto nonnegative indices:
/// n > 0 receives a[n] + a[-n], 0 receives a[0].
/// Throws PreconditionError when a is not reflection invariant.
GammaElement fold(const ZElement& a);

/// Basis element of the folded hypergroup. Throws PreconditionError for n < 0.
GammaElement gamma_delta(std::int64_t n);

/// Folded convolution sigma_n . sigma_m = (sigma_{n+m} + sigma_{|n-m|}) / 2,
/// extended bilinearly.
GammaElement gamma_convolve(const GammaElement& a, const GammaElement& b);

}  // namespace hns

#endif  // HNS_INFINITE_ALGEBRA_HPP
