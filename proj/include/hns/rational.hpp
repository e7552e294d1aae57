#ifndef HNS_RATIONAL_HPP
#define HNS_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace hns {

/// Exact rational scalar used by every algebraic path in the library.
using Rational = mpq_class;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" in lowest terms; integers print without a denominator ("0", "1", "-3").
std::string to_string(const Rational& q);

/// Strict inverse of to_string: rejects whitespace, a '+' sign, a zero or
/// negative denominator, "p/1" and anything not in lowest terms.
Rational parse_rational(std::string_view text);

}  // namespace hns

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

#endif  // HNS_RATIONAL_HPP
