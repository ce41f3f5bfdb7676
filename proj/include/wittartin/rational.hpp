#pragma once

#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace wittartin {

// Expression templates are off so the type behaves as a plain value inside
// Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

/// Parses "p", "-p" or "p/q" (q != 0) into lowest terms. Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

template <class Scalar>
Scalar scalar_cast(const Rational& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return value;
  } else {
    return value.template convert_to<Scalar>();
  }
}

template <class Scalar, class Derived>
MatrixX<Scalar> cast_matrix(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](const Rational& v) { return scalar_cast<Scalar>(v); });
}

}  // namespace wittartin
