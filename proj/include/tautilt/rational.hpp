#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace tautilt {

/// Exact rational scalar. Expression templates are disabled so the type
/// composes cleanly with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;
using IntMatrix = MatrixX<std::int64_t>;
using IntVector = VectorX<std::int64_t>;

/// Parses "p/q", "-p", or "p". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

/// Converts an integral rational to int64; throws std::domain_error otherwise.
std::int64_t to_int64(const Rational& value);

inline Mat to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

/// Exact conversion back to integers; throws if any entry is non-integral.
IntMatrix to_integer(const Mat& m);

std::vector<std::int64_t> to_std(const IntVector& v);
IntVector from_std(const std::vector<std::int64_t>& v);

}  // namespace tautilt
