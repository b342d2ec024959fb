#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace covertower {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// P A Q = D for unimodular P, Q with D diagonal and d_1 | d_2 | ... .
/// Only the column transform Q and its inverse are kept; they are what
/// coordinates on Z^n / rowspace(A) need.
struct SmithForm {
  std::vector<BigInt> diagonal;  // nonzero invariant factors, positive
  BigMatrix column_transform;    // Q, n x n
  BigMatrix column_inverse;      // Q^-1
  std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_form(const IntMatrix& a, std::size_t columns);

BigInt determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const std::vector<std::vector<Rational>>& m);

/// Basis of the rational null space {x : m x = 0}.
std::vector<std::vector<Rational>> null_space(
    const std::vector<std::vector<Rational>>& m, std::size_t columns);

/// Converts with an overflow check.
std::int64_t to_int64(const BigInt& v);

}  // namespace covertower
