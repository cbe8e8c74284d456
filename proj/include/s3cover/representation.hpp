#pragma once

#include <array>

#include "s3cover/algebra_element.hpp"
#include "s3cover/group_ring.hpp"

namespace s3cover {

/// 6x6 matrix over Q acting on column coordinate vectors of A. Column j is
/// the image of basis vector j.
class Matrix6 {
public:
  Matrix6() = default;

  static Matrix6 identity();
  static Matrix6 zero() { return Matrix6(); }

  const Rational &operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }
  Rational &operator()(std::size_t row, std::size_t col) { return m_[row][col]; }

  Matrix6 &operator+=(const Matrix6 &rhs);
  friend Matrix6 operator+(Matrix6 a, const Matrix6 &b) { return a += b; }
  friend Matrix6 operator*(const Rational &k, Matrix6 a);
  friend Matrix6 operator*(const Matrix6 &a, const Matrix6 &b);
  friend AlgebraElement operator*(const Matrix6 &a, const AlgebraElement &x);
  friend bool operator==(const Matrix6 &, const Matrix6 &) = default;

  /// Rank by exact Gaussian elimination.
  std::size_t rank() const;
  Matrix6 transpose() const;
  /// Throws ArithmeticError when singular.
  Matrix6 inverse() const;

private:
  std::array<std::array<Rational, kRank>, kRank> m_{};
};

/// Matrices of the generators s and t on A.
struct ActionMatrix {
  Matrix6 sigma;
  Matrix6 tau;
};

/// 1 is fixed, t spans the sign character, and on each pair (vi, wi)
/// s: vi -> -wi, wi -> vi - wi and t: vi <-> wi.
const ActionMatrix &standard_action();

/// Matrix of a group element, s^i t^j -> S^i T^j.
const Matrix6 &action_matrix(GroupElement g);

AlgebraElement apply(GroupElement g, const AlgebraElement &x);

/// mu(z) for z in Q[S3]: the linear extension of the action.
Matrix6 projector(const GroupRingElement &z);

} // namespace s3cover
