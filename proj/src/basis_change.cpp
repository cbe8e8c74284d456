#include "s3cover/basis_change.hpp"

namespace s3cover {

void require_invertible(const BasisChange &bc) {
  if (bc.u.is_zero())
    throw ArithmeticError("basis change: generator scaling u must be nonzero");
  if (bc.det().is_zero())
    throw ArithmeticError("basis change: matrix C is singular");
}

CoverParams transform(const CoverParams &p, const BasisChange &bc) {
  require_invertible(bc);
  const auto &[a, b, c, d, e, f, g, h] = p;
  const Rational &l1 = bc.C[0][0], &m1 = bc.C[0][1];
  const Rational &l2 = bc.C[1][0], &m2 = bc.C[1][1];
  const Rational det = bc.det();
  const Rational lin = bc.u / det;
  const Rational cub = Rational(1) / det;
  const Rational two = 2, three = 3;

  CoverParams q;
  q.a = lin * (-l1 * l2 * b + l1 * m2 * a + l2 * m1 * a + m1 * m2 * c);
  q.b = lin * (l1 * l1 * b - two * l1 * m1 * a - m1 * m1 * c);
  q.c = lin * (-l2 * l2 * b + two * l2 * m2 * a + m2 * m2 * c);
  q.d = cub * (-l1 * l1 * l2 * e + l1 * l1 * m2 * d + two * l1 * l2 * m1 * d -
               two * l1 * m1 * m2 * g - l2 * m1 * m1 * g + m1 * m1 * m2 * f);
  q.e = cub * (l1 * l1 * l1 * e - three * l1 * l1 * m1 * d + three * l1 * m1 * m1 * g -
               m1 * m1 * m1 * f);
  q.f = cub * (-l2 * l2 * l2 * e + three * l2 * l2 * m2 * d - three * l2 * m2 * m2 * g +
               m2 * m2 * m2 * f);
  q.g = cub * (l1 * l2 * l2 * e - two * l1 * l2 * m2 * d + l1 * m2 * m2 * g -
               l2 * l2 * m1 * d + two * l2 * m1 * m2 * g - m1 * m2 * m2 * f);
  q.h = det / bc.u * h;
  return q;
}

Matrix6 induced_module_map(const BasisChange &bc) {
  require_invertible(bc);
  Matrix6 m;
  m(0, 0) = 1;
  m(1, 1) = bc.u;
  for (std::size_t blk : {std::size_t{2}, std::size_t{4}})
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        m(blk + i, blk + j) = bc.C[j][i];
  return m;
}

BasisChange compose(const BasisChange &second, const BasisChange &first) {
  BasisChange out;
  out.u = first.u * second.u;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out.C[i][j] = second.C[i][0] * first.C[0][j] + second.C[i][1] * first.C[1][j];
  return out;
}

CovarianceReport check_covariance(const CoverParams &p, const BasisChange &bc) {
  CovarianceReport rep;
  rep.transformed = transform(p, bc);
  rep.constraints_before = check_constraints(p).satisfied();
  rep.constraints_after = check_constraints(rep.transformed).satisfied();
  rep.h_scaling = rep.transformed.h == bc.det() / bc.u * p.h;

  const auto old_table = build_cover(p);
  const auto new_table = build_cover(rep.transformed);
  const Matrix6 m = induced_module_map(bc);
  for (auto x : kBasis)
    for (auto y : kBasis) {
      auto lhs = m * new_table.product(x, y);
      auto rhs = multiply(m * AlgebraElement::basis(x), m * AlgebraElement::basis(y), old_table);
      if (lhs != rhs) {
        rep.covariant = false;
        rep.first_failure = MultiplicationTable::key(x, y);
        return rep;
      }
    }
  return rep;
}

} // namespace s3cover
