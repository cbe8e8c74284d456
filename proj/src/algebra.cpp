#include "s3cover/algebra.hpp"

#include "s3cover/group_ring.hpp"
#include "s3cover/representation.hpp"

namespace s3cover {

namespace {

using B = Basis;

AlgebraElement elem(const Rational &one, const Rational &t, const Rational &v1,
                    const Rational &v2, const Rational &w1, const Rational &w2) {
  return AlgebraElement(one, t, v1, v2, w1, w2);
}

const Rational kHalf = Rational::make(1, 2);
const Rational kThreeHalves = Rational::make(3, 2);

std::string pair_label(Basis x, Basis y) { return MultiplicationTable::key(x, y); }

} // namespace

PreAssocParams to_pre_associative(const CoverParams &p) {
  PreAssocParams q;
  q.a = Rational(-3) * p.a * p.a - Rational(3) * p.b * p.c;
  q.b1 = p.a;
  q.b2 = p.b;
  q.c1 = p.c;
  q.c2 = -p.a;
  q.d1 = Rational(6) * (p.d * p.d - p.e * p.g);
  q.d3 = p.d;
  q.d4 = p.e;
  q.eps1 = Rational(3) * (p.e * p.f - p.d * p.g);
  q.eps3 = -p.g;
  q.eps4 = -p.d;
  q.f1 = Rational(6) * (p.g * p.g - p.d * p.f);
  q.f3 = p.f;
  q.f4 = p.g;
  q.h2 = p.h;
  q.h3 = p.g;
  q.h4 = p.d;
  return q;
}

MultiplicationTable::MultiplicationTable() {
  for (auto b : kBasis)
    set(B::one, b, AlgebraElement::basis(b));
}

std::size_t MultiplicationTable::slot(Basis x, Basis y) {
  std::size_t i = index(x), j = index(y);
  if (i > j)
    std::swap(i, j);
  // rows 0..i-1 hold kRank, kRank-1, ... entries
  return i * kRank - i * (i - 1) / 2 + (j - i);
}

const std::array<std::pair<Basis, Basis>, MultiplicationTable::kEntries> &
MultiplicationTable::pairs() {
  static const auto all = [] {
    std::array<std::pair<Basis, Basis>, kEntries> out{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < kRank; ++i)
      for (std::size_t j = i; j < kRank; ++j)
        out[n++] = {kBasis[i], kBasis[j]};
    return out;
  }();
  return all;
}

std::string MultiplicationTable::key(Basis x, Basis y) {
  if (index(x) > index(y))
    std::swap(x, y);
  return std::string(name(x)) + "*" + std::string(name(y));
}

MultiplicationTable build_pre_associative(const PreAssocParams &p) {
  MultiplicationTable m;
  const Rational two = 2;
  m.set(B::t, B::t, AlgebraElement::scalar(p.a));
  m.set(B::t, B::v1, elem(0, 0, p.b1, p.b2, -two * p.b1, -two * p.b2));
  m.set(B::t, B::v2, elem(0, 0, p.c1, p.c2, -two * p.c1, -two * p.c2));
  m.set(B::t, B::w1, elem(0, 0, two * p.b1, two * p.b2, -p.b1, -p.b2));
  m.set(B::t, B::w2, elem(0, 0, two * p.c1, two * p.c2, -p.c1, -p.c2));
  m.set(B::v1, B::v1, elem(p.d1, 0, p.d3, p.d4, -two * p.d3, -two * p.d4));
  m.set(B::v1, B::v2, elem(p.eps1, 0, p.eps3, p.eps4, -two * p.eps3, -two * p.eps4));
  m.set(B::v2, B::v2, elem(p.f1, 0, p.f3, p.f4, -two * p.f3, -two * p.f4));
  m.set(B::v1, B::w1, elem(kHalf * p.d1, 0, -p.d3, -p.d4, -p.d3, -p.d4));
  m.set(B::v1, B::w2, elem(kHalf * p.eps1, p.h2, p.h3, p.h4, -p.eps3, -p.eps4));
  m.set(B::v2, B::w1, elem(kHalf * p.eps1, -p.h2, -p.eps3, -p.eps4, p.h3, p.h4));
  m.set(B::v2, B::w2, elem(kHalf * p.f1, 0, -p.f3, -p.f4, -p.f3, -p.f4));
  m.set(B::w1, B::w1, elem(p.d1, 0, -two * p.d3, -two * p.d4, p.d3, p.d4));
  m.set(B::w1, B::w2, elem(p.eps1, 0, -two * p.eps3, -two * p.eps4, p.eps3, p.eps4));
  m.set(B::w2, B::w2, elem(p.f1, 0, -two * p.f3, -two * p.f4, p.f3, p.f4));
  return m;
}

MultiplicationTable build_cover(const CoverParams &p) {
  const auto &[a, b, c, d, e, f, g, h] = p;
  const Rational two = 2;
  const Rational quad_d = d * d - e * g; // d^2 - eg
  const Rational quad_m = e * f - d * g; // ef - dg
  const Rational quad_f = g * g - d * f; // g^2 - df

  MultiplicationTable m;
  m.set(B::t, B::t, AlgebraElement::scalar(Rational(-3) * a * a - Rational(3) * b * c));
  m.set(B::t, B::v1, elem(0, 0, a, b, -two * a, -two * b));
  m.set(B::t, B::v2, elem(0, 0, c, -a, -two * c, two * a));
  m.set(B::t, B::w1, elem(0, 0, two * a, two * b, -a, -b));
  m.set(B::t, B::w2, elem(0, 0, two * c, -two * a, -c, a));
  m.set(B::v1, B::v1, elem(Rational(6) * quad_d, 0, d, e, -two * d, -two * e));
  m.set(B::v1, B::v2, elem(Rational(3) * quad_m, 0, -g, -d, two * g, two * d));
  m.set(B::v2, B::v2, elem(Rational(6) * quad_f, 0, f, g, -two * f, -two * g));
  m.set(B::v1, B::w1, elem(Rational(3) * quad_d, 0, -d, -e, -d, -e));
  m.set(B::v1, B::w2, elem(kThreeHalves * quad_m, h, g, d, g, d));
  m.set(B::v2, B::w1, elem(kThreeHalves * quad_m, -h, g, d, g, d));
  m.set(B::v2, B::w2, elem(Rational(3) * quad_f, 0, -f, -g, -f, -g));
  m.set(B::w1, B::w1, elem(Rational(6) * quad_d, 0, -two * d, -two * e, d, e));
  m.set(B::w1, B::w2, elem(Rational(3) * quad_m, 0, two * g, two * d, -g, -d));
  m.set(B::w2, B::w2, elem(Rational(6) * quad_f, 0, -two * f, -two * g, f, g));
  return m;
}

ConstraintReport check_constraints(const CoverParams &p) {
  const auto &[a, b, c, d, e, f, g, h] = p;
  ConstraintReport r;
  r.residual1 = -b * g + Rational(2) * a * d + c * e;
  r.residual2 = -b * f + Rational(2) * a * g + c * d;
  Rational norm = a * a + b * c;
  r.residual3 = norm * h - kThreeHalves * (a * (e * f - d * g) + b * (g * g - d * f) +
                                           c * (e * g - d * d));
  r.degenerate = norm.is_zero();
  return r;
}

AlgebraElement multiply(const AlgebraElement &x, const AlgebraElement &y,
                        const MultiplicationTable &table) {
  AlgebraElement r;
  for (auto bx : kBasis) {
    if (x[bx].is_zero())
      continue;
    for (auto by : kBasis) {
      if (y[by].is_zero())
        continue;
      r += (x[bx] * y[by]) * table.product(bx, by);
    }
  }
  return r;
}

AxiomResult verify_unit(const MultiplicationTable &table) {
  AxiomResult res;
  const auto unit = AlgebraElement::basis(B::one);
  for (auto b : kBasis) {
    auto x = AlgebraElement::basis(b);
    auto prod = multiply(unit, x, table);
    if (prod != x) {
      res.passed = false;
      res.witness = Witness{{"1", std::string(name(b))}, prod, x};
      break;
    }
  }
  return res;
}

AxiomResult verify_commutativity(const MultiplicationTable &table) {
  AxiomResult res;
  for (auto x : kBasis)
    for (auto y : kBasis) {
      auto xy = multiply(AlgebraElement::basis(x), AlgebraElement::basis(y), table);
      auto yx = multiply(AlgebraElement::basis(y), AlgebraElement::basis(x), table);
      if (xy != yx) {
        res.passed = false;
        res.witness = Witness{{std::string(name(x)), std::string(name(y))}, xy, yx};
        return res;
      }
    }
  return res;
}

AxiomResult verify_associativity(const MultiplicationTable &table) {
  AxiomResult res;
  for (auto x : kBasis)
    for (auto y : kBasis)
      for (auto z : kBasis) {
        const auto &xy = table.product(x, y);
        const auto &yz = table.product(y, z);
        auto lhs = multiply(xy, AlgebraElement::basis(z), table);
        auto rhs = multiply(AlgebraElement::basis(x), yz, table);
        if (lhs != rhs) {
          res.passed = false;
          res.witness = Witness{
              {std::string(name(x)), std::string(name(y)), std::string(name(z))}, lhs, rhs};
          return res;
        }
      }
  return res;
}

AxiomResult verify_equivariance(const MultiplicationTable &table) {
  AxiomResult res;
  for (auto g : kGroupElements)
    for (auto x : kBasis)
      for (auto y : kBasis) {
        auto lhs = apply(g, table.product(x, y));
        auto rhs = multiply(apply(g, AlgebraElement::basis(x)),
                            apply(g, AlgebraElement::basis(y)), table);
        if (lhs != rhs) {
          res.passed = false;
          res.witness = Witness{
              {std::string(name(g)), std::string(name(x)), std::string(name(y))}, lhs, rhs};
          return res;
        }
      }
  return res;
}

AxiomReport verify(const MultiplicationTable &table) {
  return {verify_unit(table), verify_commutativity(table), verify_associativity(table),
          verify_equivariance(table)};
}

CoverParams extract_params(const MultiplicationTable &table) {
  const auto &tv1 = table.product(B::t, B::v1);
  const auto &tv2 = table.product(B::t, B::v2);
  const auto &v11 = table.product(B::v1, B::v1);
  const auto &v22 = table.product(B::v2, B::v2);
  const auto &v1w2 = table.product(B::v1, B::w2);
  CoverParams p{tv1[B::v1], tv1[B::v2], tv2[B::v1], v11[B::v1],
                v11[B::v2], v22[B::v1], v22[B::v2], v1w2[B::t]};

  const auto rebuilt = build_cover(p);
  for (auto [x, y] : MultiplicationTable::pairs()) {
    if (table.product(x, y) != rebuilt.product(x, y)) {
      auto k = pair_label(x, y);
      throw ShapeError(k, "table entry " + k + " = " + to_string(table.product(x, y)) +
                              " does not match the cover form " +
                              to_string(rebuilt.product(x, y)));
    }
  }
  return p;
}

} // namespace s3cover
