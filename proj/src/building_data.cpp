#include "s3cover/building_data.hpp"

namespace s3cover {

namespace {

using Bs = Basis;

AlgebraElement elem(const Rational &one, const Rational &t, const Rational &v1,
                    const Rational &v2, const Rational &w1, const Rational &w2) {
  return AlgebraElement(one, t, v1, v2, w1, w2);
}

AlgebraElement in_e_prime(const Rational &v1, const Rational &v2) {
  return elem(0, 0, v1, v2, 0, 0);
}

} // namespace

BuildingData to_building_data(const CoverParams &p) {
  return {-p.b, p.a, p.c, -p.e, p.d, -p.g, p.f, p.h};
}

CoverParams from_building_data(const BuildingData &bd) {
  CoverParams p;
  p.a = bd.B;
  p.b = -bd.A;
  p.c = bd.C;
  p.d = bd.E;
  p.e = -bd.D;
  p.f = bd.G;
  p.g = -bd.F;
  p.h = bd.h;
  return p;
}

BuildingData extract_building_data(const MultiplicationTable &table) {
  return to_building_data(extract_params(table));
}

LowercaseTriple lowercase_triple(const BuildingData &bd) {
  LowercaseTriple tr;
  tr.phi = {in_e_prime(bd.B, -bd.A), in_e_prime(bd.C, -bd.B)};
  tr.psi = {in_e_prime(bd.E, -bd.D), in_e_prime(bd.F, -bd.E), in_e_prime(bd.G, -bd.F)};
  tr.xi = bd.h;
  return tr;
}

std::pair<Rational, Rational> tester_a1(const BuildingData &bd) {
  const Rational two = 2;
  return {bd.A * bd.F - two * bd.B * bd.E + bd.C * bd.D,
          bd.A * bd.G - two * bd.B * bd.F + bd.C * bd.E};
}

Rational tester_a2(const BuildingData &bd) {
  const auto &[A, B, C, D, E, F, G, h] = bd;
  return Rational::make(3, 2) * (B * (E * F - D * G) - A * (F * F - E * G) + C * (D * F - E * E)) -
         h * (B * B - A * C);
}

CompatResidual compat_residual(const BuildingData &bd) {
  auto [r1, r2] = tester_a1(bd);
  return {r1, r2, tester_a2(bd)};
}

Rational reconstruct_alpha(const BuildingData &bd) {
  return Rational(-3) * (bd.B * bd.B - bd.A * bd.C);
}

std::array<AlgebraElement, 4> reconstruct_beta(const BuildingData &bd) {
  const auto &[A, B, C, D, E, F, G, h] = bd;
  const Rational two = 2;
  return {
      elem(0, 0, B, -A, -two * B, two * A),
      elem(0, 0, C, -B, -two * C, two * B),
      elem(0, 0, two * B, -two * A, -B, A),
      elem(0, 0, two * C, -two * B, -C, B),
  };
}

std::array<AlgebraElement, 10> reconstruct_gamma(const BuildingData &bd) {
  const auto &[A, B, C, D, E, F, G, h] = bd;
  const Rational two = 2;
  const Rational s11 = E * E - D * F;
  const Rational s12 = E * F - D * G;
  const Rational s22 = F * F - E * G;
  const Rational half12 = Rational::make(3, 2) * s12;
  return {
      elem(Rational(6) * s11, 0, E, -D, -two * E, two * D),       // v1^2
      elem(Rational(3) * s12, 0, F, -E, -two * F, two * E),       // v1 v2
      elem(Rational(6) * s22, 0, G, -F, -two * G, two * F),       // v2^2
      elem(Rational(3) * s11, 0, -E, D, -E, D),                   // v1 w1
      elem(half12, h, -F, E, -F, E),                              // v1 w2
      elem(half12, -h, -F, E, -F, E),                             // v2 w1
      elem(Rational(3) * s22, 0, -G, F, -G, F),                   // v2 w2
      elem(Rational(6) * s11, 0, -two * E, two * D, E, -D),       // w1^2
      elem(Rational(3) * s12, 0, -two * F, two * E, F, -E),       // w1 w2
      elem(Rational(6) * s22, 0, -two * G, two * F, G, -F),       // w2^2
  };
}

const std::array<std::pair<Basis, Basis>, 10> &gamma_pairs() {
  static const std::array<std::pair<Basis, Basis>, 10> pairs = {{
      {Bs::v1, Bs::v1},
      {Bs::v1, Bs::v2},
      {Bs::v2, Bs::v2},
      {Bs::v1, Bs::w1},
      {Bs::v1, Bs::w2},
      {Bs::v2, Bs::w1},
      {Bs::v2, Bs::w2},
      {Bs::w1, Bs::w1},
      {Bs::w1, Bs::w2},
      {Bs::w2, Bs::w2},
  }};
  return pairs;
}

MultiplicationTable reconstruct_table(const BuildingData &bd) {
  MultiplicationTable m;
  m.set(Bs::t, Bs::t, AlgebraElement::scalar(reconstruct_alpha(bd)));
  auto beta = reconstruct_beta(bd);
  const std::array<Basis, 4> e_basis = {Bs::v1, Bs::v2, Bs::w1, Bs::w2};
  for (std::size_t i = 0; i < 4; ++i)
    m.set(Bs::t, e_basis[i], beta[i]);
  auto gamma = reconstruct_gamma(bd);
  for (std::size_t i = 0; i < gamma.size(); ++i)
    m.set(gamma_pairs()[i].first, gamma_pairs()[i].second, gamma[i]);
  return m;
}

std::vector<EntryMismatch> compare_tables(const MultiplicationTable &expected,
                                          const MultiplicationTable &actual) {
  std::vector<EntryMismatch> out;
  for (auto [x, y] : MultiplicationTable::pairs())
    if (expected.product(x, y) != actual.product(x, y))
      out.push_back({MultiplicationTable::key(x, y), expected.product(x, y), actual.product(x, y)});
  return out;
}

PipelineReport pipeline_check(const CoverParams &p) {
  PipelineReport rep;
  rep.params = p;
  rep.building = to_building_data(p);
  rep.constraints = check_constraints(p);
  rep.residual = compat_residual(rep.building);
  rep.testers_agree = rep.residual.in_kernel() == rep.constraints.satisfied();
  if (rep.residual.in_kernel()) {
    rep.reconstructed = true;
    rep.mismatches = compare_tables(build_cover(p), reconstruct_table(rep.building));
  }
  return rep;
}

} // namespace s3cover
