#include <doctest.h>

#include "s3cover/group_ring.hpp"

using namespace s3cover;
using G = GroupElement;

TEST_CASE("group law on normal forms") {
  CHECK(group_mul(G::t, G::s) == G::s2t);
  CHECK(group_mul(G::s, G::s2) == G::e);
  CHECK(group_mul(G::st, G::st) == G::e);
  for (auto g : kGroupElements) {
    CHECK(group_mul(g, group_inverse(g)) == G::e);
    CHECK(group_mul(G::e, g) == g);
    for (auto h : kGroupElements) {
      CHECK(sign(group_mul(g, h)) == sign(g) * sign(h));
      for (auto k : kGroupElements)
        CHECK(group_mul(group_mul(g, h), k) == group_mul(g, group_mul(h, k)));
    }
  }
}

TEST_CASE("names parse back") {
  for (auto g : kGroupElements)
    CHECK(parse_group_element(name(g)) == g);
  CHECK_FALSE(parse_group_element("x").has_value());
}

TEST_CASE("central idempotents") {
  const auto &k = constants();
  const GroupRingElement zero;
  CHECK(k.e1 * k.e1 == k.e1);
  CHECK((k.e1 * k.e2).is_zero());
  const std::array<const GroupRingElement *, 3> e = {&k.e1, &k.e2, &k.e3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(*e[i] * *e[j] == (i == j ? *e[i] : zero));
  CHECK(k.e1 + k.e2 + k.e3 == GroupRingElement::identity());
}

TEST_CASE("non-central splitting of e3") {
  const auto &k = constants();
  auto tau = GroupRingElement::basis(G::t);
  CHECK(k.e31 + k.e32 == k.e3);
  CHECK((k.e31 * k.e32).is_zero());
  CHECK(k.e31 * k.e31 == k.e31);
  CHECK(k.e32 * k.e32 == k.e32);
  CHECK(tau * k.e31 == k.e32 * tau);
}

TEST_CASE("centrality") {
  const auto &k = constants();
  CHECK(is_central(k.e2));
  CHECK(is_central(GroupRingElement::identity()));
  CHECK_FALSE(is_central(k.e31));
  CHECK_FALSE(is_central(k.e32));
  CHECK_FALSE(is_central(GroupRingElement::basis(G::s)));
  CHECK(is_central(GroupRingElement::basis(G::s) + GroupRingElement::basis(G::s2)));
}

TEST_CASE("u-basis lies in the C3 block and is independent") {
  const auto &k = constants();
  const std::array<const GroupRingElement *, 4> u = {&k.u11, &k.u12, &k.u21, &k.u22};
  for (const auto *x : u) {
    CHECK(k.e3 * *x == *x);
    CHECK((k.e1 * *x).is_zero());
    CHECK((k.e2 * *x).is_zero());
  }
  // Rank 4 over Q: eliminate on the 4 x 6 coefficient matrix.
  std::array<std::array<Rational, kGroupOrder>, 4> m;
  for (std::size_t i = 0; i < 4; ++i)
    m[i] = u[i]->coefficients();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < kGroupOrder && rank < 4; ++col) {
    std::size_t piv = rank;
    while (piv < 4 && m[piv][col].is_zero())
      ++piv;
    if (piv == 4)
      continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < 4; ++r)
      if (r != rank && !m[r][col].is_zero()) {
        Rational f = m[r][col] / m[rank][col];
        for (std::size_t c = 0; c < kGroupOrder; ++c)
          m[r][c] -= f * m[rank][c];
      }
    ++rank;
  }
  CHECK(rank == 4);
}

TEST_CASE("ring axioms on basis elements") {
  for (auto g : kGroupElements)
    for (auto h : kGroupElements) {
      auto prod = GroupRingElement::basis(g) * GroupRingElement::basis(h);
      CHECK(prod == GroupRingElement::basis(group_mul(g, h)));
      CHECK(ring_mul(GroupRingElement::basis(g), GroupRingElement::basis(h)) == prod);
    }
  auto x = GroupRingElement::basis(G::s) + Rational(2) * GroupRingElement::basis(G::t);
  auto y = GroupRingElement::basis(G::st) - GroupRingElement::identity();
  auto z = Rational::make(1, 3) * GroupRingElement::basis(G::s2t);
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
}
