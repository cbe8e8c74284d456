#include "s3cover/group_ring.hpp"

namespace s3cover {

namespace {

// t s^k = s^{-k} t, so (s^i t^j)(s^k t^l) = s^{i + (-1)^j k} t^{j + l}.
constexpr GroupElement normal_form_product(GroupElement g, GroupElement h) {
  int k = tau_power(g) == 0 ? sigma_power(h) : -sigma_power(h);
  return from_normal_form(sigma_power(g) + k, tau_power(g) + tau_power(h));
}

using CayleyTable = std::array<std::array<GroupElement, kGroupOrder>, kGroupOrder>;

constexpr CayleyTable make_cayley_table() {
  CayleyTable table{};
  for (auto g : kGroupElements)
    for (auto h : kGroupElements)
      table[index(g)][index(h)] = normal_form_product(g, h);
  return table;
}

constexpr CayleyTable kCayley = make_cayley_table();

static_assert(kCayley[index(GroupElement::t)][index(GroupElement::s)] == GroupElement::s2t);

GroupRingElement combo(std::initializer_list<std::pair<int, GroupElement>> terms,
                       const Rational &scale) {
  GroupRingElement x;
  for (auto [c, g] : terms)
    x[g] += scale * Rational(c);
  return x;
}

GroupRingConstants make_constants() {
  using G = GroupElement;
  GroupRingConstants k;
  const Rational sixth = Rational::make(1, 6);
  const Rational third = Rational::make(1, 3);
  k.e1 = combo({{1, G::e}, {1, G::s}, {1, G::s2}, {1, G::t}, {1, G::st}, {1, G::s2t}}, sixth);
  k.e2 = combo({{1, G::e}, {1, G::s}, {1, G::s2}, {-1, G::t}, {-1, G::st}, {-1, G::s2t}}, sixth);
  k.e3 = combo({{2, G::e}, {-1, G::s}, {-1, G::s2}}, third);
  k.e31 = combo({{1, G::e}, {-1, G::s}, {1, G::st}, {-1, G::s2t}}, third);
  k.e32 = combo({{1, G::e}, {-1, G::s2}, {-1, G::st}, {1, G::s2t}}, third);
  k.u11 = combo({{-1, G::e}, {1, G::s}, {1, G::t}, {-1, G::s2t}}, 1);
  k.u12 = combo({{-1, G::s}, {1, G::s2}, {-1, G::t}, {1, G::st}}, 1);
  k.u21 = combo({{-1, G::e}, {1, G::s2}, {1, G::t}, {-1, G::st}}, 1);
  k.u22 = combo({{1, G::e}, {-1, G::s}, {1, G::st}, {-1, G::s2t}}, 1);
  return k;
}

} // namespace

GroupElement group_mul(GroupElement g, GroupElement h) { return kCayley[index(g)][index(h)]; }

GroupElement group_inverse(GroupElement g) {
  for (auto h : kGroupElements)
    if (group_mul(g, h) == GroupElement::e)
      return h;
  return GroupElement::e; // unreachable
}

int sign(GroupElement g) { return tau_power(g) == 0 ? 1 : -1; }

std::string_view name(GroupElement g) {
  static constexpr std::array<std::string_view, kGroupOrder> names = {"e",  "s",  "s2",
                                                                      "t",  "st", "s2t"};
  return names[index(g)];
}

std::optional<GroupElement> parse_group_element(std::string_view s) {
  for (auto g : kGroupElements)
    if (name(g) == s)
      return g;
  return std::nullopt;
}

GroupRingElement GroupRingElement::basis(GroupElement g) {
  GroupRingElement x;
  x[g] = 1;
  return x;
}

bool GroupRingElement::is_zero() const {
  for (const auto &c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

GroupRingElement &GroupRingElement::operator+=(const GroupRingElement &rhs) {
  for (std::size_t i = 0; i < kGroupOrder; ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

GroupRingElement &GroupRingElement::operator-=(const GroupRingElement &rhs) {
  for (std::size_t i = 0; i < kGroupOrder; ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

GroupRingElement operator-(const GroupRingElement &a) {
  GroupRingElement r;
  for (auto g : kGroupElements)
    r[g] = -a[g];
  return r;
}

GroupRingElement operator*(const Rational &k, const GroupRingElement &a) {
  GroupRingElement r;
  for (auto g : kGroupElements)
    r[g] = k * a[g];
  return r;
}

GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
  GroupRingElement r;
  for (auto g : kGroupElements) {
    if (a[g].is_zero())
      continue;
    for (auto h : kGroupElements)
      if (!b[h].is_zero())
        r[group_mul(g, h)] += a[g] * b[h];
  }
  return r;
}

const GroupRingConstants &constants() {
  static const GroupRingConstants k = make_constants();
  return k;
}

bool is_central(const GroupRingElement &x) {
  for (auto g : kGroupElements) {
    auto basis = GroupRingElement::basis(g);
    if (!(x * basis == basis * x))
      return false;
  }
  return true;
}

} // namespace s3cover
