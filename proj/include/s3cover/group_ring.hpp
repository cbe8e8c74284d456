#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "s3cover/rational.hpp"

namespace s3cover {

// S3 = <s, t | s^3 = t^2 = e, ts = s^2 t>. Elements are stored in the normal
// form s^i t^j; the enumerator value is i + 3j.
enum class GroupElement : std::uint8_t { e = 0, s = 1, s2 = 2, t = 3, st = 4, s2t = 5 };

inline constexpr std::size_t kGroupOrder = 6;
inline constexpr std::array<GroupElement, kGroupOrder> kGroupElements = {
    GroupElement::e, GroupElement::s,  GroupElement::s2,
    GroupElement::t, GroupElement::st, GroupElement::s2t};

constexpr std::size_t index(GroupElement g) { return static_cast<std::size_t>(g); }
constexpr int sigma_power(GroupElement g) { return static_cast<int>(g) % 3; }
constexpr int tau_power(GroupElement g) { return static_cast<int>(g) / 3; }

constexpr GroupElement from_normal_form(int sigma_pow, int tau_pow) {
  int i = ((sigma_pow % 3) + 3) % 3;
  int j = ((tau_pow % 2) + 2) % 2;
  return static_cast<GroupElement>(i + 3 * j);
}

GroupElement group_mul(GroupElement g, GroupElement h);
GroupElement group_inverse(GroupElement g);
/// +1 on rotations, -1 on reflections.
int sign(GroupElement g);

std::string_view name(GroupElement g);
std::optional<GroupElement> parse_group_element(std::string_view s);

/// Element of Q[S3], dense over the six group elements.
class GroupRingElement {
public:
  GroupRingElement() = default;
  explicit GroupRingElement(const std::array<Rational, kGroupOrder> &coeffs)
      : coeffs_(coeffs) {}

  static GroupRingElement basis(GroupElement g);
  static GroupRingElement identity() { return basis(GroupElement::e); }

  const Rational &operator[](GroupElement g) const { return coeffs_[index(g)]; }
  Rational &operator[](GroupElement g) { return coeffs_[index(g)]; }
  const std::array<Rational, kGroupOrder> &coefficients() const { return coeffs_; }

  bool is_zero() const;

  GroupRingElement &operator+=(const GroupRingElement &rhs);
  GroupRingElement &operator-=(const GroupRingElement &rhs);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement &a);
  friend GroupRingElement operator*(const Rational &k, const GroupRingElement &a);
  friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b);
  friend bool operator==(const GroupRingElement &, const GroupRingElement &) = default;

private:
  std::array<Rational, kGroupOrder> coeffs_{};
};

inline GroupRingElement ring_mul(const GroupRingElement &x, const GroupRingElement &y) {
  return x * y;
}

/// The distinguished elements of Q[S3]: the central idempotents e1, e2, e3,
/// the non-central splitting e3 = e31 + e32, and the basis u11..u22 of the
/// two-dimensional isotypic block C3.
struct GroupRingConstants {
  GroupRingElement e1, e2, e3;
  GroupRingElement e31, e32;
  GroupRingElement u11, u12, u21, u22;
};

const GroupRingConstants &constants();

bool is_central(const GroupRingElement &x);

} // namespace s3cover
