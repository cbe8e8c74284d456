#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "s3cover/rational.hpp"

namespace s3cover {

inline constexpr std::size_t kRank = 6;

/// Fixed basis order of A = B + L + E: [1, t, v1, v2, w1, w2] with wi = tau*vi.
enum class Basis : std::uint8_t { one = 0, t = 1, v1 = 2, v2 = 3, w1 = 4, w2 = 5 };

inline constexpr std::array<Basis, kRank> kBasis = {Basis::one, Basis::t,  Basis::v1,
                                                    Basis::v2,  Basis::w1, Basis::w2};

constexpr std::size_t index(Basis b) { return static_cast<std::size_t>(b); }
std::string_view name(Basis b);
std::optional<Basis> parse_basis(std::string_view s);

/// Coordinates of an element of A over the fixed basis.
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(const std::array<Rational, kRank> &coords) : coords_(coords) {}
  AlgebraElement(Rational one, Rational t, Rational v1, Rational v2, Rational w1, Rational w2)
      : coords_{std::move(one), std::move(t), std::move(v1),
                std::move(v2), std::move(w1), std::move(w2)} {}

  static AlgebraElement basis(Basis b) {
    AlgebraElement x;
    x[b] = 1;
    return x;
  }
  static AlgebraElement scalar(const Rational &k) {
    AlgebraElement x;
    x[Basis::one] = k;
    return x;
  }

  const Rational &operator[](Basis b) const { return coords_[index(b)]; }
  Rational &operator[](Basis b) { return coords_[index(b)]; }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }
  Rational &operator[](std::size_t i) { return coords_[i]; }
  const std::array<Rational, kRank> &coords() const { return coords_; }

  bool is_zero() const {
    for (const auto &c : coords_)
      if (!c.is_zero())
        return false;
    return true;
  }

  AlgebraElement &operator+=(const AlgebraElement &rhs) {
    for (std::size_t i = 0; i < kRank; ++i)
      coords_[i] += rhs.coords_[i];
    return *this;
  }
  AlgebraElement &operator-=(const AlgebraElement &rhs) {
    for (std::size_t i = 0; i < kRank; ++i)
      coords_[i] -= rhs.coords_[i];
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) {
    for (auto &c : a.coords_)
      c = -c;
    return a;
  }
  friend AlgebraElement operator*(const Rational &k, AlgebraElement a) {
    for (auto &c : a.coords_)
      c *= k;
    return a;
  }
  friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

private:
  std::array<Rational, kRank> coords_{};
};

/// Pretty form such as "-6 + 2t - v1", for diagnostics only.
std::string to_string(const AlgebraElement &x);

} // namespace s3cover
