#include "s3cover/representation.hpp"

#include <sstream>
#include <utility>

namespace s3cover {

std::string_view name(Basis b) {
  static constexpr std::array<std::string_view, kRank> names = {"1",  "t",  "v1",
                                                                 "v2", "w1", "w2"};
  return names[index(b)];
}

std::optional<Basis> parse_basis(std::string_view s) {
  for (auto b : kBasis)
    if (name(b) == s)
      return b;
  return std::nullopt;
}

std::string to_string(const AlgebraElement &x) {
  std::ostringstream os;
  bool first = true;
  for (auto b : kBasis) {
    const Rational &c = x[b];
    if (c.is_zero())
      continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (b == Basis::one)
      os << mag;
    else if (mag == Rational(1))
      os << name(b);
    else
      os << mag << name(b);
  }
  return first ? "0" : os.str();
}

Matrix6 Matrix6::identity() {
  Matrix6 m;
  for (std::size_t i = 0; i < kRank; ++i)
    m.m_[i][i] = 1;
  return m;
}

Matrix6 &Matrix6::operator+=(const Matrix6 &rhs) {
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j)
      m_[i][j] += rhs.m_[i][j];
  return *this;
}

Matrix6 operator*(const Rational &k, Matrix6 a) {
  for (auto &row : a.m_)
    for (auto &c : row)
      c *= k;
  return a;
}

Matrix6 operator*(const Matrix6 &a, const Matrix6 &b) {
  Matrix6 r;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t k = 0; k < kRank; ++k) {
      if (a.m_[i][k].is_zero())
        continue;
      for (std::size_t j = 0; j < kRank; ++j)
        r.m_[i][j] += a.m_[i][k] * b.m_[k][j];
    }
  return r;
}

AlgebraElement operator*(const Matrix6 &a, const AlgebraElement &x) {
  AlgebraElement r;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j)
      r[i] += a.m_[i][j] * x[j];
  return r;
}

Matrix6 Matrix6::transpose() const {
  Matrix6 r;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j)
      r.m_[j][i] = m_[i][j];
  return r;
}

std::size_t Matrix6::rank() const {
  auto rows = m_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < kRank && rank < kRank; ++col) {
    std::size_t pivot = rank;
    while (pivot < kRank && rows[pivot][col].is_zero())
      ++pivot;
    if (pivot == kRank)
      continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < kRank; ++r) {
      if (rows[r][col].is_zero())
        continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < kRank; ++c)
        rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Matrix6 Matrix6::inverse() const {
  auto a = m_;
  auto inv = identity().m_;
  for (std::size_t col = 0; col < kRank; ++col) {
    std::size_t pivot = col;
    while (pivot < kRank && a[pivot][col].is_zero())
      ++pivot;
    if (pivot == kRank)
      throw ArithmeticError("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (std::size_t c = 0; c < kRank; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < kRank; ++r) {
      if (r == col || a[r][col].is_zero())
        continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < kRank; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  Matrix6 r;
  r.m_ = inv;
  return r;
}

namespace {

ActionMatrix make_standard_action() {
  ActionMatrix act;
  auto &s = act.sigma;
  auto &t = act.tau;
  s(0, 0) = 1;
  t(0, 0) = 1;
  s(1, 1) = 1;
  t(1, 1) = -1;
  for (std::size_t i = 0; i < 2; ++i) {
    std::size_t v = index(Basis::v1) + i;
    std::size_t w = index(Basis::w1) + i;
    s(w, v) = -1; // s vi = -wi
    s(v, w) = 1;  // s wi = vi - wi
    s(w, w) = -1;
    t(w, v) = 1; // t vi = wi
    t(v, w) = 1;
  }
  return act;
}

std::array<Matrix6, kGroupOrder> make_group_matrices() {
  const auto &act = standard_action();
  std::array<Matrix6, kGroupOrder> mats;
  for (auto g : kGroupElements) {
    Matrix6 m = Matrix6::identity();
    for (int i = 0; i < sigma_power(g); ++i)
      m = m * act.sigma;
    if (tau_power(g) == 1)
      m = m * act.tau;
    mats[index(g)] = m;
  }
  return mats;
}

} // namespace

const ActionMatrix &standard_action() {
  static const ActionMatrix act = make_standard_action();
  return act;
}

const Matrix6 &action_matrix(GroupElement g) {
  static const std::array<Matrix6, kGroupOrder> mats = make_group_matrices();
  return mats[index(g)];
}

AlgebraElement apply(GroupElement g, const AlgebraElement &x) { return action_matrix(g) * x; }

Matrix6 projector(const GroupRingElement &z) {
  Matrix6 m;
  for (auto g : kGroupElements)
    if (!z[g].is_zero())
      m += z[g] * action_matrix(g);
  return m;
}

} // namespace s3cover
