#include "s3cover/ramification.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace s3cover {

namespace {

using Bs = Basis;

constexpr std::array<Basis, kGenerators> kGens = {Bs::t, Bs::v1, Bs::v2, Bs::w1, Bs::w2};

// Relation X_i X_j as generator indices, in display order.
constexpr std::array<std::pair<std::size_t, std::size_t>, kRelations> kRelationOrder = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4},
    {1, 1}, {1, 2}, {2, 2},
    {1, 3}, {1, 4}, {2, 3}, {2, 4},
    {3, 3}, {3, 4}, {4, 4},
}};

// Shorthand: k + x where x is a generator.
AlgebraElement lin(const Rational &k, std::optional<Basis> gen = std::nullopt, int coeff = 1) {
  AlgebraElement x = AlgebraElement::scalar(k);
  if (gen)
    x[*gen] += coeff;
  return x;
}

AlgebraElement k(const Rational &v) { return AlgebraElement::scalar(v); }

AlgebraElement fold_product(std::initializer_list<const AlgebraElement *> factors,
                            const MultiplicationTable &table) {
  AlgebraElement acc = AlgebraElement::basis(Bs::one);
  for (const auto *f : factors)
    acc = multiply(acc, *f, table);
  return acc;
}

AlgebraElement det_rec(const SquareBlock &m, std::array<bool, kMinorSize> &used,
                       std::size_t row, const MultiplicationTable &table) {
  if (row == kMinorSize)
    return AlgebraElement::basis(Bs::one);
  AlgebraElement acc;
  int parity = 0;
  for (std::size_t col = 0; col < kMinorSize; ++col) {
    if (used[col])
      continue;
    const bool negative = (parity++ % 2) == 1;
    if (m[row][col].is_zero())
      continue;
    used[col] = true;
    AlgebraElement sub = det_rec(m, used, row + 1, table);
    used[col] = false;
    if (sub.is_zero())
      continue;
    AlgebraElement term = multiply(m[row][col], sub, table);
    if (negative)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

} // namespace

RamificationMatrix verbatim_matrix(const CoverParams &p) {
  const auto &[a, b, c, d, e, f, g, h] = p;
  const Rational two = 2;
  RamificationMatrix m;
  m[0] = {lin(0, Bs::t, 2), k(0), k(0), k(0), k(0)};
  m[1] = {lin(0, Bs::v1), lin(-a, Bs::t), k(-b), k(two * a), k(two * b)};
  m[2] = {lin(0, Bs::v2), k(-c), lin(a, Bs::t), k(two * c), k(-two * a)};
  m[3] = {lin(0, Bs::w1), k(-two * a), k(-two * b), lin(a, Bs::t), k(b)};
  m[4] = {lin(0, Bs::w2), k(-two * c), k(two * a), k(c), lin(-a, Bs::t)};
  m[5] = {k(0), lin(-d, Bs::v1, 2), k(-e), k(two * d), k(two * e)};
  m[6] = {k(0), lin(g, Bs::v2), lin(d, Bs::v1), k(-two * g), k(-two * d)};
  m[7] = {k(0), k(-f), lin(-g, Bs::v2, 2), k(two * f), k(two * g)};
  m[8] = {k(0), lin(d, Bs::w1), k(e), lin(d, Bs::v1), k(e)};
  m[9] = {k(-h), lin(-g, Bs::w2), k(-d), k(-g), lin(-d, Bs::v1)};
  m[10] = {k(h), k(-g), lin(-d, Bs::w1), lin(-g, Bs::v2), k(-d)};
  m[11] = {k(0), k(f), lin(g, Bs::w2), k(f), lin(g, Bs::v2)};
  m[12] = {k(0), k(two * d), k(two * e), lin(-d, Bs::w1, 2), k(-e)};
  m[13] = {k(0), k(-two * g), k(-two * d), lin(g, Bs::w2), lin(d, Bs::w1)};
  m[14] = {k(0), k(two * f), k(two * g), k(-f), lin(-g, Bs::w2, 2)};
  return m;
}

RamificationMatrix jacobian_matrix(const CoverParams &p) {
  const auto table = build_cover(p);
  RamificationMatrix m;
  for (std::size_t row = 0; row < kRelations; ++row) {
    auto [i, j] = kRelationOrder[row];
    const AlgebraElement &rhs = table.product(kGens[i], kGens[j]);
    for (std::size_t col = 0; col < kGenerators; ++col) {
      AlgebraElement entry = AlgebraElement::scalar(-rhs[kGens[col]]);
      if (col == i)
        entry[kGens[j]] += 1;
      if (col == j)
        entry[kGens[i]] += 1;
      m[row][col] = entry;
    }
  }
  return m;
}

RamificationMatrix build_matrix(const CoverParams &p) {
  auto shown = verbatim_matrix(p);
  auto derived = jacobian_matrix(p);
  for (std::size_t r = 0; r < kRelations; ++r)
    for (std::size_t c = 0; c < kGenerators; ++c)
      if (shown[r][c] != derived[r][c])
        throw TranscriptionError("ramification matrix entry (" + std::to_string(r + 1) + ", " +
                                 std::to_string(c + 1) + "): displayed " +
                                 to_string(shown[r][c]) + " vs Jacobian " +
                                 to_string(derived[r][c]));
  return shown;
}

AlgebraElement determinant(const SquareBlock &m, const MultiplicationTable &table) {
  std::array<bool, kMinorSize> used{};
  return det_rec(m, used, 0, table);
}

AlgebraElement determinant_by_permutations(const SquareBlock &m,
                                           const MultiplicationTable &table) {
  std::array<std::size_t, kMinorSize> perm;
  std::iota(perm.begin(), perm.end(), 0);
  AlgebraElement acc;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < kMinorSize; ++i)
      for (std::size_t j = i + 1; j < kMinorSize; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    auto term = fold_product({&m[0][perm[0]], &m[1][perm[1]], &m[2][perm[2]], &m[3][perm[3]],
                              &m[4][perm[4]]},
                             table);
    if (inversions % 2)
      acc -= term;
    else
      acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

SquareBlock select_rows(const RamificationMatrix &m, const RowSet &rows) {
  SquareBlock out;
  for (std::size_t i = 0; i < kMinorSize; ++i) {
    int r = rows[i];
    if (r < 1 || r > static_cast<int>(kRelations))
      throw std::invalid_argument("row index " + std::to_string(r) + " outside 1..15");
    for (std::size_t j = 0; j < i; ++j)
      if (rows[j] == r)
        throw std::invalid_argument("row index " + std::to_string(r) + " repeated");
    out[i] = m[static_cast<std::size_t>(r - 1)];
  }
  return out;
}

AlgebraElement minor(const CoverParams &p, const RowSet &rows) {
  return determinant(select_rows(build_matrix(p), rows), build_cover(p));
}

const std::vector<RowSet> &all_row_sets() {
  static const std::vector<RowSet> sets = [] {
    std::vector<RowSet> out;
    RowSet r{};
    for (r[0] = 1; r[0] <= 11; ++r[0])
      for (r[1] = r[0] + 1; r[1] <= 12; ++r[1])
        for (r[2] = r[1] + 1; r[2] <= 13; ++r[2])
          for (r[3] = r[2] + 1; r[3] <= 14; ++r[3])
            for (r[4] = r[3] + 1; r[4] <= 15; ++r[4])
              out.push_back(r);
    return out;
  }();
  return sets;
}

bool proportional(const AlgebraElement &x, const AlgebraElement &y) {
  if (x.is_zero() || y.is_zero())
    return x.is_zero() && y.is_zero();
  std::size_t pivot = 0;
  while (x[pivot].is_zero())
    ++pivot;
  if (y[pivot].is_zero())
    return false;
  Rational ratio = y[pivot] / x[pivot];
  return ratio * x == y;
}

std::vector<MinorEntry> all_minors(const CoverParams &p, const MinorOptions &opts) {
  const auto matrix = build_matrix(p);
  const auto table = build_cover(p);
  const auto &sets = all_row_sets();
  std::vector<MinorEntry> out(sets.size());

  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < sets.size(); i += stride)
      out[i] = {sets[i], determinant(select_rows(matrix, sets[i]), table)};
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(work, j, jobs);
  }

  std::vector<MinorEntry> filtered;
  for (auto &entry : out) {
    if (opts.nonzero_only && entry.value.is_zero())
      continue;
    if (opts.dedup &&
        std::any_of(filtered.begin(), filtered.end(),
                    [&](const MinorEntry &kept) { return proportional(kept.value, entry.value); }))
      continue;
    filtered.push_back(std::move(entry));
  }
  return filtered;
}

} // namespace s3cover
