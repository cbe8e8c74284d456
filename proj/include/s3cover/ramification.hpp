#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "s3cover/algebra.hpp"

namespace s3cover {

inline constexpr std::size_t kRelations = 15;
inline constexpr std::size_t kGenerators = 5;
inline constexpr std::size_t kMinorSize = 5;

/// 15 x 5 matrix with entries in A: row k is the gradient of the k-th
/// relation X_i X_j - table(X_i, X_j) with respect to (t, v1, v2, w1, w2),
/// relations ordered t^2, tv1, tv2, tw1, tw2, v1^2, v1v2, v2^2, v1w1, v1w2,
/// v2w1, v2w2, w1^2, w1w2, w2^2.
using RamificationMatrix = std::array<std::array<AlgebraElement, kGenerators>, kRelations>;
using SquareBlock = std::array<std::array<AlgebraElement, kMinorSize>, kMinorSize>;
using RowSet = std::array<int, kMinorSize>; // 1-based, strictly increasing

/// Thrown when the displayed matrix and the Jacobian construction disagree.
class TranscriptionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The matrix exactly as displayed for the cover parameters.
RamificationMatrix verbatim_matrix(const CoverParams &p);
/// Gradient of the relations of build_cover(p), computed from the table.
RamificationMatrix jacobian_matrix(const CoverParams &p);
/// Both constructions, compared entry by entry; throws TranscriptionError.
RamificationMatrix build_matrix(const CoverParams &p);

/// Determinant over A by cofactor expansion along the first row. Products
/// are folded left to right through the table.
AlgebraElement determinant(const SquareBlock &m, const MultiplicationTable &table);
/// Leibniz sum over all 120 permutations; an independent second route.
AlgebraElement determinant_by_permutations(const SquareBlock &m,
                                           const MultiplicationTable &table);

/// Throws std::invalid_argument on repeated or out-of-range indices. Rows are
/// taken in the given order.
SquareBlock select_rows(const RamificationMatrix &m, const RowSet &rows);

AlgebraElement minor(const CoverParams &p, const RowSet &rows);

struct MinorEntry {
  RowSet rows;
  AlgebraElement value;
};

struct MinorOptions {
  bool nonzero_only = false;
  /// Keep only the first (lexicographic) representative of each class of
  /// nonzero scalar multiples.
  bool dedup = false;
  unsigned jobs = 1;
};

/// All C(15,5) = 3003 row subsets in lexicographic order, then filtered.
std::vector<MinorEntry> all_minors(const CoverParams &p, const MinorOptions &opts = {});

/// Lexicographic list of all 5-subsets of {1..15}.
const std::vector<RowSet> &all_row_sets();

/// x is a nonzero rational multiple of y (or both are zero).
bool proportional(const AlgebraElement &x, const AlgebraElement &y);

} // namespace s3cover
