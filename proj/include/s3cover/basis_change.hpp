#pragma once

#include <array>
#include <optional>
#include <string>

#include "s3cover/algebra.hpp"
#include "s3cover/representation.hpp"

namespace s3cover {

/// New generator s = u t of L and new basis of E' given by
///   w1' = l1 v1 + m1 v2,   w2' = l2 v1 + m2 v2,
/// with C = [[l1, m1], [l2, m2]]: row i holds the coordinates of the i-th new
/// vector. This is the orientation under which the primed parameter formulas
/// hold verbatim (u is the scaling usually also written a).
struct BasisChange {
  Rational u = 1;
  std::array<std::array<Rational, 2>, 2> C{{{1, 0}, {0, 1}}};

  Rational det() const { return C[0][0] * C[1][1] - C[1][0] * C[0][1]; }
  bool invertible() const { return !u.is_zero() && !det().is_zero(); }

  friend bool operator==(const BasisChange &, const BasisChange &) = default;
};

/// Throws ArithmeticError when u == 0 or det C == 0.
void require_invertible(const BasisChange &bc);

/// Parameters of the same cover expressed in the new generator and basis.
CoverParams transform(const CoverParams &p, const BasisChange &bc);

/// Change of basis of A: columns are the old coordinates of the new basis
/// [1, s, w1', w2', tau w1', tau w2'], i.e. diag(1, u, C^T, C^T).
Matrix6 induced_module_map(const BasisChange &bc);

/// Change `first` followed by change `second`.
BasisChange compose(const BasisChange &second, const BasisChange &first);

struct CovarianceReport {
  CoverParams transformed;
  bool constraints_before = false;
  bool constraints_after = false;
  /// M(x *new y) == (M x) *old (M y) on all 36 basis pairs
  bool covariant = true;
  std::optional<std::string> first_failure;
  /// h' == (det C / u) h
  bool h_scaling = true;

  bool ok() const {
    return covariant && h_scaling && constraints_before == constraints_after;
  }
};

CovarianceReport check_covariance(const CoverParams &p, const BasisChange &bc);

} // namespace s3cover
