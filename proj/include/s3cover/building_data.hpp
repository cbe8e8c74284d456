#pragma once

#include <array>
#include <string>
#include <vector>

#include "s3cover/algebra.hpp"

namespace s3cover {

/// Building data (Phi, Psi, Xi) in the basis {t, v1, v2}:
///   Phi(t v1^2) = A, Phi(t v1 v2) = B, Phi(t v2^2) = C        (times v1^v2)
///   Psi(v1^3) = D, Psi(v1^2 v2) = E, Psi(v1 v2^2) = F, Psi(v2^3) = G
///   Xi(v1^v2) = h t
///
/// Field names are the conventional capital letters; B here is a scalar, not
/// the base ring.
struct BuildingData {
  Rational A, B, C, D, E, F, G, h;

  friend bool operator==(const BuildingData &, const BuildingData &) = default;
};

inline constexpr std::array<const char *, 8> kBuildingDataNames = {"A", "B", "C", "D",
                                                                   "E", "F", "G", "h"};

/// A = -b, B = a, C = c, D = -e, E = d, F = -g, G = f, h = h.
BuildingData to_building_data(const CoverParams &p);
CoverParams from_building_data(const BuildingData &bd);

/// F: reads the building data off a table of cover shape (throws ShapeError).
BuildingData extract_building_data(const MultiplicationTable &table);

/// Images of the basis under (phi, psi, xi), recovered from building data.
struct LowercaseTriple {
  // phi(t v1), phi(t v2); psi(v1^2), psi(v1 v2), psi(v2^2); coordinates in
  // the full basis so they can be compared with table rows.
  std::array<AlgebraElement, 2> phi;
  std::array<AlgebraElement, 3> psi;
  Rational xi; // xi(v1 (x) tau v2) = xi * t
};

LowercaseTriple lowercase_triple(const BuildingData &bd);

struct CompatResidual {
  Rational r1, r2, r3;

  bool in_kernel() const { return r1.is_zero() && r2.is_zero() && r3.is_zero(); }
};

/// (AF - 2BE + CD, AG - 2BF + CE)
std::pair<Rational, Rational> tester_a1(const BuildingData &bd);
/// 3/2 (B(EF - DG) - A(F^2 - EG) + C(DF - E^2)) - h(B^2 - AC)
Rational tester_a2(const BuildingData &bd);
CompatResidual compat_residual(const BuildingData &bd);

/// Value assigned to t^2.
Rational reconstruct_alpha(const BuildingData &bd);
/// Images of t(x)v1, t(x)v2, t(x)w1, t(x)w2.
std::array<AlgebraElement, 4> reconstruct_beta(const BuildingData &bd);
/// Images of v1^2, v1v2, v2^2, v1w1, v1w2, v2w1, v2w2, w1^2, w1w2, w2^2.
std::array<AlgebraElement, 10> reconstruct_gamma(const BuildingData &bd);
/// Unit row plus alpha, beta, gamma assembled into a full table.
MultiplicationTable reconstruct_table(const BuildingData &bd);

/// The E-pairs in the order reconstruct_gamma returns them.
const std::array<std::pair<Basis, Basis>, 10> &gamma_pairs();

struct EntryMismatch {
  std::string key;
  AlgebraElement expected;
  AlgebraElement actual;
};

std::vector<EntryMismatch> compare_tables(const MultiplicationTable &expected,
                                          const MultiplicationTable &actual);

struct PipelineReport {
  CoverParams params;
  BuildingData building;
  ConstraintReport constraints;
  CompatResidual residual;
  /// (A1, A2 vanish) <=> constraints satisfied
  bool testers_agree = false;
  /// Reconstruction compared against build_cover only when in ker A.
  bool reconstructed = false;
  std::vector<EntryMismatch> mismatches;

  bool ok() const { return testers_agree && (!reconstructed || mismatches.empty()); }
};

PipelineReport pipeline_check(const CoverParams &p);

} // namespace s3cover
