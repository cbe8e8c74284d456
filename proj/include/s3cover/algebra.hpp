#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "s3cover/algebra_element.hpp"

namespace s3cover {

/// The eight scalars parameterising a local S3-cover.
///
/// Dictionary to the letters of the full structure table: b1 = a, b2 = b,
/// c1 = c, d3 = d, d4 = e, f3 = f, f4 = g, h2 = h. Tests re-derive this
/// identification instead of trusting it.
struct CoverParams {
  Rational a, b, c, d, e, f, g, h;

  std::array<Rational, 8> as_array() const { return {a, b, c, d, e, f, g, h}; }
  static CoverParams from_array(const std::array<Rational, 8> &v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }
  friend bool operator==(const CoverParams &, const CoverParams &) = default;
};

inline constexpr std::array<const char *, 8> kCoverParamNames = {"a", "b", "c", "d",
                                                                 "e", "f", "g", "h"};

/// The 17 free scalars of the commutative, equivariant (not necessarily
/// associative) family. eps1/eps3/eps4 are the coefficients usually written
/// e1/e3/e4; they are renamed so they cannot be confused with idempotents.
struct PreAssocParams {
  Rational a;
  Rational b1, b2, c1, c2;
  Rational d1, d3, d4;
  Rational eps1, eps3, eps4;
  Rational f1, f3, f4;
  Rational h2, h3, h4;

  friend bool operator==(const PreAssocParams &, const PreAssocParams &) = default;
};

/// Specialisation of the cover parameters into the 17-parameter family.
PreAssocParams to_pre_associative(const CoverParams &p);

/// Symmetric structure constants: one product per unordered basis pair.
class MultiplicationTable {
public:
  static constexpr std::size_t kEntries = kRank * (kRank + 1) / 2;

  /// Table with the unit row filled in and every other product zero.
  MultiplicationTable();

  const AlgebraElement &product(Basis x, Basis y) const { return entries_[slot(x, y)]; }
  void set(Basis x, Basis y, AlgebraElement value) { entries_[slot(x, y)] = std::move(value); }

  /// Unordered pairs (x <= y) in basis order; the iteration order of entries.
  static const std::array<std::pair<Basis, Basis>, kEntries> &pairs();
  static std::string key(Basis x, Basis y);

  friend bool operator==(const MultiplicationTable &, const MultiplicationTable &) = default;

private:
  static std::size_t slot(Basis x, Basis y);
  std::array<AlgebraElement, kEntries> entries_;
};

MultiplicationTable build_pre_associative(const PreAssocParams &p);
MultiplicationTable build_cover(const CoverParams &p);

struct ConstraintReport {
  Rational residual1; // -bg + 2ad + ce
  Rational residual2; // -bf + 2ag + cd
  Rational residual3; // (a^2 + bc)h - 3/2 (a(ef - dg) + b(g^2 - df) + c(eg - d^2))
  /// a^2 + bc == 0, i.e. t^2 == 0. A heuristic degeneracy signal only.
  bool degenerate = false;

  bool satisfied() const {
    return residual1.is_zero() && residual2.is_zero() && residual3.is_zero();
  }
};

ConstraintReport check_constraints(const CoverParams &p);

/// Bilinear extension of the table.
AlgebraElement multiply(const AlgebraElement &x, const AlgebraElement &y,
                        const MultiplicationTable &table);

struct Witness {
  std::vector<std::string> labels; // basis names, plus a group element for equivariance
  AlgebraElement lhs;
  AlgebraElement rhs;
};

struct AxiomResult {
  bool passed = true;
  std::optional<Witness> witness; // first failure
};

struct AxiomReport {
  AxiomResult unit;
  AxiomResult commutativity;
  AxiomResult associativity;
  AxiomResult equivariance;

  bool all_passed() const {
    return unit.passed && commutativity.passed && associativity.passed && equivariance.passed;
  }
};

AxiomResult verify_unit(const MultiplicationTable &table);
AxiomResult verify_commutativity(const MultiplicationTable &table);
/// (xy)z = x(yz) on all 216 ordered basis triples; suffices by trilinearity.
AxiomResult verify_associativity(const MultiplicationTable &table);
/// g(xy) = (gx)(gy) for all six group elements and 36 ordered basis pairs.
AxiomResult verify_equivariance(const MultiplicationTable &table);
AxiomReport verify(const MultiplicationTable &table);

/// The table does not have the shape produced by build_cover.
class ShapeError : public std::runtime_error {
public:
  ShapeError(std::string entry, const std::string &what)
      : std::runtime_error(what), entry_(std::move(entry)) {}
  const std::string &entry() const { return entry_; }

private:
  std::string entry_;
};

/// Reads (a..h) from t*v1, t*v2, v1^2, v2^2 and v1*w2, rebuilds the table and
/// compares every entry. Throws ShapeError naming the first mismatch.
CoverParams extract_params(const MultiplicationTable &table);

} // namespace s3cover
