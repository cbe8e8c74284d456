#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "s3cover/algebra.hpp"

namespace s3cover {

struct SampleOptions {
  /// Numerators in [-bound, bound], denominators in [1, bound].
  std::int64_t bound = 5;
  /// Force d = e = f = g = 0 (then h = 0 as well).
  bool zero_quadratic = false;
};

/// Deterministic constraint-satisfying parameters. a, b, c are drawn with
/// a^2 + bc != 0; (d, e, f, g) is a random point of the plane cut out by the
/// two linear conditions; h is then solved from the third condition.
CoverParams sample(std::uint64_t seed, const SampleOptions &opts = {});
inline CoverParams sample(std::uint64_t seed, std::int64_t bound) {
  return sample(seed, SampleOptions{bound, false});
}

/// Unconstrained parameters, e.g. for negative controls.
CoverParams sample_unconstrained(std::uint64_t seed, std::int64_t bound = 5);

/// Base seed for randomized suites; S3COVER_SEED overrides the default.
std::uint64_t base_seed(std::uint64_t fallback = 20080427);

struct IntegerSolution {
  std::array<std::int64_t, 8> values; // a..h
  /// a^2 + bc == 0; such tuples satisfy (iii) only when its right side
  /// vanishes, and then for every h.
  bool degenerate = false;

  CoverParams params() const;
  friend bool operator==(const IntegerSolution &, const IntegerSolution &) = default;
};

/// Every integer tuple with |a..h| <= bound satisfying the three conditions,
/// in lexicographic order on (a..h). Work is split over (a, b, c) when
/// jobs > 1; the result does not depend on jobs.
std::vector<IntegerSolution> enumerate_integer(std::int64_t bound, unsigned jobs = 1);

} // namespace s3cover
