#pragma once

#include <cstdint>
#include <random>

#include "s3cover/algebra.hpp"
#include "s3cover/basis_change.hpp"
#include "s3cover/search.hpp"

namespace testing {

using namespace s3cover;

inline CoverParams solution1() { return {1, 1, 1, 1, -1, 3, 1, -6}; }
inline CoverParams solution2() { return {1, 1, 1, 1, -2, 1, 0, -3}; }

inline Rational small_rational(std::mt19937_64 &rng, std::int64_t bound = 5) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound), den(1, bound);
  return Rational::make(num(rng), den(rng));
}

inline PreAssocParams random_pre_assoc(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PreAssocParams p;
  for (Rational *r : {&p.a, &p.b1, &p.b2, &p.c1, &p.c2, &p.d1, &p.d3, &p.d4, &p.eps1,
                      &p.eps3, &p.eps4, &p.f1, &p.f3, &p.f4, &p.h2, &p.h3, &p.h4})
    *r = small_rational(rng);
  return p;
}

inline BasisChange random_basis_change(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BasisChange bc;
  do {
    bc.u = small_rational(rng, 4);
    for (auto &row : bc.C)
      for (auto &x : row)
        x = small_rational(rng, 4);
  } while (!bc.invertible());
  return bc;
}

} // namespace testing
