#include "s3cover/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>

namespace s3cover {

namespace {

Rational draw(std::mt19937_64 &rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, std::max<std::int64_t>(1, bound));
  return Rational::make(num(rng), den(rng));
}

// Basis of the solution space of the two linear conditions in (d, e, f, g):
//   2a d + c e        - b g = 0
//   c d        - b f + 2a g = 0
std::array<std::array<Rational, 4>, 2> linear_kernel(const Rational &a, const Rational &b,
                                                     const Rational &c) {
  std::array<std::array<Rational, 4>, 2> rows = {{{Rational(2) * a, c, 0, -b},
                                                  {c, 0, -b, Rational(2) * a}}};
  std::array<int, 2> pivot_col{-1, -1};
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < 2; ++col) {
    std::size_t p = r;
    while (p < 2 && rows[p][col].is_zero())
      ++p;
    if (p == 2)
      continue;
    std::swap(rows[p], rows[r]);
    Rational inv = Rational(1) / rows[r][col];
    for (auto &x : rows[r])
      x *= inv;
    for (std::size_t o = 0; o < 2; ++o) {
      if (o == r || rows[o][col].is_zero())
        continue;
      Rational f = rows[o][col];
      for (std::size_t k = 0; k < 4; ++k)
        rows[o][k] -= f * rows[r][k];
    }
    pivot_col[r] = static_cast<int>(col);
    ++r;
  }
  // a, b, c not all zero gives rank 2 (the caller guarantees a^2 + bc != 0).
  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < 4; ++col)
    if (static_cast<int>(col) != pivot_col[0] && static_cast<int>(col) != pivot_col[1])
      free_cols.push_back(col);

  std::array<std::array<Rational, 4>, 2> kernel{};
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t fc = free_cols[k];
    kernel[k][fc] = 1;
    for (std::size_t i = 0; i < r; ++i)
      kernel[k][static_cast<std::size_t>(pivot_col[i])] = -rows[i][fc];
  }
  return kernel;
}

} // namespace

std::uint64_t base_seed(std::uint64_t fallback) {
  if (const char *env = std::getenv("S3COVER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
    }
  }
  return fallback;
}

CoverParams sample(std::uint64_t seed, const SampleOptions &opts) {
  std::mt19937_64 rng(seed);
  CoverParams p;
  do {
    p.a = draw(rng, opts.bound);
    p.b = draw(rng, opts.bound);
    p.c = draw(rng, opts.bound);
  } while ((p.a * p.a + p.b * p.c).is_zero());

  if (!opts.zero_quadratic) {
    auto kernel = linear_kernel(p.a, p.b, p.c);
    Rational x = draw(rng, opts.bound);
    Rational y = draw(rng, opts.bound);
    p.d = x * kernel[0][0] + y * kernel[1][0];
    p.e = x * kernel[0][1] + y * kernel[1][1];
    p.f = x * kernel[0][2] + y * kernel[1][2];
    p.g = x * kernel[0][3] + y * kernel[1][3];
  }
  const auto &[a, b, c, d, e, f, g, h] = p;
  p.h = Rational::make(3, 2) * (a * (e * f - d * g) + b * (g * g - d * f) + c * (e * g - d * d)) /
        (a * a + b * c);
  return p;
}

CoverParams sample_unconstrained(std::uint64_t seed, std::int64_t bound) {
  std::mt19937_64 rng(seed);
  std::array<Rational, 8> v;
  for (auto &x : v)
    x = draw(rng, bound);
  return CoverParams::from_array(v);
}

CoverParams IntegerSolution::params() const {
  std::array<Rational, 8> v;
  for (std::size_t i = 0; i < 8; ++i)
    v[i] = Rational(values[i]);
  return CoverParams::from_array(v);
}

namespace {

// All solutions with the given (a, b, c), unsorted.
void enumerate_fixed_abc(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t bound,
                         std::vector<IntegerSolution> &out) {
  const std::int64_t norm = a * a + b * c;
  auto emit_h = [&](std::int64_t d, std::int64_t e, std::int64_t f, std::int64_t g) {
    // 2 (a^2 + bc) h = 3 (a(ef - dg) + b(g^2 - df) + c(eg - d^2))
    const std::int64_t rhs = 3 * (a * (e * f - d * g) + b * (g * g - d * f) + c * (e * g - d * d));
    if (norm != 0) {
      if (rhs % (2 * norm) != 0)
        return;
      std::int64_t h = rhs / (2 * norm);
      if (h >= -bound && h <= bound)
        out.push_back({{a, b, c, d, e, f, g, h}, false});
    } else if (rhs == 0) {
      for (std::int64_t h = -bound; h <= bound; ++h)
        out.push_back({{a, b, c, d, e, f, g, h}, true});
    }
  };

  for (std::int64_t d = -bound; d <= bound; ++d)
    for (std::int64_t e = -bound; e <= bound; ++e)
      for (std::int64_t g = -bound; g <= bound; ++g) {
        if (-b * g + 2 * a * d + c * e != 0)
          continue;
        // second condition: b f = 2a g + c d
        const std::int64_t bf = 2 * a * g + c * d;
        if (b != 0) {
          if (bf % b != 0)
            continue;
          std::int64_t f = bf / b;
          if (f >= -bound && f <= bound)
            emit_h(d, e, f, g);
        } else if (bf == 0) {
          for (std::int64_t f = -bound; f <= bound; ++f)
            emit_h(d, e, f, g);
        }
      }
}

} // namespace

std::vector<IntegerSolution> enumerate_integer(std::int64_t bound, unsigned jobs) {
  if (bound < 1)
    throw std::invalid_argument("enumeration bound must be >= 1");
  std::vector<std::array<std::int64_t, 3>> heads;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        heads.push_back({a, b, c});

  std::vector<std::vector<IntegerSolution>> parts(heads.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < heads.size(); i += stride)
      enumerate_fixed_abc(heads[i][0], heads[i][1], heads[i][2], bound, parts[i]);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(work, j, jobs);
  }

  std::vector<IntegerSolution> out;
  for (auto &part : parts) {
    std::sort(part.begin(), part.end(),
              [](const IntegerSolution &x, const IntegerSolution &y) { return x.values < y.values; });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

} // namespace s3cover
