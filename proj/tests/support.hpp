#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qbundle/matrix.hpp"
#include "qbundle/zoo.hpp"

namespace qbtest {

// Fraction-free (Bareiss) elimination on the integer matrix obtained by
// clearing each row's denominators. Shares no code with the library.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline std::size_t bareiss_rank(const qb::Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) den = lcm(den, mpz_class(m(r, c).get_den()));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class x = m(r, c) * den;
      a[r][c] = x.get_num();
    }
  }
  return bareiss_rank(std::move(a));
}

/// Rank of a matrix given as rows of "a/b" strings, as printed by the CLI.
inline std::size_t bareiss_rank(const std::vector<std::vector<std::string>>& rows) {
  qb::Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = mpq_class(rows[r][c]);
  return bareiss_rank(m);
}

// p⊗p' ↦ Σ p·p'₀ ⊗ p'₁ evaluated element by element from the structure
// constants, for comparison with the matrix-built lifted canonical map.
inline qb::Matrix naive_lifted_can(const qb::ComoduleAlgebraData& p) {
  const std::size_t n = p.dim_p(), d = p.dim_h();
  const qb::Matrix& mult = p.algebra().mult().matrix();
  const qb::Matrix& rho = p.coaction().matrix();
  qb::Matrix out(n * d, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t b0 = 0; b0 < n; ++b0)
        for (std::size_t h = 0; h < d; ++h) {
          const mpq_class& coef = rho(b0 * d + h, b);
          if (coef == 0) continue;
          for (std::size_t k = 0; k < n; ++k) out(k * d + h, a * n + b) += coef * mult(k, a * n + b0);
        }
  return out;
}

inline std::string fixture(const std::string& name) { return std::string(QB_FIXTURES) + "/" + name; }

}  // namespace qbtest
