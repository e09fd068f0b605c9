#pragma once

// Deterministic generators for property tests.

#include <random>
#include <vector>

#include "isocrystal/congruence.hpp"
#include "isocrystal/matrix.hpp"
#include "isocrystal/rational.hpp"

namespace isocrystal::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_abs = 10) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, long max_abs = 10) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, max_abs);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, long max_abs = 10) {
  while (true) {
    Matrix m = random_matrix(rng, n, max_abs);
    if (!determinant(m).is_zero()) return m;
  }
}

inline Matrix random_integer_matrix(std::mt19937_64& rng, std::size_t n, long max_abs) {
  std::uniform_int_distribution<long> e(-max_abs, max_abs);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(e(rng));
  return m;
}

inline Matrix random_alternating(std::mt19937_64& rng, std::size_t n, long max_abs) {
  std::uniform_int_distribution<long> e(-max_abs, max_abs);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Rational(e(rng));
      m(j, i) = -m(i, j);
    }
  return m;
}

// Two alternating Gram matrices on Z^{rank} with M ⊂ M^∨ ⊂ p^{-N} M for both
// and G1 == G2 mod p^level: G1 = A^T J A with J block-diagonal p^{e_i} [[0,1],[-1,0]],
// e_i <= N, A invertible mod p, and G2 = G1 + p^level S with S alternating.
struct AdmissibleForms {
  Matrix g1;
  Matrix g2;
};

inline AdmissibleForms random_admissible_forms(std::mt19937_64& rng, long p, std::size_t rank, int defect, int level) {
  const Integer pp(p);
  std::uniform_int_distribution<int> exp(0, defect);
  Matrix j(rank, rank);
  for (std::size_t b = 0; b < rank / 2; ++b) {
    const Rational c(ppow(pp, static_cast<unsigned long>(exp(rng))));
    j(2 * b, 2 * b + 1) = c;
    j(2 * b + 1, 2 * b) = -c;
  }
  Matrix a;
  while (true) {
    a = random_integer_matrix(rng, rank, 3);
    const auto v = p_valuation(determinant(a), pp);
    if (v && *v == 0) break;
  }
  Matrix g1 = a.transpose() * j * a;
  const Rational scale(ppow(pp, static_cast<unsigned long>(level)));
  Matrix g2 = g1 + scale * random_alternating(rng, rank, 4);
  return {std::move(g1), std::move(g2)};
}

}  // namespace isocrystal::testing
