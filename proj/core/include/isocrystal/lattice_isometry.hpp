#pragma once

#include "isocrystal/matrix.hpp"
#include "isocrystal/rational.hpp"

namespace isocrystal {

/// Two alternating forms <x,y>_i = x^T G_i y on Z_p^{2m}, each with
/// M ⊂ M^∨ ⊂ p^{-N} M, congruent modulo p^n, with n >= 4N + 3.
///
/// Gram matrices may carry denominators prime to p; only p-integrality is
/// required.
class SymplecticLatticePair {
 public:
  // Validates every invariant: kSingularForm for a degenerate form,
  // kPreconditionViolated for anything else (shape, antisymmetry, p-integrality,
  // duality defect, congruence, n < 4N + 3).
  SymplecticLatticePair(Integer p, int duality_defect, int level, Matrix g1, Matrix g2);

  const Integer& p() const { return p_; }
  int duality_defect() const { return duality_defect_; }
  int level() const { return level_; }
  std::size_t rank() const { return g1_.rows(); }
  const Matrix& g1() const { return g1_; }
  const Matrix& g2() const { return g2_; }
  const Matrix& g1_inverse() const { return g1_inverse_; }

 private:
  Integer p_;
  int duality_defect_;
  int level_;
  Matrix g1_;
  Matrix g2_;
  Matrix g1_inverse_;
};

// v* with <v x, y>_1 = <x, v* y>_1, i.e. G1^{-1} v^T G1. Throws kSingularForm.
Matrix adjoint(const Matrix& v, const Matrix& g1);

// u with <x, y>_2 = <u x, y>_1, i.e. G1^{-1} G2 (both forms alternating).
// Checks u* = u and u == Id mod p^{n-N}; kNonIntegralStep otherwise.
Matrix transporter(const SymplecticLatticePair& pair);

struct IsometryStep {
  // Id + p^{floor(n/2)+1} alpha.
  Matrix g;
  // (G1, g^T G2 g) at level n + 1.
  SymplecticLatticePair next;
};

// One lifting step. With m = floor(n/2) + 1 and w = (u - Id)/p^m, uses
// alpha = -(w + w*)/4, which solves alpha* + alpha = -w for self-adjoint w.
IsometryStep improve_step(const SymplecticLatticePair& pair);

struct IsometrySolution {
  Matrix g;
  // Precision reached: g^T G2 g == G1 mod p^level.
  int level = 0;
  int steps = 0;
  // Independent re-check of the congruence and of g == Id mod p^{floor(n/2)+1}.
  bool verified = false;
};

// Iterates improve_step until precision K. Intermediate transforms are
// replaced by integer representatives modulo p^{K + N + 1}; entries are
// therefore integers. Throws kPreconditionViolated for K < n.
IsometrySolution solve_isometry(const SymplecticLatticePair& pair, int target_precision);

// Standalone check that g^T G2 g == G1 mod p^K and g is p-integral.
bool verify_isometry(const Matrix& g, const Matrix& g1, const Matrix& g2, const Integer& p, int precision);

}  // namespace isocrystal
