#pragma once

#include <cstddef>
#include <vector>

#include "isocrystal/matrix.hpp"
#include "isocrystal/polynomial.hpp"

namespace isocrystal {

// coeffs[N] = tr(u v^{N+1}).
struct PowerTraceSeries {
  std::vector<Rational> coeffs;
};

/// num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  // Throws kDivisionByZeroPolynomial for a zero denominator.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  // First `count` Taylor coefficients at T = 0. Requires den(0) != 0.
  std::vector<Rational> taylor(std::size_t count) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

// Throws kShapeMismatch for non-square or mismatched u, v and kSingularV when
// det(v) == 0.
PowerTraceSeries power_traces(const Matrix& u, const Matrix& v, std::size_t count);

// Pade reconstruction: f with deg den <= den_bound, deg num <= num_bound whose
// expansion matches the first den_bound + num_bound + 1 coefficients.
// Throws kPreconditionViolated for a short series and kReconstructionFailed
// when no such f exists.
RationalFunction reconstruct_rational(const PowerTraceSeries& s, int den_bound, int num_bound);

// Res_{T=inf} f(T) dT, i.e. minus the sum of the finite residues.
Rational residue_at_infinity(const RationalFunction& f);

// tr(u), read off the generating series of tr(u v^{N+1}).
Rational recover_trace(const Matrix& u, const Matrix& v);

// tr(u) for a power-trace series of n x n matrices whose first k
// coefficients may have been altered arbitrarily. Needs 2n + 2k terms.
Rational recover_trace_from_tail(const PowerTraceSeries& s, int n, int k);

}  // namespace isocrystal
