#include "isocrystal/trace_residue.hpp"

#include "isocrystal/error.hpp"

namespace isocrystal {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZeroPolynomial, "rational function with zero denominator");
  const Polynomial g = poly_gcd(num, den);
  num_ = poly_divmod(num, g).quotient;
  den_ = poly_divmod(den, g).quotient;
  const Rational lc = den_.leading();
  num_ = (Rational(1) / lc) * num_;
  den_ = den_.monic();
}

std::vector<Rational> RationalFunction::taylor(std::size_t count) const {
  const Rational d0 = den_.coeff(0);
  if (d0.is_zero()) throw Error(ErrorCode::kDivisionByZero, "denominator vanishes at T = 0");
  // den * series = num, solved term by term.
  std::vector<Rational> s(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = num_.coeff(static_cast<int>(k));
    for (std::size_t j = 1; j <= k; ++j) acc -= den_.coeff(static_cast<int>(j)) * s[k - j];
    s[k] = acc / d0;
  }
  return s;
}

PowerTraceSeries power_traces(const Matrix& u, const Matrix& v, std::size_t count) {
  if (!u.is_square() || !v.is_square() || u.rows() != v.rows())
    throw Error(ErrorCode::kShapeMismatch, "u and v must be square of the same size");
  if (determinant(v).is_zero()) throw Error(ErrorCode::kSingularV, "v is not invertible");
  PowerTraceSeries s;
  s.coeffs.reserve(count);
  Matrix uv = u * v;
  for (std::size_t k = 0; k < count; ++k) {
    s.coeffs.push_back(uv.trace());
    uv = uv * v;
  }
  return s;
}

RationalFunction reconstruct_rational(const PowerTraceSeries& s, int den_bound, int num_bound) {
  if (den_bound < 0 || num_bound < 0) throw Error(ErrorCode::kPreconditionViolated, "degree bounds must be >= 0");
  const std::size_t m = static_cast<std::size_t>(den_bound + num_bound + 1);
  if (s.coeffs.size() < m)
    throw Error(ErrorCode::kPreconditionViolated,
                "need " + std::to_string(m) + " coefficients, got " + std::to_string(s.coeffs.size()));

  // Extended Euclid on (T^m, S) stopped at the first remainder of degree
  // <= num_bound; the cofactor of S is the candidate denominator.
  Polynomial r0 = Polynomial::monomial(Rational(1), static_cast<int>(m));
  Polynomial r1(std::vector<Rational>(s.coeffs.begin(), s.coeffs.begin() + static_cast<std::ptrdiff_t>(m)));
  Polynomial t0;
  Polynomial t1 = Polynomial::constant(Rational(1));
  while (r1.degree() > num_bound) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (t1.degree() > den_bound || t1.is_zero())
    throw Error(ErrorCode::kReconstructionFailed, "no rational function within the degree bounds");
  RationalFunction f(r1, t1);
  if (f.den().coeff(0).is_zero() || f.den().degree() > den_bound || f.num().degree() > num_bound)
    throw Error(ErrorCode::kReconstructionFailed, "no rational function within the degree bounds");
  const auto expansion = f.taylor(m);
  for (std::size_t k = 0; k < m; ++k)
    if (expansion[k] != s.coeffs[k])
      throw Error(ErrorCode::kReconstructionFailed, "reconstructed function does not match the series");
  return f;
}

Rational residue_at_infinity(const RationalFunction& f) {
  // Polynomial part has zero residue at infinity.
  const Polynomial proper = poly_divmod(f.num(), f.den()).remainder;
  const int deg = f.den().degree();
  return -proper.coeff(deg - 1) / f.den().leading();
}

Rational recover_trace(const Matrix& u, const Matrix& v) {
  const int n = static_cast<int>(u.rows());
  const auto series = power_traces(u, v, static_cast<std::size_t>(2 * n));
  return residue_at_infinity(reconstruct_rational(series, n, n - 1));
}

Rational recover_trace_from_tail(const PowerTraceSeries& s, int n, int k) {
  if (n < 1 || k < 0) throw Error(ErrorCode::kPreconditionViolated, "need n >= 1 and k >= 0");
  if (s.coeffs.size() < static_cast<std::size_t>(2 * n + 2 * k))
    throw Error(ErrorCode::kPreconditionViolated, "need at least 2n + 2k coefficients");
  // Altering k leading terms adds a polynomial of degree < k.
  return residue_at_infinity(reconstruct_rational(s, n, n - 1 + k));
}

}  // namespace isocrystal
