#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "isocrystal/rational.hpp"

namespace isocrystal {

/// Univariate polynomial over Q, coefficients indexed by degree.
///
/// Trailing zero coefficients are trimmed on construction, so the zero
/// polynomial has an empty coefficient list and degree kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool has_integer_coefficients() const;

  // Coefficient of T^k; zero outside the stored range.
  Rational coeff(int k) const;
  // Requires a nonzero polynomial.
  const Rational& leading() const { return coeffs_.back(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  // Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  // Keeps the terms of degree < k.
  Polynomial truncate(int k) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Human-readable, highest degree first, e.g. "T^2 - 1/2*T + 3".
  std::string to_string(char var = 'T') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// a = q*b + r with deg r < deg b. Throws kDivisionByZeroPolynomial for b == 0.
PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace isocrystal
