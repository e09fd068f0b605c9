#include "isocrystal/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "isocrystal/error.hpp"

namespace isocrystal {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x /= lc;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::truncate(int k) const {
  if (k <= 0) return {};
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(coeffs_.size())));
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZeroPolynomial, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  const int db = b.degree();
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace isocrystal
