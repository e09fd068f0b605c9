#include "isocrystal/congruence.hpp"

#include "isocrystal/error.hpp"

namespace isocrystal {

Integer ppow(const Integer& p, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

std::optional<long> p_valuation(const Integer& a, const Integer& p) {
  if (a == 0) return std::nullopt;
  Integer rest = a;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> p_valuation(const Rational& a, const Integer& p) {
  if (a.is_zero()) return std::nullopt;
  return *p_valuation(a.numerator(), p) - *p_valuation(a.denominator(), p);
}

std::optional<long> p_valuation(const Matrix& m, const Integer& p) {
  std::optional<long> best;
  for (const auto& x : m.entries()) {
    const auto v = p_valuation(x, p);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

bool is_p_integral(const Rational& a, const Integer& p) { return mpz_divisible_p(a.raw().get_den_mpz_t(), p.get_mpz_t()) == 0; }

bool is_p_integral(const Matrix& m, const Integer& p) {
  for (const auto& x : m.entries())
    if (!is_p_integral(x, p)) return false;
  return true;
}

bool congruent_mod_ppow(const Integer& a, const Integer& b, const Integer& p, unsigned long k) {
  const Integer diff = a - b;
  const Integer mod = ppow(p, k);
  return mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t()) != 0;
}

bool congruent_mod_ppow(const Rational& a, const Rational& b, const Integer& p, unsigned long k) {
  if (!is_p_integral(a, p) || !is_p_integral(b, p))
    throw Error(ErrorCode::kNonIntegerEntry, "congruence of non p-integral rationals is undefined");
  // The difference has denominator prime to p, so only its numerator matters.
  const Rational diff = a - b;
  return congruent_mod_ppow(diff.numerator(), Integer(0), p, k);
}

bool congruent_mod_ppow(const Matrix& a, const Matrix& b, const Integer& p, unsigned long k) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::kShapeMismatch, "congruence of matrices with different shapes");
  bool all = true;
  const auto ea = a.entries();
  const auto eb = b.entries();
  // Every entry is visited so that a non-integral entry is always reported.
  for (std::size_t i = 0; i < ea.size(); ++i) all = congruent_mod_ppow(ea[i], eb[i], p, k) && all;
  return all;
}

Integer residue_mod_ppow(const Rational& a, const Integer& p, unsigned long k) {
  if (!is_p_integral(a, p)) throw Error(ErrorCode::kNonIntegerEntry, "residue of a non p-integral rational");
  const Integer mod = ppow(p, k);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), a.raw().get_den_mpz_t(), mod.get_mpz_t());
  Integer r = a.numerator() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Integer symmetric_residue_mod_ppow(const Rational& a, const Integer& p, unsigned long k) {
  const Integer mod = ppow(p, k);
  Integer r = residue_mod_ppow(a, p, k);
  if (2 * r > mod) r -= mod;
  return r;
}

}  // namespace isocrystal
