#include "isocrystal/global_datum.hpp"

#include <algorithm>
#include <numeric>

#include "isocrystal/congruence.hpp"
#include "isocrystal/error.hpp"

namespace isocrystal {

void validate(const LocalInvariantProfile& profile) {
  if (profile.n < 1) throw Error(ErrorCode::kInvalidProfile, "n must be >= 1");
  if (profile.real_degree < 1) throw Error(ErrorCode::kInvalidProfile, "[F+:Q] must be >= 1");
  if (static_cast<int>(profile.signatures.size()) != profile.real_degree)
    throw Error(ErrorCode::kInvalidProfile, "need one signature per real place");
  for (int p : profile.signatures)
    if (p < 0 || p > profile.n) throw Error(ErrorCode::kInvalidProfile, "signature p_tau outside [0, n]");
  for (int a : profile.split_places)
    if (a < 1 || profile.n % a != 0) throw Error(ErrorCode::kInvalidProfile, "split place with a not dividing n");
}

GlobalExistence exists_global_unitary(const LocalInvariantProfile& profile) {
  validate(profile);
  GlobalExistence out;
  auto& w = out.witness;
  w.split_odd = std::count_if(profile.split_places.begin(), profile.split_places.end(), [](int a) { return a % 2 == 1; });
  w.inert_non_quasi_split = std::count(profile.inert_places.begin(), profile.inert_places.end(), false);
  const long sig = std::accumulate(profile.signatures.begin(), profile.signatures.end(), 0L);
  w.lhs_mod2 = static_cast<int>(((profile.n / 2) * static_cast<long>(profile.real_degree) + sig) % 2);
  w.rhs_mod2 = static_cast<int>((w.split_odd + w.inert_non_quasi_split) % 2);
  out.exists = profile.n % 2 == 1 || w.lhs_mod2 == w.rhs_mod2;
  return out;
}

namespace {

// Dense polynomial over F_p, constant term first, no trailing zeros.
using FpPoly = std::vector<Integer>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer fp_mod(const Integer& x, const Integer& p) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

Integer fp_inv(const Integer& x, const Integer& p) {
  Integer r;
  mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, const Integer& p) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = fp_mod(a[i] - b[i], p);
  fp_trim(a);
  return a;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, const Integer& p) {
  const Integer inv = fp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    const Integer c = fp_mod(a.back() * inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = fp_mod(a[shift + i] - c * b[i], p);
    fp_trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) x = fp_mod(x, p);
  fp_trim(c);
  return fp_rem(std::move(c), f, p);
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& f, const Integer& p) {
  FpPoly result{Integer(1)};
  result = fp_rem(result, f, p);
  base = fp_rem(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = fp_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = fp_mulmod(base, base, f, p);
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Integer& p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const Polynomial& f, const Integer& p) {
  if (!f.has_integer_coefficients()) throw Error(ErrorCode::kPreconditionViolated, "polynomial must have integer coefficients");
  if (f.degree() < 1) throw Error(ErrorCode::kPreconditionViolated, "polynomial must have degree >= 1");
  FpPoly fp;
  for (const auto& c : f.coefficients()) fp.push_back(fp_mod(c.numerator(), p));
  fp_trim(fp);
  if (static_cast<int>(fp.size()) - 1 != f.degree())
    throw Error(ErrorCode::kBadLeadingCoefficient, "p divides the leading coefficient");
  const int n = f.degree();
  const FpPoly x{Integer(0), Integer(1)};
  // x^{p^k} mod f, built by repeated p-th powers.
  FpPoly frob = fp_rem(x, fp, p);
  for (int k = 1; k <= n; ++k) {
    frob = fp_powmod(frob, p, fp, p);
    const FpPoly diff = fp_sub(frob, fp_rem(x, fp, p), p);
    if (k < n) {
      if (fp_gcd(fp, diff, p).size() > 1) return false;
    } else if (!diff.empty()) {
      return false;
    }
  }
  return true;
}

LiftVerification verify_lift(const LiftProblem& problem, const Polynomial& lift) {
  LiftVerification v;
  const Polynomial& q = problem.target;
  v.monic_same_degree = !lift.is_zero() && lift.has_integer_coefficients() && lift.degree() == q.degree() &&
                        lift.leading() == Rational(1);
  if (!v.monic_same_degree) return v;
  v.congruent = true;
  for (int k = 0; k <= q.degree(); ++k)
    v.congruent = v.congruent && congruent_mod_ppow(lift.coeff(k).numerator(), q.coeff(k).numerator(), problem.p,
                                                    static_cast<unsigned long>(problem.precision));
  v.all_roots_real = all_roots_real(lift);
  v.irreducible_mod_p = is_irreducible_mod_p(lift, problem.p);
  return v;
}

namespace {

// 0, 1, -1, 2, -2, ...
long zigzag(std::size_t rank) {
  const long k = static_cast<long>((rank + 1) / 2);
  return rank % 2 == 1 ? k : -k;
}

// Odometer step; the last digit moves fastest. False after wrapping around.
bool advance(std::vector<std::size_t>& ranks, std::size_t width) {
  for (std::size_t pos = ranks.size(); pos-- > 0;) {
    if (++ranks[pos] < width) return true;
    ranks[pos] = 0;
  }
  return false;
}

}  // namespace

LiftResult find_real_rooted_lift(const LiftProblem& problem) {
  const Polynomial& q = problem.target;
  if (q.degree() < 1 || !q.has_integer_coefficients() || q.leading() != Rational(1))
    throw Error(ErrorCode::kPreconditionViolated, "target must be a monic integer polynomial of degree >= 1");
  if (problem.precision < 1) throw Error(ErrorCode::kPreconditionViolated, "precision N must be >= 1");
  if (problem.bound < 0) throw Error(ErrorCode::kPreconditionViolated, "search bound must be >= 0");
  if (problem.p < 2 || mpz_probab_prime_p(problem.p.get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::kPreconditionViolated, "p must be prime");
  if (!is_irreducible_mod_p(q, problem.p)) throw Error(ErrorCode::kNotIrreducibleModP, "target is reducible mod p");

  const std::size_t dg = static_cast<std::size_t>(q.degree());
  const Rational step(ppow(problem.p, static_cast<unsigned long>(problem.precision)));
  LiftResult result;
  for (int radius = 0; radius <= problem.bound; ++radius) {
    const std::size_t width = 2 * static_cast<std::size_t>(radius) + 1;
    std::vector<std::size_t> ranks(dg, 0);
    do {
      long max_abs = 0;
      for (auto r : ranks) max_abs = std::max(max_abs, std::labs(zigzag(r)));
      if (max_abs != radius) continue;
      ++result.candidates_examined;
      std::vector<Rational> coeffs(q.coefficients().begin(), q.coefficients().end());
      for (std::size_t i = 0; i < dg; ++i) coeffs[i] += step * Rational(zigzag(ranks[i]));
      Polynomial candidate(std::move(coeffs));
      if (!all_roots_real(candidate)) continue;
      result.verification = verify_lift(problem, candidate);
      result.certificate = sturm_certificate(candidate);
      result.lift = std::move(candidate);
      return result;
    } while (advance(ranks, width));
  }
  throw Error(ErrorCode::kSearchExhausted, "no real-rooted lift within the coefficient bound");
}

}  // namespace isocrystal
