#pragma once

#include <cstddef>
#include <vector>

#include "isocrystal/polynomial.hpp"
#include "isocrystal/sturm.hpp"

namespace isocrystal {

/// Local behaviour of a unitary group in n variables over a CM field F/F+.
/// Only the finitely many exceptional finite places are listed; every other
/// place is taken to be quasi-split.
struct LocalInvariantProfile {
  int n = 1;
  int real_degree = 1;           // [F+ : Q]
  std::vector<int> signatures;   // p_tau for tau in the CM type, one per real place
  std::vector<int> split_places; // a with U_v = GL_a(D), a | n
  std::vector<bool> inert_places;  // quasi-split flag per listed inert place
};

// Throws kInvalidProfile.
void validate(const LocalInvariantProfile& profile);

struct ParityWitness {
  long split_odd = 0;             // A
  long inert_non_quasi_split = 0; // B
  int lhs_mod2 = 0;               // (n/2)[F+:Q] + sum p_tau, only meaningful for n even
  int rhs_mod2 = 0;               // A + B
};

struct GlobalExistence {
  bool exists = false;
  ParityWitness witness;
};

// n odd: always exists. n even: exists iff (n/2)[F+:Q] + sum p_tau == A + B mod 2.
GlobalExistence exists_global_unitary(const LocalInvariantProfile& profile);

// Rabin-style distinct-degree test over F_p. Throws kBadLeadingCoefficient
// when p divides the leading coefficient and kPreconditionViolated for
// non-integer coefficients or degree < 1.
bool is_irreducible_mod_p(const Polynomial& f, const Integer& p);

struct LiftProblem {
  Polynomial target;  // monic, integer coefficients, irreducible mod p
  Integer p;
  int precision = 1;  // N: the lift is congruent to target mod p^N
  int bound = 1;      // coefficient radius of the translate search
};

struct LiftVerification {
  bool monic_same_degree = false;
  bool congruent = false;
  bool all_roots_real = false;
  bool irreducible_mod_p = false;
  bool all() const { return monic_same_degree && congruent && all_roots_real && irreducible_mod_p; }
};

struct LiftResult {
  Polynomial lift;
  SturmCertificate certificate;
  LiftVerification verification;
  std::size_t candidates_examined = 0;
};

// Re-checks a candidate lift against the problem, independently of the search.
LiftVerification verify_lift(const LiftProblem& problem, const Polynomial& lift);

// Searches target + p^N * S over integer S of degree < deg target with
// coefficients in [-bound, bound], by increasing max |coefficient|, then
// lexicographically from the constant term with values ordered
// 0, 1, -1, 2, -2, ...  Throws kSearchExhausted, kNotIrreducibleModP,
// kPreconditionViolated.
LiftResult find_real_rooted_lift(const LiftProblem& problem);

}  // namespace isocrystal
