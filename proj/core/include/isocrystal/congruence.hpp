#pragma once

#include <optional>

#include "isocrystal/matrix.hpp"
#include "isocrystal/rational.hpp"

namespace isocrystal {

// p^k.
Integer ppow(const Integer& p, unsigned long k);

// p-adic valuation; nullopt for zero (infinite valuation).
std::optional<long> p_valuation(const Integer& a, const Integer& p);
std::optional<long> p_valuation(const Rational& a, const Integer& p);
// Minimum entry valuation; nullopt for the zero matrix.
std::optional<long> p_valuation(const Matrix& m, const Integer& p);

bool is_p_integral(const Rational& a, const Integer& p);
bool is_p_integral(const Matrix& m, const Integer& p);

// True iff p^k divides a - b. For rationals, a and b must be p-integral
// (denominator prime to p), otherwise kNonIntegerEntry is thrown.
bool congruent_mod_ppow(const Integer& a, const Integer& b, const Integer& p, unsigned long k);
bool congruent_mod_ppow(const Rational& a, const Rational& b, const Integer& p, unsigned long k);
// Entrywise; throws kShapeMismatch for different shapes.
bool congruent_mod_ppow(const Matrix& a, const Matrix& b, const Integer& p, unsigned long k);

// The integer r in [0, p^k) with r == a mod p^k, for p-integral a.
Integer residue_mod_ppow(const Rational& a, const Integer& p, unsigned long k);
// Representative in (-p^k/2, p^k/2].
Integer symmetric_residue_mod_ppow(const Rational& a, const Integer& p, unsigned long k);

}  // namespace isocrystal
