#pragma once

#include <vector>

#include "isocrystal/polynomial.hpp"

namespace isocrystal {

/// Sturm chain of the squarefree part of f over Q, with the sign-change counts
/// at -inf and +inf. Their difference is the number of distinct real roots.
struct SturmCertificate {
  std::vector<Polynomial> chain;
  int sign_changes_at_neg_inf = 0;
  int sign_changes_at_pos_inf = 0;
  int distinct_real_roots = 0;
  int squarefree_degree = 0;
};

// Throws kPreconditionViolated for f == 0.
SturmCertificate sturm_certificate(const Polynomial& f);

// Distinct real roots in the half-open interval (a, b].
int count_real_roots(const SturmCertificate& cert, const Rational& a, const Rational& b);

// True iff every complex root of f is real.
bool all_roots_real(const Polynomial& f);

}  // namespace isocrystal
