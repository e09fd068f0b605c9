#include "isocrystal/sturm.hpp"

#include "isocrystal/error.hpp"

namespace isocrystal {

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmCertificate sturm_certificate(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kPreconditionViolated, "Sturm sequence of the zero polynomial");
  SturmCertificate cert;
  const Polynomial g = poly_gcd(f, f.derivative());
  const Polynomial squarefree = poly_divmod(f, g).quotient.monic();
  cert.squarefree_degree = squarefree.degree();
  cert.chain.push_back(squarefree);
  if (squarefree.degree() > 0) cert.chain.push_back(squarefree.derivative());
  while (cert.chain.back().degree() > 0) {
    const auto& a = cert.chain[cert.chain.size() - 2];
    const auto& b = cert.chain.back();
    Polynomial r = -poly_divmod(a, b).remainder;
    if (r.is_zero()) break;
    cert.chain.push_back(std::move(r));
  }
  std::vector<int> at_neg;
  std::vector<int> at_pos;
  for (const auto& p : cert.chain) {
    const int lc = p.leading().sign();
    at_pos.push_back(lc);
    at_neg.push_back(p.degree() % 2 == 0 ? lc : -lc);
  }
  cert.sign_changes_at_neg_inf = sign_changes(at_neg);
  cert.sign_changes_at_pos_inf = sign_changes(at_pos);
  cert.distinct_real_roots = cert.sign_changes_at_neg_inf - cert.sign_changes_at_pos_inf;
  return cert;
}

int count_real_roots(const SturmCertificate& cert, const Rational& a, const Rational& b) {
  std::vector<int> sa;
  std::vector<int> sb;
  for (const auto& p : cert.chain) {
    sa.push_back(p.evaluate(a).sign());
    sb.push_back(p.evaluate(b).sign());
  }
  return sign_changes(sa) - sign_changes(sb);
}

bool all_roots_real(const Polynomial& f) {
  const auto cert = sturm_certificate(f);
  return cert.distinct_real_roots == cert.squarefree_degree;
}

}  // namespace isocrystal
