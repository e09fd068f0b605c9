#include "isocrystal/lattice_isometry.hpp"

#include "isocrystal/congruence.hpp"
#include "isocrystal/error.hpp"

namespace isocrystal {

namespace {

bool is_alternating(const Matrix& g) {
  if (!g.is_square()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!g(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (g(i, j) != -g(j, i)) return false;
  }
  return true;
}

Matrix inverse_form(const Matrix& g) {
  try {
    return mat_inverse(g);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSingularMatrix) throw Error(ErrorCode::kSingularForm, "Gram matrix is degenerate");
    throw;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kPreconditionViolated, what);
}

}  // namespace

SymplecticLatticePair::SymplecticLatticePair(Integer p, int duality_defect, int level, Matrix g1, Matrix g2)
    : p_(std::move(p)), duality_defect_(duality_defect), level_(level), g1_(std::move(g1)), g2_(std::move(g2)) {
  require(p_ >= 2 && mpz_probab_prime_p(p_.get_mpz_t(), 30) != 0, "p must be prime");
  require(duality_defect_ >= 0, "duality defect N must be >= 0");
  require(level_ >= 1, "congruence level n must be >= 1");
  require(g1_.is_square() && g2_.is_square() && g1_.rows() == g2_.rows(), "Gram matrices must be square of equal size");
  require(g1_.rows() > 0 && g1_.rows() % 2 == 0, "rank must be even and positive");
  require(is_alternating(g1_) && is_alternating(g2_), "Gram matrices must be antisymmetric");
  require(is_p_integral(g1_, p_) && is_p_integral(g2_, p_), "Gram matrices must be p-integral");
  g1_inverse_ = inverse_form(g1_);
  const Matrix g2_inverse = inverse_form(g2_);
  const Rational scale(ppow(p_, static_cast<unsigned long>(duality_defect_)));
  require(is_p_integral(scale * g1_inverse_, p_) && is_p_integral(scale * g2_inverse, p_),
          "duality defect exceeded: p^N G^{-1} is not p-integral");
  require(congruent_mod_ppow(g1_, g2_, p_, static_cast<unsigned long>(level_)), "forms are not congruent mod p^n");
  require(level_ >= 4 * duality_defect_ + 3, "congruence level must satisfy n >= 4N + 3");
}

Matrix adjoint(const Matrix& v, const Matrix& g1) {
  if (!v.is_square() || v.rows() != g1.rows()) throw Error(ErrorCode::kShapeMismatch, "adjoint: size mismatch");
  return inverse_form(g1) * v.transpose() * g1;
}

Matrix transporter(const SymplecticLatticePair& pair) {
  const Matrix u = pair.g1_inverse() * pair.g2();
  const Matrix adj = pair.g1_inverse() * u.transpose() * pair.g1();
  if (!(adj == u)) throw Error(ErrorCode::kNonIntegralStep, "transporter is not self-adjoint");
  const auto v = p_valuation(u - Matrix::identity(pair.rank()), pair.p());
  if (v && *v < pair.level() - pair.duality_defect())
    throw Error(ErrorCode::kNonIntegralStep, "transporter is not congruent to Id mod p^{n-N}");
  return u;
}

IsometryStep improve_step(const SymplecticLatticePair& pair) {
  const std::size_t rank = pair.rank();
  const Matrix id = Matrix::identity(rank);
  const auto m = static_cast<unsigned long>(pair.level() / 2 + 1);
  const Rational pm(ppow(pair.p(), m));

  const Matrix u = transporter(pair);
  const Matrix w = (Rational(1) / pm) * (u - id);
  const Matrix w_adj = pair.g1_inverse() * w.transpose() * pair.g1();
  // The displayed alpha = (w + w*)/2 solves alpha* + alpha = 2w; the
  // correction that cancels w to first order is -(w + w*)/4.
  const Matrix alpha = Rational(Integer(-1), Integer(4)) * (w + w_adj);
  const Matrix g = id + pm * alpha;

  const Integer& p = pair.p();
  if (!is_p_integral(g, p)) throw Error(ErrorCode::kNonIntegralStep, "step automorphism is not p-integral");
  const auto det_val = p_valuation(determinant(g), p);
  if (!det_val || *det_val != 0) throw Error(ErrorCode::kNonIntegralStep, "step automorphism is not invertible over Z_p");

  const Matrix g2_next = g.transpose() * pair.g2() * g;
  if (!congruent_mod_ppow(g2_next, pair.g1(), p, static_cast<unsigned long>(pair.level() + 1)))
    throw Error(ErrorCode::kNonIntegralStep, "step did not raise the congruence level");
  return {g, SymplecticLatticePair(p, pair.duality_defect(), pair.level() + 1, pair.g1(), g2_next)};
}

namespace {

Matrix reduce_entries(const Matrix& m, const Integer& p, unsigned long k) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(symmetric_residue_mod_ppow(m(i, j), p, k));
  return out;
}

// Reduction that keeps the matrix exactly antisymmetric.
Matrix reduce_alternating(const Matrix& m, const Integer& p, unsigned long k) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      out(i, j) = Rational(symmetric_residue_mod_ppow(m(i, j), p, k));
      out(j, i) = -out(i, j);
    }
  }
  return out;
}

}  // namespace

bool verify_isometry(const Matrix& g, const Matrix& g1, const Matrix& g2, const Integer& p, int precision) {
  if (!is_p_integral(g, p)) return false;
  return congruent_mod_ppow(g.transpose() * g2 * g, g1, p, static_cast<unsigned long>(precision));
}

IsometrySolution solve_isometry(const SymplecticLatticePair& pair, int target_precision) {
  if (target_precision < pair.level()) throw Error(ErrorCode::kPreconditionViolated, "target precision K must be >= n");
  const Integer& p = pair.p();
  const auto working = static_cast<unsigned long>(target_precision + pair.duality_defect() + 1);

  IsometrySolution sol;
  sol.g = Matrix::identity(pair.rank());
  SymplecticLatticePair current = pair;
  while (current.level() < target_precision) {
    IsometryStep step = improve_step(current);
    sol.g = reduce_entries(sol.g * step.g, p, working);
    const Matrix g2_now = reduce_alternating(sol.g.transpose() * pair.g2() * sol.g, p, working);
    current = SymplecticLatticePair(p, pair.duality_defect(), step.next.level(), pair.g1(), g2_now);
    ++sol.steps;
  }
  sol.level = current.level();

  const auto base = static_cast<unsigned long>(pair.level() / 2 + 1);
  sol.verified = verify_isometry(sol.g, pair.g1(), pair.g2(), p, target_precision) &&
                 congruent_mod_ppow(sol.g, Matrix::identity(pair.rank()), p, base);
  return sol;
}

}  // namespace isocrystal
