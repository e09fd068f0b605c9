#pragma once

#include <vector>

#include "isocrystal/polygon.hpp"
#include "isocrystal/rational.hpp"

namespace isocrystal {

/// Unramified EL datum: F/Qp unramified of degree d, V of F-dimension n, and a
/// minuscule cocharacter given by one integer a_i in [0, n] per embedding
/// (the signatures (a_i, n - a_i)).
class GLDatum {
 public:
  // Throws kInvalidDatum for d < 1, n < 1 or mu.size() != d, and kInvalidMu
  // for an a_i outside [0, n].
  GLDatum(int d, int n, std::vector<int> mu);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<int>& mu() const { return mu_; }
  long mu_sum() const;

  friend bool operator==(const GLDatum&, const GLDatum&) = default;

 private:
  int d_;
  int n_;
  std::vector<int> mu_;
};

/// A class of B(G), represented by its F-isocrystal slope datum.
struct GLClass {
  SlopeDatum slopes;
  NewtonPoint newton;
  long kappa = 0;

  friend bool operator==(const GLClass&, const GLClass&) = default;
};

// Fills in the Newton point and kappa from the slopes.
GLClass make_gl_class(SlopeDatum slopes, int d);

struct InnerFormFactor {
  int rank = 1;
  int base_degree = 1;
  // Brauer invariant of the central division algebra over F, in [0, 1).
  Rational invariant;

  friend bool operator==(const InnerFormFactor&, const InnerFormFactor&) = default;
};

/// Product of Res_{F/Qp} GL_rank(D_invariant) factors.
struct InnerFormDescription {
  std::vector<InnerFormFactor> factors;

  // One factor of rank one: the group of units of a division algebra.
  bool anisotropic_mod_center() const { return factors.size() == 1 && factors.front().rank == 1; }
  friend bool operator==(const InnerFormDescription&, const InnerFormDescription&) = default;
};

struct HodgeData {
  long mu1 = 0;
  NewtonPoint mu2;
};

HodgeData hodge_data(const GLDatum& datum);

long kappa(const SlopeDatum& slopes);
inline long kappa(const GLClass& c) { return kappa(c.slopes); }

// B(G, mu), in descending lexicographic order of Newton points.
std::vector<GLClass> enumerate_bg_mu(const GLDatum& datum);

GLClass basic_class(const GLDatum& datum);

// Dominance-minimal class of B(G, mu). Throws kNotUnique if there are several.
GLClass mu_ordinary(const GLDatum& datum);

InnerFormDescription j_group(const GLClass& c, int d);
// The Levi M_b: same blocks with rank m_i*h_i and trivial invariants.
InnerFormDescription levi_group(const GLClass& c, int d);

// Degree of the local reflex field: the minimal cyclic period of (a_i).
int reflex_degree(const GLDatum& datum);

// Dimension of the Rapoport-Zink deformation space: sum a_i (n - a_i).
long rz_dimension(const GLDatum& datum);

// Closure order on Newton strata, as cover relations between indices of
// enumerate_bg_mu(datum). The upper end of every edge is the more basic one.
std::vector<CoverEdge> stratification_poset(const GLDatum& datum);

}  // namespace isocrystal
