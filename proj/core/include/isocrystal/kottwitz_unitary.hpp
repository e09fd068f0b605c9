#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isocrystal/polygon.hpp"

namespace isocrystal {

enum class Parity { kEven, kOdd };

std::string_view parity_name(Parity p);

/// Unramified unitary similitude datum in n variables: F/F0 unramified
/// quadratic with [F0:Qp] = d, and signatures (a_i, n - a_i) for 0 <= i < d.
class UnitaryDatum {
 public:
  // Parity is derived from n. Throws kInvalidDatum / kInvalidMu.
  UnitaryDatum(int d, int n, std::vector<int> mu);
  // Same, and throws kInvalidDatum when `parity` disagrees with n.
  UnitaryDatum(int d, int n, Parity parity, std::vector<int> mu);

  int d() const { return d_; }
  int n() const { return n_; }
  Parity parity() const { return n_ % 2 == 0 ? Parity::kEven : Parity::kOdd; }
  const std::vector<int>& mu() const { return mu_; }

  friend bool operator==(const UnitaryDatum&, const UnitaryDatum&) = default;

 private:
  int d_;
  int n_;
  std::vector<int> mu_;
};

/// A class b with v_p(c(b)) = 1. The slopes are those of the F-isocrystal
/// (N(0), Phi^{2d}), in [0, 2d] and symmetric under slope -> 2d - slope.
struct UnitaryClass {
  SlopeDatum slopes;
  NewtonPoint newton;
  // First component of kappa in the even case; absent in the odd case.
  std::optional<int> kappa1;
  int similitude_valuation = 1;

  friend bool operator==(const UnitaryClass&, const UnitaryClass&) = default;
};

struct UnitaryInnerForm {
  bool quasi_split = true;
  // "G" for the quasi-split group itself, "G'" for the non quasi-split inner form.
  std::string name;
};

struct UnitaryBasic {
  UnitaryClass basic;
  UnitaryInnerForm jb;
};

// (1/d) sum_i t_i, where t_i is the first floor(n/2) coordinates of the
// average of (1^{a_i}, 0^{n-a_i}) and (1^{n-a_i}, 0^{a_i}).
NewtonPoint comparison_vector(const UnitaryDatum& datum);

// B(G, mu), descending lexicographic by Newton point.
std::vector<UnitaryClass> enumerate_bg_mu_unitary(const UnitaryDatum& datum);

UnitaryBasic basic_class_unitary(const UnitaryDatum& datum);

// sum_{0 <= i < d} a_i (n - a_i).
long rz_dimension_unitary(const UnitaryDatum& datum);

// Indices refer to enumerate_bg_mu_unitary(datum).
std::vector<CoverEdge> stratification_poset_unitary(const UnitaryDatum& datum);

}  // namespace isocrystal
