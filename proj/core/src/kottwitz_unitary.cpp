#include "isocrystal/kottwitz_unitary.hpp"

#include <algorithm>
#include <numeric>

#include "isocrystal/error.hpp"

namespace isocrystal {

std::string_view parity_name(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

UnitaryDatum::UnitaryDatum(int d, int n, std::vector<int> mu) : d_(d), n_(n), mu_(std::move(mu)) {
  if (d_ < 1) throw Error(ErrorCode::kInvalidDatum, "d must be >= 1");
  if (n_ < 1) throw Error(ErrorCode::kInvalidDatum, "n must be >= 1");
  if (static_cast<int>(mu_.size()) != d_)
    throw Error(ErrorCode::kInvalidDatum, "mu must list d = " + std::to_string(d_) + " integers");
  for (int a : mu_)
    if (a < 0 || a > n_) throw Error(ErrorCode::kInvalidMu, "a_i = " + std::to_string(a) + " outside [0, n]");
}

UnitaryDatum::UnitaryDatum(int d, int n, Parity parity, std::vector<int> mu) : UnitaryDatum(d, n, std::move(mu)) {
  if (parity != this->parity()) throw Error(ErrorCode::kInvalidDatum, "parity does not match n");
}

NewtonPoint comparison_vector(const UnitaryDatum& datum) {
  const int n = datum.n();
  const std::size_t half = static_cast<std::size_t>(n / 2);
  std::vector<Rational> acc(half);
  const Rational weight(Integer(1), Integer(2 * datum.d()));
  for (int a : datum.mu()) {
    for (std::size_t j = 0; j < half; ++j) {
      const int ones = (static_cast<int>(j) < a ? 1 : 0) + (static_cast<int>(j) < n - a ? 1 : 0);
      acc[j] += Rational(ones) * weight;
    }
  }
  return sort_dominant(std::move(acc));
}

namespace {

std::optional<int> kappa1_of(const UnitaryDatum& datum) {
  if (datum.parity() == Parity::kOdd) return std::nullopt;
  const long s = std::accumulate(datum.mu().begin(), datum.mu().end(), 0L);
  return static_cast<int>(s % 2);
}

UnitaryClass make_unitary_class(SlopeDatum slopes, const UnitaryDatum& datum) {
  NewtonPoint nu = newton_point(slopes, 2 * datum.d());
  return {std::move(slopes), std::move(nu), kappa1_of(datum), 1};
}

}  // namespace

std::vector<UnitaryClass> enumerate_bg_mu_unitary(const UnitaryDatum& datum) {
  const int d = datum.d();
  const int n = datum.n();
  const NewtonPoint bound = comparison_vector(datum);
  const std::size_t half = static_cast<std::size_t>(n / 2);

  // Slopes strictly above the centre d; each is paired with 2d - slope.
  auto upper = reduced_fractions(Rational(d), Rational(2 * d), n / 2);
  if (!upper.empty() && upper.back() == Rational(d)) upper.pop_back();

  std::vector<UnitaryClass> out;
  for (long upper_height = 0; 2 * upper_height <= n; ++upper_height) {
    const int centre = n - static_cast<int>(2 * upper_height);
    for_each_slope_selection(upper, upper_height, [&](std::span<const SlopeBlock> blocks) {
      std::vector<SlopeBlock> all(blocks.begin(), blocks.end());
      if (centre > 0) all.push_back({Rational(d), centre});
      for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) all.push_back({Rational(2 * d) - it->slope, it->multiplicity});
      UnitaryClass c = make_unitary_class(SlopeDatum(std::move(all)), datum);
      if (dominance_leq(half_vector(c.newton, half), bound, false)) out.push_back(std::move(c));
    });
  }
  std::sort(out.begin(), out.end(), [](const UnitaryClass& a, const UnitaryClass& b) { return a.newton > b.newton; });
  return out;
}

UnitaryBasic basic_class_unitary(const UnitaryDatum& datum) {
  UnitaryClass basic = make_unitary_class(SlopeDatum({{Rational(datum.d()), datum.n()}}), datum);
  UnitaryInnerForm jb;
  if (datum.parity() == Parity::kEven && *basic.kappa1 == 1) {
    jb = {false, "G'"};
  } else {
    jb = {true, "G"};
  }
  return {std::move(basic), std::move(jb)};
}

long rz_dimension_unitary(const UnitaryDatum& datum) {
  long dim = 0;
  for (int a : datum.mu()) dim += static_cast<long>(a) * (datum.n() - a);
  return dim;
}

std::vector<CoverEdge> stratification_poset_unitary(const UnitaryDatum& datum) {
  const auto classes = enumerate_bg_mu_unitary(datum);
  std::vector<NewtonPoint> points;
  points.reserve(classes.size());
  for (const auto& c : classes) points.push_back(c.newton);
  return hasse_diagram(points);
}

}  // namespace isocrystal
