#include "isocrystal/kottwitz_gl.hpp"

#include <algorithm>
#include <numeric>

#include "isocrystal/error.hpp"

namespace isocrystal {

GLDatum::GLDatum(int d, int n, std::vector<int> mu) : d_(d), n_(n), mu_(std::move(mu)) {
  if (d_ < 1) throw Error(ErrorCode::kInvalidDatum, "field degree d must be >= 1");
  if (n_ < 1) throw Error(ErrorCode::kInvalidDatum, "dimension n must be >= 1");
  if (static_cast<int>(mu_.size()) != d_)
    throw Error(ErrorCode::kInvalidDatum, "mu must list one a_i per embedding (expected " + std::to_string(d_) + ")");
  for (int a : mu_)
    if (a < 0 || a > n_) throw Error(ErrorCode::kInvalidMu, "a_i = " + std::to_string(a) + " outside [0, n]");
}

long GLDatum::mu_sum() const { return std::accumulate(mu_.begin(), mu_.end(), 0L); }

long kappa(const SlopeDatum& slopes) {
  long k = 0;
  for (const auto& b : slopes.blocks()) k += b.multiplicity * b.slope.numerator().get_si();
  return k;
}

GLClass make_gl_class(SlopeDatum slopes, int d) {
  NewtonPoint nu = newton_point(slopes, d);
  const long k = kappa(slopes);
  return {std::move(slopes), std::move(nu), k};
}

HodgeData hodge_data(const GLDatum& datum) {
  const std::size_t n = static_cast<std::size_t>(datum.n());
  std::vector<Rational> mu2(n);
  const Rational weight(Integer(1), Integer(datum.d()));
  for (int a : datum.mu())
    for (std::size_t j = 0; j < static_cast<std::size_t>(a); ++j) mu2[j] += weight;
  return {datum.mu_sum(), NewtonPoint(std::move(mu2))};
}

namespace {

void sort_descending(std::vector<GLClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const GLClass& a, const GLClass& b) { return a.newton > b.newton; });
}

}  // namespace

std::vector<GLClass> enumerate_bg_mu(const GLDatum& datum) {
  const HodgeData hodge = hodge_data(datum);
  // Dominance against the minuscule mu2 forces every F-slope into [0, d].
  const auto candidates = reduced_fractions(Rational(0), Rational(datum.d()), datum.n());
  std::vector<GLClass> out;
  for_each_slope_selection(candidates, datum.n(), [&](std::span<const SlopeBlock> blocks) {
    GLClass c = make_gl_class(SlopeDatum({blocks.begin(), blocks.end()}), datum.d());
    if (c.kappa == hodge.mu1 && dominance_leq(c.newton, hodge.mu2, true)) out.push_back(std::move(c));
  });
  sort_descending(out);
  return out;
}

GLClass basic_class(const GLDatum& datum) {
  const Rational slope(Integer(datum.mu_sum()), Integer(datum.n()));
  const int mult = datum.n() / static_cast<int>(slope.denominator().get_si());
  return make_gl_class(SlopeDatum({{slope, mult}}), datum.d());
}

GLClass mu_ordinary(const GLDatum& datum) {
  auto classes = enumerate_bg_mu(datum);
  // Minimal in the closure order means no other Newton point lies above it.
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < classes.size() && is_min; ++j)
      if (j != i && dominance_less(classes[i].newton, classes[j].newton, true)) is_min = false;
    if (is_min) minimal.push_back(i);
  }
  if (minimal.size() != 1) throw Error(ErrorCode::kNotUnique, "B(G, mu) has " + std::to_string(minimal.size()) + " minimal elements");
  return classes[minimal.front()];
}

InnerFormDescription j_group(const GLClass& c, int d) {
  InnerFormDescription j;
  for (const auto& b : c.slopes.blocks()) j.factors.push_back({b.multiplicity, d, fractional_part(b.slope)});
  return j;
}

InnerFormDescription levi_group(const GLClass& c, int d) {
  InnerFormDescription m;
  for (const auto& b : c.slopes.blocks()) m.factors.push_back({static_cast<int>(b.height()), d, Rational()});
  return m;
}

int reflex_degree(const GLDatum& datum) {
  const auto& a = datum.mu();
  const int d = datum.d();
  for (int t = 1; t < d; ++t) {
    if (d % t != 0) continue;
    bool fixed = true;
    for (int i = 0; i < d && fixed; ++i) fixed = a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>((i + t) % d)];
    if (fixed) return t;
  }
  return d;
}

long rz_dimension(const GLDatum& datum) {
  long dim = 0;
  for (int a : datum.mu()) dim += static_cast<long>(a) * (datum.n() - a);
  return dim;
}

std::vector<CoverEdge> stratification_poset(const GLDatum& datum) {
  const auto classes = enumerate_bg_mu(datum);
  std::vector<NewtonPoint> points;
  points.reserve(classes.size());
  for (const auto& c : classes) points.push_back(c.newton);
  return hasse_diagram(points);
}

}  // namespace isocrystal
