#include "isocrystal/polygon.hpp"

#include <algorithm>
#include <functional>

#include "isocrystal/error.hpp"

namespace isocrystal {

SlopeDatum::SlopeDatum(std::vector<SlopeBlock> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].multiplicity < 1) throw Error(ErrorCode::kInvalidSlopeDatum, "slope multiplicity must be >= 1");
    if (i > 0 && !(blocks_[i].slope < blocks_[i - 1].slope))
      throw Error(ErrorCode::kInvalidSlopeDatum, "slopes must be strictly decreasing");
  }
}

long SlopeDatum::total_height() const {
  long h = 0;
  for (const auto& b : blocks_) h += b.height();
  return h;
}

NewtonPoint::NewtonPoint(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1] < entries_[i]) throw Error(ErrorCode::kNotDominant, "Newton point entries must weakly decrease");
}

Rational NewtonPoint::sum() const {
  Rational s;
  for (const auto& x : entries_) s += x;
  return s;
}

std::strong_ordering operator<=>(const NewtonPoint& a, const NewtonPoint& b) {
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                b.entries_.end());
}

NewtonPoint newton_point(const SlopeDatum& slopes, int field_degree) {
  if (field_degree < 1) throw Error(ErrorCode::kInvalidDatum, "field degree must be positive");
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(slopes.total_height()));
  const Rational deg(field_degree);
  for (const auto& b : slopes.blocks()) entries.insert(entries.end(), static_cast<std::size_t>(b.height()), b.slope / deg);
  return NewtonPoint(std::move(entries));
}

bool dominance_leq(const NewtonPoint& nu, const NewtonPoint& mu, bool require_equal_endpoint) {
  if (nu.size() != mu.size()) throw Error(ErrorCode::kLengthMismatch, "dominance comparison of different lengths");
  Rational snu;
  Rational smu;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    snu += nu[k];
    smu += mu[k];
    if (snu > smu) return false;
  }
  return !require_equal_endpoint || snu == smu;
}

bool dominance_less(const NewtonPoint& nu, const NewtonPoint& mu, bool require_equal_endpoint) {
  return dominance_leq(nu, mu, require_equal_endpoint) && !(nu == mu);
}

NewtonPoint sort_dominant(std::vector<Rational> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return NewtonPoint(std::move(v));
}

NewtonPoint half_vector(const NewtonPoint& nu, std::size_t k) {
  if (k > nu.size()) throw Error(ErrorCode::kIndexOutOfRange, "prefix longer than the Newton point");
  return NewtonPoint(std::vector<Rational>(nu.entries().begin(), nu.entries().begin() + static_cast<std::ptrdiff_t>(k)));
}

std::vector<Rational> reduced_fractions(const Rational& lo, const Rational& hi, int max_denominator) {
  std::vector<Rational> out;
  for (int h = 1; h <= max_denominator; ++h) {
    const Integer first = isocrystal::floor(lo * Rational(h));
    const Integer last = isocrystal::floor(hi * Rational(h));
    for (Integer a = first; a <= last; ++a) {
      if (gcd(a, Integer(h)) != 1) continue;
      Rational x(a, Integer(h));
      if (x >= lo && x <= hi) out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

void descend(std::span<const Rational> candidates, std::size_t from, long remaining, std::vector<SlopeBlock>& prefix,
             const std::function<void(std::span<const SlopeBlock>)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (std::size_t i = from; i < candidates.size(); ++i) {
    const long h = candidates[i].denominator().get_si();
    for (long m = 1; m * h <= remaining; ++m) {
      prefix.push_back({candidates[i], static_cast<int>(m)});
      descend(candidates, i + 1, remaining - m * h, prefix, visit);
      prefix.pop_back();
    }
  }
}

}  // namespace

void for_each_slope_selection(std::span<const Rational> candidates, long total_height,
                              const std::function<void(std::span<const SlopeBlock>)>& visit) {
  std::vector<SlopeBlock> prefix;
  descend(candidates, 0, total_height, prefix, visit);
}

std::vector<CoverEdge> hasse_diagram(std::span<const NewtonPoint> points) {
  const std::size_t n = points.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));  // less[i][j]: points[i] < points[j]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) less[i][j] = dominance_less(points[i], points[j], true);
  std::vector<CoverEdge> edges;
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t up = 0; up < n; ++up) {
      if (!less[lo][up]) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < n && covered; ++mid)
        if (less[lo][mid] && less[mid][up]) covered = false;
      if (covered) edges.push_back({lo, up});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace isocrystal
