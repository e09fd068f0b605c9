#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "isocrystal/rational.hpp"

namespace isocrystal {

// One isoclinic part of an isocrystal: slope d/h (reduced) with multiplicity
// m, contributing height m*h.
struct SlopeBlock {
  Rational slope;
  int multiplicity = 1;

  long height() const { return static_cast<long>(multiplicity) * slope.denominator().get_si(); }
  friend bool operator==(const SlopeBlock&, const SlopeBlock&) = default;
};

/// Slopes with multiplicities; complete invariant of an isocrystal class.
/// Blocks are kept in strictly decreasing slope order.
class SlopeDatum {
 public:
  SlopeDatum() = default;
  // Throws kInvalidSlopeDatum unless slopes strictly decrease and every
  // multiplicity is >= 1.
  explicit SlopeDatum(std::vector<SlopeBlock> blocks);

  std::span<const SlopeBlock> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  long total_height() const;
  bool is_basic() const { return blocks_.size() == 1; }

  friend bool operator==(const SlopeDatum&, const SlopeDatum&) = default;

 private:
  std::vector<SlopeBlock> blocks_;
};

/// Weakly decreasing rational vector (a point of the dominant chamber).
class NewtonPoint {
 public:
  NewtonPoint() = default;
  // Throws kNotDominant when entries increase somewhere.
  explicit NewtonPoint(std::vector<Rational> entries);

  std::span<const Rational> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational sum() const;

  friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
  // Lexicographic on entries.
  friend std::strong_ordering operator<=>(const NewtonPoint& a, const NewtonPoint& b);

 private:
  std::vector<Rational> entries_;
};

// Each slope divided by field_degree, repeated multiplicity*height times.
NewtonPoint newton_point(const SlopeDatum& slopes, int field_degree);

// Prefix-sum order: every prefix sum of nu is <= that of mu; optionally the
// totals must agree. Throws kLengthMismatch.
bool dominance_leq(const NewtonPoint& nu, const NewtonPoint& mu, bool require_equal_endpoint);
// leq and not equal.
bool dominance_less(const NewtonPoint& nu, const NewtonPoint& mu, bool require_equal_endpoint);

NewtonPoint sort_dominant(std::vector<Rational> v);

// First k entries. Throws kIndexOutOfRange when k > size.
NewtonPoint half_vector(const NewtonPoint& nu, std::size_t k);

// All reduced fractions a/h with 1 <= h <= max_denominator and lo <= a/h <= hi,
// strictly decreasing.
std::vector<Rational> reduced_fractions(const Rational& lo, const Rational& hi, int max_denominator);

// Calls visit once for every strictly decreasing choice of slopes from
// `candidates` (themselves strictly decreasing) with multiplicities m_i >= 1
// such that sum m_i * h_i == total_height.
void for_each_slope_selection(std::span<const Rational> candidates, long total_height,
                              const std::function<void(std::span<const SlopeBlock>)>& visit);

// Cover relation of a finite poset: `upper` covers `lower`.
struct CoverEdge {
  std::size_t upper;
  std::size_t lower;
  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

// Hasse diagram of the closure order on strata, as indices into `points`,
// sorted. A stratum lies in the closure of another when its Newton point is
// strictly dominated by (lies below) the other's, so the basic point is the
// top element and `upper` is always the point with the smaller prefix sums.
std::vector<CoverEdge> hasse_diagram(std::span<const NewtonPoint> points);

}  // namespace isocrystal
