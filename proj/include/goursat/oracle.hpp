#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "goursat/codeword.hpp"
#include "goursat/invariants.hpp"
#include "goursat/numeric.hpp"
#include "goursat/poly.hpp"

namespace goursat {

// Result of the bracket-closure rank computation. sg[j - 1] is the rank at
// the point after j steps; the sequence ends at the first full rank.
struct SmallGrowthRun {
  IntVec sg;
  std::size_t generators = 0;  // independent jets kept over the whole run
};

// StepBudgetExceeded if the rank is still below k + 2 after max_steps.
SmallGrowthRun small_growth_bruteforce(const ChartPoint& p, std::size_t max_steps);

struct FocalOrders {
  Chart chart;
  IntVec order;       // o(c) per Coord
  IntVec diff_order;  // o(dc) per Coord

  // Order of a monomial in coordinates centered at the point.
  Integer of(const Monomial& m) const;
};

FocalOrders focal_orders(const ChartPoint& p);
// VO_2..VO_k at the point.
IntVec vo_at_point(const ChartPoint& p);
// min(o(r0), o(n0)).
Integer m0_at_point(const ChartPoint& p);

// Truncated power series in t: c[0] + c[1] t + ... + c[N-1] t^(N-1).
class Series {
 public:
  explicit Series(std::size_t n) : c_(n) {}
  std::size_t precision() const { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  // Index of the first nonzero coefficient, or precision() if none.
  std::size_t order() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator*(const Series& a, const Series& b);
  Series derivative() const;
  // Antiderivative with the given constant term; keeps the precision.
  Series integral(const Rational& constant) const;

 private:
  std::vector<Rational> c_;
};

// A focal curve through p: coordinate series, truncated at t^N.
struct JetCurve {
  std::vector<Series> coord;
};

// Random regular focal curve through p; the active coordinates get nonzero
// integer coefficients in [-9, 9].
JetCurve random_focal_jet(const ChartPoint& p, std::size_t n, std::uint64_t seed);
Series substitute(const Poly& a, const JetCurve& curve);

// Minimum vanishing order of a along `trials` random focal jets.
// TruncationTooSmall if every trial vanishes through t^(N-1).
Integer focal_order_generic_jet(const ChartPoint& p, const Poly& a, std::size_t trials,
                                std::size_t n, std::uint64_t seed);

// Multiplicity sequence through its first 1 by blowing up
// (t^lambda0, sum t^lambda_i). n = 0 picks 2 lambda_g + 2.
IntVec blowup_multseq(const PuiseuxCharacteristic& pc, std::size_t n = 0);

struct PathwayRow {
  std::size_t h;
  std::size_t g_index;  // the tracked term is coefficient * g_{g_index}
  Rational coefficient;
  Monomial monomial;    // in coordinates centered at the point
  Integer order;
  Integer expected;     // e_{h, g_index}
  char via;             // '0' or '1': bracketed with g_0 or g_1; '-' for g_3

  std::string term() const;  // "24*n4*n5^4*n6*g7"
};

struct Pathway {
  std::size_t i = 0;
  std::vector<PathwayRow> rows;  // h = 3..b_i
  bool final_is_tracked_term = false;  // the last section equals its term
};

// Sections f_{hi} built from g_3 by brackets with g_0 and g_1. Each row's
// tracked coefficient must have focal order e_{hi} and must occur in the
// actual g_i coefficient; OrderMismatch otherwise. IndexRange unless
// 3 <= i <= k + 1.
Pathway pathway_sections(const ChartPoint& p, std::size_t i);

}  // namespace goursat
