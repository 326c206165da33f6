#include <gtest/gtest.h>

#include "goursat/codeword.hpp"
#include "goursat/error.hpp"

namespace goursat {
namespace {

ErrorCode parse_error(const std::string& text, std::size_t* pos = nullptr) {
  try {
    parse_word(text);
  } catch (const Error& e) {
    if (pos) *pos = e.position();
    return e.code();
  }
  ADD_FAILURE() << text << " parsed";
  return ErrorCode::InvalidInput;
}

TEST(ParseWord, AcceptsValidWords) {
  EXPECT_EQ(parse_word("RRVTVV").str(), "RRVTVV");
  EXPECT_EQ(parse_word("rrvtvv").str(), "RRVTVV");
  EXPECT_EQ(parse_word("R").length(), 1u);
  EXPECT_EQ(parse_word("RRVTVV").at(4), Symbol::T);
}

TEST(ParseWord, ReportsErrorsWithPositions) {
  std::size_t pos = 0;
  EXPECT_EQ(parse_error(""), ErrorCode::EmptyWord);
  EXPECT_EQ(parse_error("RTV", &pos), ErrorCode::OrphanT);
  EXPECT_EQ(pos, 2u);
  EXPECT_EQ(parse_error("RTX", &pos), ErrorCode::BadSymbol);
  EXPECT_EQ(pos, 3u);
  EXPECT_EQ(parse_error("VRR", &pos), ErrorCode::LeadingCritical);
  EXPECT_EQ(pos, 1u);
  EXPECT_EQ(parse_error("RR RR", &pos), ErrorCode::BadSymbol);
  EXPECT_EQ(pos, 3u);
  EXPECT_EQ(parse_error("RRRT", &pos), ErrorCode::OrphanT);
  EXPECT_EQ(pos, 4u);
}

TEST(IsGoursat, SecondSymbolDecides) {
  EXPECT_TRUE(is_goursat(parse_word("RRVTVV")));
  EXPECT_FALSE(is_goursat(parse_word("RVVVRVT")));
  EXPECT_TRUE(is_goursat(parse_word("R")));
  EXPECT_THROW(GoursatWord(parse_word("RV")), Error);
}

TEST(Lift, KnownValues) {
  auto g = [](const char* s) { return GoursatWord(parse_word(s)); };
  EXPECT_EQ(lift(g("RRVTVVR")).str(), "RRRVVR");
  EXPECT_EQ(lift(g("RRVTVV")).str(), "RRRVV");
  EXPECT_EQ(lift(g("RR")).str(), "R");
  EXPECT_EQ(lift(g("RRVTTR")).str(), "RRRRR");
  try {
    lift(g("R"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooShort);
  }
}

TEST(Lift, ReachesRInKMinusOneSteps) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : all_goursat_words(n)) {
      GoursatWord cur = w;
      for (std::size_t step = 1; step < n; ++step) {
        GoursatWord next = lift(cur);
        ASSERT_EQ(next.length(), cur.length() - 1);
        cur = next;
      }
      EXPECT_EQ(cur.str(), "R");
    }
  }
}

TEST(GoursatNormalize, KnownValues) {
  EXPECT_EQ(goursat_normalize(parse_word("RVTRV")).str(), "RRRRV");
  EXPECT_EQ(goursat_normalize(parse_word("RRVTVV")).str(), "RRVTVV");
  EXPECT_EQ(goursat_normalize(parse_word("RVV")).str(), "RRV");
  EXPECT_EQ(goursat_normalize(parse_word("RVVVRVT")).str(), "RRVVRVT");
}

TEST(GoursatNormalize, IdempotentAndIdentityOnGoursat) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& w : all_rvt_words(n)) {
      const GoursatWord once = goursat_normalize(w);
      EXPECT_EQ(goursat_normalize(once.word()), once);
      if (is_goursat(w)) EXPECT_EQ(once.word(), w);
    }
  }
}

TEST(Enumeration, MatchesFilteredBruteForce) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t total = 1, valid = 0, goursat = 0;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::string s;
      for (std::size_t c = code, i = 0; i < n; ++i, c /= 3) s += "RVT"[c % 3];
      try {
        const RvtWord w = parse_word(s);
        ++valid;
        if (is_goursat(w)) ++goursat;
      } catch (const Error&) {
      }
    }
    EXPECT_EQ(all_rvt_words(n).size(), valid) << n;
    EXPECT_EQ(all_goursat_words(n).size(), goursat) << n;
  }
}

TEST(Chart, BookkeepingAndNames) {
  const Chart c = Chart::parse("ooioii");
  EXPECT_EQ(c.name(), "ooioii");
  EXPECT_EQ(c.inverted_positions(), (std::vector<std::size_t>{3, 5, 6}));
  // x, y; y', y'', x', x'', y(3), x(3)
  const char* names[] = {"x", "y", "y'", "y''", "x'", "x''", "y(3)", "x(3)"};
  for (Coord i = 0; i < c.num_coords(); ++i) EXPECT_EQ(c.alt_name(i), names[i]) << i;
  EXPECT_EQ(Chart::coord_name(kR0), "r0");
  EXPECT_EQ(Chart::coord_name(n_coord(0)), "n0");
  EXPECT_EQ(Chart::coord_name(n_coord(6)), "n6");
  // Level 3 is inverted: r3 = n2, d3 = r2 = r0.
  EXPECT_EQ(c.retained(3), n_coord(2));
  EXPECT_EQ(c.deactivated(3), kR0);
  EXPECT_EQ(c.retained(2), kR0);
  EXPECT_EQ(c.deactivated(2), n_coord(1));
}

TEST(CanonicalChartPoint, KnownValues) {
  const ChartPoint a = canonical_chart_point(parse_word("RRVTVV"));
  EXPECT_EQ(a.chart.name(), "ooioii");
  for (const auto& v : a.coords) EXPECT_EQ(v, 0);

  const ChartPoint b = canonical_chart_point(parse_word("RRVRVV"));
  EXPECT_EQ(b.chart.name(), "ooioii");
  const int expect[] = {0, 0, 0, 0, 0, 1, 0, 0};
  for (std::size_t i = 0; i < b.coords.size(); ++i) EXPECT_EQ(b.coords[i], expect[i]) << i;

  const ChartPoint c = canonical_chart_point(parse_word("RRR"));
  EXPECT_EQ(c.chart.name(), "ooo");
}

TEST(CanonicalChartPoint, RoundTripsExhaustively) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : all_rvt_words(n)) {
      const ChartPoint p = canonical_chart_point(w);
      EXPECT_EQ(rvt_of_chart_point(p), w) << w.str();
      std::vector<std::size_t> vs;
      for (std::size_t j = 1; j <= n; ++j)
        if (w.at(j) == Symbol::V) vs.push_back(j);
      EXPECT_EQ(p.chart.inverted_positions(), vs);
    }
  }
}

TEST(RvtOfChartPoint, UnsupportedConfigurations) {
  ChartPoint p{Chart::parse("ooi"), std::vector<Rational>(5, Rational(0))};
  p.coords[n_coord(3)] = 2;
  try {
    rvt_of_chart_point(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unsupported);
  }
  ChartPoint q{Chart::parse("o"), std::vector<Rational>(3, Rational(0))};
  EXPECT_EQ(rvt_of_chart_point(q).str(), "R");
}

}  // namespace
}  // namespace goursat
