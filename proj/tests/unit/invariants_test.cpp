#include <gtest/gtest.h>

#include <random>

#include "goursat/codeword.hpp"
#include "goursat/error.hpp"
#include "goursat/invariants.hpp"
#include "goursat/proximity.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace goursat {
namespace {

GoursatWord gw(const char* s) { return GoursatWord(parse_word(s)); }

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

TEST(Backend, Beta) {
  EXPECT_EQ(beta_backend(gw("RRVTVV")), iv({1, 2, 3, 5, 8, 11, 19}));
  EXPECT_EQ(beta_backend(gw("R")), iv({1, 2}));
  EXPECT_EQ(beta_backend(gw("RRRRV")), iv({1, 2, 3, 5, 7, 9}));
  for (std::size_t k = 1; k <= 9; ++k) {
    IntVec expect;
    for (std::size_t j = 1; j <= k + 1; ++j) expect.emplace_back(static_cast<unsigned long>(j));
    EXPECT_EQ(beta_backend(GoursatWord(parse_word(std::string(k, 'R')))), expect);
  }
}

TEST(Backend, BetaFromSmallGrowthExample) {
  const IntVec beta = iv({1, 2, 3, 4, 5, 8, 11, 17, 26});
  std::size_t hits = 0;
  for (const auto& w : all_goursat_words(8))
    if (beta_backend(w) == beta) ++hits;
  EXPECT_GE(hits, 1u);
  const IntVec sg = sg_from_beta(beta);
  const IntVec prefix = iv({2, 3, 4, 5, 6, 6, 6, 7, 7, 7, 8, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 10});
  EXPECT_EQ(sg, prefix);
}

TEST(Backend, DerivedWithPrefixes) {
  const std::string& word = fixtures::kRecursionWord;
  for (std::size_t n = 2; n <= 12; ++n) {
    const GoursatWord prefix(parse_word(word.substr(0, n)));
    const IntVec expected(fixtures::kDerPrefixes[n - 2].begin(), fixtures::kDerPrefixes[n - 2].end());
    EXPECT_EQ(der_backend(prefix), expected) << prefix.str();
    EXPECT_EQ(derived_frontend(prefix), expected) << prefix.str();
  }
  EXPECT_EQ(der_backend(gw("RRRVV")), iv({1, 1, 2, 3, 3}));
  EXPECT_EQ(der_backend(gw("R")), iv({1}));
}

TEST(Backend, SecondDerived) {
  EXPECT_EQ(der2_backend(gw("RRVTVV")), iv({0, 1, 1, 0, 5}));
  EXPECT_EQ(der2_backend(gw("RR")), iv({0}));
  EXPECT_TRUE(der2_backend(gw("R")).empty());
  EXPECT_EQ(der2_backend(gw("RRV")), iv({0, 1}));
}

TEST(VerticalOrders, Conversions) {
  const IntVec vo = vo_from_mult(iv({1, 2, 3, 3, 8}), 6);
  EXPECT_EQ(vo, iv({0, 5, 0, 1, 1}));
  EXPECT_EQ(IntVec(vo.rbegin(), vo.rend() - 1), iv({1, 1, 0, 5}));
  EXPECT_EQ(vo_from_mult(iv({1, 1, 1}), 4), iv({0, 0, 0}));
  EXPECT_EQ(mult_from_vo(iv({0, 5, 0, 1, 1}), 6), iv({1, 2, 3, 3, 8}));
  EXPECT_EQ(error_of([] { vo_from_mult(iv({1, 3, 2}), 4); }), ErrorCode::NonMonotone);
  EXPECT_EQ(error_of([] { vo_from_mult(iv({2, 3}), 3); }), ErrorCode::InvalidInput);
  EXPECT_EQ(error_of([] { vo_from_mult(iv({1}), 4); }), ErrorCode::InvalidInput);
}

using fixtures::kETableRRRVV;
using fixtures::kETableRRVTVV;
using fixtures::kSgRRRVV;
using fixtures::kSgRRVTVV;

void expect_table(const ETable& t, const std::vector<std::vector<int>>& cells,
                  const std::vector<int>& sg) {
  ASSERT_EQ(t.rows.size(), cells.size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    EXPECT_EQ(t.rows[r].h, r + 2);
    ASSERT_EQ(t.rows[r].e.size(), cells[r].size()) << "row " << r + 2;
    for (std::size_t c = 0; c < cells[r].size(); ++c)
      EXPECT_EQ(t.rows[r].e[c], cells[r][c]) << "e(" << r + 2 << "," << c + 2 << ")";
    EXPECT_EQ(t.rows[r].sg, sg[r]) << "row " << r + 2;
  }
}

TEST(ETable, RRVTVV) {
  const ETable t = e_table(iv({0, 5, 0, 1, 1}), 6);
  expect_table(t, kETableRRVTVV, kSgRRVTVV);
  EXPECT_EQ(t.e(7, 7), 12);
  EXPECT_EQ(t.e(6, 6), 5);
  EXPECT_EQ(t.e(4, 4), 1);
  EXPECT_EQ(b_vector(t.vo, 6), iv({2, 3, 5, 8, 11, 19}));
  EXPECT_EQ(b_from_table(t), iv({2, 3, 5, 8, 11, 19}));
}

TEST(ETable, RRRVV) {
  const IntVec vo = vo_from_mult(multiplicity_vector(build_diagram(gw("RRRVV"))), 5);
  const ETable t = e_table(vo, 5);
  expect_table(t, kETableRRRVV, kSgRRRVV);
  EXPECT_EQ(t.e(5, 5), 3);
  EXPECT_EQ(t.rows.back().h, 11);
  EXPECT_EQ(b_vector(vo, 5), iv({2, 3, 5, 8, 11}));
}

TEST(ETable, ZeroVerticalOrders) {
  const std::size_t k = 5;
  const IntVec vo(k - 1, Integer(0));
  const ETable t = e_table(vo, k);
  for (std::size_t h = 2; h <= k + 1; ++h)
    for (std::size_t i = 2; i <= std::min(h, k + 1); ++i) EXPECT_EQ(t.e(h, i), 0);
  for (std::size_t i = 2; i <= 6; ++i)
    EXPECT_EQ(e_entry(vo, k, Integer(2), i), static_cast<unsigned long>(i - 2));
  EXPECT_EQ(b_vector(vo, k), iv({2, 3, 4, 5, 6}));
}

TEST(BetaSg, Conversions) {
  EXPECT_EQ(beta_from_b(iv({2, 3, 5, 8, 11, 19})), iv({1, 2, 3, 5, 8, 11, 19}));
  EXPECT_EQ(sg_from_beta(iv({1, 2})), iv({2, 3}));
  const IntVec sg = sg_from_beta(iv({1, 2, 3, 4, 5, 8, 11, 17, 26}));
  EXPECT_EQ(sg.size(), 26u);
  EXPECT_EQ(sg.back(), 10);
  EXPECT_EQ(sg[24], 9);
}

TEST(Puiseux, MultiplicitySequences) {
  using PC = PuiseuxCharacteristic;
  EXPECT_EQ(multseq_from_pc(PC{2, iv({9})}), iv({2, 2, 2, 2, 1}));
  EXPECT_EQ(multseq_from_pc(PC{6, iv({8, 9})}), iv({6, 2, 2, 2, 1}));
  EXPECT_EQ(multseq_from_pc(PC{8, iv({19})}), iv({8, 8, 3, 3, 2, 1}));
  EXPECT_EQ(multseq_from_pc(PC{1, {}}), iv({1}));
  EXPECT_EQ(pc_from_multseq(iv({2, 2, 2, 2, 1})), (PC{2, iv({9})}));
  EXPECT_EQ(pc_from_multseq(iv({1})), (PC{1, {}}));
  EXPECT_EQ(pc_from_multseq(iv({8, 8, 3, 3, 2, 1})), (PC{8, iv({19})}));
  EXPECT_EQ(pc_from_multseq(iv({6, 2, 2, 2, 1})), (PC{6, iv({8, 9})}));
  EXPECT_EQ((PC{6, iv({8, 9})}).str(), "[6;8,9]");
  EXPECT_EQ((PC{1, {}}).str(), "[1;]");
}

TEST(Puiseux, Errors) {
  using PC = PuiseuxCharacteristic;
  EXPECT_EQ(error_of([] { multseq_from_pc(PC{4, iv({6, 8})}); }), ErrorCode::InvalidPC);
  EXPECT_EQ(error_of([] { multseq_from_pc(PC{4, iv({3})}); }), ErrorCode::InvalidPC);
  EXPECT_EQ(error_of([] { multseq_from_pc(PC{2, {}}); }), ErrorCode::InvalidPC);
  EXPECT_EQ(error_of([] { pc_from_multseq(iv({3, 2, 2, 1})); }), ErrorCode::NotRealizable);
  EXPECT_EQ(error_of([] { pc_from_multseq(iv({4, 2, 1})); }), ErrorCode::NotRealizable);
  EXPECT_EQ(pc_from_multseq(iv({4, 3, 1})).str(), "[4;7]");
  EXPECT_EQ(error_of([] { pc_from_multseq(iv({2, 3, 1})); }), ErrorCode::NonMonotone);
  EXPECT_EQ(error_of([] { pc_from_multseq(iv({2, 2})); }), ErrorCode::InvalidInput);
}

TEST(Puiseux, RoundTripOnRandomCharacteristics) {
  std::mt19937_64 rng(20261015);
  for (int n = 0; n < 500; ++n) {
    const auto pc = random_pc(rng, 30, 200);
    const IntVec ms = multseq_from_pc(pc);
    EXPECT_EQ(pc_from_multseq(ms), pc) << pc.str();
  }
}

TEST(Puiseux, OfWords) {
  for (int tau = 1; tau <= 5; ++tau) {
    const RvtWord w = parse_word("RV" + std::string(static_cast<std::size_t>(tau), 'T'));
    const Integer m0 = tau + 2;
    const auto pc = puiseux_of_word(w, m0);
    EXPECT_EQ(pc, (PuiseuxCharacteristic{tau + 2, iv({tau + 3})})) << w.str();
  }
  EXPECT_EQ(puiseux_of_word(parse_word("RRRRV")).str(), "[2;9]");
  EXPECT_EQ(puiseux_of_word(parse_word("RVTRV"), Integer(6)).str(), "[6;8,9]");
  EXPECT_EQ(puiseux_of_word(parse_word("RRVTVV")).str(), "[8;19]");
  EXPECT_EQ(puiseux_of_word(parse_word("RRR")).str(), "[1;]");
  EXPECT_EQ(error_of([] { puiseux_of_word(parse_word("RVT")); }), ErrorCode::MissingM0);
}

TEST(Nonholonomy, KnownValues) {
  EXPECT_EQ(nonholonomy_degree(parse_word("RRVTVV")), 19);
  EXPECT_EQ(nonholonomy_degree(parse_word("RRVTVVR")), 20);
  for (std::size_t k = 1; k <= 8; ++k)
    EXPECT_EQ(nonholonomy_degree(parse_word(std::string(k, 'R'))), k + 1);
}

TEST(Bundle, RRVTVV) {
  const auto b = bundle(parse_word("RRVTVV"));
  EXPECT_EQ(b.beta, iv({1, 2, 3, 5, 8, 11, 19}));
  EXPECT_EQ(b.der, iv({1, 1, 2, 3, 3, 8}));
  EXPECT_EQ(b.der2, iv({0, 1, 1, 0, 5}));
  EXPECT_EQ(b.mult_vector, iv({1, 2, 3, 3, 8}));
  EXPECT_EQ(b.vo, iv({0, 5, 0, 1, 1}));
  EXPECT_EQ(b.b, iv({2, 3, 5, 8, 11, 19}));
  EXPECT_EQ(b.m0, 8);
  EXPECT_EQ(b.puiseux.str(), "[8;19]");
  EXPECT_EQ(b.nonholonomy_degree, 19);
  EXPECT_EQ(b.sg.size(), 19u);
  EXPECT_EQ(b.goursat_word, "RRVTVV");
}

TEST(Bundle, NonGoursatNeedsM0) {
  EXPECT_EQ(error_of([] { bundle(parse_word("RVTRV")); }), ErrorCode::MissingM0);
  const auto b = bundle(parse_word("RVTRV"), Integer(6));
  EXPECT_EQ(b.goursat_word, "RRRRV");
  EXPECT_EQ(b.vo.front(), 4);
  EXPECT_EQ(b.puiseux.str(), "[6;8,9]");
}

TEST(Bundle, AllGoursatWordsUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : all_goursat_words(n)) EXPECT_NO_THROW(bundle(w.word())) << w.str();
}

}  // namespace
}  // namespace goursat
