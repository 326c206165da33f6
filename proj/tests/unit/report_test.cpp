#include <gtest/gtest.h>

#include <functional>

#include "goursat/error.hpp"
#include "goursat/report.hpp"

namespace goursat {
namespace {

RvtWord w(const char* s) { return parse_word(s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

TEST(Json, FieldNamesAndSortedKeys) {
  const auto j = to_json(bundle(w("RRVTVV")));
  std::vector<std::string> keys;
  for (const auto& [key, _] : j.items()) keys.push_back(key);
  const std::vector<std::string> expect{"b",        "beta",  "der", "der2",
                                        "e_table",  "goursat_word", "k",   "m0",
                                        "mult_vector", "nonholonomy_degree", "puiseux", "sg",
                                        "vo",       "word"};
  EXPECT_EQ(keys, expect);
  EXPECT_EQ(j["beta"], nlohmann::json::parse("[1,2,3,5,8,11,19]"));
  EXPECT_EQ(j["puiseux"]["lambda0"], 8);
  EXPECT_EQ(j["puiseux"]["exponents"], nlohmann::json::parse("[19]"));
}

TEST(Json, RoundTripsEveryGoursatWordUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : all_goursat_words(n)) {
      const auto b = bundle(g.word());
      const auto back = bundle_from_json(nlohmann::json::parse(to_json(b).dump()));
      EXPECT_TRUE(back == b) << g.str();
    }
}

TEST(Json, RoundTripsNonGoursatWords) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& rvt : all_rvt_words(n)) {
      if (is_goursat(rvt)) continue;
      const auto b = bundle_with_oracle_m0(rvt);
      EXPECT_TRUE(bundle_from_json(to_json(b)) == b) << rvt.str();
    }
}

TEST(Json, WideIntegersBecomeStrings) {
  Integer big("123456789012345678901234567890");
  const auto j = to_json(IntVec{Integer(7), big, Integer(-3)});
  EXPECT_EQ(j.dump(), R"([7,"123456789012345678901234567890",-3])");
}

TEST(Json, RejectsMalformedBundles) {
  auto j = to_json(bundle(w("RRV")));
  j["beta"] = "oops";
  EXPECT_THROW(bundle_from_json(j), Error);
  EXPECT_THROW(bundle_from_json(nlohmann::json::object()), Error);
}

TEST(Text, BundleLabels) {
  const std::string t = bundle_text(bundle(w("R")));
  EXPECT_NE(t.find("beta                 (1,2)"), std::string::npos) << t;
  EXPECT_NE(t.find("puiseux              [1;]"), std::string::npos) << t;
}

TEST(Text, LiftChain) {
  EXPECT_EQ(lift_chain_text(GoursatWord(w("RRVTVV"))), "RRVTVV\nRRRVV\nRRVV\nRRV\nRR\nR\n");
}

TEST(Verify, PassesOnExamples) {
  VerifyOptions sym;
  sym.symbolic = true;
  for (const char* s : {"RRVTVV", "RRRVV", "RVTRV"}) {
    const auto r = verify_word(w(s), sym);
    EXPECT_TRUE(r.ok()) << r.text();
    EXPECT_EQ(r.json()["passed"], true);
  }
  EXPECT_TRUE(verify_word(w("RVTRV"), {}).ok());
}

TEST(Verify, Budgets) {
  VerifyOptions sym;
  sym.symbolic = true;
  EXPECT_EQ(code_of([&] { verify_word(w("RRRRRRRR"), sym); }), ErrorCode::ResourceBudget);
  sym.depth = 5;
  EXPECT_EQ(code_of([&] { verify_word(w("RRVTVV"), sym); }), ErrorCode::StepBudgetExceeded);
}

TEST(Chart, JsonCarriesFocalOrders) {
  const auto j = chart_json(w("RRVTVV"));
  EXPECT_EQ(j["chart"], "ooioii");
  EXPECT_EQ(j["vo"], nlohmann::json::parse("[0,5,0,1,1]"));
  EXPECT_EQ(j["m0"], 8);
  EXPECT_EQ(j["coordinates"][1]["alt"], "y");
  EXPECT_EQ(j["coordinates"][1]["order"], 19);
}

}  // namespace
}  // namespace goursat
