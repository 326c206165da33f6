#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "goursat/codeword.hpp"
#include "goursat/invariants.hpp"
#include "goursat/symcalc.hpp"

namespace goursat {

// Bundle with m0 taken from the focal orders at the canonical point when
// the word is not Goursat.
InvariantBundle bundle_with_oracle_m0(const RvtWord& word);

// Keys are sorted; integers beyond 64 bits are written as decimal strings.
nlohmann::json to_json(const InvariantBundle& b);
nlohmann::json to_json(const IntVec& v);
nlohmann::json to_json(const PuiseuxCharacteristic& pc);
InvariantBundle bundle_from_json(const nlohmann::json& j);

std::string bundle_text(const InvariantBundle& b);

// Rows h = 2..b_{k+1} with the SG column; rows indexed by a b_i carry '*'.
std::string etable_ascii(const InvariantBundle& b);

// Canonical chart point with coordinate names, values and focal orders.
std::string chart_text(const RvtWord& word);
nlohmann::json chart_json(const RvtWord& word);

std::string lift_chain_text(const GoursatWord& word);

struct VerifyOptions {
  std::optional<std::size_t> depth;  // defaults to the degree of nonholonomy + 2
  std::uint64_t seed = 1;
  bool symbolic = false;
};

// Largest word length accepted for symbolic verification.
inline constexpr std::size_t kSymbolicMaxLength = 7;

struct VerifyReport {
  std::string word;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string text() const;
  nlohmann::json json() const;
};

// Mismatches are reported in the checks. Budget problems raise
// StepBudgetExceeded or ResourceBudget.
VerifyReport verify_word(const RvtWord& word, const VerifyOptions& options);

}  // namespace goursat
