#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goursat/codeword.hpp"
#include "goursat/numeric.hpp"

namespace goursat {

// Vectors are stored in their natural index order: beta holds beta_2..beta_{k+2},
// der holds der_3..der_{k+2}, der2 holds der2_4..der2_{k+2}, vo holds
// VO_2..VO_k and b holds b_2..b_{k+1}.

IntVec beta_backend(const GoursatWord& word);
IntVec der_backend(const GoursatWord& word);
IntVec der2_backend(const GoursatWord& word);

// mv = (m_{k-1}, ..., m_1). Returns VO_2..VO_k with VO_2 = 0.
IntVec vo_from_mult(const IntVec& mv, std::size_t k);
// Inverse of vo_from_mult; VO_2 is ignored.
IntVec mult_from_vo(const IntVec& vo, std::size_t k);

struct ETableRow {
  Integer h;
  IntVec e;  // e_{h,2}..e_{h,min(h,k+1)}
  Integer sg;
};

struct ETable {
  std::size_t k = 0;
  IntVec vo;
  std::vector<ETableRow> rows;  // h = 2..b_{k+1}

  const Integer& e(std::size_t h, std::size_t i) const { return rows.at(h - 2).e.at(i - 2); }
};

// Cell limit for e_table and SG materialization; exceeding it raises
// ResourceBudget.
inline constexpr std::size_t kMaxCells = 2'000'000;

Integer e_entry(const IntVec& vo, std::size_t k, const Integer& h, std::size_t i);
ETable e_table(const IntVec& vo, std::size_t k);
IntVec b_vector(const IntVec& vo, std::size_t k);
// b_i as the first row in which column i vanishes.
IntVec b_from_table(const ETable& table);

IntVec beta_from_b(const IntVec& b);
IntVec sg_from_beta(const IntVec& beta);

struct PuiseuxCharacteristic {
  Integer lambda0;
  IntVec exponents;

  bool operator==(const PuiseuxCharacteristic&) const = default;
  std::string str() const;  // "[8;19]", "[1;]"
};

void validate_pc(const PuiseuxCharacteristic& pc);
IntVec multseq_from_pc(const PuiseuxCharacteristic& pc);
PuiseuxCharacteristic pc_from_multseq(const IntVec& ms);

// Full multiplicity sequence (m_0, m_1, ..., 1) through its first 1.
IntVec multseq_of_word(const RvtWord& word, const std::optional<Integer>& m0);
PuiseuxCharacteristic puiseux_of_word(const RvtWord& word,
                                      const std::optional<Integer>& m0 = std::nullopt);

Integer nonholonomy_degree(const RvtWord& word);

// Number of R's after the last critical symbol.
std::size_t trailing_regular(const RvtWord& word);

struct InvariantBundle {
  std::string word;
  std::string goursat_word;
  std::size_t k = 0;
  IntVec beta;
  IntVec der;
  IntVec der2;
  IntVec sg;
  IntVec mult_vector;
  Integer m0;
  IntVec vo;
  IntVec b;
  ETable etable;
  PuiseuxCharacteristic puiseux;
  Integer nonholonomy_degree;
};

bool operator==(const ETable& a, const ETable& b);
bool operator==(const InvariantBundle& a, const InvariantBundle& b);

// m0 is required for non-Goursat words (MissingM0 otherwise). Every field
// is computed by independent routes where available and any disagreement
// raises RouteMismatch.
InvariantBundle bundle(const RvtWord& word, const std::optional<Integer>& m0 = std::nullopt);

}  // namespace goursat
