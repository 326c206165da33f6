#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goursat/numeric.hpp"

namespace goursat {

enum class Symbol : char { R = 'R', V = 'V', T = 'T' };

inline bool is_critical(Symbol s) { return s != Symbol::R; }

// A validated word over {R, V, T}. Levels are 1-based: at(1) is the first
// symbol, at(length()) the last.
class RvtWord {
 public:
  explicit RvtWord(std::vector<Symbol> symbols);

  std::size_t length() const { return symbols_.size(); }
  Symbol at(std::size_t level) const { return symbols_.at(level - 1); }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::string str() const;

  bool operator==(const RvtWord&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

// An RVT word whose second symbol (if any) is R.
class GoursatWord {
 public:
  explicit GoursatWord(RvtWord word);

  const RvtWord& word() const { return word_; }
  std::size_t length() const { return word_.length(); }
  Symbol at(std::size_t level) const { return word_.at(level); }
  std::string str() const { return word_.str(); }

  bool operator==(const GoursatWord&) const = default;

 private:
  RvtWord word_;
};

RvtWord parse_word(std::string_view text);
bool is_goursat(const RvtWord& word);

// Drops the leading R and regularizes a leading critical block.
GoursatWord lift(const GoursatWord& word);

// Replaces a critical symbol at level 2 and the T-run following it by R's.
GoursatWord goursat_normalize(const RvtWord& word);

// Every Goursat word of the given length, in lexicographic R < V < T order.
std::vector<GoursatWord> all_goursat_words(std::size_t length);
// Every RVT word of the given length, same order.
std::vector<RvtWord> all_rvt_words(std::size_t length);

// Coordinates on a standard chart: index 0 is r0, index 1 is n0 and index
// j + 1 is n_j.
using Coord = std::size_t;
inline constexpr Coord kR0 = 0;
constexpr Coord n_coord(std::size_t level) { return level + 1; }

enum class Choice : char { Ordinary = 'o', Inverted = 'i' };

class Chart {
 public:
  explicit Chart(std::vector<Choice> choices);
  static Chart parse(std::string_view name);

  std::size_t k() const { return choices_.size(); }
  std::size_t num_coords() const { return choices_.size() + 2; }
  Choice choice(std::size_t level) const { return choices_.at(level - 1); }
  bool inverted(std::size_t level) const {
    return level >= 1 && level <= k() && choice(level) == Choice::Inverted;
  }
  std::vector<std::size_t> inverted_positions() const;

  // r_j for 0 <= j <= k and d_j for 1 <= j <= k.
  Coord retained(std::size_t level) const { return retained_.at(level); }
  Coord deactivated(std::size_t level) const { return deactivated_.at(level); }

  std::string name() const;
  static std::string coord_name(Coord c);
  // x, y, y', y'', x', ..., y(3) naming of the same coordinate.
  const std::string& alt_name(Coord c) const { return alt_names_.at(c); }

  bool operator==(const Chart& other) const { return choices_ == other.choices_; }

 private:
  std::vector<Choice> choices_;
  std::vector<Coord> retained_;
  std::vector<Coord> deactivated_;
  std::vector<std::string> alt_names_;
};

struct ChartPoint {
  Chart chart;
  std::vector<Rational> coords;  // one value per Coord

  std::size_t k() const { return chart.k(); }
  const Rational& value(Coord c) const { return coords.at(c); }
  const Rational& n(std::size_t level) const { return coords.at(n_coord(level)); }
};

ChartPoint canonical_chart_point(const RvtWord& word);
RvtWord rvt_of_chart_point(const ChartPoint& point);

}  // namespace goursat
