#include "goursat/codeword.hpp"

#include <cctype>

#include "goursat/error.hpp"

namespace goursat {

namespace {

void check_grammar(const std::vector<Symbol>& s) {
  if (s.empty()) throw Error(ErrorCode::EmptyWord, "empty word");
  if (s.front() != Symbol::R)
    throw Error(ErrorCode::LeadingCritical, "LeadingCritical at 1", 1);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == Symbol::T && s[i - 1] == Symbol::R)
      throw Error(ErrorCode::OrphanT, "OrphanT at " + std::to_string(i + 1), i + 1);
  }
}

void enumerate(std::size_t length, std::vector<Symbol>& prefix,
               std::vector<RvtWord>& out) {
  if (prefix.size() == length) {
    out.emplace_back(prefix);
    return;
  }
  for (Symbol s : {Symbol::R, Symbol::V, Symbol::T}) {
    if (prefix.empty() && s != Symbol::R) continue;
    if (s == Symbol::T && prefix.back() == Symbol::R) continue;
    prefix.push_back(s);
    enumerate(length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

RvtWord::RvtWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  check_grammar(symbols_);
}

std::string RvtWord::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out += static_cast<char>(s);
  return out;
}

GoursatWord::GoursatWord(RvtWord word) : word_(std::move(word)) {
  if (!is_goursat(word_))
    throw Error(ErrorCode::NotGoursat, word_.str() + " is not a Goursat word", 2);
}

RvtWord parse_word(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::EmptyWord, "empty word");
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (std::toupper(static_cast<unsigned char>(text[i]))) {
      case 'R': symbols.push_back(Symbol::R); break;
      case 'V': symbols.push_back(Symbol::V); break;
      case 'T': symbols.push_back(Symbol::T); break;
      default:
        throw Error(ErrorCode::BadSymbol, "BadSymbol at " + std::to_string(i + 1), i + 1);
    }
  }
  return RvtWord(std::move(symbols));
}

bool is_goursat(const RvtWord& word) {
  return word.length() < 2 || word.at(2) == Symbol::R;
}

GoursatWord lift(const GoursatWord& word) {
  if (word.length() < 2)
    throw Error(ErrorCode::TooShort, "lift needs a word of length at least 2");
  std::vector<Symbol> s(word.word().symbols().begin() + 1, word.word().symbols().end());
  if (s.size() >= 2 && s[1] == Symbol::V) {
    s[1] = Symbol::R;
    for (std::size_t i = 2; i < s.size() && s[i] == Symbol::T; ++i) s[i] = Symbol::R;
  }
  return GoursatWord(RvtWord(std::move(s)));
}

GoursatWord goursat_normalize(const RvtWord& word) {
  if (is_goursat(word)) return GoursatWord(word);
  std::vector<Symbol> s(word.symbols().begin(), word.symbols().end());
  s[1] = Symbol::R;
  for (std::size_t i = 2; i < s.size() && s[i] == Symbol::T; ++i) s[i] = Symbol::R;
  return GoursatWord(RvtWord(std::move(s)));
}

std::vector<RvtWord> all_rvt_words(std::size_t length) {
  std::vector<RvtWord> out;
  if (length == 0) return out;
  std::vector<Symbol> prefix;
  enumerate(length, prefix, out);
  return out;
}

std::vector<GoursatWord> all_goursat_words(std::size_t length) {
  std::vector<GoursatWord> out;
  for (auto& w : all_rvt_words(length))
    if (is_goursat(w)) out.emplace_back(std::move(w));
  return out;
}

// ---------------------------------------------------------------------------
// Charts

namespace {

struct AltName {
  char letter;
  int order;
};

std::string render(AltName n) {
  std::string s(1, n.letter);
  if (n.order <= 2)
    s += std::string(static_cast<std::size_t>(n.order), '\'');
  else
    s += "(" + std::to_string(n.order) + ")";
  return s;
}

}  // namespace

Chart::Chart(std::vector<Choice> choices) : choices_(std::move(choices)) {
  const std::size_t k = choices_.size();
  if (k == 0) throw Error(ErrorCode::InvalidInput, "a chart needs at least one level");
  retained_.assign(k + 1, kR0);
  deactivated_.assign(k + 1, kR0);

  std::vector<AltName> names(k + 2);
  names[kR0] = {'x', 0};
  names[n_coord(0)] = {'y', 0};
  for (std::size_t j = 0; j < k; ++j) {
    const Coord r = retained_[j];
    const Coord n = n_coord(j);
    if (choices_[j] == Choice::Ordinary) {
      retained_[j + 1] = r;
      deactivated_[j + 1] = n;
      names[n_coord(j + 1)] = {names[n].letter, names[n].order + 1};
    } else {
      retained_[j + 1] = n;
      deactivated_[j + 1] = r;
      names[n_coord(j + 1)] = {names[r].letter, names[r].order + 1};
    }
  }
  alt_names_.reserve(k + 2);
  for (const auto& n : names) alt_names_.push_back(render(n));
}

Chart Chart::parse(std::string_view name) {
  std::vector<Choice> choices;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(name[i])));
    if (c == 'o')
      choices.push_back(Choice::Ordinary);
    else if (c == 'i')
      choices.push_back(Choice::Inverted);
    else
      throw Error(ErrorCode::BadSymbol, "chart symbol must be o or i", i + 1);
  }
  if (choices.empty()) throw Error(ErrorCode::EmptyWord, "empty chart word");
  return Chart(std::move(choices));
}

std::vector<std::size_t> Chart::inverted_positions() const {
  std::vector<std::size_t> ip;
  for (std::size_t j = 1; j <= k(); ++j)
    if (inverted(j)) ip.push_back(j);
  return ip;
}

std::string Chart::name() const {
  std::string out;
  for (Choice c : choices_) out += static_cast<char>(c);
  return out;
}

std::string Chart::coord_name(Coord c) {
  if (c == kR0) return "r0";
  return "n" + std::to_string(c - 1);
}

// Letter map per level: V -> inverted with n_j = 0; T -> ordinary with
// n_j = 0; R -> ordinary with n_j = 1 right after a critical letter and
// n_j = 0 otherwise.
ChartPoint canonical_chart_point(const RvtWord& word) {
  const std::size_t k = word.length();
  std::vector<Choice> choices(k, Choice::Ordinary);
  std::vector<Rational> coords(k + 2, Rational(0));
  for (std::size_t j = 1; j <= k; ++j) {
    const Symbol s = word.at(j);
    if (s == Symbol::V) choices[j - 1] = Choice::Inverted;
    if (s == Symbol::R && j > 1 && is_critical(word.at(j - 1)))
      coords[n_coord(j)] = 1;
  }
  return ChartPoint{Chart(std::move(choices)), std::move(coords)};
}

RvtWord rvt_of_chart_point(const ChartPoint& point) {
  const std::size_t k = point.k();
  if (point.coords.size() != k + 2)
    throw Error(ErrorCode::InvalidInput, "coordinate count does not match the chart");
  std::vector<Symbol> symbols;
  symbols.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    const bool zero = point.n(j) == 0;
    const bool after_critical = j > 1 && is_critical(symbols.back());
    if (point.chart.inverted(j)) {
      if (!zero || j == 1)
        throw Error(ErrorCode::Unsupported,
                    "inverted level " + std::to_string(j) + " is outside the letter map", j);
      symbols.push_back(Symbol::V);
    } else if (zero && after_critical) {
      symbols.push_back(Symbol::T);
    } else {
      symbols.push_back(Symbol::R);
    }
  }
  return RvtWord(std::move(symbols));
}

}  // namespace goursat
