#include "goursat.h"

#include <cstring>
#include <exception>
#include <string>

#include "goursat/codeword.hpp"
#include "goursat/error.hpp"
#include "goursat/invariants.hpp"
#include "goursat/oracle.hpp"
#include "goursat/proximity.hpp"
#include "goursat/report.hpp"
#include "goursat/symcalc.hpp"

struct gs_word {
  goursat::RvtWord word;
};

struct gs_bundle {
  goursat::InvariantBundle bundle;
};

namespace {

using goursat::Error;
using goursat::ErrorCode;

thread_local std::string last_error;
thread_local std::size_t last_position = 0;

gs_status status_of(ErrorCode code) { return static_cast<gs_status>(static_cast<int>(code) + 1); }

void set_error(gs_status status, const std::string& message, std::size_t position = 0) {
  const std::string name = gs_status_name(status);
  last_error = message.rfind(name, 0) == 0 ? message : name + ": " + message;
  last_position = position;
}

template <typename F>
gs_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_position = 0;
    return GS_OK;
  } catch (const Error& e) {
    const gs_status s = status_of(e.code());
    set_error(s, e.what(), e.position());
    return s;
  } catch (const std::exception& e) {
    set_error(GS_INTERNAL, e.what());
    return GS_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

goursat::PuiseuxCharacteristic parse_pc(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  const auto semi = s.find(';');
  if (s.size() < 3 || s.front() != '[' || s.back() != ']' || semi == std::string::npos)
    throw Error(ErrorCode::InvalidPC, "expected a characteristic like [6;8,9]");
  auto number = [](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidPC, "malformed exponent '" + t + "'");
    return goursat::Integer(t);
  };
  goursat::PuiseuxCharacteristic pc{number(s.substr(1, semi - 1)), {}};
  const std::string rest = s.substr(semi + 1, s.size() - semi - 2);
  std::size_t start = 0;
  while (start < rest.size()) {
    const auto comma = rest.find(',', start);
    const auto end = comma == std::string::npos ? rest.size() : comma;
    pc.exponents.push_back(number(rest.substr(start, end - start)));
    start = end + 1;
  }
  goursat::validate_pc(pc);
  return pc;
}

}  // namespace

extern "C" {

gs_status gs_word_parse(const char* text, gs_word** out) {
  if (!text || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] { *out = new gs_word{goursat::parse_word(text)}; });
}

void gs_word_free(gs_word* word) { delete word; }

gs_status gs_word_string(const gs_word* word, char** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] { *out = dup(word->word.str()); });
}

gs_status gs_word_length(const gs_word* word, size_t* out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  *out = word->word.length();
  return GS_OK;
}

gs_status gs_word_is_goursat(const gs_word* word, int* out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  *out = goursat::is_goursat(word->word) ? 1 : 0;
  return GS_OK;
}

gs_status gs_word_normalize(const gs_word* word, gs_word** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] { *out = new gs_word{goursat::goursat_normalize(word->word).word()}; });
}

gs_status gs_word_lift(const gs_word* word, gs_word** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] { *out = new gs_word{goursat::lift(goursat::GoursatWord(word->word)).word()}; });
}

gs_status gs_word_lift_chain(const gs_word* word, char** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] { *out = dup(goursat::lift_chain_text(goursat::GoursatWord(word->word))); });
}

gs_status gs_goursat_words(size_t length, char** out) {
  if (!out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    if (length == 0) throw Error(ErrorCode::InvalidInput, "word length must be positive");
    if (length > 24) throw Error(ErrorCode::ResourceBudget, "enumeration is limited to length 24");
    std::string s;
    for (const auto& w : goursat::all_goursat_words(length)) s += w.str() + "\n";
    *out = dup(s);
  });
}

gs_status gs_bundle_compute(const gs_word* word, gs_bundle** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] { *out = new gs_bundle{goursat::bundle_with_oracle_m0(word->word)}; });
}

gs_status gs_bundle_from_json(const char* json, gs_bundle** out) {
  if (!json || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    *out = new gs_bundle{goursat::bundle_from_json(j)};
  });
}

void gs_bundle_free(gs_bundle* bundle) { delete bundle; }

gs_status gs_bundle_render(const gs_bundle* bundle, gs_format format, char** out) {
  if (!bundle || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    if (format == GS_FORMAT_JSON)
      *out = dup(render(goursat::to_json(bundle->bundle)));
    else if (format == GS_FORMAT_TEXT)
      *out = dup(goursat::bundle_text(bundle->bundle));
    else
      throw Error(ErrorCode::InvalidInput, "bundles render as text or JSON");
  });
}

gs_status gs_bundle_equal(const gs_bundle* a, const gs_bundle* b, int* out) {
  if (!a || !b || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  *out = a->bundle == b->bundle ? 1 : 0;
  return GS_OK;
}

gs_status gs_bundle_etable(const gs_bundle* bundle, char** out) {
  if (!bundle || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] { *out = dup(goursat::etable_ascii(bundle->bundle)); });
}

gs_status gs_render_proximity(const gs_word* word, gs_format format, char** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    const auto d = goursat::build_diagram(goursat::GoursatWord(word->word));
    if (format == GS_FORMAT_DOT)
      *out = dup(goursat::to_dot(d));
    else if (format == GS_FORMAT_TEXT)
      *out = dup(goursat::to_ascii(d));
    else
      throw Error(ErrorCode::InvalidInput, "proximity diagrams render as text or DOT");
  });
}

gs_status gs_render_chart(const gs_word* word, gs_format format, char** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    if (format == GS_FORMAT_JSON)
      *out = dup(render(goursat::chart_json(word->word)));
    else if (format == GS_FORMAT_TEXT)
      *out = dup(goursat::chart_text(word->word));
    else
      throw Error(ErrorCode::InvalidInput, "charts render as text or JSON");
  });
}

gs_status gs_render_bracket_table(const char* chart, char** out) {
  if (!chart || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    const goursat::Chart c = goursat::Chart::parse(chart);
    if (c.k() > 16) throw Error(ErrorCode::ResourceBudget, "charts are limited to 16 levels");
    *out = dup(goursat::bracket_table(c).str());
  });
}

gs_status gs_render_puiseux(const gs_word* word, gs_format format, char** out) {
  if (!word || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    std::optional<goursat::Integer> m0;
    if (!goursat::is_goursat(word->word)) m0 = goursat::m0_at_point(goursat::canonical_chart_point(word->word));
    const goursat::IntVec ms = goursat::multseq_of_word(word->word, m0);
    const goursat::PuiseuxCharacteristic pc = goursat::pc_from_multseq(ms);
    if (format == GS_FORMAT_JSON) {
      *out = dup(render({{"word", word->word.str()},
                         {"puiseux", goursat::to_json(pc)},
                         {"multiplicity_sequence", goursat::to_json(ms)}}));
    } else {
      *out = dup("puiseux                " + pc.str() + "\nmultiplicity sequence  " + goursat::to_string(ms) + "\n");
    }
  });
}

gs_status gs_pc_multseq(const char* pc_text, gs_format format, char** out) {
  if (!pc_text || !out) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    const goursat::PuiseuxCharacteristic pc = parse_pc(pc_text);
    const goursat::IntVec ms = goursat::multseq_from_pc(pc);
    const goursat::IntVec blown = goursat::blowup_multseq(pc);
    if (blown != ms)
      throw Error(ErrorCode::RouteMismatch,
                  "Euclid " + goursat::to_string(ms) + " vs blowups " + goursat::to_string(blown));
    if (format == GS_FORMAT_JSON) {
      *out = dup(render({{"puiseux", goursat::to_json(pc)}, {"multiplicity_sequence", goursat::to_json(ms)}}));
    } else {
      *out = dup("puiseux                " + pc.str() + "\nmultiplicity sequence  " + goursat::to_string(ms) + "\n");
    }
  });
}

gs_status gs_verify(const gs_word* word, const gs_verify_options* options, gs_format format, int* passed,
                    char** report) {
  if (!word || !passed || !report) return set_error(GS_NULL_ARGUMENT, "null argument"), GS_NULL_ARGUMENT;
  return guarded([&] {
    goursat::VerifyOptions opts;
    if (options) {
      if (options->depth) opts.depth = options->depth;
      opts.seed = options->seed;
      opts.symbolic = options->symbolic != 0;
    }
    const goursat::VerifyReport r = goursat::verify_word(word->word, opts);
    *passed = r.ok() ? 1 : 0;
    *report = dup(format == GS_FORMAT_JSON ? render(r.json()) : r.text());
  });
}

const char* gs_last_error(void) { return last_error.c_str(); }

size_t gs_last_error_position(void) { return last_position; }

const char* gs_status_name(gs_status status) {
  switch (status) {
    case GS_OK: return "OK";
    case GS_NULL_ARGUMENT: return "NullArgument";
    case GS_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(ErrorCode::ResourceBudget))
    return goursat::to_string(static_cast<ErrorCode>(code));
  return "Unknown";
}

void gs_string_free(char* s) { delete[] s; }

}  // extern "C"
