#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "goursat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

int exit_code(gs_status s) {
  switch (s) {
    case GS_OK: return kExitOk;
    case GS_ROUTE_MISMATCH:
    case GS_ORDER_MISMATCH:
    case GS_NON_EXACT_DIVISION: return kExitMismatch;
    case GS_STEP_BUDGET_EXCEEDED:
    case GS_RESOURCE_BUDGET:
    case GS_TRUNCATION_TOO_SMALL: return kExitBudget;
    default: return kExitInput;
  }
}

// Outcome of one unit of work: text for stdout, text for stderr and an
// exit code.
struct Outcome {
  std::string out;
  std::string err;
  int code = kExitOk;
};

Outcome failure(gs_status s) { return {"", std::string("error: ") + gs_last_error() + "\n", exit_code(s)}; }

std::string take(char* s) {
  std::string out = s ? s : "";
  gs_string_free(s);
  return out;
}

struct WordDeleter {
  void operator()(gs_word* w) const { gs_word_free(w); }
};
struct BundleDeleter {
  void operator()(gs_bundle* b) const { gs_bundle_free(b); }
};
using WordPtr = std::unique_ptr<gs_word, WordDeleter>;
using BundlePtr = std::unique_ptr<gs_bundle, BundleDeleter>;

// Parses the word and runs `body`, turning library failures into outcomes.
Outcome with_word(const std::string& text, const std::function<Outcome(const gs_word*)>& body) {
  gs_word* raw = nullptr;
  if (gs_status s = gs_word_parse(text.c_str(), &raw); s != GS_OK) return failure(s);
  WordPtr word(raw);
  return body(word.get());
}

// `call` fills its argument with a library-owned string.
Outcome render_or_fail(const std::function<gs_status(char**)>& call) {
  char* text = nullptr;
  if (gs_status s = call(&text); s != GS_OK) return failure(s);
  return {take(text), "", kExitOk};
}

// Runs jobs across worker threads and keeps their outputs in order.
std::vector<Outcome> run_all(const std::vector<std::string>& words,
                             const std::function<Outcome(const std::string&)>& job) {
  std::vector<Outcome> results(words.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(words.size(), std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < words.size(); i += workers) results[i] = job(words[i]);
    });
  for (auto& t : pool) t.join();
  return results;
}

int emit(const std::vector<Outcome>& results, bool json_array) {
  int code = kExitOk;
  if (json_array) std::cout << "[\n";
  bool first = true;
  for (const auto& r : results) {
    if (!r.err.empty()) std::cerr << r.err;
    if (!r.out.empty()) {
      if (json_array && !first) std::cout << ",\n";
      std::cout << r.out;
      first = false;
    }
    code = std::max(code, r.code);
  }
  if (json_array) std::cout << "]\n";
  return code;
}

std::vector<std::string> goursat_words(std::size_t length, int& code) {
  char* text = nullptr;
  if (gs_status s = gs_goursat_words(length, &text); s != GS_OK) {
    std::cerr << "error: " << gs_last_error() << "\n";
    code = exit_code(s);
    return {};
  }
  std::vector<std::string> out;
  std::istringstream in(take(text));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local invariants of Goursat distributions from RVT code words"};
  app.require_subcommand(1);

  std::vector<std::string> words;
  std::size_t all_words = 0;
  bool json = false;
  bool dot = false;
  bool symbolic = false;
  std::size_t depth = 0;
  std::uint64_t seed = 1;
  std::string single;

  auto* inv = app.add_subcommand("invariants", "All invariants of each word");
  inv->add_option("words", words, "RVT code words");
  inv->add_option("--all-words", all_words, "Also every Goursat word of this length");
  inv->add_flag("--json", json, "JSON output");

  auto* et = app.add_subcommand("etable", "Table of e_hi values with the small growth column");
  et->add_option("word", single, "RVT code word")->required();

  auto* ver = app.add_subcommand("verify", "Cross-check every route and oracle");
  ver->add_option("words", words, "RVT code words");
  ver->add_option("--all-words", all_words, "Also every Goursat word of this length");
  ver->add_option("--depth", depth, "Bracket steps for the small growth oracle");
  ver->add_option("--seed", seed, "Seed for random jets and monomials");
  ver->add_flag("--symbolic", symbolic, "Also run the symbolic Lie bracket checks");
  ver->add_flag("--json", json, "JSON output");

  auto* prox = app.add_subcommand("prox", "Proximity diagram");
  prox->add_option("word", single, "Goursat code word")->required();
  prox->add_flag("--dot", dot, "Graphviz output");

  auto* lift = app.add_subcommand("lift", "Chain of lifted Goursat words");
  lift->add_option("word", single, "Goursat code word")->required();

  auto* pui = app.add_subcommand("puiseux", "Puiseux characteristic and multiplicity sequence");
  pui->add_option("word", single, "RVT code word or a characteristic such as [6;8,9]")->required();
  pui->add_flag("--json", json, "JSON output");

  auto* bt = app.add_subcommand("bracket-table", "Lie brackets of the standard fields on a chart");
  bt->add_option("chart", single, "Chart word over o and i")->required();

  auto* ch = app.add_subcommand("chart", "Canonical chart point with focal orders");
  ch->add_option("word", single, "RVT code word")->required();
  ch->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const gs_format fmt = json ? GS_FORMAT_JSON : GS_FORMAT_TEXT;

  if (inv->parsed() || ver->parsed()) {
    int code = kExitOk;
    if (all_words) {
      for (auto& w : goursat_words(all_words, code)) words.push_back(w);
      if (code != kExitOk) return code;
    }
    if (words.empty()) {
      std::cerr << "error: no words given\n";
      return kExitInput;
    }
    std::function<Outcome(const std::string&)> job;
    if (inv->parsed()) {
      job = [&](const std::string& text) {
        return with_word(text, [&](const gs_word* w) {
          gs_bundle* raw = nullptr;
          if (gs_status s = gs_bundle_compute(w, &raw); s != GS_OK) return failure(s);
          BundlePtr b(raw);
          return render_or_fail([&](char** out) { return gs_bundle_render(b.get(), fmt, out); });
        });
      };
    } else {
      const gs_verify_options opts{depth, seed, symbolic ? 1 : 0};
      job = [&, opts](const std::string& text) {
        return with_word(text, [&](const gs_word* w) {
          int passed = 0;
          char* report = nullptr;
          const gs_status s = gs_verify(w, &opts, fmt, &passed, &report);
          if (s != GS_OK) return failure(s);
          return Outcome{take(report), "", passed ? kExitOk : kExitMismatch};
        });
      };
    }
    const bool array = json && words.size() > 1;
    return emit(run_all(words, job), array);
  }

  Outcome r;
  if (et->parsed()) {
    r = with_word(single, [](const gs_word* w) {
      gs_bundle* raw = nullptr;
      if (gs_status s = gs_bundle_compute(w, &raw); s != GS_OK) return failure(s);
      BundlePtr b(raw);
      return render_or_fail([&](char** out) { return gs_bundle_etable(b.get(), out); });
    });
  } else if (prox->parsed()) {
    r = with_word(single, [&](const gs_word* w) {
      const gs_format f = dot ? GS_FORMAT_DOT : GS_FORMAT_TEXT;
      return render_or_fail([&](char** out) { return gs_render_proximity(w, f, out); });
    });
  } else if (lift->parsed()) {
    r = with_word(single, [](const gs_word* w) {
      return render_or_fail([&](char** out) { return gs_word_lift_chain(w, out); });
    });
  } else if (pui->parsed()) {
    if (!single.empty() && single.front() == '[') {
      r = render_or_fail([&](char** out) { return gs_pc_multseq(single.c_str(), fmt, out); });
    } else {
      r = with_word(single, [&](const gs_word* w) {
        return render_or_fail([&](char** out) { return gs_render_puiseux(w, fmt, out); });
      });
    }
  } else if (bt->parsed()) {
    r = render_or_fail([&](char** out) { return gs_render_bracket_table(single.c_str(), out); });
  } else if (ch->parsed()) {
    r = with_word(single, [&](const gs_word* w) {
      return render_or_fail([&](char** out) { return gs_render_chart(w, fmt, out); });
    });
  }
  return emit({r}, false);
}
