#include "goursat/report.hpp"

#include <algorithm>
#include <sstream>

#include "goursat/error.hpp"
#include "goursat/oracle.hpp"
#include "goursat/proximity.hpp"

namespace goursat {

using nlohmann::json;

InvariantBundle bundle_with_oracle_m0(const RvtWord& word) {
  if (is_goursat(word)) return bundle(word);
  return bundle(word, m0_at_point(canonical_chart_point(word)));
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json int_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json vec_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

Integer int_from(const json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::InvalidInput, "malformed integer string");
    return v;
  }
  throw Error(ErrorCode::InvalidInput, "expected an integer");
}

IntVec vec_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an integer array");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from(x));
  return v;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorCode::InvalidInput, std::string("missing field ") + name);
  return *it;
}

}  // namespace

json to_json(const IntVec& v) { return vec_json(v); }

json to_json(const PuiseuxCharacteristic& pc) {
  return json{{"lambda0", int_json(pc.lambda0)}, {"exponents", vec_json(pc.exponents)}};
}

json to_json(const InvariantBundle& b) {
  json rows = json::array();
  for (const auto& r : b.etable.rows)
    rows.push_back({{"h", int_json(r.h)}, {"e", vec_json(r.e)}, {"sg", int_json(r.sg)}});
  return json{
      {"word", b.word},
      {"goursat_word", b.goursat_word},
      {"k", b.k},
      {"beta", vec_json(b.beta)},
      {"der", vec_json(b.der)},
      {"der2", vec_json(b.der2)},
      {"sg", vec_json(b.sg)},
      {"mult_vector", vec_json(b.mult_vector)},
      {"m0", int_json(b.m0)},
      {"vo", vec_json(b.vo)},
      {"b", vec_json(b.b)},
      {"e_table", std::move(rows)},
      {"puiseux", to_json(b.puiseux)},
      {"nonholonomy_degree", int_json(b.nonholonomy_degree)},
  };
}

InvariantBundle bundle_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "bundle JSON must be an object");
  try {
    InvariantBundle b;
    b.word = field(j, "word").get<std::string>();
    b.goursat_word = field(j, "goursat_word").get<std::string>();
    b.k = field(j, "k").get<std::size_t>();
    b.beta = vec_from(field(j, "beta"));
    b.der = vec_from(field(j, "der"));
    b.der2 = vec_from(field(j, "der2"));
    b.sg = vec_from(field(j, "sg"));
    b.mult_vector = vec_from(field(j, "mult_vector"));
    b.m0 = int_from(field(j, "m0"));
    b.vo = vec_from(field(j, "vo"));
    b.b = vec_from(field(j, "b"));
    b.etable.k = b.k;
    // The table is built before VO_2 is filled in from m0.
    b.etable.vo = b.vo;
    if (!b.etable.vo.empty()) b.etable.vo[0] = 0;
    for (const auto& r : field(j, "e_table"))
      b.etable.rows.push_back({int_from(field(r, "h")), vec_from(field(r, "e")), int_from(field(r, "sg"))});
    const json& pc = field(j, "puiseux");
    b.puiseux.lambda0 = int_from(field(pc, "lambda0"));
    b.puiseux.exponents = vec_from(field(pc, "exponents"));
    b.nonholonomy_degree = int_from(field(j, "nonholonomy_degree"));
    return b;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bundle JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Text

std::string bundle_text(const InvariantBundle& b) {
  const std::vector<std::pair<std::string, std::string>> lines = {
      {"word", b.word},
      {"goursat word", b.goursat_word},
      {"k", std::to_string(b.k)},
      {"beta", to_string(b.beta)},
      {"der", to_string(b.der)},
      {"der2", to_string(b.der2)},
      {"small growth", to_string(b.sg)},
      {"multiplicity vector", to_string(b.mult_vector)},
      {"m0", to_string(b.m0)},
      {"vertical orders", to_string(b.vo)},
      {"b", to_string(b.b)},
      {"puiseux", b.puiseux.str()},
      {"nonholonomy degree", to_string(b.nonholonomy_degree)},
  };
  std::ostringstream out;
  for (const auto& [key, value] : lines) out << key << std::string(21 - key.size(), ' ') << value << "\n";
  return out.str();
}

namespace {

std::string right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string etable_ascii(const InvariantBundle& b) {
  const ETable& t = b.etable;
  const std::size_t cols = t.k;  // i = 2..k+1
  std::size_t wc = std::to_string(t.k + 1).size();
  std::size_t wh = 3;  // "h\i"
  std::size_t ws = 2;  // "SG"
  for (const auto& r : t.rows) {
    for (const auto& e : r.e) wc = std::max(wc, e.get_str().size());
    wh = std::max(wh, r.h.get_str().size() + 1);
    ws = std::max(ws, r.sg.get_str().size());
  }
  std::ostringstream out;
  out << left("h\\i", wh) << " |";
  for (std::size_t i = 2; i <= t.k + 1; ++i) out << " " << right(std::to_string(i), wc);
  out << " | " << right("SG", ws) << "\n";
  out << std::string(wh + 1, '-') << "+" << std::string(cols * (wc + 1) + 1, '-') << "+"
      << std::string(ws + 1, '-') << "\n";
  for (const auto& r : t.rows) {
    const bool red = std::find(b.b.begin(), b.b.end(), r.h) != b.b.end();
    out << (red ? "*" : " ") << left(r.h.get_str(), wh - 1) << " |";
    for (std::size_t c = 0; c < cols; ++c)
      out << " " << right(c < r.e.size() ? r.e[c].get_str() : "", wc);
    out << " | " << right(r.sg.get_str(), ws) << "\n";
  }
  return out.str();
}

std::string chart_text(const RvtWord& word) {
  const ChartPoint p = canonical_chart_point(word);
  const FocalOrders fo = focal_orders(p);
  std::ostringstream out;
  out << "word   " << word.str() << "\n";
  out << "chart  " << p.chart.name() << "\n";
  out << "coord  alt    value  order  d-order\n";
  for (Coord c = 0; c < p.chart.num_coords(); ++c) {
    out << left(Chart::coord_name(c), 7) << left(p.chart.alt_name(c), 7) << left(p.coords[c].get_str(), 7)
        << left(fo.order[c].get_str(), 7) << fo.diff_order[c].get_str() << "\n";
  }
  out << "vertical orders  " << to_string(vo_at_point(p)) << "\n";
  out << "m0               " << m0_at_point(p).get_str() << "\n";
  return out.str();
}

json chart_json(const RvtWord& word) {
  const ChartPoint p = canonical_chart_point(word);
  const FocalOrders fo = focal_orders(p);
  json coords = json::array();
  for (Coord c = 0; c < p.chart.num_coords(); ++c)
    coords.push_back({{"name", Chart::coord_name(c)},
                      {"alt", p.chart.alt_name(c)},
                      {"value", p.coords[c].get_str()},
                      {"order", int_json(fo.order[c])},
                      {"diff_order", int_json(fo.diff_order[c])}});
  return json{{"word", word.str()},
              {"chart", p.chart.name()},
              {"coordinates", std::move(coords)},
              {"vo", vec_json(vo_at_point(p))},
              {"m0", int_json(m0_at_point(p))}};
}

std::string lift_chain_text(const GoursatWord& word) {
  std::string out = word.str() + "\n";
  GoursatWord w = word;
  while (w.length() >= 2) {
    w = lift(w);
    out += w.str() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (ok() ? "PASS " : "FAIL ") << word << "\n";
  return out.str();
}

json VerifyReport::json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return nlohmann::json{{"word", word}, {"passed", ok()}, {"checks", std::move(list)}};
}

VerifyReport verify_word(const RvtWord& word, const VerifyOptions& options) {
  VerifyReport report;
  report.word = word.str();
  auto check = [&](std::string name, bool ok, std::string detail = "") {
    report.checks.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
  };

  InvariantBundle b;
  try {
    b = bundle_with_oracle_m0(word);
    check("combinatorial routes agree", true);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RouteMismatch) throw;
    check("combinatorial routes agree", false, e.what());
    return report;
  }

  const ChartPoint p = canonical_chart_point(word);
  const IntVec vo = vo_at_point(p);
  check("vertical orders at the point", vo == b.vo, to_string(vo) + " vs " + to_string(b.vo));
  const Integer m0 = m0_at_point(p);
  check("base multiplicity at the point", m0 == b.m0, m0.get_str() + " vs " + b.m0.get_str());
  const IntVec blown = blowup_multseq(b.puiseux);
  const IntVec euclid = multseq_of_word(word, b.m0);
  check("blowup multiplicity sequence", blown == euclid, to_string(blown) + " vs " + to_string(euclid));

  const FocalOrders fo = focal_orders(p);
  const std::size_t n = b.nonholonomy_degree.get_ui() + 5;
  for (Coord c = 0; c < p.chart.num_coords(); ++c) {
    const Poly centered = Poly::var(c) - Poly(p.coords[c]);
    const Integer jet = focal_order_generic_jet(p, centered, 3, n, options.seed + 7 * c);
    check("generic jet order of " + p.chart.alt_name(c), jet == fo.diff_order[c],
          jet.get_str() + " vs " + fo.diff_order[c].get_str());
  }

  if (!options.symbolic) return report;
  const std::size_t k = word.length();
  if (k > kSymbolicMaxLength)
    throw Error(ErrorCode::ResourceBudget, "symbolic verification is limited to length " +
                                               std::to_string(kSymbolicMaxLength));

  const std::size_t depth = options.depth.value_or(b.nonholonomy_degree.get_ui() + 2);
  const IntVec sg = small_growth_bruteforce(p, depth).sg;
  check("small growth by brackets", sg == b.sg, to_string(sg) + " vs " + to_string(b.sg));

  for (std::size_t i = 3; i <= k + 1; ++i) {
    const std::string name = "pathway for column " + std::to_string(i);
    try {
      const Pathway path = pathway_sections(p, i);
      const Integer& bi = b.b.at(i - 2);
      check(name, Integer(static_cast<unsigned long>(path.rows.back().h)) == bi,
            "ends at h=" + std::to_string(path.rows.back().h) + ", b_i=" + bi.get_str());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OrderMismatch) throw;
      check(name, false, e.what());
    }
  }

  const StructureReport s = verify_structure(p.chart, options.seed);
  for (const auto& c : s.checks) check("chart " + s.chart + ": " + c.name, c.passed, c.detail);
  return report;
}

}  // namespace goursat
