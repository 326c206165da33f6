#include "goursat/symcalc.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "goursat/error.hpp"

namespace goursat {

VField VField::partial(std::size_t num_coords, Coord c) {
  VField x(num_coords);
  x[c] = Poly(1);
  return x;
}

bool VField::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly VField::apply(const Poly& a) const {
  Poly out;
  for (std::size_t c = 0; c < c_.size(); ++c) {
    if (c_[c].is_zero()) continue;
    Poly d = a.derivative(c);
    if (!d.is_zero()) out += c_[c] * d;
  }
  return out;
}

std::vector<Rational> VField::eval(const std::vector<Rational>& point) const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& p : c_) out.push_back(p.eval(point));
  return out;
}

VField VField::operator-() const {
  VField x = *this;
  for (auto& p : x.c_) p = -p;
  return x;
}

VField& VField::operator+=(const VField& o) {
  if (o.num_coords() != num_coords()) throw Error(ErrorCode::VariableMismatch, "chart size mismatch");
  for (std::size_t c = 0; c < c_.size(); ++c) c_[c] += o.c_[c];
  return *this;
}

VField& VField::operator-=(const VField& o) {
  if (o.num_coords() != num_coords()) throw Error(ErrorCode::VariableMismatch, "chart size mismatch");
  for (std::size_t c = 0; c < c_.size(); ++c) c_[c] -= o.c_[c];
  return *this;
}

VField operator*(const Poly& a, const VField& x) {
  VField out(x.num_coords());
  for (std::size_t c = 0; c < x.num_coords(); ++c)
    if (!x.c_[c].is_zero()) out.c_[c] = a * x.c_[c];
  return out;
}

VField VField::divided(const Monomial& m) const {
  VField out(num_coords());
  for (std::size_t c = 0; c < c_.size(); ++c) out.c_[c] = c_[c].divided(m);
  return out;
}

VField VField::shifted(const std::vector<Rational>& shift) const {
  VField out(num_coords());
  for (std::size_t c = 0; c < c_.size(); ++c) out.c_[c] = c_[c].shifted(shift);
  return out;
}

VField VField::truncated(unsigned max_degree) const {
  VField out(num_coords());
  for (std::size_t c = 0; c < c_.size(); ++c) out.c_[c] = c_[c].truncated(max_degree);
  return out;
}

std::size_t VField::hash() const {
  std::size_t h = c_.size();
  for (const auto& p : c_) h = h * 1000003u ^ p.hash();
  return h;
}

std::string VField::str() const {
  std::string s;
  for (std::size_t c = 0; c < c_.size(); ++c) {
    if (c_[c].is_zero()) continue;
    std::string coeff = c_[c].str();
    std::string part = "d/d" + default_var_name(c);
    std::string term;
    if (coeff == "1")
      term = part;
    else if (coeff == "-1")
      term = "-" + part;
    else if (c_[c].size() == 1)
      term = coeff + "*" + part;
    else
      term = "(" + coeff + ")*" + part;
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s.empty() ? "0" : s;
}

VField lie_bracket(const VField& x, const VField& y) {
  if (x.num_coords() != y.num_coords())
    throw Error(ErrorCode::VariableMismatch, "bracket of fields on different charts");
  VField out(x.num_coords());
  for (std::size_t c = 0; c < x.num_coords(); ++c) out[c] = x.apply(y[c]) - y.apply(x[c]);
  return out;
}

namespace {

Poly n_var(std::size_t level) { return Poly::var(n_coord(level)); }

}  // namespace

StdFields std_fields(const Chart& chart) {
  const std::size_t k = chart.k();
  const std::size_t nc = chart.num_coords();
  StdFields s;
  for (std::size_t i = 0; i <= k; ++i) s.v.push_back(VField::partial(nc, n_coord(i)));
  s.f.push_back(VField::partial(nc, kR0));
  for (std::size_t i = 1; i <= k; ++i) {
    if (chart.inverted(i))
      s.f.push_back(n_var(i) * s.f[i - 1] + s.v[i - 1]);
    else
      s.f.push_back(s.f[i - 1] + n_var(i) * s.v[i - 1]);
  }
  return s;
}

Poly a_coeff(const Chart& chart, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > chart.k())
    throw Error(ErrorCode::IndexRange, "a_ij needs 1 <= i <= j <= k");
  Poly a(1);
  for (std::size_t h = i + 1; h <= j; ++h)
    if (chart.inverted(h)) a = a * n_var(h);
  return a;
}

Poly b_coeff(const Chart& chart, std::size_t i, std::size_t j) {
  if (i >= j || j > chart.k()) throw Error(ErrorCode::IndexRange, "b_ij needs 0 <= i < j <= k");
  Poly a = a_coeff(chart, i + 1, j);
  return chart.inverted(i + 1) ? a : n_var(i + 1) * a;
}

std::optional<std::pair<Poly, Generator>> as_single_generator(const VField& x,
                                                              const StdFields& fields) {
  if (x.is_zero()) return std::nullopt;
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < fields.v.size(); ++i) gens.push_back({Generator::V, i});
  for (std::size_t i = 0; i < fields.f.size(); ++i) gens.push_back({Generator::F, i});
  for (const auto& g : gens) {
    const VField& y = fields.get(g);
    // Pivot on the last nonzero component; it is a monomial for every
    // standard field.
    std::size_t c = y.num_coords();
    while (c > 0 && y[c - 1].is_zero()) --c;
    if (c == 0) continue;
    const Poly& pivot = y[c - 1];
    if (!pivot.is_monomial() || !x[c - 1].divisible_by(pivot.leading().m)) continue;
    Poly a = x[c - 1].divided(pivot.leading().m) * (Rational(1) / pivot.leading().c);
    if (a * y == x) return std::make_pair(std::move(a), g);
  }
  return std::nullopt;
}

std::string render_in_generators(const VField& x, const StdFields& fields) {
  if (x.is_zero()) return "0";
  auto single = as_single_generator(x, fields);
  if (!single) return x.str();
  const auto& [a, g] = *single;
  const std::string coeff = a.str();
  if (coeff == "1") return g.str();
  if (coeff == "-1") return "-" + g.str();
  if (a.is_monomial()) return coeff + "*" + g.str();
  return "(" + coeff + ")*" + g.str();
}

BracketTable bracket_table(const Chart& chart) {
  const StdFields s = std_fields(chart);
  const std::size_t k = chart.k();
  BracketTable t;
  for (std::size_t i = 0; i <= k; ++i) t.rows.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i <= k; ++i) t.rows.push_back("f" + std::to_string(i));
  for (std::size_t j = 0; j <= k; ++j) t.cols.push_back("f" + std::to_string(j));
  for (int pass = 0; pass < 2; ++pass) {
    const auto& left = pass == 0 ? s.v : s.f;
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j <= k; ++j)
        row.push_back(render_in_generators(lie_bracket(left[i], s.f[j]), s));
      t.cells.push_back(std::move(row));
    }
  }
  return t;
}

std::string BracketTable::str() const {
  std::vector<std::size_t> width(cols.size() + 1, 0);
  for (const auto& r : rows) width[0] = std::max(width[0], r.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c + 1] = cols[c].size();
    for (const auto& row : cells) width[c + 1] = std::max(width[c + 1], row[c].size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::ostringstream out;
  out << pad("", width[0]);
  for (std::size_t c = 0; c < cols.size(); ++c) out << " | " << pad(cols[c], width[c + 1]);
  out << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << pad(rows[r], width[0]);
    for (std::size_t c = 0; c < cols.size(); ++c) out << " | " << pad(cells[r][c], width[c + 1]);
    out << "\n";
  }
  return out.str();
}

Monomial g_divisor(const Chart& chart, std::size_t i) {
  const std::size_t k = chart.k();
  Monomial m;
  for (std::size_t h = k + 3 - std::min(i, k + 3); h <= k; ++h)
    if (h >= 1 && chart.inverted(h)) m = m * Monomial::var(n_coord(h));
  return m;
}

GBasis g_basis(const Chart& chart, const StdFields& fields) {
  const std::size_t k = chart.k();
  GBasis b;
  b.g = {fields.f[k], fields.v[k]};
  b.sign = {1, 1};
  b.gen = {{Generator::F, k}, {Generator::V, k}};
  b.divisor = {Monomial(), Monomial()};
  for (std::size_t i = 1; i <= k; ++i) {
    const Monomial d = g_divisor(chart, i);
    VField next = lie_bracket(b.g[0], b.g[i]).divided(d);
    const Generator gen{chart.inverted(k - i + 1) ? Generator::F : Generator::V, k - i};
    const VField& target = fields.get(gen);
    int sign;
    if (next == target)
      sign = 1;
    else if (next == -target)
      sign = -1;
    else
      throw Error(ErrorCode::NonExactDivision,
                  "g_" + std::to_string(i + 1) + " is not a signed " + gen.str());
    b.g.push_back(std::move(next));
    b.sign.push_back(sign);
    b.gen.push_back(gen);
    b.divisor.push_back(d);
  }
  return b;
}

GBasis g_basis(const Chart& chart) { return g_basis(chart, std_fields(chart)); }

std::vector<Poly> g_decompose(const Chart& chart, const GBasis& basis, const VField& x) {
  const std::size_t k = chart.k();
  if (x.num_coords() != chart.num_coords())
    throw Error(ErrorCode::VariableMismatch, "field does not live on this chart");
  Poly cf = x[kR0];
  std::vector<Poly> cv(k + 1), kept_f(k + 1);
  for (std::size_t m = 0; m <= k; ++m) cv[m] = x[n_coord(m)];
  for (std::size_t m = 1; m <= k; ++m) {
    const Poly n = n_var(m);
    if (!chart.inverted(m)) {
      // f_{m-1} = f_m - n_m v_{m-1}
      cv[m - 1] -= n * cf;
    } else {
      // v_{m-1} = f_m - n_m f_{m-1}
      kept_f[m - 1] = cf - n * cv[m - 1];
      cf = cv[m - 1];
      cv[m - 1] = Poly();
    }
  }
  std::vector<Poly> out{cf, cv[k]};
  for (std::size_t i = 2; i <= k + 1; ++i) {
    const Generator& g = basis.gen[i];
    Poly c = g.kind == Generator::V ? cv[g.index] : kept_f[g.index];
    if (basis.sign[i] < 0) c = -c;
    out.push_back(std::move(c));
  }
  return out;
}

bool annihilator_check(const Chart& chart, const VField& x, std::size_t imax) {
  for (std::size_t i = 1; i <= imax && i <= chart.k(); ++i) {
    const Poly pairing = x[chart.deactivated(i)] - n_var(i) * x[chart.retained(i)];
    if (!pairing.is_zero()) return false;
  }
  return true;
}

std::vector<Chart> all_charts(std::size_t k) {
  std::vector<Chart> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Choice> choices(k);
    for (std::size_t j = 0; j < k; ++j)
      choices[j] = (mask >> (k - 1 - j)) & 1 ? Choice::Inverted : Choice::Ordinary;
    out.emplace_back(std::move(choices));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure verification

bool StructureReport::ok() const { return failures() == 0; }

std::size_t StructureReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

class Recorder {
 public:
  explicit Recorder(StructureReport& r) : report_(r) {}

  // Records the outcome of one named check; only the first failure detail
  // of each check is kept.
  void expect(const std::string& name, bool ok, const std::string& detail) {
    auto it = std::find_if(report_.checks.begin(), report_.checks.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    if (it == report_.checks.end()) {
      report_.checks.push_back({name, true, ""});
      it = report_.checks.end() - 1;
    }
    if (!ok && it->passed) {
      it->passed = false;
      it->detail = detail;
    }
  }

 private:
  StructureReport& report_;
};

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  if (n == 1) return m[0][0];
  Poly det;
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r][0].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t rr = 0; rr < n; ++rr) {
      if (rr == r) continue;
      minor.emplace_back(m[rr].begin() + 1, m[rr].end());
    }
    Poly term = m[r][0] * determinant(std::move(minor));
    if (r % 2) det -= term;
    else det += term;
  }
  return det;
}

bool all_positive(const Poly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const Term& t) { return t.c > 0; });
}

// True iff the fields, written in the g-basis, are supported on g_0..g_top
// with a change-of-basis determinant of +-1.
bool spans_like_g_prefix(const Chart& chart, const GBasis& basis, const std::vector<VField>& fields,
                         std::size_t top, std::string& why) {
  std::vector<std::vector<Poly>> m(top + 1, std::vector<Poly>(fields.size()));
  for (std::size_t c = 0; c < fields.size(); ++c) {
    const auto coeffs = g_decompose(chart, basis, fields[c]);
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
      if (r > top) {
        if (!coeffs[r].is_zero()) {
          why = "component on g_" + std::to_string(r);
          return false;
        }
      } else {
        m[r][c] = coeffs[r];
      }
    }
  }
  const Poly det = determinant(std::move(m));
  if (!(det == Poly(1) || det == Poly(-1))) {
    why = "determinant " + det.str();
    return false;
  }
  return true;
}

}  // namespace

StructureReport verify_structure(const Chart& chart, std::uint64_t seed) {
  StructureReport report;
  report.chart = chart.name();
  Recorder rec(report);
  const std::size_t k = chart.k();
  const std::size_t nc = chart.num_coords();
  const StdFields s = std_fields(chart);
  auto ij = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  // Expansion of f_j in the coordinate partials. When level 1 is inverted
  // the f_0 coefficient carries an extra n_1.
  for (std::size_t j = 1; j <= k; ++j) {
    Poly a0 = a_coeff(chart, 1, j);
    if (chart.inverted(1)) a0 = n_var(1) * a0;
    VField expect = a0 * s.f[0];
    for (std::size_t i = 0; i < j; ++i) expect += b_coeff(chart, i, j) * s.v[i];
    rec.expect("f_j expansion", expect == s.f[j], "f" + std::to_string(j));
    for (std::size_t i = 0; i < j; ++i)
      rec.expect("f_j(n_i) = b_ij", s.f[j].apply(n_var(i)) == b_coeff(chart, i, j), ij(i, j));
  }

  std::vector<std::vector<VField>> vf(k + 1), ff(k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j) {
      vf[i].push_back(lie_bracket(s.v[i], s.f[j]));
      ff[i].push_back(lie_bracket(s.f[i], s.f[j]));
    }

  for (std::size_t j = 0; j <= k; ++j) {
    rec.expect("[v0,fj] = [f0,fj] = 0", vf[0][j].is_zero() && ff[0][j].is_zero(), ij(0, j));
    for (std::size_t i = 1; i <= k; ++i) {
      if (i > j) {
        rec.expect("[vi,fj] = 0 for i > j", vf[i][j].is_zero(), ij(i, j));
        continue;
      }
      const VField& lower = chart.inverted(i) ? s.f[i - 1] : s.v[i - 1];
      rec.expect("[vi,fj] closed form", vf[i][j] == a_coeff(chart, i, j) * lower, ij(i, j));
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (i >= 1) {
        const VField& lower = chart.inverted(i) ? s.f[i - 1] : s.v[i - 1];
        rec.expect("[fi,fj] closed form", ff[i][j] == -(b_coeff(chart, i, j) * lower), ij(i, j));
      }
      const Poly n = n_var(i + 1);
      const VField rel = chart.inverted(i + 1) ? n * ff[i][j] + vf[i][j] : ff[i][j] + n * vf[i][j];
      rec.expect("[fi,fj] relation with [vi,fj]", rel.is_zero(), ij(i, j));
    }
  }

  GBasis basis;
  try {
    basis = g_basis(chart, s);
    rec.expect("g-basis construction", true, "");
  } catch (const Error& e) {
    rec.expect("g-basis construction", false, e.what());
    return report;
  }

  for (std::size_t i = 1; i <= k; ++i) {
    const VField br = lie_bracket(basis.g[0], basis.g[i]);
    rec.expect("[g0,gi] = divisor * g(i+1)",
               br == Poly::monomial(g_divisor(chart, i)) * basis.g[i + 1], std::to_string(i));
  }
  for (std::size_t i = 1; i <= k + 1; ++i)
    rec.expect("[g1,gi] = 0", lie_bracket(basis.g[1], basis.g[i]).is_zero(), std::to_string(i));
  for (std::size_t i = 2; i <= k + 1; ++i) {
    const bool f_expected = chart.inverted(k - i + 2);
    rec.expect("g_i is a signed v or f",
               basis.gen[i].index == k - i + 1 &&
                   (basis.gen[i].kind == Generator::F) == f_expected,
               std::to_string(i));
  }

  // Decomposition round trip on every standard field.
  for (std::size_t j = 0; j <= k; ++j) {
    for (const VField* x : {&s.f[j], &s.v[j]}) {
      const auto c = g_decompose(chart, basis, *x);
      VField back(nc);
      for (std::size_t i = 0; i < c.size(); ++i) back += c[i] * basis.g[i];
      rec.expect("g-basis decomposition", back == *x, std::to_string(j));
    }
  }

  // Delta_i bases: standard, alternative, and g_0..g_i all span one module.
  for (std::size_t i = 1; i <= k + 1; ++i) {
    std::vector<VField> standard{s.f[k - i + 1]};
    for (std::size_t m = k - i + 1; m <= k; ++m) standard.push_back(s.v[m]);
    std::string why;
    rec.expect("g_0..g_i span Delta_i", spans_like_g_prefix(chart, basis, standard, i, why),
               "i=" + std::to_string(i) + ": " + why);
    for (std::size_t m = k - i + 1; m <= k; ++m)
      rec.expect("annihilators of Delta_i", annihilator_check(chart, s.v[m], k - i + 1),
                 "v" + std::to_string(m));
    rec.expect("annihilators of Delta_i", annihilator_check(chart, s.f[k - i + 1], k - i + 1),
               "f" + std::to_string(k - i + 1));
    if (i >= 2) {
      std::vector<VField> alt{s.f[k - i + 2]};
      if (chart.inverted(k - i + 2)) {
        alt.push_back(s.f[k - i + 1]);
        for (std::size_t m = k - i + 2; m <= k; ++m) alt.push_back(s.v[m]);
      } else {
        for (std::size_t m = k - i + 1; m <= k; ++m) alt.push_back(s.v[m]);
      }
      rec.expect("alternative basis of Delta_i", spans_like_g_prefix(chart, basis, alt, i, why),
                 "i=" + std::to_string(i) + ": " + why);
    }
  }
  rec.expect("focal fields are annihilated",
             annihilator_check(chart, s.f[k], k) && annihilator_check(chart, s.v[k], k), "");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> expo(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Monomial m;
    for (Coord c = 0; c < nc; ++c) m = m * Monomial::var(c, expo(rng));
    const Poly a = Poly::monomial(m);
    rec.expect("g0(a), g1(a) have positive coefficients",
               all_positive(basis.g[0].apply(a)) && all_positive(basis.g[1].apply(a)), a.str());
  }
  return report;
}

}  // namespace goursat
