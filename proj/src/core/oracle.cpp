#include "goursat/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "goursat/error.hpp"
#include "goursat/symcalc.hpp"

namespace goursat {

// ---------------------------------------------------------------------------
// Small growth by bracket closure

namespace {

// One term of a vector field flattened over (monomial, component) keys.
struct FlatTerm {
  Monomial m;
  std::size_t comp;
  Rational c;
};

// Keys ascend by degree, so the leading (smallest) key of a jet survives
// truncation unless the whole jet does not.
bool key_less(const Monomial& am, std::size_t ac, const Monomial& bm, std::size_t bc) {
  if (grlex_less(am, bm)) return true;
  if (grlex_less(bm, am)) return false;
  return ac < bc;
}

using Flat = std::vector<FlatTerm>;

Flat flatten(const VField& x) {
  Flat out;
  for (std::size_t c = 0; c < x.num_coords(); ++c)
    for (const auto& t : x[c].terms()) out.push_back({t.m, c, t.c});
  std::sort(out.begin(), out.end(), [](const FlatTerm& a, const FlatTerm& b) {
    return key_less(a.m, a.comp, b.m, b.comp);
  });
  return out;
}

VField unflatten(const Flat& f, std::size_t nc) {
  std::vector<std::vector<Term>> parts(nc);
  for (const auto& t : f) parts[t.comp].push_back({t.m, t.c});
  VField x(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    Poly p;
    for (auto& t : parts[c]) p += Poly::monomial(t.m, t.c);
    x[c] = std::move(p);
  }
  return x;
}

// a - c * b, both sorted by key.
Flat axpy(const Flat& a, const Rational& c, const Flat& b) {
  Flat out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i].m, a[i].comp, b[j].m, b[j].comp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j].m, b[j].comp, a[i].m, a[i].comp)) {
      out.push_back({b[j].m, b[j].comp, -c * b[j].c});
      ++j;
    } else {
      Rational v = a[i].c - c * b[j].c;
      if (v != 0) out.push_back({a[i].m, a[i].comp, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void truncate(Flat& f, unsigned degree) {
  f.erase(std::remove_if(f.begin(), f.end(), [&](const FlatTerm& t) { return t.m.degree() > degree; }),
          f.end());
}

struct KeyCmp {
  bool operator()(const std::pair<Monomial, std::size_t>& a,
                  const std::pair<Monomial, std::size_t>& b) const {
    return key_less(a.first, a.second, b.first, b.second);
  }
};

// Row-echelon basis of a space of jets, keyed by leading term.
class JetSpan {
 public:
  // Reduces v against the basis; keeps and returns the remainder when it
  // is independent.
  bool insert(Flat v) {
    while (!v.empty()) {
      auto it = pivots_.find({v.front().m, v.front().comp});
      if (it == pivots_.end()) break;
      const Flat& b = it->second;
      v = axpy(v, v.front().c / b.front().c, b);
    }
    if (v.empty()) return false;
    const Rational lead = v.front().c;
    for (auto& t : v) t.c /= lead;
    pivots_.emplace(std::make_pair(v.front().m, v.front().comp), v);
    last_ = std::move(v);
    return true;
  }
  const Flat& last() const { return last_; }

  void truncate_all(unsigned degree) {
    for (auto it = pivots_.begin(); it != pivots_.end();) {
      if (it->first.first.degree() > degree) {
        it = pivots_.erase(it);
      } else {
        truncate(it->second, degree);
        ++it;
      }
    }
  }

  // Vectors with a constant leading term have distinct leading components,
  // and all others vanish at the origin.
  std::size_t rank_at_origin() const {
    std::size_t r = 0;
    for (const auto& [key, v] : pivots_)
      if (key.first.is_one()) ++r;
    return r;
  }

 private:
  std::map<std::pair<Monomial, std::size_t>, Flat, KeyCmp> pivots_;
  Flat last_;
};

}  // namespace

SmallGrowthRun small_growth_bruteforce(const ChartPoint& p, std::size_t max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::InvalidInput, "max_steps must be at least 1");
  const Chart& chart = p.chart;
  const std::size_t k = chart.k();
  const std::size_t nc = chart.num_coords();
  if (p.coords.size() != nc) throw Error(ErrorCode::InvalidInput, "coordinate count does not match the chart");
  const StdFields s = std_fields(chart);
  // Centered at p, so values at p are constant terms. A generator born at
  // step j is bracketed at most max_steps - j more times, and only its
  // jet of that degree can reach the value at p.
  const VField fk = s.f[k].shifted(p.coords);
  const VField vk = s.v[k].shifted(p.coords);

  SmallGrowthRun run;
  JetSpan span;
  std::vector<VField> fresh;
  auto budget = [&](std::size_t j) { return static_cast<unsigned>(max_steps - j); };

  for (const VField* x : {&fk, &vk}) {
    Flat f = flatten(*x);
    truncate(f, budget(1));
    if (span.insert(std::move(f))) fresh.push_back(unflatten(span.last(), nc));
  }
  for (std::size_t j = 1;; ++j) {
    run.sg.emplace_back(static_cast<unsigned long>(span.rank_at_origin()));
    if (span.rank_at_origin() == nc) break;
    if (j == max_steps || fresh.empty())
      throw Error(ErrorCode::StepBudgetExceeded,
                  "rank " + std::to_string(span.rank_at_origin()) + " < " + std::to_string(nc) +
                      " after " + std::to_string(j) + " steps");
    span.truncate_all(budget(j + 1));
    std::vector<VField> next;
    for (const VField& y : fresh) {
      for (const VField* x : {&fk, &vk}) {
        Flat f = flatten(lie_bracket(*x, y).truncated(budget(j + 1)));
        if (span.insert(std::move(f))) next.push_back(unflatten(span.last(), nc));
      }
    }
    run.generators += next.size();
    fresh = std::move(next);
  }
  run.generators += 2;
  return run;
}

// ---------------------------------------------------------------------------
// Focal orders

Integer FocalOrders::of(const Monomial& m) const {
  Integer sum = 0;
  for (std::size_t c = 0; c < diff_order.size(); ++c)
    if (m[c]) sum += diff_order[c] * static_cast<unsigned long>(m[c]);
  return sum;
}

FocalOrders focal_orders(const ChartPoint& p) {
  const Chart& chart = p.chart;
  const std::size_t k = chart.k();
  if (p.coords.size() != chart.num_coords())
    throw Error(ErrorCode::InvalidInput, "coordinate count does not match the chart");
  FocalOrders fo{chart, IntVec(chart.num_coords()), IntVec(chart.num_coords())};
  fo.diff_order[chart.retained(k)] = 1;
  fo.diff_order[n_coord(k)] = 1;
  // d(d_j) = n_j d(r_j)
  for (std::size_t j = k; j >= 1; --j) {
    const Coord nj = n_coord(j);
    fo.order[nj] = p.coords[nj] == 0 ? fo.diff_order[nj] : Integer(0);
    fo.diff_order[chart.deactivated(j)] = fo.order[nj] + fo.diff_order[chart.retained(j)];
  }
  for (Coord c : {kR0, n_coord(0)}) fo.order[c] = p.coords[c] == 0 ? fo.diff_order[c] : Integer(0);
  return fo;
}

IntVec vo_at_point(const ChartPoint& p) {
  const FocalOrders fo = focal_orders(p);
  IntVec vo;
  for (std::size_t j = 2; j <= p.k(); ++j)
    vo.push_back(p.chart.inverted(j) && p.n(j) == 0 ? fo.order[n_coord(j)] : Integer(0));
  return vo;
}

Integer m0_at_point(const ChartPoint& p) {
  const FocalOrders fo = focal_orders(p);
  return std::min(fo.order[kR0], fo.order[n_coord(0)]);
}

// ---------------------------------------------------------------------------
// Series and jets

std::size_t Series::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return c_.size();
}

Series& Series::operator+=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.precision(), b.precision()));
  const std::size_t n = out.precision();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b.c_[j] != 0) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

Series Series::derivative() const {
  Series out(c_.empty() ? 0 : c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return out;
}

Series Series::integral(const Rational& constant) const {
  Series out(c_.size() + 1);
  out.c_[0] = constant;
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i + 1] = c_[i] / static_cast<unsigned long>(i + 1);
  return out;
}

JetCurve random_focal_jet(const ChartPoint& p, std::size_t n, std::uint64_t seed) {
  const Chart& chart = p.chart;
  const std::size_t k = chart.k();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-9, 8);
  auto nonzero = [&] {
    const int v = draw(rng);
    return v >= 0 ? v + 1 : v;
  };
  JetCurve curve;
  curve.coord.assign(chart.num_coords(), Series(n));
  for (Coord c : {chart.retained(k), n_coord(k)}) {
    Series s(n);
    s[0] = p.coords[c];
    for (std::size_t i = 1; i < n; ++i) s[i] = nonzero();
    curve.coord[c] = std::move(s);
  }
  for (std::size_t j = k; j >= 1; --j) {
    const Series& r = curve.coord[chart.retained(j)];
    const Series& nj = curve.coord[n_coord(j)];
    // r' loses one coefficient and the integral gains it back.
    curve.coord[chart.deactivated(j)] = (nj * r.derivative()).integral(p.coords[chart.deactivated(j)]);
  }
  return curve;
}

Series substitute(const Poly& a, const JetCurve& curve) {
  const std::size_t n = curve.coord.empty() ? 0 : curve.coord[0].precision();
  Series sum(n);
  for (const auto& t : a.terms()) {
    Series term(n);
    term[0] = t.c;
    for (std::size_t v = 0; v < curve.coord.size(); ++v)
      for (unsigned e = 0; e < t.m[v]; ++e) term = term * curve.coord[v];
    sum += term;
  }
  return sum;
}

Integer focal_order_generic_jet(const ChartPoint& p, const Poly& a, std::size_t trials,
                                std::size_t n, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "at least one trial is needed");
  if (n == 0) throw Error(ErrorCode::TruncationTooSmall, "truncation order must be positive");
  std::size_t best = n;
  for (std::size_t t = 0; t < trials; ++t) {
    const JetCurve curve = random_focal_jet(p, n, seed + t);
    best = std::min(best, substitute(a, curve).order());
  }
  if (best >= n)
    throw Error(ErrorCode::TruncationTooSmall,
                "vanishes to order " + std::to_string(n) + " on every trial");
  return Integer(static_cast<unsigned long>(best));
}

// ---------------------------------------------------------------------------
// Blowups

namespace {

// num / den for series with ord(num) >= ord(den); the precision shrinks by
// ord(den).
Series divide(const Series& num, const Series& den) {
  const std::size_t d = den.order();
  const std::size_t n = std::min(num.precision(), den.precision()) - d;
  Series unit(n), top(n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = den[i + d];
    top[i] = num[i + d];
  }
  Series inv(n);
  inv[0] = Rational(1) / unit[0];
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += unit[j] * inv[i - j];
    inv[i] = -acc * inv[0];
  }
  return top * inv;
}

}  // namespace

IntVec blowup_multseq(const PuiseuxCharacteristic& pc, std::size_t n) {
  validate_pc(pc);
  const Integer& lambda_g = pc.exponents.empty() ? pc.lambda0 : pc.exponents.back();
  if (n == 0) n = static_cast<std::size_t>(2 * lambda_g.get_ui() + 2);
  if (Integer(static_cast<unsigned long>(n)) <= lambda_g)
    throw Error(ErrorCode::TruncationTooSmall, "truncation must exceed the last exponent");
  Series x(n), y(n);
  x[pc.lambda0.get_ui()] = 1;
  for (const auto& l : pc.exponents) y[l.get_ui()] = 1;
  IntVec out;
  while (true) {
    const std::size_t ox = x.order(), oy = y.order();
    // A smooth germ parametrized by x alone has y identically zero.
    if (ox == 1 && oy >= y.precision()) {
      out.emplace_back(1);
      break;
    }
    if (ox >= x.precision() || oy >= y.precision())
      throw Error(ErrorCode::TruncationTooSmall, "series lost all precision during blowup");
    const std::size_t m = std::min(ox, oy);
    out.emplace_back(static_cast<unsigned long>(m));
    if (m == 1) break;
    if (oy >= ox) {
      y = divide(y, x);
      y[0] = 0;
    } else {
      Series q = divide(x, y);
      q[0] = 0;
      x = std::move(y);
      y = std::move(q);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pathways

std::string PathwayRow::term() const {
  const std::string g = "g" + std::to_string(g_index);
  if (monomial.is_one()) return coefficient == 1 ? g : coefficient.get_str() + "*" + g;
  return term_str({monomial, coefficient}) + "*" + g;
}

Pathway pathway_sections(const ChartPoint& p, std::size_t i) {
  const Chart& chart = p.chart;
  const std::size_t k = chart.k();
  if (i < 3 || i > k + 1) throw Error(ErrorCode::IndexRange, "pathway index must lie in [3, k+1]");
  const StdFields s = std_fields(chart);
  const GBasis basis = g_basis(chart, s);
  const FocalOrders fo = focal_orders(p);
  const IntVec vo = vo_at_point(p);
  const VField fk = basis.g[0].shifted(p.coords);

  Pathway path;
  path.i = i;
  VField section = basis.g[3];

  auto record = [&](std::size_t h, std::size_t gi, Rational c, Monomial m, char via) {
    PathwayRow row{h, gi, std::move(c), m, fo.of(m), e_entry(vo, k, Integer(static_cast<unsigned long>(h)), gi), via};
    if (row.order != row.expected)
      throw Error(ErrorCode::OrderMismatch, "h=" + std::to_string(h) + ": tracked term " + row.term() +
                                                " has order " + row.order.get_str() + ", expected " +
                                                row.expected.get_str());
    const Poly actual = g_decompose(chart, basis, section)[gi].shifted(p.coords);
    const auto& terms = actual.terms();
    auto it = std::find_if(terms.begin(), terms.end(), [&](const Term& t) { return t.m == row.monomial; });
    if (it == terms.end() || it->c < row.coefficient)
      throw Error(ErrorCode::OrderMismatch,
                  "h=" + std::to_string(h) + ": tracked term " + row.term() + " is missing from the section");
    path.rows.push_back(std::move(row));
  };

  record(3, 3, 1, Monomial(), '-');
  for (std::size_t h = 4; h <= i; ++h) {
    section = lie_bracket(basis.g[0], section);
    Monomial m;
    for (std::size_t j = k + 4 - std::min(h, k + 4); j <= k; ++j)
      if (j >= 1 && chart.inverted(j)) m = m * Monomial::var(n_coord(j), static_cast<unsigned>(h + j - k - 3));
    record(h, h, 1, m, '0');
  }
  const Coord nk = n_coord(k);
  while (path.rows.back().expected > 0) {
    const PathwayRow& last = path.rows.back();
    const std::size_t h = last.h + 1;
    if (last.monomial[nk] > 0) {
      section = lie_bracket(basis.g[1], section);
      record(h, i, last.coefficient * static_cast<unsigned long>(last.monomial[nk]), last.monomial.lowered(nk), '1');
      continue;
    }
    section = lie_bracket(basis.g[0], section);
    const Poly next = fk.apply(Poly::monomial(last.monomial, last.coefficient));
    if (next.is_zero())
      throw Error(ErrorCode::OrderMismatch, "h=" + std::to_string(h) + ": tracked term dies under g0");
    const Term* pick = &next.terms().front();
    Integer best = fo.of(pick->m);
    // Terms come in decreasing grlex order, so the first minimum wins ties.
    for (const auto& t : next.terms()) {
      const Integer o = fo.of(t.m);
      if (o < best) {
        best = o;
        pick = &t;
      }
    }
    record(h, i, pick->c, pick->m, '0');
  }
  const PathwayRow& last = path.rows.back();
  path.final_is_tracked_term =
      section.shifted(p.coords) == Poly::monomial(last.monomial, last.coefficient) * basis.g[last.g_index].shifted(p.coords);
  return path;
}

}  // namespace goursat
