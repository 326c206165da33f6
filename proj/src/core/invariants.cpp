#include "goursat/invariants.hpp"

#include <algorithm>
#include <functional>

#include "goursat/error.hpp"
#include "goursat/proximity.hpp"

namespace goursat {

namespace {

using SeedFn = std::function<IntVec(std::size_t n, Symbol last)>;

// Shared driver for the three back-end recursions. `first` is the index of
// the first stored entry; entry j of a prefix of length n exists for
// first <= j <= n + 2.
IntVec run_backend(const GoursatWord& word, std::size_t first, const SeedFn& seed,
                   long r_offset) {
  std::vector<IntVec> hist;
  for (std::size_t n = 1; n <= word.length(); ++n) {
    const Symbol y = word.at(n);
    const std::size_t len = n + 3 - first;
    IntVec v = seed(n, y);
    if (v.size() > len) v.resize(len);
    auto at = [first](const IntVec& vec, std::size_t j) -> const Integer& {
      return vec.at(j - first);
    };
    for (std::size_t j = first + v.size(); j <= n + 2; ++j) {
      const IntVec& prev = hist.at(n - 2);
      switch (y) {
        case Symbol::R:
          v.push_back(Integer(r_offset) + at(prev, j - 1));
          break;
        case Symbol::V:
          v.push_back(at(prev, j - 1) + at(hist.at(n - 3), j - 2));
          break;
        case Symbol::T:
          v.push_back(2 * at(prev, j - 1) - at(hist.at(n - 3), j - 2));
          break;
      }
    }
    hist.push_back(std::move(v));
  }
  return hist.back();
}

IntVec differences(const IntVec& v) {
  IntVec d;
  for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
  return d;
}

void route_check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::RouteMismatch, "route mismatch: " + what);
}

void check_vo(const IntVec& vo, std::size_t k) {
  if (k == 0 || vo.size() != k - 1)
    throw Error(ErrorCode::InvalidInput, "VO vector must hold VO_2..VO_k");
  for (const auto& x : vo)
    if (x < 0) throw Error(ErrorCode::InvalidInput, "vertical orders must be nonnegative");
}

// S_i = sum_{j=k-i+4}^{k} (i+j-k-3) VO_j, vo[0] being VO_2.
Integer weighted_sum(const IntVec& vo, std::size_t k, std::size_t i) {
  Integer s = 0;
  for (std::size_t j = std::max<std::size_t>(3, k + 4 - i); j <= k; ++j)
    s += Integer(static_cast<unsigned long>(i + j - k - 3)) * vo[j - 2];
  return s;
}

std::size_t to_size(const Integer& x, const std::string& what) {
  if (x < 0 || x > Integer(static_cast<unsigned long>(kMaxCells)))
    throw Error(ErrorCode::ResourceBudget, what + " exceeds the cell budget");
  return x.get_ui();
}

}  // namespace

IntVec beta_backend(const GoursatWord& word) {
  return run_backend(word, 2, [](std::size_t, Symbol) { return IntVec{1, 2}; }, 1);
}

IntVec der_backend(const GoursatWord& word) {
  return run_backend(word, 3, [](std::size_t, Symbol) { return IntVec{1, 1}; }, 0);
}

IntVec der2_backend(const GoursatWord& word) {
  return run_backend(
      word, 4,
      [](std::size_t, Symbol last) { return IntVec{0, last == Symbol::V ? 1 : 0}; }, 0);
}

IntVec vo_from_mult(const IntVec& mv, std::size_t k) {
  if (k == 0 || mv.size() != k - 1)
    throw Error(ErrorCode::InvalidInput, "multiplicity vector must hold m_{k-1}..m_1");
  for (const auto& m : mv)
    if (m < 1) throw Error(ErrorCode::InvalidInput, "multiplicities must be positive");
  if (!mv.empty() && mv.front() != 1)
    throw Error(ErrorCode::InvalidInput, "m_{k-1} must equal 1");
  IntVec vo{};
  if (k >= 2) vo.push_back(0);
  // m_i = mv[k-1-i]; VO_{i+2} = m_i - m_{i+1}.
  for (std::size_t i = 1; i + 2 <= k; ++i) {
    Integer d = mv[k - 1 - i] - mv[k - 2 - i];
    if (d < 0) throw Error(ErrorCode::NonMonotone, "multiplicities must not increase");
    vo.push_back(d);
  }
  return vo;
}

IntVec mult_from_vo(const IntVec& vo, std::size_t k) {
  check_vo(vo, k);
  IntVec mv;
  Integer acc = 1;
  // m_{k-1} = 1, then m_i = m_{i+1} + VO_{i+2}.
  for (std::size_t i = k - 1; i >= 1; --i) {
    if (i + 2 <= k) acc += vo[i];
    mv.push_back(acc);
  }
  return mv;
}

Integer e_entry(const IntVec& vo, std::size_t k, const Integer& h, std::size_t i) {
  Integer v = weighted_sum(vo, k, i) - (h - Integer(static_cast<unsigned long>(i)));
  return v > 0 ? v : Integer(0);
}

IntVec b_vector(const IntVec& vo, std::size_t k) {
  check_vo(vo, k);
  IntVec b;
  for (std::size_t i = 2; i <= k + 1; ++i)
    b.push_back(Integer(static_cast<unsigned long>(i)) + weighted_sum(vo, k, i));
  return b;
}

ETable e_table(const IntVec& vo, std::size_t k) {
  const IntVec b = b_vector(vo, k);
  const std::size_t height = to_size(b.back(), "e-table height");
  if (height * (k + 1) > kMaxCells)
    throw Error(ErrorCode::ResourceBudget, "e-table exceeds the cell budget");
  std::vector<Integer> sums;
  for (std::size_t i = 2; i <= k + 1; ++i) sums.push_back(weighted_sum(vo, k, i));

  ETable t;
  t.k = k;
  t.vo = vo;
  for (std::size_t h = 2; h <= height; ++h) {
    ETableRow row;
    row.h = static_cast<unsigned long>(h);
    std::size_t zeros = 0;
    for (std::size_t i = 2; i <= std::min(h, k + 1); ++i) {
      Integer v = sums[i - 2] - Integer(static_cast<unsigned long>(h - i));
      if (v <= 0) {
        v = 0;
        ++zeros;
      }
      row.e.push_back(std::move(v));
    }
    row.sg = static_cast<unsigned long>(2 + zeros);
    t.rows.push_back(std::move(row));
  }
  return t;
}

IntVec b_from_table(const ETable& table) {
  IntVec b;
  for (std::size_t i = 2; i <= table.k + 1; ++i) {
    bool found = false;
    for (std::size_t h = i; h < table.rows.size() + 2; ++h) {
      if (table.e(h, i) == 0) {
        b.push_back(Integer(static_cast<unsigned long>(h)));
        found = true;
        break;
      }
    }
    route_check(found, "column " + std::to_string(i) + " never vanishes");
  }
  return b;
}

IntVec beta_from_b(const IntVec& b) {
  IntVec beta{Integer(1)};
  beta.insert(beta.end(), b.begin(), b.end());
  return beta;
}

IntVec sg_from_beta(const IntVec& beta) {
  if (beta.empty() || beta.front() != 1)
    throw Error(ErrorCode::InvalidInput, "beta vector must start with 1");
  for (std::size_t i = 1; i < beta.size(); ++i)
    if (beta[i] <= beta[i - 1])
      throw Error(ErrorCode::InvalidInput, "beta vector must be strictly increasing");
  const std::size_t last = to_size(beta.back(), "small growth vector length");
  IntVec sg;
  sg.reserve(last);
  std::size_t idx = 0;  // beta[idx] is beta_{idx+2}
  for (std::size_t j = 1; j <= last; ++j) {
    while (idx + 1 < beta.size() && beta[idx + 1] <= j) ++idx;
    sg.push_back(Integer(static_cast<unsigned long>(idx + 2)));
  }
  return sg;
}

// ---------------------------------------------------------------------------
// Puiseux characteristics

std::string PuiseuxCharacteristic::str() const {
  std::string s = "[" + lambda0.get_str() + ";";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) s += ",";
    s += exponents[i].get_str();
  }
  return s + "]";
}

void validate_pc(const PuiseuxCharacteristic& pc) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidPC, pc.str() + ": " + why);
  };
  if (pc.lambda0 < 1) bad("lambda0 must be positive");
  if (pc.lambda0 == 1) {
    if (!pc.exponents.empty()) bad("a smooth germ has no characteristic exponents");
    return;
  }
  if (pc.exponents.empty()) bad("missing characteristic exponents");
  Integer e = pc.lambda0;
  Integer prev = pc.lambda0;
  for (const auto& l : pc.exponents) {
    if (l <= prev) bad("exponents must increase past lambda0");
    Integer g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), l.get_mpz_t());
    if (g >= e) bad("exponent " + l.get_str() + " does not lower the gcd");
    e = g;
    prev = l;
  }
  if (e != 1) bad("gcd of the exponents must be 1");
}

namespace {

// Appends the Euclid multiset of (a, b) to out, stopping after the first 1.
// Returns true once a 1 has been emitted.
bool euclid_emit(Integer a, Integer b, IntVec& out) {
  while (b != 0) {
    Integer q = a / b;
    if (out.size() + to_size(q, "multiplicity sequence") > kMaxCells)
      throw Error(ErrorCode::ResourceBudget, "multiplicity sequence exceeds the budget");
    for (Integer c = 0; c < q; ++c) {
      out.push_back(b);
      if (b == 1) return true;
    }
    Integer r = a % b;
    a = b;
    b = r;
  }
  return false;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

IntVec multseq_from_pc(const PuiseuxCharacteristic& pc) {
  validate_pc(pc);
  if (pc.lambda0 == 1) return IntVec{Integer(1)};
  IntVec out;
  Integer e = pc.lambda0;
  Integer prev = 0;
  for (const auto& l : pc.exponents) {
    if (euclid_emit(l - prev, e, out)) break;
    e = gcd(e, l - prev);
    prev = l;
  }
  return out;
}

PuiseuxCharacteristic pc_from_multseq(const IntVec& ms) {
  if (ms.empty()) throw Error(ErrorCode::InvalidInput, "empty multiplicity sequence");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i] < 1) throw Error(ErrorCode::InvalidInput, "multiplicities must be positive");
    if (i && ms[i] > ms[i - 1])
      throw Error(ErrorCode::NonMonotone, "multiplicity sequence must not increase");
  }
  if (ms.back() != 1 || std::count(ms.begin(), ms.end(), Integer(1)) != 1)
    throw Error(ErrorCode::InvalidInput, "multiplicity sequence must end at its first 1");

  auto unrealizable = [&]() {
    return Error(ErrorCode::NotRealizable, "multiplicity sequence " + to_string(ms) +
                                               " has no Puiseux characteristic");
  };
  PuiseuxCharacteristic pc;
  pc.lambda0 = ms.front();
  Integer e = ms.front();
  Integer prev = 0;
  std::size_t pos = 0;
  while (e > 1) {
    std::size_t q = 0;
    while (pos + q < ms.size() && ms[pos + q] == e) ++q;
    if (pos + q >= ms.size()) throw unrealizable();
    const Integer& r = ms[pos + q];
    if (r >= e) throw unrealizable();
    const Integer d = Integer(static_cast<unsigned long>(q)) * e + r;
    IntVec stage;
    euclid_emit(d, e, stage);
    if (pos + stage.size() > ms.size() ||
        !std::equal(stage.begin(), stage.end(), ms.begin() + static_cast<long>(pos)))
      throw unrealizable();
    pos += stage.size();
    prev += d;
    pc.exponents.push_back(prev);
    e = gcd(e, d);
  }
  if (pos != ms.size() && !(pc.lambda0 == 1 && ms.size() == 1)) throw unrealizable();
  if (multseq_from_pc(pc) != ms) throw unrealizable();
  return pc;
}

std::size_t trailing_regular(const RvtWord& word) {
  std::size_t r = 0;
  for (std::size_t j = word.length(); j >= 1 && word.at(j) == Symbol::R; --j) ++r;
  return r;
}

IntVec multseq_of_word(const RvtWord& word, const std::optional<Integer>& m0) {
  const GoursatWord norm = goursat_normalize(word);
  const ProximityDiagram d = build_diagram(norm);
  const Integer& m1 = d.m(1);
  Integer base = d.m(0);
  if (is_goursat(word)) {
    if (m0 && *m0 != m1)
      throw Error(ErrorCode::InvalidInput, "m0 of a Goursat word must equal m1");
  } else {
    if (!m0) throw Error(ErrorCode::MissingM0, word.str() + " needs m0");
    if (*m0 <= m1) throw Error(ErrorCode::InvalidInput, "m0 of a non-Goursat word must exceed m1");
    base = *m0;
  }
  IntVec ms{base};
  for (std::size_t i = 1; i <= d.k && ms.back() != 1; ++i) ms.push_back(d.m(i));
  return ms;
}

PuiseuxCharacteristic puiseux_of_word(const RvtWord& word, const std::optional<Integer>& m0) {
  return pc_from_multseq(multseq_of_word(word, m0));
}

Integer nonholonomy_degree(const RvtWord& word) {
  return beta_backend(goursat_normalize(word)).back();
}

// ---------------------------------------------------------------------------

bool operator==(const ETable& a, const ETable& b) {
  if (a.k != b.k || a.vo != b.vo || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (a.rows[i].h != b.rows[i].h || a.rows[i].e != b.rows[i].e || a.rows[i].sg != b.rows[i].sg)
      return false;
  return true;
}

bool operator==(const InvariantBundle& a, const InvariantBundle& b) {
  return a.word == b.word && a.goursat_word == b.goursat_word && a.k == b.k &&
         a.beta == b.beta && a.der == b.der && a.der2 == b.der2 && a.sg == b.sg &&
         a.mult_vector == b.mult_vector && a.m0 == b.m0 && a.vo == b.vo && a.b == b.b &&
         a.etable == b.etable && a.puiseux == b.puiseux &&
         a.nonholonomy_degree == b.nonholonomy_degree;
}

InvariantBundle bundle(const RvtWord& word, const std::optional<Integer>& m0) {
  const GoursatWord norm = goursat_normalize(word);
  const std::size_t k = word.length();

  InvariantBundle out;
  out.word = word.str();
  out.goursat_word = norm.str();
  out.k = k;

  // Back-end route.
  out.beta = beta_backend(norm);
  out.der = der_backend(norm);
  out.der2 = der2_backend(norm);
  route_check(out.der == differences(out.beta), "der is not the difference of beta");
  route_check(out.der2 == differences(out.der), "der2 is not the difference of der");

  // Front-end route.
  const ProximityDiagram diagram = build_diagram(norm);
  const IntVec front = derived_frontend(norm);
  route_check(front == out.der, "front-end der " + to_string(front) + " vs back-end " +
                                    to_string(out.der));
  IntVec beta_front{Integer(1)};
  for (std::size_t i = 0; i < front.size(); ++i) beta_front.push_back(beta_front.back() + front[i]);
  route_check(beta_front == out.beta, "front-end beta");
  out.mult_vector = multiplicity_vector(diagram);
  route_check(IntVec(front.begin() + 1, front.end()) == out.mult_vector,
              "multiplicity vector vs derived vector");

  // Vertical orders, e-table and b-vector route.
  out.vo = vo_from_mult(out.mult_vector, k);
  route_check(mult_from_vo(out.vo, k) == out.mult_vector, "accumulation of vertical orders");
  if (!out.vo.empty()) {
    IntVec reversed(out.vo.rbegin(), out.vo.rend() - 1);
    route_check(reversed == IntVec(out.der2.begin() + 1, out.der2.end()),
                "vertical orders vs second derived vector");
  }
  out.b = b_vector(out.vo, k);
  route_check(beta_from_b(out.b) == out.beta, "beta from b " + to_string(beta_from_b(out.b)) +
                                                  " vs back-end " + to_string(out.beta));
  out.etable = e_table(out.vo, k);
  route_check(b_from_table(out.etable) == out.b, "first-zero scan of the e-table");
  out.sg = sg_from_beta(out.beta);
  for (const auto& row : out.etable.rows)
    route_check(row.sg == out.sg.at(row.h.get_ui() - 1), "e-table SG at h=" + row.h.get_str());

  out.m0 = diagram.m(0);
  if (!is_goursat(word)) {
    if (!m0) throw Error(ErrorCode::MissingM0, word.str() + " needs m0");
    out.m0 = *m0;
    out.vo[0] = *m0 - diagram.m(1);
  }
  out.puiseux = puiseux_of_word(word, is_goursat(word) ? std::nullopt : m0);
  out.nonholonomy_degree = out.beta.back();

  const bool has_critical = std::any_of(word.symbols().begin(), word.symbols().end(), is_critical);
  if (has_critical) {
    route_check(!out.puiseux.exponents.empty() &&
                    out.puiseux.exponents.back() + static_cast<unsigned long>(trailing_regular(word)) ==
                        out.nonholonomy_degree,
                "lambda_g + r vs degree of nonholonomy");
  }
  return out;
}

}  // namespace goursat
