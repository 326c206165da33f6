#include "goursat/poly.hpp"

#include <algorithm>

#include "goursat/error.hpp"

namespace goursat {

Monomial Monomial::var(std::size_t v, unsigned power) {
  if (v >= kMaxVars) throw Error(ErrorCode::IndexRange, "variable index out of range");
  Monomial m;
  m.e_[v] = static_cast<std::uint16_t>(power);
  m.deg_ = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
  m.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  m.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
  return m;
}

Monomial Monomial::lowered(std::size_t v) const {
  Monomial m = *this;
  --m.e_[v];
  --m.deg_;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = deg_;
  for (auto x : e_) h = h * 1000003u ^ x;
  return h;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
  return a.e_ < b.e_;
}

namespace {

bool term_before(const Term& a, const Term& b) { return grlex_less(b.m, a.m); }

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::var(std::size_t v) { return monomial(Monomial::var(v)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return 0;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }),
            out.end());
  terms_ = std::move(out);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].m, a[i].m))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].m, b[j].m)) {
      out.push_back(b[j++]);
      if (negate_b) out.back().c = -out.back().c;
    } else {
      Rational c = a[i].c;
      if (negate_b) c -= b[j].c;
      else c += b[j].c;
      if (c != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.size() == 1) return a.times(b.terms_[0].m, b.terms_[0].c);
  if (a.size() == 1) return b.times(a.terms_[0].m, a.terms_[0].c);
  Poly p;
  p.terms_.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) p.terms_.push_back({x.m * y.m, x.c * y.c});
  p.normalize();
  return p;
}

Poly Poly::times(const Monomial& m, const Rational& c) const {
  Poly p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the grlex order.
  for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c * c});
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Poly Poly::derivative(std::size_t v) const {
  Poly p;
  for (const auto& t : terms_) {
    const unsigned e = t.m[v];
    if (e == 0) continue;
    p.terms_.push_back({t.m.lowered(v), t.c * static_cast<unsigned long>(e)});
  }
  p.normalize();
  return p;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (std::size_t i = 0; i < kMaxVars && v != 0; ++i) {
      const unsigned e = t.m[i];
      if (e == 0) continue;
      if (i >= point.size()) throw Error(ErrorCode::VariableMismatch, "point has too few coordinates");
      Rational x = point[i];
      for (unsigned k = 0; k < e; ++k) v *= x;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::shifted(const std::vector<Rational>& shift) const {
  Poly cur = *this;
  for (std::size_t v = 0; v < shift.size() && v < kMaxVars; ++v) {
    if (shift[v] == 0) continue;
    Poly next;
    for (const auto& t : cur.terms_) {
      const unsigned e = t.m[v];
      if (e == 0) {
        next.terms_.push_back(t);
        continue;
      }
      Monomial rest = t.m;
      for (unsigned i = 0; i < e; ++i) rest = rest.lowered(v);
      // (x + s)^e = sum_i C(e, i) s^(e-i) x^i
      Integer binom = 1;
      for (unsigned i = 0; i <= e; ++i) {
        Rational s_pow = 1;
        for (unsigned q = 0; q < e - i; ++q) s_pow *= shift[v];
        next.terms_.push_back({rest * Monomial::var(v, i), t.c * Rational(binom) * s_pow});
        binom = binom * (e - i) / (i + 1);
      }
    }
    next.normalize();
    cur = std::move(next);
  }
  return cur;
}

Poly Poly::truncated(unsigned max_degree) const {
  Poly p;
  for (const auto& t : terms_)
    if (t.m.degree() <= max_degree) p.terms_.push_back(t);
  return p;
}

bool Poly::divisible_by(const Monomial& m) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return m.divides(t.m); });
}

Poly Poly::divided(const Monomial& m) const {
  if (!divisible_by(m))
    throw Error(ErrorCode::NonExactDivision,
                "polynomial " + str() + " is not divisible by " + term_str({m, 1}));
  Poly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m / m, t.c});
  return p;
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + t.m.hash();
    h = h * 31 + mpz_get_si(t.c.get_num_mpz_t());
    h = h * 31 + mpz_get_si(t.c.get_den_mpz_t());
  }
  return h;
}

std::string default_var_name(std::size_t v) {
  if (v == 0) return "r0";
  return "n" + std::to_string(v - 1);
}

std::string term_str(const Term& t, const VarNamer& names) {
  std::string mono;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    const unsigned e = t.m[v];
    if (e == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += names ? names(v) : default_var_name(v);
    if (e > 1) mono += "^" + std::to_string(e);
  }
  if (mono.empty()) return t.c.get_str();
  if (t.c == 1) return mono;
  if (t.c == -1) return "-" + mono;
  return t.c.get_str() + "*" + mono;
}

std::string Poly::str(const VarNamer& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string t = term_str(terms_[i], names);
    if (i == 0)
      s = t;
    else if (t[0] == '-')
      s += " - " + t.substr(1);
    else
      s += " + " + t;
  }
  return s;
}

}  // namespace goursat
