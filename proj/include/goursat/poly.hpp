#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "goursat/numeric.hpp"

namespace goursat {

// r0, n0, n1, ..., n16.
inline constexpr std::size_t kMaxVars = 18;

class Monomial {
 public:
  Monomial() { e_.fill(0); }
  static Monomial var(std::size_t v, unsigned power = 1);

  unsigned operator[](std::size_t v) const { return e_[v]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  // Same monomial with the exponent of v lowered by one; v must occur.
  Monomial lowered(std::size_t v) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  std::size_t hash() const;

  // Graded lexicographic order over (r0, n0, ..., nk).
  friend bool grlex_less(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint16_t, kMaxVars> e_;
  std::uint16_t deg_ = 0;
};

struct Term {
  Monomial m;
  Rational c;
};

using VarNamer = std::function<std::string(std::size_t)>;

// Terms are kept sorted by decreasing graded-lex monomial with no zero
// coefficients, so equal polynomials have equal term lists.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(std::size_t v);
  static Poly monomial(const Monomial& m, const Rational& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (size() == 1 && terms_[0].m.is_one()); }
  bool is_monomial() const { return size() == 1; }
  const Term& leading() const { return terms_.front(); }
  Rational constant_term() const;
  unsigned degree() const { return terms_.empty() ? 0 : terms_.front().m.degree(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly times(const Monomial& m, const Rational& c = 1) const;

  bool operator==(const Poly& o) const;

  Poly derivative(std::size_t v) const;
  Rational eval(const std::vector<Rational>& point) const;
  // Substitutes x_v -> x_v + shift[v].
  Poly shifted(const std::vector<Rational>& shift) const;
  // Drops every term of degree above max_degree.
  Poly truncated(unsigned max_degree) const;
  bool divisible_by(const Monomial& m) const;
  Poly divided(const Monomial& m) const;  // NonExactDivision unless divisible_by(m)

  std::size_t hash() const;
  std::string str(const VarNamer& names = {}) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// "r0", "n0", "n3", ...
std::string default_var_name(std::size_t v);
// "n5^4*n6", "1", "-24*n4*n5^4*n6".
std::string term_str(const Term& t, const VarNamer& names = {});

}  // namespace goursat
