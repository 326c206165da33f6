#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goursat/codeword.hpp"
#include "goursat/poly.hpp"

namespace goursat {

// A polynomial vector field: one coefficient per coordinate partial
// d/dr0 (= f_0), d/dn0 (= v_0), ..., d/dnk (= v_k).
class VField {
 public:
  VField() = default;
  explicit VField(std::size_t num_coords) : c_(num_coords) {}
  static VField partial(std::size_t num_coords, Coord c);

  std::size_t num_coords() const { return c_.size(); }
  const Poly& operator[](Coord c) const { return c_.at(c); }
  Poly& operator[](Coord c) { return c_.at(c); }
  const std::vector<Poly>& components() const { return c_; }

  bool is_zero() const;
  // Lie derivative X(a).
  Poly apply(const Poly& a) const;
  std::vector<Rational> eval(const std::vector<Rational>& point) const;

  VField operator-() const;
  VField& operator+=(const VField& o);
  VField& operator-=(const VField& o);
  friend VField operator+(VField a, const VField& b) { return a += b; }
  friend VField operator-(VField a, const VField& b) { return a -= b; }
  friend VField operator*(const Poly& a, const VField& x);
  VField divided(const Monomial& m) const;
  VField shifted(const std::vector<Rational>& shift) const;
  VField truncated(unsigned max_degree) const;

  bool operator==(const VField& o) const { return c_ == o.c_; }
  std::size_t hash() const;
  // Coordinate-partial form, e.g. "n1*d/dn0 + d/dr0".
  std::string str() const;

 private:
  std::vector<Poly> c_;
};

// VariableMismatch if the fields live on different charts.
VField lie_bracket(const VField& x, const VField& y);

struct Generator {
  enum Kind : char { F = 'f', V = 'v' } kind;
  std::size_t index;

  bool operator==(const Generator&) const = default;
  std::string str() const { return std::string(1, static_cast<char>(kind)) + std::to_string(index); }
};

struct StdFields {
  std::vector<VField> f;  // f_0..f_k
  std::vector<VField> v;  // v_0..v_k

  const VField& get(const Generator& g) const { return g.kind == Generator::F ? f.at(g.index) : v.at(g.index); }
};

StdFields std_fields(const Chart& chart);

// Monomials of the chart; IndexRange outside 1 <= i <= j <= k (a) or
// 0 <= i < j <= k (b).
Poly a_coeff(const Chart& chart, std::size_t i, std::size_t j);
Poly b_coeff(const Chart& chart, std::size_t i, std::size_t j);

// x = coefficient * generator, if x is a polynomial multiple of a single
// standard field.
std::optional<std::pair<Poly, Generator>> as_single_generator(const VField& x,
                                                              const StdFields& fields);
// "0", "v0", "-n4*n5*f2"; falls back to the coordinate-partial form.
std::string render_in_generators(const VField& x, const StdFields& fields);

struct BracketTable {
  std::vector<std::string> rows;  // v0..vk, f0..fk
  std::vector<std::string> cols;  // f0..fk
  std::vector<std::vector<std::string>> cells;

  std::string str() const;
};

BracketTable bracket_table(const Chart& chart);

struct GBasis {
  std::vector<VField> g;         // g_0..g_{k+1}
  std::vector<int> sign;         // g_i = sign[i] * gen[i]
  std::vector<Generator> gen;
  std::vector<Monomial> divisor;  // g_{i+1} = [g_0, g_i] / divisor[i+1]
};

// NonExactDivision if a bracket is not divisible by its predicted monomial
// or the quotient is not a signed standard field.
GBasis g_basis(const Chart& chart, const StdFields& fields);
GBasis g_basis(const Chart& chart);

// Divisor monomial prod_{h = k-i+3, h in IP}^{k} n_h.
Monomial g_divisor(const Chart& chart, std::size_t i);

// Coefficients c_0..c_{k+1} with x = sum c_i g_i.
std::vector<Poly> g_decompose(const Chart& chart, const GBasis& basis, const VField& x);

// True iff x is annihilated by dd_i - n_i dr_i for i = 1..imax.
bool annihilator_check(const Chart& chart, const VField& x, std::size_t imax);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct StructureReport {
  std::string chart;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t failures() const;
};

StructureReport verify_structure(const Chart& chart, std::uint64_t seed = 1);

// Every chart of length k, in o < i lexicographic order.
std::vector<Chart> all_charts(std::size_t k);

}  // namespace goursat
