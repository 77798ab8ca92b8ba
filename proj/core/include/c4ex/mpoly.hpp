#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "c4ex/rational.hpp"

namespace c4ex {

// Sparse polynomial in q, r, s with exact rational coefficients. Zero
// coefficients are never stored, so structural equality is polynomial
// equality.
class MPoly {
 public:
  enum Var { kQ = 0, kR = 1, kS = 2 };
  using Exponents = std::array<unsigned, 3>;
  using Terms = std::map<Exponents, BigRational>;

  MPoly() = default;
  MPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  MPoly(T c) : MPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(Var v);
  static MPoly monomial(const BigRational& c, Exponents e);

  // Parses expressions over q, r, s with + - * ^, division by constants,
  // parentheses, integers and plain decimals, e.g.
  // "q^4*(-0.2*r - 0.2) + 6.6*q^3*r^2". Juxtaposition ("6.6q^3 r") is read
  // as multiplication. Throws std::invalid_argument.
  static MPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coefficient(Exponents e) const;
  unsigned degree(Var v) const;

  // Coefficient of v^power, as a polynomial in the other variables.
  MPoly coefficient_of(Var v, unsigned power) const;
  MPoly substitute(Var v, const MPoly& value) const;
  BigRational eval(const BigRational& q, const BigRational& r, const BigRational& s) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // Terms in decreasing lexicographic (q, r, s) order, e.g. "q^2 + q - 4*r - 8".
  std::string str() const;

 private:
  void add_term(const Exponents& e, const BigRational& c);
  Terms terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

}  // namespace c4ex
