#include "c4ex/mpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace c4ex {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly run() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("MPoly::parse: " + why + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MPoly expr() {
    MPoly acc;
    bool first = true;
    for (;;) {
      const char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        return acc;
      }
      MPoly t = term();
      acc += negate ? -t : t;
      first = false;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '/') {
        ++pos_;
        const MPoly d = factor();
        if (d.is_zero() || d.terms().size() != 1 || d.terms().begin()->first != MPoly::Exponents{0, 0, 0}) {
          fail("division only by a nonzero constant");
        }
        acc *= MPoly(BigRational(1) / d.terms().begin()->second);
        continue;
      }
      if (c == '*') {
        ++pos_;
      } else if (!(c == '(' || c == '.' || std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'r' ||
                   c == 's')) {
        return acc;
      }
      acc *= factor();
    }
  }

  MPoly factor() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'q' || c == 'r' || c == 's') {
      ++pos_;
      return MPoly::var(c == 'q' ? MPoly::kQ : (c == 'r' ? MPoly::kR : MPoly::kS));
    }
    if (c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return MPoly(BigRational::parse(text_.substr(start, pos_ - start)));
    }
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<BigRational> powers(const BigRational& x, unsigned max) {
  std::vector<BigRational> out(max + 1);
  out[0] = 1;
  for (unsigned i = 1; i <= max; ++i) out[i] = out[i - 1] * x;
  return out;
}

}  // namespace

MPoly::MPoly(const BigRational& c) {
  if (c.sign() != 0) terms_.emplace(Exponents{0, 0, 0}, c);
}

MPoly MPoly::var(Var v) {
  Exponents e{0, 0, 0};
  e[v] = 1;
  return monomial(BigRational(1), e);
}

MPoly MPoly::monomial(const BigRational& c, Exponents e) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

MPoly MPoly::parse(std::string_view text) { return Parser(text).run(); }

void MPoly::add_term(const Exponents& e, const BigRational& c) {
  if (c.sign() == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.sign() == 0) terms_.erase(it);
  }
}

BigRational MPoly::coefficient(Exponents e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

MPoly MPoly::coefficient_of(Var v, unsigned power) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] != power) continue;
    Exponents rest = e;
    rest[v] = 0;
    out.add_term(rest, c);
  }
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  std::vector<MPoly> value_pow{MPoly(1)};
  MPoly out;
  for (const auto& [e, c] : terms_) {
    while (value_pow.size() <= e[v]) value_pow.push_back(value_pow.back() * value);
    Exponents rest = e;
    rest[v] = 0;
    out += monomial(c, rest) * value_pow[e[v]];
  }
  return out;
}

BigRational MPoly::eval(const BigRational& q, const BigRational& r, const BigRational& s) const {
  const auto pq = powers(q, degree(kQ));
  const auto pr = powers(r, degree(kR));
  const auto ps = powers(s, degree(kS));
  BigRational acc;
  for (const auto& [e, c] : terms_) acc += c * pq[e[0]] * pr[e[1]] * ps[e[2]];
  return acc;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  MPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  static constexpr char kNames[3] = {'q', 'r', 's'};
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    const BigRational mag = abs(c);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kNames[v];
      if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == BigRational(1)) {
      out += mono;
    } else {
      out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
      out += '*' + mono;
    }
  }
  return out;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace c4ex
