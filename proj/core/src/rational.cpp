#include "c4ex/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace c4ex {

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

BigRational::BigRational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) fail();
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    }
    return mpz_class(std::string(text.substr(from, to - from)), 10);
  };

  BigRational out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = digits(pos, slash);
    mpz_class den = digits(slash + 1, text.size());
    if (den == 0) fail();
    out = BigRational(mpq_class(num, den));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    mpz_class whole = dot > pos ? digits(pos, dot) : mpz_class(0);
    mpz_class frac = digits(dot + 1, text.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, text.size() - dot - 1);
    out = BigRational(mpq_class(whole * scale + frac, scale));
  } else {
    out = BigRational(digits(pos, text.size()));
  }
  return negative ? -out : out;
}

mpz_class BigRational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class BigRational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string BigRational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string BigRational::fraction_str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  v_ += o.v_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  v_ -= o.v_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  v_ *= o.v_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.sign() == 0) throw std::domain_error("BigRational: division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-v_)); }

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

BigRational pow(const BigRational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return BigRational(mpq_class(num, den));
}

BigRational binom2(const BigRational& x) { return x * (x - 1) / 2; }

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return mpz_class(isqrt(mpz_class(static_cast<long>(n)))).get_si();
}

}  // namespace c4ex
