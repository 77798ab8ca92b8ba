#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace c4ex {

// Exact rational in canonical form: gcd(num, den) = 1 and den > 0.
// Thin value type over mpq_class; every operation canonicalizes.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral T>
  BigRational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      v_ = static_cast<long>(value);
    } else {
      v_ = static_cast<unsigned long>(value);
    }
  }

  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(const mpz_class& value) : v_(value) {}
  explicit BigRational(mpq_class value);

  // Accepts integers, fractions and plain decimals ("7", "-7/2",
  // "0.210375"). Throws std::invalid_argument otherwise.
  static BigRational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return v_.get_d(); }

  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  // Always "p/q" (denominator 1 included); the bit-exact wire form.
  std::string fraction_str() const;

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.str(); }

 private:
  mpq_class v_;
};

BigRational abs(const BigRational& x);
BigRational pow(const BigRational& base, unsigned exponent);

// Generalized binomial x(x-1)/2 on the reals.
BigRational binom2(const BigRational& x);

// floor(sqrt(n)) for n >= 0.
mpz_class isqrt(const mpz_class& n);
std::int64_t isqrt(std::int64_t n);

}  // namespace c4ex
