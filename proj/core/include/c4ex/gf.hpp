#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace c4ex {

struct PrimePower {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Returns (p, k) with n = p^k, or nullopt. Total: n < 2 yields nullopt.
std::optional<PrimePower> is_prime_power(std::int64_t n);

// Table-based fields are capped at this order.
inline constexpr std::int64_t kMaxFieldOrder = std::int64_t{1} << 14;

class FieldSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// GF(p^k) with elements encoded as dense indices 0..q-1. Index i stands for
// the polynomial sum_j c_j x^j over GF(p) where i = sum_j c_j p^j, so 0 and 1
// are the additive and multiplicative identities and for k = 1 the index is
// the residue itself.
//
// Multiplication uses log/antilog tables over a fixed primitive element;
// addition uses Zech logarithms. Immutable after construction.
class FieldTable {
 public:
  using Element = std::uint32_t;

  const PrimePower& order() const { return pp_; }
  std::int64_t size() const { return pp_.q; }
  std::int64_t characteristic() const { return pp_.p; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;  // throws std::domain_error for 0
  Element pow(Element a, std::uint64_t e) const;

  // Coefficients c_0..c_k (low to high) of the monic defining polynomial.
  std::span<const int> modulus() const { return modulus_; }
  Element primitive_element() const { return exp_[1 % exp_.size()]; }

 private:
  friend FieldTable make_field(const PrimePower& pp);

  PrimePower pp_;
  std::vector<int> modulus_;
  std::vector<Element> exp_;      // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::int32_t> log_; // log_[a] for a != 0; log_[0] = -1
  std::vector<std::int32_t> zech_;// zech_[i] = log(1 + g^i), -1 when 1 + g^i = 0
  std::vector<Element> neg_;
};

// Builds GF(q) from the lexicographically least monic irreducible polynomial
// of degree k over GF(p) (coefficients compared from x^{k-1} down to x^0).
// Throws FieldSizeError when q > kMaxFieldOrder and std::invalid_argument
// when pp is not a valid prime power.
FieldTable make_field(const PrimePower& pp);

}  // namespace c4ex
