#include "c4ex/gf.hpp"

#include <string>

namespace c4ex {
namespace {

using Poly = std::vector<int>;  // coefficients low to high over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::int64_t index, std::int64_t p, std::int64_t k) {
  Poly out(static_cast<std::size_t>(k));
  for (auto& c : out) {
    c = static_cast<int>(index % p);
    index /= p;
  }
  return out;
}

std::int64_t index_of(const Poly& digits, std::int64_t p) {
  std::int64_t index = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) index = index * p + *it;
  return index;
}

Poly monic_from_index(std::int64_t low, std::int64_t p, std::int64_t degree) {
  Poly f = digits_of(low, p, degree);
  f.push_back(1);
  return f;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::int64_t k = static_cast<std::int64_t>(f.size()) - 1;
  for (std::int64_t d = 1; d <= k / 2; ++d) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t low = 0; low < count; ++low) {
      if (poly_mod(f, monic_from_index(low, p, d), static_cast<int>(p)).empty()) return false;
    }
  }
  return true;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  Poly r = poly_mod(std::move(prod), modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

}  // namespace

std::optional<PrimePower> is_prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1, n};
  std::int64_t m = n;
  std::int64_t k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, k, n};
}

FieldTable make_field(const PrimePower& pp) {
  auto check = is_prime_power(pp.q);
  if (!check || *check != pp) {
    throw std::invalid_argument("make_field: not a prime power (p=" + std::to_string(pp.p) +
                                ", k=" + std::to_string(pp.k) + ", q=" + std::to_string(pp.q) + ")");
  }
  if (pp.q > kMaxFieldOrder) {
    throw FieldSizeError("make_field: q=" + std::to_string(pp.q) + " exceeds table cap " +
                         std::to_string(kMaxFieldOrder));
  }

  const std::int64_t p = pp.p;
  const std::int64_t k = pp.k;
  const std::int64_t q = pp.q;
  const int ip = static_cast<int>(p);

  FieldTable field;
  field.pp_ = pp;

  if (k == 1) {
    field.modulus_ = {0, 1};
  } else {
    for (std::int64_t low = 0; low < q; ++low) {
      Poly f = monic_from_index(low, p, k);
      if (is_irreducible(f, p)) {
        field.modulus_ = std::move(f);
        break;
      }
    }
  }
  const Poly& modulus = field.modulus_;

  // Smallest element index whose multiplicative order is q - 1.
  const std::int64_t group = q - 1;
  std::vector<FieldTable::Element> powers;
  for (std::int64_t g = 1; g < q; ++g) {
    const Poly gd = digits_of(g, p, k);
    powers.assign(1, 1);
    Poly cur = digits_of(1, p, k);
    for (std::int64_t i = 1; i < group; ++i) {
      cur = mul_mod(cur, gd, modulus, ip);
      const auto idx = static_cast<FieldTable::Element>(index_of(cur, p));
      if (idx == 1) break;
      powers.push_back(idx);
    }
    if (static_cast<std::int64_t>(powers.size()) == group) break;
  }
  field.exp_ = powers;

  field.log_.assign(static_cast<std::size_t>(q), -1);
  for (std::int64_t i = 0; i < group; ++i) field.log_[field.exp_[i]] = static_cast<std::int32_t>(i);

  field.neg_.resize(static_cast<std::size_t>(q));
  for (std::int64_t a = 0; a < q; ++a) {
    Poly d = digits_of(a, p, k);
    for (auto& c : d) c = (ip - c) % ip;
    field.neg_[a] = static_cast<FieldTable::Element>(index_of(d, p));
  }

  field.zech_.resize(static_cast<std::size_t>(group));
  for (std::int64_t i = 0; i < group; ++i) {
    Poly d = digits_of(field.exp_[i], p, k);
    d[0] = (d[0] + 1) % ip;
    const std::int64_t sum = index_of(d, p);
    field.zech_[i] = sum == 0 ? -1 : field.log_[sum];
  }
  return field;
}

FieldTable::Element FieldTable::add(Element a, Element b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::int64_t group = pp_.q - 1;
  const std::int64_t la = log_[a];
  const std::int64_t diff = ((log_[b] - la) % group + group) % group;
  const std::int32_t z = zech_[diff];
  if (z < 0) return 0;
  return exp_[(la + z) % group];
}

FieldTable::Element FieldTable::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::int64_t>(log_[a]) + log_[b]) % (pp_.q - 1)];
}

FieldTable::Element FieldTable::inv(Element a) const {
  if (a == 0) throw std::domain_error("FieldTable::inv: zero has no inverse");
  const std::int64_t group = pp_.q - 1;
  return exp_[(group - log_[a]) % group];
}

FieldTable::Element FieldTable::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = static_cast<std::uint64_t>(pp_.q - 1);
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

}  // namespace c4ex
