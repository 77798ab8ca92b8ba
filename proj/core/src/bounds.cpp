#include "c4ex/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "c4ex/gf.hpp"

namespace c4ex {
namespace {

__extension__ using Int128 = __int128;

BigRational center_edges(std::int64_t q) { return BigRational(q) * (q + 1) * (q + 1) / 2; }

// eps as a small fraction for the hot membership loops.
struct SmallFraction {
  Int128 num;
  Int128 den;
};

SmallFraction small(const BigRational& x) {
  if (!x.numerator().fits_slong_p() || !x.denominator().fits_slong_p()) {
    throw std::invalid_argument("eps=" + x.str() + " has too large a numerator or denominator");
  }
  return {x.numerator().get_si(), x.denominator().get_si()};
}

// Does lo_mult * eps * q <= r <= hi_num/hi_den * q hold?
bool in_window(std::int64_t r, std::int64_t q, const SmallFraction& eps, int lo_mult, int hi_num, int hi_den) {
  if (q <= 0) return false;
  return static_cast<Int128>(lo_mult) * eps.num * q <= static_cast<Int128>(r) * eps.den &&
         static_cast<Int128>(r) * hi_den <= static_cast<Int128>(hi_num) * q;
}

void require_positive_eps(const BigRational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
}

}  // namespace

std::string_view to_string(IntervalClass c) {
  switch (c) {
    case IntervalClass::kMinus:
      return "minus";
    case IntervalClass::kCenter:
      return "center";
    case IntervalClass::kPlus:
      return "plus";
  }
  return "?";
}

IntervalPosition interval_of(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("interval_of: n must be positive");
  IntervalPosition pos;
  pos.n = n;
  pos.q = isqrt(n - 1);
  pos.r = n - (pos.q * pos.q + pos.q + 1);
  pos.cls = pos.r < 0 ? IntervalClass::kMinus : (pos.r == 0 ? IntervalClass::kCenter : IntervalClass::kPlus);
  return pos;
}

ReimanBound reiman_upper(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("reiman_upper: n must be positive");
  ReimanBound b;
  b.value = static_cast<double>(n) / 4.0 * (1.0 + std::sqrt(4.0 * static_cast<double>(n) - 3.0));
  // floor((n + n sqrt(4n-3)) / 4) = floor((n + floor(sqrt(n^2 (4n-3)))) / 4).
  const mpz_class nn(static_cast<long>(n));
  const mpz_class root = isqrt(nn * nn * (4 * nn - 3));
  mpz_class fl;
  mpz_class numer = nn + root;
  mpz_fdiv_q_ui(fl.get_mpz_t(), numer.get_mpz_t(), 4);
  b.floor = fl.get_si();
  return b;
}

Bound thm3_upper(std::int64_t q, std::int64_t r) {
  Bound b;
  b.applicable = r >= 1 && 100 * r <= q;
  b.value = center_edges(q) - BigRational(23, 25) * r * q;
  return b;
}

Bound thm5_upper(std::int64_t q, std::int64_t r) {
  Bound b;
  b.applicable = r >= 1 && 5 * r <= 3 * q;
  const BigRational alt = BigRational(2 * r) - BigRational(3, 10) * q;
  const BigRational extra = alt > BigRational(r) ? alt : BigRational(r);
  b.value = (BigRational(q * q + q + 1) + extra) * (q + 1) / 2;
  return b;
}

Bound eq8_upper(std::int64_t q, std::int64_t r, const BigRational& eps, const BigRational& c_lo,
                const BigRational& c_hi) {
  Bound b;
  b.applicable = eps.sign() > 0 && eps < BigRational(1) && c_lo / eps <= BigRational(r) &&
                 BigRational(r) <= c_hi * eps * q;
  b.value = center_edges(q) - (BigRational(1) - eps) * r * q;
  return b;
}

Bound furedi_upper(std::int64_t q) { return Bound{q >= 14, center_edges(q)}; }

Bound brown_lower(std::int64_t q) { return Bound{is_prime_power(q).has_value(), center_edges(q)}; }

Bound deletion_lower(std::int64_t q, std::int64_t r) {
  return Bound{is_prime_power(q).has_value() && r >= 0 && r <= q + 1, center_edges(q) - BigRational(r) * q};
}

double erdos_value(std::int64_t n) {
  const double x = static_cast<double>(n);
  return 0.5 * x * std::sqrt(x) + 0.25 * x;
}

long double eq5_residual(std::int64_t q, std::int64_t r) {
  const long double n = static_cast<long double>(q * q + q + 1 + r);
  const long double lq = static_cast<long double>(q);
  return 0.5L * n * std::sqrt(n) + 0.25L * n - (0.5L * lq * (lq + 1) * (lq + 1) + 0.75L * r * lq);
}

bool below_erdos_with_gap(const BigRational& bound, std::int64_t n, const BigRational& eps) {
  const BigRational twice = (bound - (BigRational(1, 4) - eps) * n) * 2;
  if (twice.sign() <= 0) return true;
  const BigRational n3 = pow(BigRational(n), 3);
  return twice * twice <= n3;
}

bool n1_member(std::int64_t n, const BigRational& eps) {
  require_positive_eps(eps);
  const auto pos = interval_of(n);
  return in_window(-pos.r, pos.q, small(eps), 6, 1, 100);
}

bool n2_member(std::int64_t n, const BigRational& eps) {
  require_positive_eps(eps);
  const auto pos = interval_of(n);
  return in_window(pos.r, pos.q, small(eps), 5, 3, 10);
}

Densities density_scan(std::int64_t N, const BigRational& eps) {
  require_positive_eps(eps);
  if (N < 1) throw std::invalid_argument("density_scan: N must be positive");
  const auto e = small(eps);
  Densities d;
  for (std::int64_t q = 1; q * q + 1 <= N; ++q) {
    const std::int64_t center = q * q + q + 1;
    // r in [ceil(lo_mult eps q), floor(hi q)], clipped to the block and to N.
    auto count = [&](int lo_mult, int hi_num, int hi_den, int side) {
      const Int128 lo_num = static_cast<Int128>(lo_mult) * e.num * q;
      std::int64_t r_lo = static_cast<std::int64_t>((lo_num + e.den - 1) / e.den);
      std::int64_t r_hi = static_cast<std::int64_t>(static_cast<Int128>(hi_num) * q / hi_den);
      r_lo = std::max<std::int64_t>(r_lo, 1);
      r_hi = std::min(r_hi, q);
      if (side < 0) {
        r_lo = std::max(r_lo, center - N);  // n = center - r <= N
      } else {
        r_hi = std::min(r_hi, N - center);
      }
      return r_hi >= r_lo ? r_hi - r_lo + 1 : std::int64_t{0};
    };
    d.n1_count += count(6, 1, 100, -1);
    d.n2_count += count(5, 3, 10, +1);
  }
  d.n1 = BigRational(d.n1_count) / N;
  d.n2 = BigRational(d.n2_count) / N;
  return d;
}

long double h_gap_check(std::int64_t n) {
  auto h = [](long double x) { return x / 4.0L * (1.0L + std::sqrt(4.0L * x - 3.0L)); };
  const long double x = static_cast<long double>(n);
  return h(x + 1) - h(x) - 0.75L * std::sqrt(x);
}

BoundReport best_bounds(std::int64_t n, const BoundsConfig& config) {
  BoundReport rep;
  rep.n = n;
  rep.position = interval_of(n);
  rep.reiman = reiman_upper(n);
  rep.erdos_conj = erdos_value(n);

  const auto& pos = rep.position;
  const std::int64_t q = pos.q;
  rep.thm3 = thm3_upper(q, -pos.r);
  rep.thm5 = thm5_upper(q, pos.r);
  if (config.eq8_eps) {
    rep.eq8 = eq8_upper(q, -pos.r, *config.eq8_eps, config.eq8_c_lo, config.eq8_c_hi);
  }
  rep.furedi = furedi_upper(q);
  rep.furedi.applicable = rep.furedi.applicable && pos.cls == IntervalClass::kCenter;
  rep.brown_lower = brown_lower(q);
  rep.brown_lower.applicable = rep.brown_lower.applicable && pos.cls == IntervalClass::kCenter && q >= 1;

  // The deletion construction reaches n from the block center c = q'^2+q'+1
  // with q' = floor(sqrt(n)) whenever c - n is in [0, q'+1].
  rep.deletion_q = isqrt(n);
  rep.deletion_r = rep.deletion_q * rep.deletion_q + rep.deletion_q + 1 - n;
  rep.deletion_lower = deletion_lower(rep.deletion_q, rep.deletion_r);

  rep.best_upper = {rep.reiman.floor, "reiman"};
  auto offer_upper = [&](const Bound& b, bool allowed, const char* source) {
    if (b.applicable && allowed && b.floor() < rep.best_upper.value) rep.best_upper = {b.floor(), source};
  };
  const bool asymptotic = q >= config.asymptotic_q_min;
  offer_upper(rep.furedi, true, "furedi");
  offer_upper(rep.thm3, asymptotic, "thm3");
  offer_upper(rep.thm5, asymptotic, "thm5");
  offer_upper(rep.eq8, asymptotic && config.eq8_in_best, "eq8");

  auto offer_lower = [&](const Bound& b, const char* source) {
    if (!b.applicable) return;
    // Lower bounds are edge counts of constructions, hence integers.
    const std::int64_t v = b.value.floor().get_si();
    if (!rep.best_lower || v > rep.best_lower->value) rep.best_lower = SourcedBound{v, source};
  };
  offer_lower(rep.brown_lower, "brown");
  offer_lower(rep.deletion_lower, "deletion");
  return rep;
}

}  // namespace c4ex
