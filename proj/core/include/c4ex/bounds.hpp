#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "c4ex/rational.hpp"

namespace c4ex {

// The integers are partitioned into blocks I_q = {q^2+1, ..., (q+1)^2}, each
// split around its center q^2+q+1.
enum class IntervalClass { kMinus, kCenter, kPlus };
std::string_view to_string(IntervalClass c);

struct IntervalPosition {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;  // n - (q^2 + q + 1), in [-q, q]
  IntervalClass cls = IntervalClass::kCenter;
};

IntervalPosition interval_of(std::int64_t n);

struct ReimanBound {
  double value = 0;        // n/4 (1 + sqrt(4n - 3))
  std::int64_t floor = 0;  // exact, via integer square root
};
ReimanBound reiman_upper(std::int64_t n);

// A closed-form bound whose precondition may or may not hold. `value` is the
// formula evaluated exactly regardless; consumers must honour `applicable`.
struct Bound {
  bool applicable = false;
  BigRational value;

  std::int64_t floor() const { return value.floor().get_si(); }
};

// n = q^2 + q + 1 - r: 1/2 q (q+1)^2 - 0.92 r q, applicable for 1 <= r <= 0.01 q.
Bound thm3_upper(std::int64_t q, std::int64_t r);
// n = q^2 + q + 1 + r: 1/2 (q^2 + q + 1 + max{r, 2r - 0.3q}) (q + 1), for 1 <= r <= 0.6 q.
Bound thm5_upper(std::int64_t q, std::int64_t r);
// n = q^2 + q + 1 - r: 1/2 q (q+1)^2 - (1 - eps) r q, for 0 < eps < 1 and
// c_lo / eps <= r <= c_hi eps q.
Bound eq8_upper(std::int64_t q, std::int64_t r, const BigRational& eps, const BigRational& c_lo = 1,
                const BigRational& c_hi = 1);
// n = q^2 + q + 1: 1/2 q (q+1)^2, established for every integer q >= 14.
Bound furedi_upper(std::int64_t q);

// 1/2 q (q+1)^2 for prime powers q.
Bound brown_lower(std::int64_t q);
// 1/2 q (q+1)^2 - r q for prime powers q and 0 <= r <= q + 1.
Bound deletion_lower(std::int64_t q, std::int64_t r);

// Main terms 1/2 n^{3/2} + 1/4 n.
double erdos_value(std::int64_t n);

// (1/2 n^{3/2} + 1/4 n) - (1/2 q (q+1)^2 + 3/4 r q) with n = q^2 + q + 1 + r.
long double eq5_residual(std::int64_t q, std::int64_t r);

// Exact test of bound <= 1/2 n^{3/2} + (1/4 - eps) n.
bool below_erdos_with_gap(const BigRational& bound, std::int64_t n, const BigRational& eps);

// N1 = {q^2+q+1-r : 6 eps <= r/q <= 0.01}, N2 = {q^2+q+1+r : 5 eps <= r/q <= 0.3}.
bool n1_member(std::int64_t n, const BigRational& eps);
bool n2_member(std::int64_t n, const BigRational& eps);

struct Densities {
  std::int64_t n1_count = 0;
  std::int64_t n2_count = 0;
  BigRational n1;  // |N1 ∩ [N]| / N
  BigRational n2;
};
// Counts block by block; n1_member/n2_member are the per-integer route.
Densities density_scan(std::int64_t N, const BigRational& eps);

// h(n+1) - h(n) - 3/4 sqrt(n) with h(x) = x/4 (1 + sqrt(4x - 3)).
long double h_gap_check(std::int64_t n);

struct BoundsConfig {
  // Asymptotic theorems enter best_upper only for q >= this.
  std::int64_t asymptotic_q_min = 10000;
  std::optional<BigRational> eq8_eps;
  BigRational eq8_c_lo = 1;
  BigRational eq8_c_hi = 1;
  bool eq8_in_best = false;
};

struct SourcedBound {
  std::int64_t value = 0;
  std::string source;
};

struct BoundReport {
  std::int64_t n = 0;
  IntervalPosition position;
  ReimanBound reiman;
  double erdos_conj = 0;
  Bound thm3;
  Bound thm5;
  Bound eq8;
  Bound furedi;
  Bound brown_lower;
  Bound deletion_lower;
  std::int64_t deletion_q = 0;  // construction parameters behind deletion_lower
  std::int64_t deletion_r = 0;
  SourcedBound best_upper;
  std::optional<SourcedBound> best_lower;
};

BoundReport best_bounds(std::int64_t n, const BoundsConfig& config = {});

}  // namespace c4ex
