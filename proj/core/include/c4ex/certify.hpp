#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c4ex/mpoly.hpp"
#include "c4ex/rational.hpp"

namespace c4ex {

// F: n = q^2 + q + 2 - r, k = 3r + 9,   m0 = q(q+1)^2/2 - rq, degree parameter q/5.
// G: n = q^2 + q + 1 + r, k = 11q/20,   m0 = n(q+1)/2,        degree parameter 7q/10.
// Both are (n-s+k-1)(n-s+k-2)(n-k) - A(A - n + k) with
// A = 2 m0 - s + (k-1) d - nk + k.
enum class Which { kF, kG };
std::string_view to_string(Which w);
Which parse_which(std::string_view text);  // "F" or "G"; throws std::invalid_argument

struct PolyParameters {
  MPoly n, k, m0, d;
};
PolyParameters parameters(Which which);

const MPoly& build_F();
const MPoly& build_G();
const MPoly& build(Which which);

BigRational eval_poly(const MPoly& p, const BigRational& q, const BigRational& r, const BigRational& s);

enum class Verdict { kCertifiedNegative, kFailed, kInapplicable };
std::string_view to_string(Verdict v);

struct Certificate {
  Which which = Which::kF;
  std::int64_t q = 0;
  std::int64_t r = 0;
  BigRational k, n, m0, d_floor;
  BigRational s_lo, s_hi;
  BigRational lead_coeff;
  BigRational value_lo, value_hi;
  Verdict verdict = Verdict::kInapplicable;
  // "leading-coefficient", "endpoint-lo", "endpoint-hi" or the range
  // violation; empty for certified points.
  std::string reason;
};

// Certified negative iff lead > 0, value_lo < 0 and value_hi < 0: an upward
// parabola is maximized over an interval at an endpoint.
std::pair<Verdict, std::string> classify_quadratic(const BigRational& lead, const BigRational& value_lo,
                                                   const BigRational& value_hi);

// Admissible r for a given q: F takes 0 <= r <= frac*q (default 33/1000),
// G takes 1 <= r <= frac*q (default 3/10). Empty when lo > hi.
BigRational default_r_fraction(Which which);
std::pair<std::int64_t, std::int64_t> admissible_r(Which which, std::int64_t q, const BigRational& frac);

// Reference certifier: symbolic polynomial, s in [k(q+2), q^2+2q].
Certificate certify_point(Which which, std::int64_t q, std::int64_t r);
Certificate certify_point(Which which, std::int64_t q, std::int64_t r, const BigRational& frac);

// Same certificate from the product form in scaled integer arithmetic.
// Agrees with certify_point bit for bit; used by scans.
Certificate certify_point_fast(Which which, std::int64_t q, std::int64_t r, const BigRational& frac);

// Comparison of our expansion against a displayed polynomial.
struct Mismatch {
  MPoly::Exponents exponents;
  BigRational ours;
  BigRational displayed;
};
struct ExpansionCheck {
  std::string name;
  MPoly ours;
  MPoly displayed;
  std::vector<Mismatch> mismatches;
  bool matches() const { return mismatches.empty(); }
};
ExpansionCheck compare_expansion(std::string name, const MPoly& ours, const MPoly& displayed);

// Displayed forms of the s^2 / s coefficients and of the value at s = k(q+2).
const MPoly& displayed_s2_coefficient(Which which);
const MPoly& displayed_s1_coefficient(Which which);
const MPoly& displayed_max(Which which);

ExpansionCheck s2_coefficient_check(Which which);
ExpansionCheck s1_coefficient_check(Which which);
ExpansionCheck fmax_expansion_check();
ExpansionCheck gmax_expansion_check();

// Leading-term bounds in t = r/q:
//   F: -1/5 + 33/5 t - 18 t^2 <= -1/100 for t in [0, 3/100]
//   G: -21/100 + 349/500 t <= -3/5000 for t in [0, 3/10]
struct LeadingTermCheck {
  Which which = Which::kF;
  BigRational t_lo, t_hi;
  BigRational max_value;
  BigRational argmax;
  BigRational bound;
  bool holds() const { return max_value <= bound; }
  bool tight() const { return max_value == bound; }
};
LeadingTermCheck leading_term_bound_check(Which which);
LeadingTermCheck leading_term_bound_check(Which which, const BigRational& t_lo, const BigRational& t_hi);

// -(s coefficient) / (2 * s^2 coefficient); throws std::domain_error when the
// s^2 coefficient vanishes.
BigRational axis_of_symmetry(Which which, std::int64_t q, std::int64_t r);

struct ScanOptions {
  std::int64_t q_begin = 1;
  std::int64_t q_end = 30000;  // inclusive
  std::int64_t window = 50;
  std::optional<BigRational> r_fraction;
  unsigned threads = 1;
};

struct ThresholdResult {
  Which which = Which::kF;
  std::optional<std::int64_t> q0;
  std::int64_t points = 0;
  std::int64_t failures = 0;
  std::optional<std::int64_t> last_failing_q;
};

// Smallest q0 in [q_begin, q_end - window] such that every admissible (q, r)
// with q in [q0, q0 + window] certifies and each such q has one. `log` receives every failing
// certificate as it is found and, on success, every certificate of the
// final window. q0 is nullopt when the range is exhausted.
ThresholdResult find_threshold_q0(Which which, const ScanOptions& options,
                                  const std::function<void(const Certificate&)>& log = {});

}  // namespace c4ex
