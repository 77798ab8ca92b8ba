#include "c4ex/certify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace c4ex {
namespace {

const MPoly kQ = MPoly::var(MPoly::kQ);
const MPoly kR = MPoly::var(MPoly::kR);
const MPoly kS = MPoly::var(MPoly::kS);

MPoly product_form(const PolyParameters& p) {
  const MPoly a = 2 * p.m0 - kS + (p.k - 1) * p.d - p.n * p.k + p.k;
  return (p.n - kS + p.k - 1) * (p.n - kS + p.k - 2) * (p.n - p.k) - a * (a - p.n + p.k);
}

struct Coefficients {
  MPoly s2, s1;
};

const Coefficients& coefficients(Which which) {
  static const Coefficients f{build_F().coefficient_of(MPoly::kS, 2), build_F().coefficient_of(MPoly::kS, 1)};
  static const Coefficients g{build_G().coefficient_of(MPoly::kS, 2), build_G().coefficient_of(MPoly::kS, 1)};
  return which == Which::kF ? f : g;
}

// Parameters at a concrete (q, r), evaluated directly rather than through MPoly.
struct PointParameters {
  BigRational n, k, m0, d;
};

PointParameters point_parameters(Which which, std::int64_t q, std::int64_t r) {
  PointParameters p;
  const BigRational Q(q);
  if (which == Which::kF) {
    p.n = BigRational(q * q + q + 2 - r);
    p.k = BigRational(3 * r + 9);
    p.m0 = Q * (q + 1) * (q + 1) / 2 - BigRational(r) * q;
    p.d = Q / 5;
  } else {
    p.n = BigRational(q * q + q + 1 + r);
    p.k = BigRational(11, 20) * q;
    p.m0 = p.n * (q + 1) / 2;
    p.d = BigRational(7, 10) * q;
  }
  return p;
}

Certificate certificate_shell(Which which, std::int64_t q, std::int64_t r, const BigRational& frac) {
  Certificate c;
  c.which = which;
  c.q = q;
  c.r = r;
  const auto p = point_parameters(which, q, r);
  c.n = p.n;
  c.k = p.k;
  c.m0 = p.m0;
  c.d_floor = p.d;
  c.s_lo = p.k * (q + 2);
  c.s_hi = BigRational(q * q + 2 * q);
  const auto [lo, hi] = admissible_r(which, q, frac);
  if (r < lo || r > hi) {
    c.verdict = Verdict::kInapplicable;
    c.reason = "r outside [" + std::to_string(lo) + ", " + frac.str() + "*q]";
  }
  return c;
}

void finish(Certificate& c) {
  auto [verdict, reason] = classify_quadratic(c.lead_coeff, c.value_lo, c.value_hi);
  c.verdict = verdict;
  c.reason = std::move(reason);
}

BigRational product_value(const Certificate& c, const BigRational& s) {
  const BigRational a = 2 * c.m0 - s + (c.k - 1) * c.d_floor - c.n * c.k + c.k;
  const BigRational b = c.n - s + c.k;
  return (b - 1) * (b - 2) * (c.n - c.k) - a * (a - c.n + c.k);
}

LeadingTermCheck max_quadratic(Which which, const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& lo, const BigRational& hi, const BigRational& bound) {
  LeadingTermCheck out;
  out.which = which;
  out.t_lo = lo;
  out.t_hi = hi;
  out.bound = bound;
  auto value = [&](const BigRational& t) { return a * t * t + b * t + c; };
  std::vector<BigRational> candidates{lo, hi};
  if (a.sign() < 0) {
    const BigRational vertex = -b / (2 * a);
    if (lo <= vertex && vertex <= hi) candidates.push_back(vertex);
  }
  out.argmax = lo;
  out.max_value = value(lo);
  for (const auto& t : candidates) {
    const BigRational v = value(t);
    if (v > out.max_value) {
      out.max_value = v;
      out.argmax = t;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Which w) { return w == Which::kF ? "F" : "G"; }

Which parse_which(std::string_view text) {
  if (text == "F" || text == "f") return Which::kF;
  if (text == "G" || text == "g") return Which::kG;
  throw std::invalid_argument("expected F or G, got '" + std::string(text) + "'");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedNegative:
      return "certified-negative";
    case Verdict::kFailed:
      return "failed";
    case Verdict::kInapplicable:
      return "inapplicable";
  }
  return "?";
}

PolyParameters parameters(Which which) {
  PolyParameters p;
  if (which == Which::kF) {
    p.n = kQ * kQ + kQ + 2 - kR;
    p.k = 3 * kR + 9;
    p.m0 = MPoly(BigRational(1, 2)) * kQ * pow(kQ + 1, 2) - kR * kQ;
    p.d = MPoly(BigRational(1, 5)) * kQ;
  } else {
    p.n = kQ * kQ + kQ + 1 + kR;
    p.k = MPoly(BigRational(11, 20)) * kQ;
    p.m0 = MPoly(BigRational(1, 2)) * p.n * (kQ + 1);
    p.d = MPoly(BigRational(7, 10)) * kQ;
  }
  return p;
}

const MPoly& build_F() {
  static const MPoly f = product_form(parameters(Which::kF));
  return f;
}

const MPoly& build_G() {
  static const MPoly g = product_form(parameters(Which::kG));
  return g;
}

const MPoly& build(Which which) { return which == Which::kF ? build_F() : build_G(); }

BigRational eval_poly(const MPoly& p, const BigRational& q, const BigRational& r, const BigRational& s) {
  return p.eval(q, r, s);
}

std::pair<Verdict, std::string> classify_quadratic(const BigRational& lead, const BigRational& value_lo,
                                                   const BigRational& value_hi) {
  if (lead.sign() <= 0) return {Verdict::kFailed, "leading-coefficient"};
  if (value_lo.sign() >= 0) return {Verdict::kFailed, "endpoint-lo"};
  if (value_hi.sign() >= 0) return {Verdict::kFailed, "endpoint-hi"};
  return {Verdict::kCertifiedNegative, {}};
}

BigRational default_r_fraction(Which which) {
  return which == Which::kF ? BigRational(33, 1000) : BigRational(3, 10);
}

std::pair<std::int64_t, std::int64_t> admissible_r(Which which, std::int64_t q, const BigRational& frac) {
  const std::int64_t lo = which == Which::kF ? 0 : 1;
  const std::int64_t hi = (frac * q).floor().get_si();
  return {lo, hi};
}

Certificate certify_point(Which which, std::int64_t q, std::int64_t r) {
  return certify_point(which, q, r, default_r_fraction(which));
}

Certificate certify_point(Which which, std::int64_t q, std::int64_t r, const BigRational& frac) {
  Certificate c = certificate_shell(which, q, r, frac);
  if (c.verdict == Verdict::kInapplicable && !c.reason.empty()) return c;
  const MPoly& p = build(which);
  const BigRational Q(q), R(r);
  c.lead_coeff = coefficients(which).s2.eval(Q, R, 0);
  c.value_lo = p.eval(Q, R, c.s_lo);
  c.value_hi = p.eval(Q, R, c.s_hi);
  finish(c);
  return c;
}

Certificate certify_point_fast(Which which, std::int64_t q, std::int64_t r, const BigRational& frac) {
  Certificate c = certificate_shell(which, q, r, frac);
  if (c.verdict == Verdict::kInapplicable && !c.reason.empty()) return c;
  // The s^2 coefficient of the product form is n - k - 1.
  c.lead_coeff = c.n - c.k - 1;
  c.value_lo = product_value(c, c.s_lo);
  c.value_hi = product_value(c, c.s_hi);
  finish(c);
  return c;
}

ExpansionCheck compare_expansion(std::string name, const MPoly& ours, const MPoly& displayed) {
  ExpansionCheck out;
  out.name = std::move(name);
  out.ours = ours;
  out.displayed = displayed;
  const MPoly diff = ours - displayed;
  for (const auto& [e, c] : diff.terms()) {
    out.mismatches.push_back({e, ours.coefficient(e), displayed.coefficient(e)});
  }
  return out;
}

const MPoly& displayed_s2_coefficient(Which which) {
  static const MPoly f = MPoly::parse("q^2 + q - 4 r - 8");
  static const MPoly g = MPoly::parse("q^2 + 0.45q + r");
  return which == Which::kF ? f : g;
}

const MPoly& displayed_s1_coefficient(Which which) {
  static const MPoly f =
      MPoly::parse("-2 q^4 - 2 q^3 + q^2 (-2 r - 22) + q (-4.8 r - 18.8) + 22 r^2 +120 r + 122");
  static const MPoly g = MPoly::parse("-2 q^4 - 3.1 q^3 -(4r-0.275) q^2 -(3.1r+0.5) q - 2 r^2 + 2");
  return which == Which::kF ? f : g;
}

const MPoly& displayed_max(Which which) {
  static const MPoly f = MPoly::parse(
      "q^4 (-0.2 r-0.2)+q^3 (6.6 r^2+50.6 r+104)"
      "+q^2 (-18 r^3-180.76 r^2-633.32 r-729.56)+q (-51.6 r^3-487r^2-1567.2 r-1630.8)"
      "-9 r^4-76 r^3-243 r^2-656 r-1044");
  static const MPoly g = MPoly::parse(
      "-0.210375 q^5+(0.6975 r-0.206475)q^4 +(0.5535 r-0.342125)q^3"
      "+(1.6975 r^2-0.205 r-0.685)q^2 +(0.9 r^2-0.2 r-0.2)q +r^3-r");
  return which == Which::kF ? f : g;
}

ExpansionCheck s2_coefficient_check(Which which) {
  return compare_expansion(std::string(to_string(which)) + ".s2", coefficients(which).s2,
                           displayed_s2_coefficient(which));
}

ExpansionCheck s1_coefficient_check(Which which) {
  return compare_expansion(std::string(to_string(which)) + ".s1", coefficients(which).s1,
                           displayed_s1_coefficient(which));
}

namespace {

ExpansionCheck max_check(Which which) {
  const auto p = parameters(which);
  const MPoly at_lo = build(which).substitute(MPoly::kS, p.k * (kQ + 2));
  return compare_expansion(std::string(to_string(which)) + "max", at_lo, displayed_max(which));
}

}  // namespace

ExpansionCheck fmax_expansion_check() { return max_check(Which::kF); }
ExpansionCheck gmax_expansion_check() { return max_check(Which::kG); }

LeadingTermCheck leading_term_bound_check(Which which) {
  return which == Which::kF ? leading_term_bound_check(which, 0, BigRational(3, 100))
                            : leading_term_bound_check(which, 0, BigRational(3, 10));
}

LeadingTermCheck leading_term_bound_check(Which which, const BigRational& t_lo, const BigRational& t_hi) {
  if (t_lo > t_hi) throw std::invalid_argument("leading_term_bound_check: empty range");
  if (which == Which::kF) {
    return max_quadratic(which, -18, BigRational(33, 5), BigRational(-1, 5), t_lo, t_hi, BigRational(-1, 100));
  }
  return max_quadratic(which, 0, BigRational(349, 500), BigRational(-21, 100), t_lo, t_hi, BigRational(-3, 5000));
}

BigRational axis_of_symmetry(Which which, std::int64_t q, std::int64_t r) {
  const BigRational Q(q), R(r);
  const BigRational a = coefficients(which).s2.eval(Q, R, 0);
  if (a.sign() == 0) throw std::domain_error("axis_of_symmetry: s^2 coefficient vanishes");
  return -coefficients(which).s1.eval(Q, R, 0) / (2 * a);
}

ThresholdResult find_threshold_q0(Which which, const ScanOptions& options,
                                  const std::function<void(const Certificate&)>& log) {
  if (options.window < 0) throw std::invalid_argument("find_threshold_q0: negative window");
  const BigRational frac = options.r_fraction.value_or(default_r_fraction(which));
  const unsigned threads = std::max(1U, options.threads);
  const std::int64_t batch = static_cast<std::int64_t>(threads) * 8;

  ThresholdResult out;
  out.which = which;
  std::vector<std::vector<Certificate>> streak;
  std::int64_t streak_start = options.q_begin;

  for (std::int64_t first = options.q_begin; first <= options.q_end; first += batch) {
    const std::int64_t last = std::min(options.q_end, first + batch - 1);
    std::vector<std::vector<Certificate>> certs(static_cast<std::size_t>(last - first + 1));
    std::atomic<std::int64_t> next{first};
    auto worker = [&] {
      for (std::int64_t q; (q = next.fetch_add(1)) <= last;) {
        const auto [lo, hi] = admissible_r(which, q, frac);
        auto& bucket = certs[static_cast<std::size_t>(q - first)];
        for (std::int64_t r = lo; r <= hi; ++r) bucket.push_back(certify_point_fast(which, q, r, frac));
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (std::int64_t q = first; q <= last; ++q) {
      auto& bucket = certs[static_cast<std::size_t>(q - first)];
      out.points += static_cast<std::int64_t>(bucket.size());
      if (bucket.empty()) {
        streak.clear();
        streak_start = q + 1;
        continue;
      }
      bool ok = true;
      for (const auto& c : bucket) {
        if (c.verdict == Verdict::kCertifiedNegative) continue;
        ok = false;
        ++out.failures;
        if (log) log(c);
      }
      if (!ok) {
        out.last_failing_q = q;
        streak.clear();
        streak_start = q + 1;
        continue;
      }
      streak.push_back(std::move(bucket));
      if (q - streak_start == options.window) {
        if (log) {
          for (const auto& row : streak) {
            for (const auto& c : row) log(c);
          }
        }
        out.q0 = streak_start;
        return out;
      }
    }
  }
  return out;
}

}  // namespace c4ex
