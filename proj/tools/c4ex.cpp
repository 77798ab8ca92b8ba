// c4ex: construct, check, bound, solve and certify.
// Exit codes: 0 success, 1 verdict failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "c4ex/bounds.hpp"
#include "c4ex/certify.hpp"
#include "c4ex/exact.hpp"
#include "c4ex/gf.hpp"
#include "c4ex/lemmas.hpp"
#include "c4ex/polarity.hpp"
#include "c4ex/serialize.hpp"

namespace c4ex {
namespace {

constexpr int kOk = 0;
constexpr int kVerdictFailure = 1;
constexpr int kInputError = 2;

// Largest q whose polarity graph is materialized (n = 16513).
constexpr std::int64_t kMaxConstructQ = 128;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

BigRational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return BigRational::parse(text);
  } catch (const std::invalid_argument&) {
    throw InputError(flag + ": not a rational number: '" + text + "'");
  }
}

// ---- construct

struct ConstructArgs {
  std::int64_t q = 0;
  int remove = 0;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  const auto pp = is_prime_power(a.q);
  if (!pp) throw InputError("q=" + std::to_string(a.q) + " is not a prime power");
  if (a.q > kMaxConstructQ) {
    throw InputError("q=" + std::to_string(a.q) + " exceeds " + std::to_string(kMaxConstructQ));
  }
  if (a.remove < 0 || a.remove > a.q + 1) {
    throw InputError("--delete must lie in [0, q+1] = [0, " + std::to_string(a.q + 1) + "]");
  }
  Graph g = polarity_graph(make_field(*pp));
  if (a.remove > 0) g = delete_low_degree(g, static_cast<int>(a.q), a.remove);

  std::map<int, int> histogram;
  for (int d : g.degrees()) ++histogram[d];
  std::ostringstream summary;
  summary << "n " << g.order() << " e " << g.edge_count() << " degrees";
  for (const auto& [d, count] : histogram) summary << " " << d << ":" << count;

  const std::string g6 = graph6_encode(g);
  if (a.out.empty()) {
    std::cout << g6 << "\n";
    std::cerr << summary.str() << "\n";
  } else {
    std::ofstream out(a.out);
    if (!out) throw InputError("cannot write " + a.out);
    out << g6 << "\n";
    std::cout << summary.str() << "\n";
  }
  return kOk;
}

// ---- check

struct CheckArgs {
  std::string in;
  int q = 0;
  std::string lemmas = "all";
  bool verbose = false;
};

// Collects verdicts of one lemma family. Only verdicts whose hypotheses hold
// count towards the exit status.
struct Family {
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  std::int64_t informational = 0;
  std::optional<LemmaVerdict> weakest;
  json failures = json::array();
  json all = json::array();

  void add(const LemmaVerdict& v, const json& record, bool verbose) {
    if (!v.hypotheses_met) {
      ++informational;
    } else {
      ++checked;
      if (!v.holds) {
        ++failed;
        failures.push_back(record);
      }
      if (!weakest || v.margin < weakest->margin) weakest = v;
    }
    if (verbose) all.push_back(record);
  }

  json summary(bool verbose) const {
    json j = {{"checked", checked},
              {"failed", failed},
              {"informational", informational},
              {"vacuous", checked == 0},
              {"failures", failures}};
    if (weakest) j["weakest"] = to_json(*weakest);
    if (verbose) j["verdicts"] = all;
    return j;
  }
};

int run_check(const CheckArgs& a) {
  Graph g;
  try {
    g = graph6_decode(read_all(a.in));
  } catch (const Graph6Error& e) {
    throw InputError(e.what());
  }
  json report = {{"n", g.order()}, {"e", g.edge_count()}, {"q", a.q}};
  const auto c4 = is_c4_free(g);
  report["c4_free"] = c4.c4_free;
  report["deficiency"] = to_json(deficiency_profile(g, a.q));
  if (!c4.c4_free) {
    report["witness"] = *c4.witness;
    report["refused"] = "graph contains a 4-cycle; the lemmas assume C4-freeness";
    std::cout << report.dump(2) << "\n";
    return kVerdictFailure;
  }

  const bool all = a.lemmas == "all";
  const C4FreeGraph cg(g);
  bool ok = true;
  json lemmas;

  if (all || a.lemmas == "fN") {
    Family fam;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto verdict = check_lemma_fN(cg, a.q, v);
      fam.add(verdict, to_json(verdict), a.verbose);
    }
    ok = ok && fam.failed == 0;
    lemmas["fN"] = fam.summary(a.verbose);
  }

  if (all || a.lemmas == "2path") {
    Family fam;
    std::int64_t literal_not_implied = 0;
    bool intermediates = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nbrs = g.neighbors(v);
      if (nbrs.empty()) continue;
      const auto res = check_2path_inequality(cg, v, nbrs);
      intermediates = intermediates && res.all_intermediates_hold();
      if (!res.details.literal_form_valid() && res.details.literal_margin.sign() < 0) ++literal_not_implied;
      fam.add(res.verdict, to_json(res), a.verbose);
    }
    ok = ok && fam.failed == 0 && intermediates;
    auto j = fam.summary(a.verbose);
    j["intermediates_hold"] = intermediates;
    j["literal_form_fails_with_negative_L"] = literal_not_implied;
    lemmas["2path"] = j;
  }

  if (all || a.lemmas == "weights") {
    const Regime regime = regime_for(g.order(), a.q);
    const std::int64_t r = regime_r(g.order(), a.q, regime);
    const auto hyp = regime_hypotheses(g, a.q, r, regime);
    Family fam;
    json extra = {{"regime", regime == Regime::kDeficient ? "deficient" : "surplus"},
                  {"r", r},
                  {"hypotheses_met", hyp.met}};
    if (!hyp.met) extra["hypotheses_reason"] = hyp.reason;
    if (regime == Regime::kDeficient) {
      const auto s = check_splus_bound(g, a.q, r);
      fam.add(s.verdict, to_json(s.verdict), a.verbose);
      extra["splus_size"] = s.splus_size;
      extra["neg_f_splus"] = s.neg_f_splus;
    }
    for (const auto& v : check_neighborhood_splus(g, a.q, regime).per_vertex) fam.add(v, to_json(v), a.verbose);
    const auto chain = check_weight_chain(g, a.q, regime);
    fam.add(chain.lower, to_json(chain.lower), a.verbose);
    fam.add(chain.upper, to_json(chain.upper), a.verbose);
    extra["weight"] = chain.weight;
    ok = ok && fam.failed == 0;
    auto j = fam.summary(a.verbose);
    j.update(extra);
    lemmas["weights"] = j;
  }

  report["lemmas"] = lemmas;
  report["all_hold"] = ok;
  std::cout << report.dump(2) << "\n";
  return ok ? kOk : kVerdictFailure;
}

// ---- bounds

struct BoundsArgs {
  std::int64_t n = 0;
  std::vector<std::int64_t> sweep;
  std::string eps = "0.001";
  std::optional<std::string> eq8_eps;
  std::int64_t q_min = BoundsConfig{}.asymptotic_q_min;
};

int run_bounds(const BoundsArgs& a) {
  const BigRational eps = parse_rational(a.eps, "--eps");
  if (eps.sign() <= 0) throw InputError("--eps must be positive");
  BoundsConfig config;
  config.asymptotic_q_min = a.q_min;
  if (a.eq8_eps) config.eq8_eps = parse_rational(*a.eq8_eps, "--eq8-eps");

  std::int64_t lo = a.n, hi = a.n;
  if (!a.sweep.empty()) {
    lo = a.sweep[0];
    hi = a.sweep[1];
  }
  if (lo < 1 || hi < lo) throw InputError("need 1 <= A <= B (or --n >= 1)");
  std::cout << bounds_csv_header() << "\n";
  for (std::int64_t n = lo; n <= hi; ++n) std::cout << bounds_csv_row(best_bounds(n, config), eps) << "\n";
  return kOk;
}

// ---- exact

struct ExactArgs {
  int n = 0;
  std::optional<std::int64_t> budget;
  std::optional<double> time_limit;
  unsigned threads = 1;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  bool no_cache = false;
};

int run_exact(const ExactArgs& a) {
  if (a.n < 1 || a.n > kMaxSearchOrder) {
    throw InputError("--n must lie in [1, " + std::to_string(kMaxSearchOrder) + "]");
  }
  const auto cache = a.no_cache ? std::nullopt : ResultCache::from_env();
  if (cache && !a.budget && !a.time_limit) {
    if (const auto hit = cache->lookup(a.n)) {
      json j = {{"n", hit->n},        {"value", hit->value}, {"witness_g6", hit->witness_g6},
                {"status", "exact"},  {"lo", hit->value},    {"hi", hit->value},
                {"nodes_explored", 0}, {"cached", true},     {"solver_version", hit->solver_version}};
      std::cout << j.dump() << "\n";
      return kOk;
    }
  }

  SearchOptions opts;
  opts.threads = std::max(1U, a.threads);
  opts.budget.nodes = a.budget;
  if (a.time_limit) {
    opts.budget.wall = std::chrono::milliseconds(static_cast<std::int64_t>(*a.time_limit * 1000));
  }
  opts.lower_hint = a.lower;
  opts.upper_hint = a.upper;
  if (opts.lower_hint && opts.upper_hint && *opts.lower_hint > *opts.upper_hint) {
    throw InputError("--lower exceeds --upper");
  }
  if (cache) {
    for (auto& [m, g] : cache->exact_witnesses()) {
      if (m < a.n) opts.known.emplace(m, std::move(g));
    }
  }
  const auto res = ex_c4(a.n, opts);
  if (cache && res.status == SearchStatus::kExact) cache->store(res);
  std::cout << to_json(res).dump() << "\n";
  return kOk;
}

// ---- certify

struct CertifyArgs {
  std::string which;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> r;
  bool scan = false;
  bool identities = false;
  std::int64_t q_min = 1;
  std::int64_t q_max = ScanOptions{}.q_end;
  std::int64_t window = ScanOptions{}.window;
  std::optional<std::string> r_fraction;
  unsigned threads = 1;
};

int run_identities() {
  bool ok = true;
  for (const auto& c : {s2_coefficient_check(Which::kF), s2_coefficient_check(Which::kG),
                        s1_coefficient_check(Which::kF), s1_coefficient_check(Which::kG), fmax_expansion_check(),
                        gmax_expansion_check()}) {
    ok = ok && c.matches();
    std::cout << to_json(c).dump() << "\n";
  }
  for (Which w : {Which::kF, Which::kG}) {
    const auto lead = leading_term_bound_check(w);
    ok = ok && lead.holds();
    std::cout << to_json(lead).dump() << "\n";
  }
  return ok ? kOk : kVerdictFailure;
}

int run_certify(const CertifyArgs& a) {
  if (a.identities) return run_identities();
  std::vector<Which> targets;
  try {
    if (a.which.empty()) {
      if (!a.scan) throw InputError("--which is required for a single point");
      targets = {Which::kF, Which::kG};
    } else {
      targets = {parse_which(a.which)};
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::optional<BigRational> frac;
  if (a.r_fraction) frac = parse_rational(*a.r_fraction, "--r-fraction");

  if (!a.scan) {
    if (!a.q || !a.r) throw InputError("--q and --r are required unless --scan is given");
    const Which w = targets.front();
    const auto c = certify_point(w, *a.q, *a.r, frac.value_or(default_r_fraction(w)));
    std::cout << to_json(c).dump() << "\n";
    switch (c.verdict) {
      case Verdict::kCertifiedNegative:
        return kOk;
      case Verdict::kFailed:
        return kVerdictFailure;
      case Verdict::kInapplicable:
        return kInputError;
    }
    return kVerdictFailure;
  }

  if (a.q_min < 1 || a.q_max < a.q_min || a.window < 0) throw InputError("need 1 <= --qmin <= --qmax, --window >= 0");
  bool ok = true;
  for (Which w : targets) {
    ScanOptions opts;
    opts.q_begin = a.q_min;
    opts.q_end = a.q_max;
    opts.window = a.window;
    opts.r_fraction = frac;
    opts.threads = std::max(1U, a.threads);
    const auto res = find_threshold_q0(w, opts, [](const Certificate& c) { std::cout << to_json(c).dump() << "\n"; });
    std::cout << to_json(res).dump() << "\n";
    ok = ok && res.q0.has_value();
  }
  return ok ? kOk : kVerdictFailure;
}

}  // namespace
}  // namespace c4ex

int main(int argc, char** argv) {
  using namespace c4ex;
  CLI::App app{"Extremal C4-free graphs: constructions, lemma checks, bounds, exact values, certificates"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Polarity graph of PG(2, q), optionally minus degree-q vertices");
  c->add_option("--q", construct.q, "Prime power q")->required();
  c->add_option("--delete", construct.remove, "Number of degree-q vertices to delete");
  c->add_option("--out", construct.out, "graph6 output file (default stdout)");

  CheckArgs check;
  auto* k = app.add_subcommand("check", "Deficiency profile and lemma verdicts for a graph6 input");
  k->add_option("--in", check.in, "graph6 file, '-' for stdin")->required();
  k->add_option("--q", check.q, "Parameter q")->required()->check(CLI::NonNegativeNumber);
  k->add_option("--lemmas", check.lemmas, "Which checks to run")
      ->check(CLI::IsMember({"all", "fN", "2path", "weights"}));
  k->add_flag("--verbose", check.verbose, "Include every verdict");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "CSV of bounds for one n or a range");
  auto* b_n = b->add_option("--n", bounds.n, "Single order n");
  auto* b_sweep = b->add_option("--sweep", bounds.sweep, "Inclusive range A B")->expected(2);
  b_n->excludes(b_sweep);
  b->add_option("--eps", bounds.eps, "eps for N1/N2 membership");
  b->add_option("--eq8-eps", bounds.eq8_eps, "Evaluate the parametrized bound with this eps");
  b->add_option("--q-min", bounds.q_min, "Smallest q at which asymptotic bounds enter best_upper");

  ExactArgs exact;
  auto* e = app.add_subcommand("exact", "Exact ex(n, C4) by branch and bound");
  e->add_option("--n", exact.n, "Order n")->required();
  e->add_option("--budget", exact.budget, "Node budget");
  e->add_option("--time-limit", exact.time_limit, "Wall-clock budget in seconds");
  e->add_option("--threads", exact.threads, "Worker threads");
  e->add_option("--lower", exact.lower, "Known lower bound");
  e->add_option("--upper", exact.upper, "Known upper bound");
  e->add_flag("--no-cache", exact.no_cache, "Ignore the result cache");

  CertifyArgs cert;
  auto* f = app.add_subcommand("certify", "Certify F/G negativity at a point or scan for thresholds");
  f->add_option("--which", cert.which, "F or G");
  f->add_option("--q", cert.q, "q");
  f->add_option("--r", cert.r, "r");
  f->add_flag("--scan", cert.scan, "Scan q for the threshold q0");
  f->add_flag("--identities", cert.identities, "Check the expansion identities and leading-term bounds");
  f->add_option("--qmin", cert.q_min, "First q of the scan");
  f->add_option("--qmax", cert.q_max, "Last q of the scan");
  f->add_option("--window", cert.window, "Consecutive certified q required after q0");
  f->add_option("--r-fraction", cert.r_fraction, "Admissible r up to this fraction of q");
  f->add_option("--threads", cert.threads, "Worker threads for --scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (b->parsed() && !b_n->count() && !b_sweep->count()) throw InputError("bounds needs --n or --sweep");
    if (c->parsed()) return run_construct(construct);
    if (k->parsed()) return run_check(check);
    if (b->parsed()) return run_bounds(bounds);
    if (e->parsed()) return run_exact(exact);
    if (f->parsed()) return run_certify(cert);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
