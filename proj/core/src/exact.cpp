#include "c4ex/exact.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "c4ex/bounds.hpp"
#include "c4ex/polarity.hpp"

namespace c4ex {
namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

bool closes_c4(const Graph& g, Vertex u, Vertex v) {
  for (Vertex a : g.neighbors(u)) {
    if (popcount_and(g.row(a), g.row(v)) > 0) return true;
  }
  return false;
}

struct Shared {
  std::atomic<std::int64_t> lo{0};
  std::int64_t target_hi = 0;
  std::mutex mu;
  Graph witness;

  std::atomic<std::int64_t> nodes{0};
  std::optional<std::int64_t> node_budget;
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};

  void exhaust() {
    out_of_budget = true;
    stop = true;
  }
};

// Vertices are processed in index order; processing i decides every edge ij
// with j > i. Unprocessed vertices with identical adjacency to the processed
// ones form a class and are interchangeable, so (a) the neighbours of i inside
// a class form a prefix of it and (b) i may be taken to have the largest final
// degree in its own class.
class Searcher {
 public:
  Searcher(int n, const std::vector<std::int64_t>& ex_hi, Shared& shared, std::int64_t lo0, unsigned worker,
           unsigned workers, int split_row)
      : n_(n), ex_hi_(ex_hi), sh_(shared), lo0_(lo0), worker_(worker), workers_(workers), split_row_(split_row) {}

  void run() {
    adj_.fill(0);
    deg_.fill(0);
    cap_.fill(n_ - 1);
    cls_.fill(0);
    edges_ = 0;
    row(0, 1, 0);
    flush();
  }

 private:
  std::int64_t lo(int i) const { return i < split_row_ ? lo0_ : sh_.lo.load(std::memory_order_relaxed); }

  // Every vertex of a graph with more than lo edges has degree > lo - ex(n-1).
  int dmin(std::int64_t lo) const { return static_cast<int>(std::max<std::int64_t>(0, lo + 1 - ex_hi_[n_ - 1])); }

  void flush() {
    if (pending_ > 0) sh_.nodes.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

  bool tick() {
    if (sh_.stop.load(std::memory_order_relaxed)) return false;
    ++pending_;
    if (sh_.node_budget && sh_.nodes.load(std::memory_order_relaxed) + pending_ > *sh_.node_budget) {
      flush();
      sh_.exhaust();
      return false;
    }
    if ((pending_ & 1023) == 0) {
      flush();
      if (sh_.deadline && Clock::now() >= *sh_.deadline) {
        sh_.exhaust();
        return false;
      }
    }
    return true;
  }

  bool bound_ok(int i, int j) const {
    const std::int64_t best = lo(i);
    const int need = dmin(best);
    const int rest = n_ - i - 1;
    const int r_i = std::min(cap_[i] - deg_[i], n_ - j);
    if (deg_[i] + r_i < need) return false;
    std::int64_t sum = 0;
    for (int u = i + 1; u < n_; ++u) {
      const int avail = std::min(cap_[u] - deg_[u], rest - 1 + (u >= j ? 1 : 0));
      if (deg_[u] + avail < need) return false;
      sum += avail;
    }
    const std::int64_t add = std::min<std::int64_t>(r_i + ex_hi_[rest], (sum + r_i) / 2);
    return edges_ + add > best;
  }

  Mask second_neighbourhood(int i) const {
    Mask out = 0;
    for (Mask m = adj_[i]; m != 0; m &= m - 1) out |= adj_[std::countr_zero(m)];
    return out;
  }

  void add(int i, int j) {
    adj_[i] |= Mask{1} << j;
    adj_[j] |= Mask{1} << i;
    ++deg_[i];
    ++deg_[j];
    ++edges_;
  }

  void remove(int i, int j) {
    adj_[i] &= ~(Mask{1} << j);
    adj_[j] &= ~(Mask{1} << i);
    --deg_[i];
    --deg_[j];
    --edges_;
  }

  void row(int i, int j, Mask closed) {
    if (!tick()) return;
    if (j == n_) {
      end_row(i);
      return;
    }
    if (!bound_ok(i, j)) return;
    const int c = cls_[j];
    if (!((closed >> c) & 1) && deg_[i] < cap_[i] && deg_[j] < cap_[j] && (second_neighbourhood(i) & adj_[j]) == 0) {
      add(i, j);
      row(i, j + 1, closed);
      remove(i, j);
    }
    row(i, j + 1, closed | (Mask{1} << c));
  }

  void end_row(int i) {
    if (deg_[i] < dmin(lo(i))) return;
    if (i == n_ - 1) {
      record();
      return;
    }
    const auto saved_cap = cap_;
    const auto saved_cls = cls_;
    bool ok = true;
    std::array<int, 2 * kMaxSearchOrder> renumber;
    renumber.fill(-1);
    int next_id = 0;
    for (int j = i + 1; j < n_; ++j) {
      if (saved_cls[j] == saved_cls[i]) {
        cap_[j] = std::min(cap_[j], deg_[i]);
        if (deg_[j] > cap_[j]) ok = false;
      }
      const int key = 2 * saved_cls[j] + static_cast<int>((adj_[i] >> j) & 1);
      if (renumber[key] < 0) renumber[key] = next_id++;
      cls_[j] = renumber[key];
    }
    if (ok && !(workers_ > 1 && i + 1 == split_row_ && (task_++ % workers_) != worker_)) {
      row(i + 1, i + 2, 0);
    }
    cap_ = saved_cap;
    cls_ = saved_cls;
  }

  void record() {
    if (edges_ <= sh_.lo.load()) return;
    std::lock_guard lock(sh_.mu);
    if (edges_ <= sh_.lo.load()) return;
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
      for (Mask m = adj_[u] >> u; m != 0; m &= m - 1) {
        const int v = u + std::countr_zero(m);
        if (v != u) g.add_edge(u, v);
      }
    }
    sh_.witness = std::move(g);
    sh_.lo = edges_;
    if (edges_ >= sh_.target_hi) sh_.stop = true;
  }

  int n_;
  const std::vector<std::int64_t>& ex_hi_;
  Shared& sh_;
  std::int64_t lo0_;
  unsigned worker_;
  unsigned workers_;
  int split_row_;
  std::uint64_t task_ = 0;
  std::int64_t pending_ = 0;

  std::array<Mask, kMaxSearchOrder> adj_{};
  std::array<int, kMaxSearchOrder> deg_{};
  std::array<int, kMaxSearchOrder> cap_{};
  std::array<int, kMaxSearchOrder> cls_{};
  std::int64_t edges_ = 0;
};

Graph with_isolated_vertex(const Graph& g) {
  Graph out(g.order() + 1);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

struct Outcome {
  SearchStatus status = SearchStatus::kExact;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Graph witness;
};

Outcome solve_order(int m, const std::vector<std::int64_t>& ex_hi, const Graph& previous,
                    const SearchOptions& options, bool is_target, Shared& shared) {
  Outcome out;
  std::vector<Graph> candidates{greedy_saturate(Graph(m))};
  if (previous.order() == m - 1) candidates.push_back(greedy_saturate(with_isolated_vertex(previous)));
  if (auto seed = seed_witness(m)) candidates.push_back(greedy_saturate(*seed));
  out.witness = *std::max_element(candidates.begin(), candidates.end(),
                                  [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
  out.lo = out.witness.edge_count();

  out.hi = best_bounds(m).best_upper.value;
  if (m >= 2) out.hi = std::min(out.hi, ex_hi[m - 1] + (m - 1));
  if (is_target && options.upper_hint) out.hi = std::min(out.hi, *options.upper_hint);
  if (out.lo >= out.hi) return out;

  if (shared.node_budget && shared.nodes.load() >= *shared.node_budget) shared.exhaust();
  if (shared.deadline && Clock::now() >= *shared.deadline) shared.exhaust();
  if (shared.out_of_budget) {
    out.status = SearchStatus::kInterrupted;
    return out;
  }

  std::int64_t lo0 = out.lo;
  if (is_target && options.lower_hint) lo0 = std::max(lo0, *options.lower_hint - 1);
  shared.lo = lo0;
  shared.target_hi = out.hi;
  shared.witness = out.witness;
  shared.stop = false;

  const unsigned workers = std::max(1U, options.threads);
  const int split_row = std::min(3, m - 1);
  if (workers == 1 || m < 6) {
    Searcher(m, ex_hi, shared, lo0, 0, 1, split_row).run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { Searcher(m, ex_hi, shared, lo0, w, workers, split_row).run(); });
    }
  }

  if (shared.witness.edge_count() > out.lo) {
    out.witness = shared.witness;
    out.lo = out.witness.edge_count();
  }
  if (shared.out_of_budget && out.lo < out.hi) {
    out.status = SearchStatus::kInterrupted;
  } else {
    out.hi = out.lo;
  }
  return out;
}

}  // namespace

std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::kExact ? "exact" : "interrupted-with-bounds";
}

SearchResult brute_force_ex(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("brute_force_ex: n=" + std::to_string(n) + " outside [0, 7]");
  const auto start = Clock::now();
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::uint64_t best_mask = 0;
  int best = -1;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int e = std::popcount(mask);
    if (e <= best) continue;
    std::array<std::uint8_t, 8> adj{};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1) {
        adj[slots[s].first] |= static_cast<std::uint8_t>(1U << slots[s].second);
        adj[slots[s].second] |= static_cast<std::uint8_t>(1U << slots[s].first);
      }
    }
    bool free = true;
    for (int u = 0; u < n && free; ++u) {
      for (int v = u + 1; v < n && free; ++v) free = std::popcount(static_cast<unsigned>(adj[u] & adj[v])) <= 1;
    }
    if (free) {
      best = e;
      best_mask = mask;
    }
  }
  SearchResult res;
  res.n = n;
  res.witness = Graph(n);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if ((best_mask >> s) & 1) res.witness.add_edge(slots[s].first, slots[s].second);
  }
  res.value = res.lo = res.hi = res.witness.edge_count();
  res.nodes_explored = static_cast<std::int64_t>(total);
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

std::optional<Graph> seed_witness(int n) {
  if (n < 1) return std::nullopt;
  std::optional<Graph> best;
  const std::int64_t root = isqrt(static_cast<std::int64_t>(n));
  for (std::int64_t q = std::max<std::int64_t>(2, root - 1); q <= root + 1; ++q) {
    const std::int64_t r = q * q + q + 1 - n;
    if (r < 0 || r > q + 1 || q > kMaxFieldOrder) continue;
    const auto pp = is_prime_power(q);
    if (!pp) continue;
    Graph g = delete_low_degree(polarity_graph(make_field(*pp)), static_cast<int>(q), static_cast<int>(r));
    if (!best || g.edge_count() > best->edge_count()) best = std::move(g);
  }
  return best;
}

Graph greedy_saturate(Graph g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v) && !closes_c4(g, u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

SearchResult ex_c4(int n, const SearchOptions& options) {
  if (n < 1 || n > kMaxSearchOrder) {
    throw std::invalid_argument("ex_c4: n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxSearchOrder) + "]");
  }
  if (options.lower_hint && options.upper_hint && *options.lower_hint > *options.upper_hint) {
    throw std::invalid_argument("ex_c4: lower hint exceeds upper hint");
  }
  for (const auto& [m, g] : options.known) {
    if (g.order() != m || !is_c4_free(g).c4_free) {
      throw std::invalid_argument("ex_c4: known witness for n=" + std::to_string(m) + " is not a C4-free graph of that order");
    }
  }
  const auto start = Clock::now();
  Shared shared;
  shared.node_budget = options.budget.nodes;
  if (options.budget.wall) shared.deadline = start + *options.budget.wall;

  std::vector<std::int64_t> ex_hi(static_cast<std::size_t>(n) + 1, 0);
  Graph previous;
  Outcome last;
  for (int m = 1; m <= n; ++m) {
    const bool target = m == n;
    if (!target) {
      if (auto it = options.known.find(m); it != options.known.end()) {
        ex_hi[m] = it->second.edge_count();
        previous = it->second;
        continue;
      }
    }
    last = solve_order(m, ex_hi, previous, options, target, shared);
    ex_hi[m] = last.hi;
    previous = last.status == SearchStatus::kExact ? last.witness : Graph();
  }

  SearchResult res;
  res.n = n;
  res.status = last.status;
  res.value = last.lo;
  res.lo = last.lo;
  res.hi = last.hi;
  res.witness = std::move(last.witness);
  res.nodes_explored = shared.nodes.load();
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

}  // namespace c4ex
