#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "c4ex/graph.hpp"

namespace c4ex {

inline constexpr std::string_view kSolverVersion = "c4ex-bb-1";

enum class SearchStatus { kExact, kInterrupted };
std::string_view to_string(SearchStatus s);  // "exact" / "interrupted-with-bounds"

struct SearchResult {
  int n = 0;
  std::int64_t value = 0;  // best edge count found; equals lo
  Graph witness;
  std::int64_t nodes_explored = 0;
  SearchStatus status = SearchStatus::kExact;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  double seconds = 0;
};

// Exhaustive maximum over all 2^C(n,2) edge subsets. Throws
// std::invalid_argument for n outside [0, 7].
SearchResult brute_force_ex(int n);

// Best polarity or deletion construction on exactly n vertices, if any.
std::optional<Graph> seed_witness(int n);

// Adds edges in lexicographic order whenever the graph stays C4-free.
Graph greedy_saturate(Graph g);

struct SearchBudget {
  std::optional<std::int64_t> nodes;
  std::optional<std::chrono::milliseconds> wall;
};

struct SearchOptions {
  std::optional<std::int64_t> lower_hint;
  std::optional<std::int64_t> upper_hint;
  SearchBudget budget;
  unsigned threads = 1;
  // Extremal witnesses for smaller orders (e.g. from a cache); those orders
  // are not re-solved. Each must be C4-free with the stated order.
  std::map<int, Graph> known;
};

inline constexpr int kMaxSearchOrder = 64;

// Exact ex(n, C4) by branch and bound. Solves 1..n-1 first for the
// ex(n-1) based pruning. Throws std::invalid_argument for n < 1,
// n > kMaxSearchOrder or lower_hint > upper_hint.
SearchResult ex_c4(int n, const SearchOptions& options = {});

// One JSON record per line: {n, value, witness_g6, status, solver_version}.
struct CacheEntry {
  int n = 0;
  std::int64_t value = 0;
  std::string witness_g6;
  std::string status;
  std::string solver_version;
};

class ResultCache {
 public:
  static constexpr std::string_view kEnvVar = "C4EX_CACHE_DIR";
  static constexpr std::string_view kFileName = "ex_c4.jsonl";

  explicit ResultCache(std::filesystem::path dir);
  // Directory from C4EX_CACHE_DIR, or nullopt when unset or empty.
  static std::optional<ResultCache> from_env();

  const std::filesystem::path& file() const { return file_; }

  // Exact entries whose witness decodes, is C4-free and has `value` edges.
  // Malformed or inconsistent lines are skipped.
  std::optional<CacheEntry> lookup(int n) const;
  std::map<int, Graph> exact_witnesses() const;
  void store(const SearchResult& result) const;

 private:
  std::map<int, CacheEntry> load() const;
  std::filesystem::path file_;
};

CacheEntry to_cache_entry(const SearchResult& result);

}  // namespace c4ex
