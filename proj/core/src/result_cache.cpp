#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "c4ex/exact.hpp"

namespace c4ex {
namespace {

std::optional<CacheEntry> parse_line(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    CacheEntry e;
    e.n = j.at("n").get<int>();
    e.value = j.at("value").get<std::int64_t>();
    e.witness_g6 = j.at("witness_g6").get<std::string>();
    e.status = j.at("status").get<std::string>();
    e.solver_version = j.at("solver_version").get<std::string>();
    return e;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

bool witness_consistent(const CacheEntry& e) {
  try {
    const Graph g = graph6_decode(e.witness_g6);
    return g.order() == e.n && g.edge_count() == e.value && is_c4_free(g).c4_free;
  } catch (const Graph6Error&) {
    return false;
  }
}

}  // namespace

CacheEntry to_cache_entry(const SearchResult& result) {
  return CacheEntry{result.n, result.value, graph6_encode(result.witness), std::string(to_string(result.status)),
                    std::string(kSolverVersion)};
}

ResultCache::ResultCache(std::filesystem::path dir) : file_(std::move(dir) / kFileName) {}

std::optional<ResultCache> ResultCache::from_env() {
  const char* dir = std::getenv(std::string(kEnvVar).c_str());
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ResultCache(dir);
}

std::map<int, CacheEntry> ResultCache::load() const {
  std::map<int, CacheEntry> out;
  std::ifstream in(file_);
  for (std::string line; std::getline(in, line);) {
    auto e = parse_line(line);
    if (!e || e->status != to_string(SearchStatus::kExact) || !witness_consistent(*e)) continue;
    out.insert_or_assign(e->n, std::move(*e));
  }
  return out;
}

std::optional<CacheEntry> ResultCache::lookup(int n) const {
  auto all = load();
  const auto it = all.find(n);
  if (it == all.end()) return std::nullopt;
  return it->second;
}

std::map<int, Graph> ResultCache::exact_witnesses() const {
  std::map<int, Graph> out;
  for (const auto& [n, e] : load()) out.emplace(n, graph6_decode(e.witness_g6));
  return out;
}

void ResultCache::store(const SearchResult& result) const {
  std::filesystem::create_directories(file_.parent_path());
  const CacheEntry e = to_cache_entry(result);
  const nlohmann::json j = {{"n", e.n},
                            {"value", e.value},
                            {"witness_g6", e.witness_g6},
                            {"status", e.status},
                            {"solver_version", e.solver_version}};
  std::ofstream out(file_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + file_.string());
  out << j.dump() << '\n';
}

}  // namespace c4ex
