#pragma once

/**
 * @file fermat_search.hpp
 * @brief Exhaustive search for x^k + y^k = z^k over a coefficient box.
 *
 * Every pair of nonzero x, y with both coefficients in [-bound, bound] is
 * covered: s = x^k + y^k is tested with is_kth_power and a nonzero root z is
 * recorded. Pairs related by swapping x and y, or by the sign symmetries
 * (global sign for odd k, independent signs for even k), share one root
 * computation and are expanded back afterwards.
 *
 * Work is split into shards by the constant coefficient of x. Shards run on
 * `workers` threads; the report is sorted, so its contents never depend on
 * scheduling.
 */

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "ztau/triples.hpp"

namespace ztau {

inline constexpr int kDeskScaleBound = 30;

struct SearchConfig {
  unsigned k = 3;
  int bound = 1;
  unsigned workers = 1;
  // One triple per symmetry orbit (see canonical_solution) instead of every
  // ordered pair.
  bool dedup = true;
  // Optional resumable state; empty disables checkpointing.
  std::filesystem::path checkpoint;

  // Throws DomainError for k < 2, bound < 1 or workers < 1.
  void validate() const;
};

struct SearchReport {
  SearchConfig config;
  std::vector<PowerTriple> solutions;
  std::uint64_t pairs_tested = 0;
  std::chrono::milliseconds elapsed{0};
  std::size_t shards_resumed = 0;
};

// Receives each shard's solutions in ascending shard order.
using ShardSink = std::function<void(std::size_t shard, const std::vector<PowerTriple>& solutions)>;

SearchReport search(const SearchConfig& cfg, const ShardSink& on_shard = {});

// Exact re-verification: every solution satisfies its equation and has no
// zero component.
bool verify_report(const SearchReport& report);

// Ordered pairs of nonzero elements in the box: ((2B+1)^2 - 1)^2.
std::uint64_t box_pair_count(int bound);

std::size_t shard_count(int bound);

/**
 * Orbit representative of a solution: z gets positive real embedding (by a
 * global sign flip for odd k); for even k, x and y are made positive as
 * well; finally x <= y in (m, n) lexicographic order.
 */
PowerTriple canonical_solution(const PowerTriple& t);

}  // namespace ztau
