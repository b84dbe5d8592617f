#include "ztau/fermat_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "ztau/detail/small_ring.hpp"
#include "ztau/errors.hpp"
#include "ztau/roots.hpp"
#include "ztau/serialize.hpp"

namespace ztau {

using detail::SmallElement;

void SearchConfig::validate() const {
  if (k < 2) throw DomainError("search: k must be at least 2");
  if (bound < 1) throw DomainError("search: bound must be at least 1");
  if (workers < 1) throw DomainError("search: workers must be at least 1");
}

std::uint64_t box_pair_count(int bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t nonzero = width * width - 1;
  return nonzero * nonzero;
}

std::size_t shard_count(int bound) { return static_cast<std::size_t>(2 * bound + 1); }

PowerTriple canonical_solution(const PowerTriple& t) {
  PowerTriple c = t;
  auto positive = [](RingElement& e) {
    if (surd_sign(embed(e)) < 0) e = -e;
  };
  if (c.k % 2 == 1) {
    if (surd_sign(embed(c.z)) < 0) {
      c.x = -c.x;
      c.y = -c.y;
      c.z = -c.z;
    }
  } else {
    positive(c.x);
    positive(c.y);
    positive(c.z);
  }
  if (LexLess{}(c.y, c.x)) std::swap(c.x, c.y);
  return c;
}

bool verify_report(const SearchReport& report) {
  return std::all_of(report.solutions.begin(), report.solutions.end(),
                     [](const PowerTriple& t) { return t.nontrivial() && verify(t); });
}

namespace {

struct TripleLess {
  bool operator()(const PowerTriple& a, const PowerTriple& b) const {
    LexLess less;
    if (less(a.x, b.x)) return true;
    if (less(b.x, a.x)) return false;
    if (less(a.y, b.y)) return true;
    if (less(b.y, a.y)) return false;
    return less(a.z, b.z);
  }
};

void sort_unique(std::vector<PowerTriple>& v) {
  std::sort(v.begin(), v.end(), TripleLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Elements of the box indexed by i = (m + B) * W + (n + B); the index order is
// (m, n) lexicographic and negation maps i to size - 1 - i.
class Box {
 public:
  Box(int bound, unsigned k) : bound_(bound), width_(2 * bound + 1), size_(width_ * width_) {
    elements_.reserve(size_);
    powers_.resize(size_);
    power_ok_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      const long m = static_cast<long>(i / width_) - bound_;
      const long n = static_cast<long>(i % width_) - bound_;
      elements_.push_back({m, n});
      power_ok_[i] = detail::checked_pow(elements_[i], k, powers_[i]);
    }
  }

  std::size_t size() const { return size_; }
  std::size_t width() const { return width_; }
  std::size_t zero() const { return size_ / 2; }
  std::size_t neg(std::size_t i) const { return size_ - 1 - i; }
  const SmallElement& element(std::size_t i) const { return elements_[i]; }
  const SmallElement* power(std::size_t i) const { return power_ok_[i] ? &powers_[i] : nullptr; }
  RingElement ring(std::size_t i) const { return detail::to_ring(elements_[i]); }

 private:
  long bound_;
  std::size_t width_;
  std::size_t size_;
  std::vector<SmallElement> elements_;
  std::vector<SmallElement> powers_;
  std::vector<char> power_ok_;
};

class ShardScanner {
 public:
  ShardScanner(const Box& box, unsigned k, bool dedup) : box_(box), k_(k), even_(k % 2 == 0), dedup_(dedup) {}

  std::vector<PowerTriple> scan(std::size_t shard) const {
    std::vector<PowerTriple> found;
    const std::size_t w = box_.width();
    for (std::size_t i = shard * w; i < (shard + 1) * w; ++i) {
      if (i == box_.zero()) continue;
      for (std::size_t j = 0; j < box_.size(); ++j) {
        if (j == box_.zero() || !is_orbit_leader(i, j)) continue;
        if (auto z = root_of_sum(i, j)) record(i, j, *z, found);
      }
    }
    sort_unique(found);
    return found;
  }

 private:
  using Pair = std::pair<std::size_t, std::size_t>;

  struct Member {
    Pair pair;
    bool negated;  // the member is (-x, -y) up to order, so z changes sign for odd k
  };

  // Orbit of (i, j) under swapping and the sign symmetries for this parity.
  std::array<Member, 8> orbit(std::size_t i, std::size_t j, std::size_t& count) const {
    const std::size_t ni = box_.neg(i);
    const std::size_t nj = box_.neg(j);
    if (!even_) {
      count = 4;
      return {Member{{i, j}, false}, Member{{j, i}, false}, Member{{ni, nj}, true}, Member{{nj, ni}, true}};
    }
    count = 8;
    return {Member{{i, j}, false},  Member{{j, i}, false},  Member{{ni, nj}, true}, Member{{nj, ni}, true},
            Member{{ni, j}, false}, Member{{j, ni}, false}, Member{{i, nj}, false}, Member{{nj, i}, false}};
  }

  bool is_orbit_leader(std::size_t i, std::size_t j) const {
    std::size_t count = 0;
    const auto members = orbit(i, j, count);
    const Pair self{i, j};
    for (std::size_t c = 1; c < count; ++c) {
      if (members[c].pair < self) return false;
    }
    return true;
  }

  std::optional<RingElement> root_of_sum(std::size_t i, std::size_t j) const {
    const SmallElement* pi = box_.power(i);
    const SmallElement* pj = box_.power(j);
    SmallElement sum;
    if (pi != nullptr && pj != nullptr && detail::checked_add(*pi, *pj, sum)) {
      const detail::RootProbe probe = detail::probe_kth_root(sum, k_);
      if (probe.status == detail::RootStatus::absent) return std::nullopt;
      if (probe.status == detail::RootStatus::found) {
        if (probe.root.is_zero()) return std::nullopt;
        return detail::to_ring(probe.root);
      }
    }
    // Out of the 128-bit range: exact multiprecision route.
    const RingElement s = pow(box_.ring(i), k_) + pow(box_.ring(j), k_);
    auto z = is_kth_power(s, k_);
    if (z && z->is_zero()) return std::nullopt;
    return z;
  }

  void record(std::size_t i, std::size_t j, const RingElement& z, std::vector<PowerTriple>& out) const {
    const RingElement x = box_.ring(i);
    const RingElement y = box_.ring(j);
    if (dedup_) {
      out.push_back(canonical_solution({x, y, z, k_}));
      return;
    }
    std::size_t count = 0;
    const auto members = orbit(i, j, count);
    const RingElement neg_z = -z;
    for (std::size_t c = 0; c < count; ++c) {
      const auto [a, b] = members[c].pair;
      const bool flip = !even_ && members[c].negated;
      out.push_back({box_.ring(a), box_.ring(b), flip ? neg_z : z, k_});
    }
    // Orbit members can coincide (e.g. x = y); duplicates go in sort_unique.
  }

  const Box& box_;
  unsigned k_;
  bool even_;
  bool dedup_;
};

std::string checkpoint_header(const SearchConfig& cfg) {
  std::ostringstream os;
  os << "# ztau-fermat k=" << cfg.k << " bound=" << cfg.bound << " dedup=" << (cfg.dedup ? 1 : 0);
  return os.str();
}

// Completed shards recorded in a checkpoint file, or empty if it does not exist.
std::map<std::size_t, std::vector<PowerTriple>> load_checkpoint(const SearchConfig& cfg) {
  std::map<std::size_t, std::vector<PowerTriple>> done;
  std::ifstream in(cfg.checkpoint);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  if (line != checkpoint_header(cfg)) {
    throw DomainError("checkpoint " + cfg.checkpoint.string() + " was written for a different configuration");
  }
  while (std::getline(in, line)) {
    const auto space = line.find(' ');
    if (space == std::string::npos) continue;
    try {
      const std::size_t shard = std::stoul(line.substr(0, space));
      if (shard >= shard_count(cfg.bound)) continue;
      const Json sols = Json::parse(line.substr(space + 1));
      std::vector<PowerTriple> triples;
      for (const auto& s : sols) triples.push_back(triple_from_json(s));
      done[shard] = std::move(triples);
    } catch (const std::exception&) {
      // A torn final line from an interrupted run; that shard is redone.
    }
  }
  return done;
}

}  // namespace

SearchReport search(const SearchConfig& cfg, const ShardSink& on_shard) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  const Box box(cfg.bound, cfg.k);
  const ShardScanner scanner(box, cfg.k, cfg.dedup);
  const std::size_t shards = shard_count(cfg.bound);

  std::vector<std::optional<std::vector<PowerTriple>>> results(shards);
  std::size_t resumed = 0;
  std::ofstream checkpoint;
  if (!cfg.checkpoint.empty()) {
    for (auto& [shard, sols] : load_checkpoint(cfg)) {
      results[shard] = std::move(sols);
      ++resumed;
    }
    const bool fresh =
        !std::filesystem::exists(cfg.checkpoint) || std::filesystem::file_size(cfg.checkpoint) == 0;
    bool torn = false;
    if (!fresh) {
      std::ifstream tail(cfg.checkpoint, std::ios::binary);
      tail.seekg(-1, std::ios::end);
      torn = tail.get() != '\n';
    }
    checkpoint.open(cfg.checkpoint, std::ios::app);
    if (!checkpoint) throw std::runtime_error("cannot open checkpoint " + cfg.checkpoint.string());
    if (fresh) checkpoint << checkpoint_header(cfg) << '\n' << std::flush;
    if (torn) checkpoint << '\n' << std::flush;
  }

  std::mutex mu;
  std::size_t next_to_emit = 0;
  auto release_in_order = [&]() {
    while (next_to_emit < shards && results[next_to_emit]) {
      if (on_shard) on_shard(next_to_emit, *results[next_to_emit]);
      ++next_to_emit;
    }
  };
  {
    std::lock_guard lock(mu);
    release_in_order();
  }

  std::vector<std::size_t> pending;
  for (std::size_t s = 0; s < shards; ++s) {
    if (!results[s]) pending.push_back(s);
  }

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  auto worker = [&]() {
    try {
      for (std::size_t idx = cursor++; idx < pending.size(); idx = cursor++) {
        const std::size_t shard = pending[idx];
        std::vector<PowerTriple> found = scanner.scan(shard);
        std::lock_guard lock(mu);
        if (checkpoint.is_open()) {
          Json sols = Json::array();
          for (const auto& t : found) sols.push_back(triple_to_json(t));
          checkpoint << shard << ' ' << sols.dump() << '\n' << std::flush;
        }
        results[shard] = std::move(found);
        release_in_order();
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      cursor = pending.size();
    }
  };

  const unsigned threads = std::min<unsigned>(cfg.workers, static_cast<unsigned>(std::max<std::size_t>(pending.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report;
  report.config = cfg;
  report.pairs_tested = box_pair_count(cfg.bound);
  report.shards_resumed = resumed;
  for (auto& r : results) {
    report.solutions.insert(report.solutions.end(), r->begin(), r->end());
  }
  sort_unique(report.solutions);
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace ztau
