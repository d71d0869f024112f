#include "kohlab/qbinom.hpp"

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace kohlab {

namespace {

std::uint64_t cache_key(unsigned lo, unsigned hi) {
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

// Shared memo for gauss_box. Entries are immutable once inserted; a
// concurrent duplicate computation stores an equal value, so first-wins
// insertion keeps results deterministic.
class GaussCache {
 public:
  bool lookup(unsigned lo, unsigned hi, QPoly& out) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(cache_key(lo, hi));
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
  }

  void store(unsigned lo, unsigned hi, const QPoly& value) {
    std::unique_lock lock(mutex_);
    if (entries_.size() >= capacity_) return;
    entries_.emplace(cache_key(lo, hi), value);
  }

  void set_capacity(std::size_t max_entries) {
    std::unique_lock lock(mutex_);
    capacity_ = max_entries;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, QPoly> entries_;
  std::size_t capacity_ = 1u << 16;
};

GaussCache& cache() {
  static GaussCache instance;
  return instance;
}

}  // namespace

QPoly gauss_box(unsigned m, unsigned n) {
  unsigned lo = m, hi = n;
  if (lo > hi) std::swap(lo, hi);
  if (lo == 0) return QPoly::one();

  QPoly cached;
  if (cache().lookup(lo, hi, cached)) return cached;

  // Pascal fill of the (lo x hi) rectangle. Cells that exceed the shared
  // cache capacity live in the local scratch map for this call only.
  std::unordered_map<std::uint64_t, QPoly> scratch;
  auto get = [&](unsigned i, unsigned j) -> QPoly {
    if (i > j) std::swap(i, j);
    if (i == 0) return QPoly::one();
    QPoly value;
    if (cache().lookup(i, j, value)) return value;
    return scratch.at(cache_key(i, j));
  };

  for (unsigned i = 1; i <= lo; ++i) {
    for (unsigned j = i; j <= hi; ++j) {
      QPoly probe;
      if (cache().lookup(i, j, probe)) continue;
      // G(i, j) = G(i-1, j) + q^i * G(i, j-1)
      QPoly cell = get(i - 1, j) + shift(get(i, j - 1), i);
      cache().store(i, j, cell);
      if (!cache().lookup(i, j, probe)) {
        scratch.emplace(cache_key(i, j), std::move(cell));
      }
    }
  }
  return get(lo, hi);
}

QPoly gauss_box(GaussParams box) { return gauss_box(box.width, box.height); }

QPoly qbin(long long top, long long k) {
  if (k < 0 || top < 0 || k > top) return QPoly{};
  return gauss_box(static_cast<unsigned>(k), static_cast<unsigned>(top - k));
}

bool classify_strict(int b, int c) {
  if (b < 2 || c < b) {
    throw std::invalid_argument("classify_strict: requires c >= b >= 2");
  }
  const QPoly g = gauss_box(static_cast<unsigned>(b), static_cast<unsigned>(c));
  if (!unimodality_report(g).unimodal) return false;
  const std::size_t half = static_cast<std::size_t>(b) * static_cast<std::size_t>(c) / 2;
  for (std::size_t i = 2; i <= half; ++i) {
    if (g.coeff(i - 1) >= g.coeff(i)) return false;
  }
  return true;
}

bool even_strict_increase(int b, int c) {
  if (b < 1 || c < 1) {
    throw std::invalid_argument("even_strict_increase: requires b, c >= 1");
  }
  const QPoly g = gauss_box(static_cast<unsigned>(b), static_cast<unsigned>(c));
  const std::size_t half = static_cast<std::size_t>(b) * static_cast<std::size_t>(c) / 2;
  for (std::size_t i = 2; i <= half; i += 2) {
    if (g.coeff(i - 1) >= g.coeff(i)) return false;
  }
  return true;
}

void set_gauss_cache_capacity(std::size_t max_entries) { cache().set_capacity(max_entries); }

std::size_t gauss_cache_size() { return cache().size(); }

void clear_gauss_cache() { cache().clear(); }

}  // namespace kohlab
