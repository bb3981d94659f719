#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "grlab/enumeration.hpp"

namespace grlab {

// 0 means "use hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Extremal value over a cube family with its first attaining cube.
// Offers must arrive in increasing index order within one accumulator; merging
// a later chunk only replaces on strict improvement, so the result is the same
// as a sequential scan in canonical order.
template <bool Maximize>
struct Extremum {
  bool found = false;
  double value = 0.0;
  std::uint64_t index = 0;
  Cube cube;

  static bool better(double candidate, double incumbent) {
    if constexpr (Maximize) {
      return candidate > incumbent;
    } else {
      return candidate < incumbent;
    }
  }

  void offer(double v, std::uint64_t i, const Cube& c) {
    if (!found || better(v, value)) {
      found = true;
      value = v;
      index = i;
      cube = c;
    }
  }

  void merge(const Extremum& later) {
    if (later.found && (!found || better(later.value, value))) *this = later;
  }
};

using MaxCube = Extremum<true>;
using MinCube = Extremum<false>;

// First cube (lowest index) flagged by a scan.
struct FirstHit {
  bool found = false;
  double value = 0.0;
  std::uint64_t index = 0;
  Cube cube;

  void offer(double v, std::uint64_t i, const Cube& c) {
    if (!found) {
      found = true;
      value = v;
      index = i;
      cube = c;
    }
  }
  void merge(const FirstHit& later) {
    if (later.found && !found) *this = later;
  }
};

// Deterministic parallel fold over a cube family. The family is cut into
// contiguous chunks, each folded from a copy of `init` by visit(acc, cube,
// index), and the chunk results are merged left to right with
// merge(acc, later). Results do not depend on the thread count as long as
// merge is associative over chunk order.
template <class Acc, class Visit, class Merge>
Acc scan_reduce(const CubeFamily& family, unsigned threads, const Acc& init, Visit visit, Merge merge) {
  const std::uint64_t total = family.size();
  threads = resolve_threads(threads);
  if (threads <= 1 || total < 2) {
    Acc acc = init;
    family.visit(0, total, [&](const Cube& c, std::uint64_t i) { visit(acc, c, i); });
    return acc;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{threads} * 8);
  std::vector<Acc> partial(chunks, init);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t k = next++; k < chunks; k = next++) {
        const std::uint64_t begin = total * k / chunks;
        const std::uint64_t end = total * (k + 1) / chunks;
        Acc& acc = partial[k];
        family.visit(begin, end, [&](const Cube& c, std::uint64_t i) { visit(acc, c, i); });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  std::vector<std::jthread> pool;
  const unsigned spawned = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  pool.reserve(spawned);
  for (unsigned t = 0; t < spawned; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  Acc acc = std::move(partial.front());
  for (std::uint64_t k = 1; k < chunks; ++k) merge(acc, partial[k]);
  return acc;
}

}  // namespace grlab
