#pragma once

#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "tkr/errors.hpp"

namespace tkr {

struct EnumOptions {
  int cap = 24;       // refuse enumerations over more cells than this
  int threads = 1;    // worker threads for subset sums
};

// Guards 2^f subset enumerations; the cap is adjustable but the bitmask
// representation imposes a hard ceiling.
inline void check_enumeration_size(std::size_t f, const EnumOptions& opts) {
  if (f > 62)
    fail("TooLarge", "enumeration over " + std::to_string(f) + " cells exceeds the hard limit of 62");
  if (static_cast<long long>(f) > opts.cap)
    fail("TooLarge", "enumeration over " + std::to_string(f) + " cells exceeds the cap of " +
                         std::to_string(opts.cap) + " (raise it with --cap)");
}

// Folds fn over all masks in [0, 2^f) and merges per-thread partial results.
// fn(mask, acc) must only touch its own accumulator.
template <class Acc, class Fn, class Merge>
Acc fold_subsets(std::size_t f, const EnumOptions& opts, Acc init, Fn&& fn, Merge&& merge) {
  check_enumeration_size(f, opts);
  const std::uint64_t total = std::uint64_t(1) << f;
  int threads = opts.threads;
  if (threads < 1) threads = 1;
  if (threads > 16) threads = 16;
  if (threads == 1 || total < 64) {
    Acc acc = init;
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(mask, acc);
    return acc;
  }
  std::vector<Acc> parts(threads, init);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::uint64_t lo = chunk * t;
      std::uint64_t hi = lo + chunk < total ? lo + chunk : total;
      for (std::uint64_t mask = lo; mask < hi; ++mask) fn(mask, parts[t]);
    });
  }
  for (auto& th : pool) th.join();
  Acc acc = init;
  for (const Acc& p : parts) merge(acc, p);
  return acc;
}

}  // namespace tkr
