#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace rgspectra {

/// Worker count for parallel loops. Initialized from RG_SPECTRA_THREADS, else
/// the hardware concurrency.
unsigned thread_count();
/// 0 restores the default.
void set_thread_count(unsigned n);

/// Calls f(i) for every i in [0, n). Indices are handed out dynamically, so f
/// must write to slot i only; results never depend on the worker count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
}

/// Pairwise sum in index order; the association pattern depends only on
/// parts.size().
template <class S>
S tree_sum(std::vector<S> parts) {
  if (parts.empty()) return S{};
  while (parts.size() > 1) {
    std::vector<S> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 != 0) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

}  // namespace rgspectra
