#include "rgspectra/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rgspectra {

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("RG_SPECTRA_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::atomic<unsigned> g_threads{0};

}  // namespace

unsigned thread_count() {
  unsigned n = g_threads.load();
  if (n == 0) {
    n = default_threads();
    g_threads.store(n);
  }
  return n;
}

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? default_threads() : n); }

}  // namespace rgspectra
