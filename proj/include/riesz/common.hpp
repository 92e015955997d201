#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace riesz {

enum class ErrorCode {
  InvalidArgument,  // unparseable spec, bad parameter combination
  Unsupported,      // valid request outside the supported surface (e.g. OP point ops)
  Domain,           // input outside an operation's domain
  Numeric,          // divergent integral, quadrature or solver failure
  Resource,         // request would blow up (derivative order, term growth)
  Bracket,          // sign-change bracket does not bracket
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Deterministic random source. All sampling goes through an explicitly passed
// Rng; nothing in the library keeps hidden generator state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::uint64_t next() { return engine_(); }

  // Stable stream derivation (splitmix64 finalizer), used to hand independent
  // generators to restarts/workers without sequencing artifacts.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

// Worker cap for parallel sections; RIESZ_THREADS overrides hardware count.
inline unsigned worker_count() {
  if (const char* env = std::getenv("RIESZ_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Runs fn(i) for i in [0, n). Work is split in fixed contiguous chunks so
// results written per-index are identical for any worker count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = n * w / workers;
    std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace riesz
