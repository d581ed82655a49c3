#include "padictheta/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace padictheta {

unsigned worker_count() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs work(worker) on each worker and rethrows the first exception.
void run_workers(unsigned workers, const std::function<void(unsigned)>& work) {
  if (workers <= 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        work(w);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::optional<std::size_t> parallel_find_first(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> best{n};
  run_workers(workers, [&](unsigned w) {
    for (std::size_t k = w; k < n && k < best.load(); k += workers) {
      if (pred(k)) {
        std::size_t cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
        return;
      }
    }
  });
  if (best.load() == n) return std::nullopt;
  return best.load();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1)));
  run_workers(workers, [&](unsigned w) {
    for (std::size_t k = w; k < n; k += workers) body(k);
  });
}

}  // namespace padictheta
