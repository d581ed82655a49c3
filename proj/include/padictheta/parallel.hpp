#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace padictheta {

// Name of the environment variable holding the worker count.
inline constexpr const char* kThreadsEnv = "PADICTHETA_THREADS";

// Worker count from the environment, else the hardware concurrency, at least 1.
unsigned worker_count();

// Smallest k in [0, n) with pred(k), searched with worker_count() threads.
// The answer does not depend on the number of threads.
std::optional<std::size_t> parallel_find_first(std::size_t n, const std::function<bool(std::size_t)>& pred);

// Runs body(k) for every k in [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace padictheta
