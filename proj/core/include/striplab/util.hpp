#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace striplab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Number of worker threads used by parallel regions. 0 = hardware default.
void set_worker_threads(int n);
int worker_threads();

/// Static-partition parallel loop over [0, n). Partitioning depends only on
/// n and the thread count, so results of per-index writes are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace striplab
