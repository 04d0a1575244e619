#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace odgrid {

/// Dense 2D array.  Storage is x2-major: the slice at fixed j is contiguous
/// over i, which is what the per-row cubic interpolation wants.
class Grid2D {
  public:
    Grid2D() = default;
    Grid2D(int nx, int ny, double fill = 0.0) : nx_(nx), ny_(ny), a_(static_cast<std::size_t>(nx) * ny, fill) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(j) * nx_ + i]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(j) * nx_ + i]; }
    std::span<double> row(int j) { return {a_.data() + static_cast<std::size_t>(j) * nx_, static_cast<std::size_t>(nx_)}; }
    std::span<const double> row(int j) const { return {a_.data() + static_cast<std::size_t>(j) * nx_, static_cast<std::size_t>(nx_)}; }
    std::span<double> flat() { return a_; }
    std::span<const double> flat() const { return a_; }

  private:
    int nx_ = 0, ny_ = 0;
    std::vector<double> a_;
};

/// Dense 3D array, x1 fastest.
class Grid3D {
  public:
    Grid3D() = default;
    Grid3D(int n1, int n2, int n3, double fill = 0.0)
        : n1_(n1), n2_(n2), n3_(n3), a_(static_cast<std::size_t>(n1) * n2 * n3, fill) {}

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int n3() const { return n3_; }
    double& operator()(int i, int j, int k) { return a_[(static_cast<std::size_t>(k) * n2_ + j) * n1_ + i]; }
    double operator()(int i, int j, int k) const { return a_[(static_cast<std::size_t>(k) * n2_ + j) * n1_ + i]; }
    std::span<double> flat() { return a_; }
    std::span<const double> flat() const { return a_; }

  private:
    int n1_ = 0, n2_ = 0, n3_ = 0;
    std::vector<double> a_;
};

/// Runs fn(begin, end) over [0, n) split into contiguous chunks.  Each chunk
/// writes to its own slots only, so results do not depend on the worker count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2048) {
        fn(std::size_t{0}, n);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace odgrid
