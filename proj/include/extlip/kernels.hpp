#ifndef EXTLIP_KERNELS_HPP
#define EXTLIP_KERNELS_HPP

#include <cstdint>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace extlip {

/// Result of an indexed max-reduction. `index == scan_npos` means the scan
/// ran over an empty range.
struct ScanBest {
    double value = -std::numeric_limits<double>::infinity();
    std::uint64_t index = ~std::uint64_t{0};
};

inline constexpr std::uint64_t scan_npos = ~std::uint64_t{0};

/// Serial reference scan: max of f(i) over i in [0, n) with the lowest
/// attaining index. Kept alongside the parallel variant so tests and the
/// benchmark can compare the two on identical inputs.
template <class F>
ScanBest argmax_serial(std::uint64_t n, F&& f) {
    ScanBest best;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double v = f(i);
        if (v > best.value || (v == best.value && i < best.index)) best = {v, i};
    }
    return best;
}

/// Parallel scan with the same contract as argmax_serial. Thread-local
/// maxima are merged by (value desc, index asc), so the result is the
/// lowest attaining index regardless of thread count. Each f(i) is a pure
/// evaluation, so the returned value is bitwise identical to the serial
/// scan.
template <class F>
ScanBest argmax_parallel(std::uint64_t n, F&& f) {
#ifdef _OPENMP
    ScanBest best;
#pragma omp parallel
    {
        ScanBest local;
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const double v = f(static_cast<std::uint64_t>(i));
            const auto u = static_cast<std::uint64_t>(i);
            if (v > local.value || (v == local.value && u < local.index)) local = {v, u};
        }
#pragma omp critical(extlip_argmax_merge)
        {
            if (local.value > best.value ||
                (local.value == best.value && local.index < best.index))
                best = local;
        }
    }
    return best;
#else
    return argmax_serial(n, std::forward<F>(f));
#endif
}

/// Dispatching entry point: parallel for ranges large enough to amortize
/// the fork, serial otherwise.
template <class F>
ScanBest argmax(std::uint64_t n, F&& f) {
    constexpr std::uint64_t parallel_threshold = 1 << 12;
    if (n >= parallel_threshold) return argmax_parallel(n, std::forward<F>(f));
    return argmax_serial(n, std::forward<F>(f));
}

}  // namespace extlip

#endif
