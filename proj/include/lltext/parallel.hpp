#pragma once

#include <cstddef>
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace lltext::par {

inline int max_threads() {
#if defined(_OPENMP)
    return ::omp_get_max_threads();
#else
    return 1;
#endif
}

inline bool in_parallel() {
#if defined(_OPENMP)
    return ::omp_in_parallel();
#else
    return false;
#endif
}

/// Runs f(i) for i in [begin, end). Every index is handled by exactly one
/// thread, so kernels that write disjoint outputs stay deterministic.
template <class F>
void parallel_for(std::int64_t begin, std::int64_t end, F&& f) {
    if (end - begin < 2 || max_threads() <= 1 || in_parallel()) {
        for (std::int64_t i = begin; i < end; ++i) f(i);
        return;
    }
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
    for (std::int64_t i = begin; i < end; ++i) f(i);
#endif
}

} // namespace lltext::par
