#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace windsum {

/// Execution policy for the data-parallel kernels (grid evaluation,
/// sampling, KDE). Serial is the reference path; Parallel uses OpenMP.
/// Both must produce bitwise-identical results: every kernel writes to
/// disjoint slots or reduces per-chunk partials in a fixed order.
enum class ExecPolicy { Serial, Parallel };

/// Index-parallel loop. body(i) must be independent across i.
template <typename Body>
inline void for_each_index(std::size_t n, ExecPolicy exec, Body&& body) {
#ifdef _OPENMP
    if (exec == ExecPolicy::Parallel) {
        #pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace windsum
