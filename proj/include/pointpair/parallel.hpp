#pragma once
// OpenMP index-space reduction used by the campaign kernels.
//
// Each index computes its contribution independently (samplers are addressed
// by index) and partials merge with an associative, commutative merge, so
// results are identical for any thread count. Serial reference
// implementations of the kernels live next to the parallel ones and are
// compared in the tests and in the bench tool.

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pointpair {

inline bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class Acc, class Update, class Merge>
Acc campaign_reduce(uint64_t n, const Acc& init, Update&& update, Merge&& merge) {
    Acc result = init;
#ifdef _OPENMP
    #pragma omp parallel
    {
        Acc local = init;
        #pragma omp for schedule(static) nowait
        for (int64_t i = 0; i < static_cast<int64_t>(n); ++i)
            update(local, static_cast<uint64_t>(i));
        #pragma omp critical
        merge(result, local);
    }
#else
    for (uint64_t i = 0; i < n; ++i) update(result, i);
    (void)merge;
#endif
    return result;
}

}  // namespace pointpair
