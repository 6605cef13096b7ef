#pragma once

#include <cstddef>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace breather::par {

enum class Exec { serial, openmp };

// Process-wide default used by kernels that take no explicit mode.
inline Exec& default_exec() {
#ifdef _OPENMP
    static Exec mode = Exec::openmp;
#else
    static Exec mode = Exec::serial;
#endif
    return mode;
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline Exec parse_exec(const std::string& s) {
    if (s == "serial") return Exec::serial;
    if (s == "openmp" || s == "omp") return Exec::openmp;
    return default_exec();
}

// Evaluates f(i) into slot i. Every slot is an independent pure computation,
// so the result is identical for both modes regardless of scheduling; callers
// fold the slots in index order when a reduction is needed.
template <class T, class F>
std::vector<T> map_indexed(std::size_t n, F&& f, Exec mode = default_exec()) {
    std::vector<T> out(n);
#ifdef _OPENMP
    if (mode == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        return out;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

template <class F>
void for_each_index(std::size_t n, F&& f, Exec mode = default_exec()) {
#ifdef _OPENMP
    if (mode == Exec::openmp) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace breather::par
