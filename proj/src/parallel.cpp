// SPDX-License-Identifier: MIT
#include "fadecap/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#ifdef FADECAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace fadecap::par {

namespace {
constexpr std::size_t kChunks = 1024;
} // namespace

int worker_count() {
    if (const char* env = std::getenv("FADECAP_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
#ifdef FADECAP_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Mode default_mode() {
#ifdef FADECAP_HAVE_OPENMP
    return Mode::openmp;
#else
    return Mode::serial;
#endif
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, Mode mode) {
#ifdef FADECAP_HAVE_OPENMP
    if (mode == Mode::openmp) {
        const int workers = worker_count();
        // an exception must not unwind out of the omp region; stash the first
        // one, drain the remaining iterations, rethrow on the calling thread
        std::exception_ptr failure = nullptr;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(fadecap_parallel_for_failure)
                {
                    if (!failure) failure = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term, Mode mode) {
    if (n == 0) return 0.0;
    const std::size_t chunks = n < kChunks ? n : kChunks;
    std::vector<double> partial(chunks, 0.0);
    auto chunk_body = [&](std::size_t c) {
        const std::size_t lo = c * n / chunks;
        const std::size_t hi = (c + 1) * n / chunks;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    };
    parallel_for(chunks, chunk_body, mode);
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

void parallel_sum2(std::size_t n, const std::function<void(std::size_t, double&, double&)>& term,
                   double& out1, double& out2, Mode mode) {
    out1 = 0.0;
    out2 = 0.0;
    if (n == 0) return;
    const std::size_t chunks = n < kChunks ? n : kChunks;
    std::vector<double> p1(chunks, 0.0);
    std::vector<double> p2(chunks, 0.0);
    auto chunk_body = [&](std::size_t c) {
        const std::size_t lo = c * n / chunks;
        const std::size_t hi = (c + 1) * n / chunks;
        double s1 = 0.0;
        double s2 = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            double a = 0.0;
            double b = 0.0;
            term(i, a, b);
            s1 += a;
            s2 += b;
        }
        p1[c] = s1;
        p2[c] = s2;
    };
    parallel_for(chunks, chunk_body, mode);
    for (std::size_t c = 0; c < chunks; ++c) {
        out1 += p1[c];
        out2 += p2[c];
    }
}

} // namespace fadecap::par
