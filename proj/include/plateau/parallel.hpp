#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace plateau {

// Worker count: min(hardware, PLATEAU_THREADS if set).  A value of 1
// disables threading entirely.
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("PLATEAU_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Chunked parallel map with deterministic fixed-order reduction: the range
// [0,n) is split into contiguous chunks, each chunk produces a partial value
// via `body(begin,end)`, and partials are combined in chunk order by
// `combine`.  Results are independent of the worker count.
template <class T, class Body, class Combine>
T parallel_reduce(long n, T init, Body body, Combine combine) {
    int workers = worker_count();
    if (n <= 0) return init;
    long chunk = std::max<long>(1, (n + workers - 1) / workers);
    int nchunks = static_cast<int>((n + chunk - 1) / chunk);
    std::vector<T> partial(nchunks, init);
    if (nchunks == 1 || workers == 1) {
        for (int c = 0; c < nchunks; ++c)
            partial[c] = body(c * chunk, std::min(n, (c + 1) * chunk));
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nchunks);
        for (int c = 0; c < nchunks; ++c)
            pool.emplace_back([&, c] { partial[c] = body(c * chunk, std::min(n, (c + 1) * chunk)); });
        for (auto& t : pool) t.join();
    }
    T acc = init;
    for (int c = 0; c < nchunks; ++c) acc = combine(acc, partial[c]);
    return acc;
}

// Parallel for over [0,n); side effects must be index-local.
template <class Body>
void parallel_for(long n, Body body) {
    parallel_reduce<int>(
        n, 0,
        [&](long b, long e) {
            for (long i = b; i < e; ++i) body(i);
            return 0;
        },
        [](int, int) { return 0; });
}

}  // namespace plateau
