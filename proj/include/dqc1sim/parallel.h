// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQC1SIM_PARALLEL_H
#define DQC1SIM_PARALLEL_H

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dqc1sim {

/// Runs `fn(chunk_index, begin, end)` over fixed-size chunks of [0, n).
///
/// Chunk boundaries depend only on `n` and `chunk_size`, never on the thread
/// count, so callers that reduce per-chunk results in chunk order get
/// bit-identical output for any `threads`.
template <typename Fn>
void for_each_chunk(std::size_t n, std::size_t chunk_size, unsigned threads, Fn &&fn) {
    if (n == 0) {
        return;
    }
    chunk_size = std::max<std::size_t>(chunk_size, 1);
    std::size_t num_chunks = (n + chunk_size - 1) / chunk_size;
    auto run_chunk = [&](std::size_t k) {
        std::size_t begin = k * chunk_size;
        std::size_t end = std::min(n, begin + chunk_size);
        fn(k, begin, end);
    };
    if (threads <= 1 || num_chunks == 1) {
        for (std::size_t k = 0; k < num_chunks; k++) {
            run_chunk(k);
        }
        return;
    }

    std::size_t workers = std::min<std::size_t>(threads, num_chunks);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < num_chunks; k += workers) {
                    run_chunk(k);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace dqc1sim

#endif
