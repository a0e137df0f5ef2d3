// Copyright 2026 The Geocodes Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace geocodes {

/// Splits [0, total) into one contiguous chunk per worker and runs fn(begin, end) on each.
/// With threads <= 1 the call runs inline. The first exception thrown by any worker is rethrown.
template <typename Fn>
void parallel_chunks(uint64_t total, size_t threads, Fn &&fn) {
    threads = std::max<size_t>(1, std::min<uint64_t>(threads, std::max<uint64_t>(total, 1)));
    if (threads == 1) {
        fn(uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    uint64_t per = total / threads;
    uint64_t extra = total % threads;
    uint64_t begin = 0;
    for (size_t w = 0; w < threads; w++) {
        uint64_t end = begin + per + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace geocodes
