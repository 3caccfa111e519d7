// SPDX-License-Identifier: Apache-2.0
//
// astars-noma: link-level analysis of active STAR-surface assisted NOMA downlinks
// Copyright (C) 2026 The astars-noma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace astars::cli::detail
{
    // Calls fn(i) for i in [0, n) on up to `workers` threads (0: hardware concurrency); rethrows the first failure.
    template <class Fn>
    void parallel_for(std::size_t n, unsigned workers, Fn fn)
    {
        unsigned w = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
        w = unsigned(std::min<std::size_t>(w, std::max<std::size_t>(n, 1)));
        if (w <= 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                fn(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < w; ++t)
            pool.emplace_back([&]
                              {
                                  try
                                  {
                                      for (std::size_t i = next++; i < n; i = next++)
                                          fn(i);
                                  }
                                  catch (...)
                                  {
                                      std::lock_guard<std::mutex> lock(failure_mutex);
                                      if (!failure)
                                          failure = std::current_exception();
                                  } });
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}
