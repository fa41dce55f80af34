// Copyright 2026 The metasinr Authors
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

#ifndef METASINR_PARALLEL_HPP
#define METASINR_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace metasinr {

// Worker cap: METASINR_THREADS when set, else hardware concurrency.
inline int thread_budget() {
  if (const char* e = std::getenv("METASINR_THREADS")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs f(i) for i in [0, n). Results must be written to index-addressed
// slots so the outcome is independent of the thread count.
template <class F>
void parallel_for(long n, F&& f) {
  int k = thread_budget();
  if (k <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
  if (k > n) k = static_cast<int>(n);
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (int w = 0; w < k; ++w) {
    pool.emplace_back([&f, w, k, n]() {
      for (long i = w; i < n; i += k) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace metasinr

#endif  // METASINR_PARALLEL_HPP
