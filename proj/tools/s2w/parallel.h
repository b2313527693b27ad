// Copyright (c) 2026 The s2w Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef S2W_TOOLS_PARALLEL_H_
#define S2W_TOOLS_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace s2w::cli {

// out[i] = fn(i, in[i]) on up to `jobs` threads. Output order matches input
// order; the exception of the lowest failing index is rethrown.
template <class Out, class In, class Fn>
std::vector<Out> ParallelMap(const std::vector<In> &in, int jobs, Fn fn) {
  std::vector<Out> out(in.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs > 0 ? jobs : 1, in.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(i, in[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(in.size());
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < in.size(); i += workers) {
        try {
          out[i] = fn(i, in[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto &t : threads) t.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace s2w::cli

#endif  // S2W_TOOLS_PARALLEL_H_
