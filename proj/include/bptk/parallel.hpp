#pragma once

// Order-preserving parallel map used by the frontier searches. Results are
// returned in input order, so callers that merge them sequentially behave
// identically for every thread count.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace bptk {

template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, unsigned threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  using Out = std::invoke_result_t<Fn&, const In&>;
  std::vector<Out> out(items.size());
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), items.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < items.size(); i += workers) out[i] = fn(items[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace bptk
