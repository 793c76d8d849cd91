#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "kcut/errors.hpp"
#include "kcut/graph.hpp"

namespace kcut::detail {

// Non-terminal vertices, ascending.
std::vector<VertexId> free_vertices(const Instance& inst);

// k^f, refusing (BudgetError) when the scan counter could overflow.
std::uint64_t assignment_space_size(std::uint64_t k, std::uint64_t f);

// Enforces the free-vertex budget before any enumeration starts.
void check_budget(const Instance& inst, int budget);

// Folds `visit(acc, assignment)` over all k^f terminal assignments of the
// instance. The scan order splits into prefix blocks; each worker folds its
// blocks into a private Acc and `merge(into, from)` combines them strictly
// in block order, so the result is identical for every `jobs` value.
template <class Acc, class Visit, class Merge>
Acc fold_assignments(const Instance& inst, int jobs, Visit visit, Merge merge) {
  const int n = inst.vertex_count();
  const int k = inst.terminal_count();
  const std::vector<VertexId> free = free_vertices(inst);
  const int f = static_cast<int>(free.size());

  std::vector<int> base(static_cast<size_t>(n), -1);
  for (int i = 0; i < k; ++i) base[static_cast<size_t>(inst.terminal(i))] = i;

  int depth = 0;
  std::uint64_t blocks = 1;
  if (jobs > 1) {
    while (depth < f && blocks < static_cast<std::uint64_t>(jobs) * 4 &&
           blocks * static_cast<std::uint64_t>(k) <= 4096) {
      blocks *= static_cast<std::uint64_t>(k);
      ++depth;
    }
  }
  const std::uint64_t per_block = assignment_space_size(static_cast<std::uint64_t>(k),
                                                        static_cast<std::uint64_t>(f - depth));

  auto run_block = [&](std::uint64_t block, Acc& acc) {
    std::vector<int> assign = base;
    std::uint64_t rem = block;
    for (int i = depth - 1; i >= 0; --i) {
      assign[static_cast<size_t>(free[static_cast<size_t>(i)])] = static_cast<int>(rem % static_cast<std::uint64_t>(k));
      rem /= static_cast<std::uint64_t>(k);
    }
    for (int i = depth; i < f; ++i) assign[static_cast<size_t>(free[static_cast<size_t>(i)])] = 0;
    for (std::uint64_t step = 0;;) {
      visit(acc, assign);
      if (++step == per_block) break;
      for (int i = f - 1; i >= depth; --i) {
        int& digit = assign[static_cast<size_t>(free[static_cast<size_t>(i)])];
        if (++digit < k) break;
        digit = 0;
      }
    }
  };

  std::vector<Acc> accs(static_cast<size_t>(blocks));
  if (jobs <= 1 || blocks == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b, accs[static_cast<size_t>(b)]);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::uint64_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), blocks);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::uint64_t b; (b = next.fetch_add(1)) < blocks && !failed.load();) {
            run_block(b, accs[static_cast<size_t>(b)]);
          }
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  Acc out = std::move(accs[0]);
  for (std::uint64_t b = 1; b < blocks; ++b) merge(out, std::move(accs[static_cast<size_t>(b)]));
  return out;
}

}  // namespace kcut::detail
