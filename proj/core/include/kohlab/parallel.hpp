#pragma once

/// Small worker-pool helpers. Work items are pure functions of their
/// index; results are delivered to the calling thread in index order, so
/// output is identical for any worker count.

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace kohlab {

/// Evaluates fn(0), ..., fn(count - 1) on `jobs` workers and calls
/// consume(i, result) on the calling thread, strictly in index order.
/// The first exception thrown by fn is rethrown from the calling thread
/// at the position where it occurred.
template <typename Result>
void parallel_for_ordered(std::size_t count, unsigned jobs,
                          const std::function<Result(std::size_t)>& fn,
                          const std::function<void(std::size_t, Result&&)>& consume) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) consume(i, fn(i));
    return;
  }

  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<char> ready(count, 0);
  std::mutex mutex;
  std::condition_variable slot_filled;
  std::size_t next_index = 0;

  auto worker = [&]() {
    while (true) {
      std::size_t index;
      {
        std::lock_guard lock(mutex);
        if (next_index >= count) return;
        index = next_index++;
      }
      std::optional<Result> result;
      std::exception_ptr error;
      try {
        result.emplace(fn(index));
      } catch (...) {
        error = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        slots[index] = std::move(result);
        errors[index] = error;
        ready[index] = 1;
      }
      slot_filled.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);

  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mutex);
    slot_filled.wait(lock, [&] { return ready[i] != 0; });
    if (errors[i]) {
      std::exception_ptr error = errors[i];
      lock.unlock();
      pool.clear();  // join before unwinding
      std::rethrow_exception(error);
    }
    Result result = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    consume(i, std::move(result));
  }
}

/// parallel_for_ordered with results collected into a vector.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs,
                                 const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results;
  results.reserve(count);
  parallel_for_ordered<Result>(count, jobs, fn,
                               [&](std::size_t, Result&& r) { results.push_back(std::move(r)); });
  return results;
}

}  // namespace kohlab
