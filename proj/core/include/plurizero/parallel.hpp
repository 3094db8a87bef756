#ifndef PLURIZERO_PARALLEL_HPP
#define PLURIZERO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace plurizero {

/// Owns the worker pool. Tasks are indexed; results must be written into
/// index-addressed slots so every schedule produces identical output.
class ParallelRunner {
  public:
    /// workers = 0: PLURIZERO_WORKERS env var, else hardware concurrency.
    explicit ParallelRunner(int workers = 0);

    int workers() const { return workers_; }

    /// Run fn(0..count-1); blocks until all complete. Rethrows the first
    /// task exception after joining.
    void for_each(std::size_t count, const std::function<void(std::size_t)>& fn) const;

  private:
    int workers_ = 1;
};

}  // namespace plurizero

#endif
