#pragma once

#include <span>
#include <vector>

#include "majorana/starsolver.hpp"

namespace majorana {

/// stars() over a batch of independent states, one OpenMP task per state.
/// Output order matches input order. If any solve throws, the exception of
/// the lowest failing index is rethrown after the loop finishes.
std::vector<StarSet> stars_batch(std::span<const PureState> states, const SolverConfig& cfg = {});

/// Serial reference for stars_batch; results are bitwise identical.
std::vector<StarSet> stars_batch_serial(std::span<const PureState> states,
                                        const SolverConfig& cfg = {});

/// Index of the batch entry that failed, attached to the rethrown error.
class BatchError : public SolverError {
 public:
  BatchError(const SolverError& cause, std::size_t index)
      : SolverError(cause.what(), cause.best()), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace majorana
