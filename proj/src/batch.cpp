#include "majorana/batch.hpp"

#include <exception>

namespace majorana {

namespace {

[[noreturn]] void rethrow_at(std::exception_ptr err, std::size_t index) {
  try {
    std::rethrow_exception(err);
  } catch (const SolverError& e) {
    throw BatchError(e, index);
  }
}

}  // namespace

std::vector<StarSet> stars_batch(std::span<const PureState> states, const SolverConfig& cfg) {
  const auto n = static_cast<std::ptrdiff_t>(states.size());
  std::vector<StarSet> out(states.size());
  std::vector<std::exception_ptr> errors(states.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = stars(states[i], cfg);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i]) rethrow_at(errors[i], i);
  }
  return out;
}

std::vector<StarSet> stars_batch_serial(std::span<const PureState> states,
                                        const SolverConfig& cfg) {
  std::vector<StarSet> out;
  out.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    try {
      out.push_back(stars(states[i], cfg));
    } catch (const SolverError& e) {
      throw BatchError(e, i);
    }
  }
  return out;
}

}  // namespace majorana
