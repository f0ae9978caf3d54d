#pragma once

// Row-parallel evaluation. Results are stored by index, so the output never
// depends on scheduling; the serial policy is the reference.

#include <cstddef>
#include <exception>
#include <vector>

namespace shq {

enum class Exec { serial, parallel };

/// out[i] = f(i) for i < n. The first exception (by index) is rethrown.
template <class T, class F>
std::vector<T> parallel_map(Exec exec, std::size_t n, F&& f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace shq
