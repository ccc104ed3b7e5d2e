#pragma once

// Data-parallel map over a batch of independent inputs. Every kernel keeps a
// serial path; tests compare the two and bench/ times them.

#include <omp.h>

#include <cstdint>
#include <exception>
#include <type_traits>
#include <vector>

namespace prelie {

enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec ex);

template <class In, class F>
auto map_kernel(const std::vector<In>& xs, F&& f, Exec ex = default_exec()) {
  using R = std::decay_t<std::invoke_result_t<F&, const In&>>;
  std::vector<R> out(xs.size());
  if (ex == Exec::serial || xs.size() < 2) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
  }
  std::exception_ptr err;
  const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(prelie_map_kernel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace prelie
