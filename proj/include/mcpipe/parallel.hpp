#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcpipe {

// Execution policy for the hot kernels. Serial is the reference path; the
// OpenMP path must produce bit-identical results (enforced by tests), which
// is why reductions below always accumulate in fixed-size chunks combined in
// index order instead of relying on the OpenMP reduction clause.
enum class Exec { Serial, OpenMP };

template <class F>
inline void par_for(Exec ex, int64_t n, F&& body) {
#ifdef _OPENMP
  if (ex == Exec::OpenMP) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  (void)ex;
  for (int64_t i = 0; i < n; ++i) body(i);
}

inline constexpr int64_t kReduceChunk = 4096;

// Deterministic sum of term(i) for i in [0,n): identical bytes for any
// thread count and for both execution policies.
template <class F>
inline double par_sum(Exec ex, int64_t n, F&& term) {
  const int64_t nchunk = (n + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(static_cast<size_t>(nchunk), 0.0);
  par_for(ex, nchunk, [&](int64_t c) {
    const int64_t b = c * kReduceChunk;
    const int64_t e = std::min(n, b + kReduceChunk);
    double s = 0.0;
    for (int64_t i = b; i < e; ++i) s += term(i);
    partial[static_cast<size_t>(c)] = s;
  });
  double s = 0.0;
  for (double v : partial) s += v;
  return s;
}

template <class F>
inline double par_max(Exec ex, int64_t n, F&& term) {
  const int64_t nchunk = (n + kReduceChunk - 1) / kReduceChunk;
  std::vector<double> partial(static_cast<size_t>(nchunk), 0.0);
  par_for(ex, nchunk, [&](int64_t c) {
    const int64_t b = c * kReduceChunk;
    const int64_t e = std::min(n, b + kReduceChunk);
    double m = 0.0;
    for (int64_t i = b; i < e; ++i) m = std::max(m, term(i));
    partial[static_cast<size_t>(c)] = m;
  });
  double m = 0.0;
  for (double v : partial) m = std::max(m, v);
  return m;
}

}  // namespace mcpipe
