#pragma once

namespace arnold {

inline constexpr int kDefaultMaxN = 8;

// ARNOLD_MAX_N overrides the enumeration size cap (default kDefaultMaxN).
int max_n();
// ARNOLD_THREADS bounds parallelism; defaults to the hardware concurrency.
int thread_count();
// Throws SizeCapExceeded unless 1 <= n <= max_n().
void require_size(int n);

}  // namespace arnold
