#pragma once

namespace conifold {

// Worker count for data-parallel kernels: CONIFOLD_THREADS when set to a
// positive integer, otherwise the hardware concurrency (at least 1).
unsigned default_thread_count();

// `requested` when nonzero, default_thread_count() otherwise.
unsigned resolve_thread_count(unsigned requested);

}  // namespace conifold
