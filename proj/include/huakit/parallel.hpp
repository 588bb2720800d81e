#pragma once

namespace huakit {

/// Worker threads used by the parallel kernels (>= 1).
int workers();

/// Clamp below to 1; values above the hardware thread count are allowed and
/// timeshare. Kernels remain bit-identical for any value; only wall time changes.
void set_workers(int n);

}  // namespace huakit
