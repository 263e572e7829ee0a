// Test-only oracle: the classic 32-bit table-driven Hilbert order computation
// in its original C form, returning the curve position as a double built from
// three 30-bit words. Transcribed as-is (single-entry form; the published
// routine indexes its argument with an uninitialized variable, pinned to
// entry 0 here). The library's integer encoder is checked bit-for-bit
// against this via its legacy double packing.
#pragma once

namespace legacy_ref {

/// Level-30 Hilbert curve position of a point of (0,1)^3, packed into a
/// double exactly the way the original routine does.
double hilbert_order_double(double u, double v, double w);

} // namespace legacy_ref
