#pragma once

#include <ostream>

namespace trn {

/// Exhaustive small-case cross-check suite: every counter against its
/// independent brute-force oracle over all tournaments on up to 5 vertices,
/// the triangular-composition identity over every part triple of sizes up
/// to 3, parser rejection of corrupted matrices, and determinism of the
/// seeded constructions. Prints one line per property to `out`; returns
/// true iff every property held.
bool run_selftest(std::ostream& out);

}  // namespace trn
