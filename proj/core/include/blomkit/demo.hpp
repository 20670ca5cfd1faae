#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "blomkit/scheme_instance.hpp"

namespace blomkit {

/// Bundled worked example: a 6-node network over GF(29) with lambda = 3 and
/// a fixed secret matrix, together with its precomputed reference values.
/// Used by the `demo` command and as the fixture topology of experiments.
const NetworkTopology& demo_topology();
const SecretMatrixD& demo_secret_matrix();
const FieldMatrix& demo_expected_share_matrix();            // 6 x 4
const std::vector<std::uint64_t>& demo_expected_raw_keys();  // row-major 6 x 6

/// Rebuilds the worked example from scratch, prints every intermediate
/// matrix and checks each value against the bundled reference data.
/// Returns 0 when everything matches, 1 otherwise.
int run_demo(std::ostream& out);

} // namespace blomkit
