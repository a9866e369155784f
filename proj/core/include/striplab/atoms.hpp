#pragma once

#include "striplab/geometry.hpp"

#include <functional>
#include <string>
#include <vector>

namespace striplab {

/// A closed-form test function on the strip with provenance flags.
struct BatteryEntry {
    std::string id;
    std::function<cplx(cplx)> eval;
    bool holomorphic = false;
    std::string decay; // "gaussian" | "rational" | "none"
    std::string form;  // human-readable closed form
};

/// Holomorphic atoms: Gaussians with real shifts, Cauchy atoms with poles
/// outside the closed strip, and products thereof. All are holomorphic on a
/// neighborhood of the closed strip with finite weighted norm.
std::vector<BatteryEntry> holomorphic_atoms();

/// Non-holomorphic battery (conjugate-type inputs with tight x-envelopes).
std::vector<BatteryEntry> nonholomorphic_battery();

/// Mixed inputs for the Bergman iteration suite.
std::vector<BatteryEntry> mixed_battery();

/// Test functions on the disc-family domain G (argument is zeta in G):
/// holomorphic atoms {1, zeta, zeta^2, (zeta - w0)^-1} with w0 outside
/// closure(G), plus conjugate-type inputs.
std::vector<BatteryEntry> disc_atoms();
std::vector<BatteryEntry> disc_battery();

/// Full catalog (atoms + non-holomorphic + mixed + annihilator profiles).
std::vector<BatteryEntry> full_battery();

/// Look up by id; throws std::invalid_argument if missing.
BatteryEntry battery_entry(const std::string& id);

std::vector<GridFunction> sample_all(std::shared_ptr<const StripGrid> grid,
                                     const std::vector<BatteryEntry>& entries);

} // namespace striplab
