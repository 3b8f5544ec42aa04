// JSON snapshots of aligner state, so a run can be paused, moved to another
// worker and resumed with bitwise-identical results.
#pragma once

#include <string>

#include "ifa/aligner_pif.hpp"
#include "ifa/aligner_vif.hpp"

namespace ifa {

std::string to_json(const VifState& st);
std::string to_json(const PifState& st);

/// Throw FormatError (line 0 when the position is unknown) on malformed
/// input or missing fields, and NotARotation when a stored chain is not a DCM.
VifState vif_state_from_json(const std::string& text);
PifState pif_state_from_json(const std::string& text);

}  // namespace ifa
