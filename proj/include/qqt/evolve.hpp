#pragma once

#include "qqt/channels.hpp"
#include "qqt/state.hpp"

namespace qqt {

/// One Kraus step, rho -> sum_k E_k rho E_k^dag. The output is re-validated
/// against the density-matrix invariants; a violation means a malformed
/// channel slipped through and surfaces as StateConsistencyError.
DensityMatrix applyChannel(const DensityMatrix& rho, const KrausChannel& ch);

/// Push the initial state through every channel of the scenario, in the
/// order scenarioChannels() lists them.
DensityMatrix evolveScenario(Acceleration acc, ChannelKind kind,
                             const NoiseScenario& sc);

}  // namespace qqt
