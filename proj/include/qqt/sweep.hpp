#pragma once

#include "qqt/audit.hpp"
#include "qqt/state.hpp"

#include <vector>

namespace qqt {

struct SweepSpec {
    ChannelKind kind{};
    NoiseScenario scenario{};
    double rMin = 0.0;
    double rMax = kMaxAcceleration;
    int rSteps = 100;
};

struct SweepRow {
    double r = 0;
    double negativityNumeric = 0;
    double negativityAnalytic = 0;
    double absGap = 0;
};

/// Inclusive grid over [rMin, rMax]; the endpoints are hit exactly.
std::vector<double> accelerationGrid(double rMin, double rMax, int steps);

/// Negativity of the evolved state over the r grid, numeric next to the
/// closed-form prediction for the same family.
std::vector<SweepRow> sweepNegativity(const SweepSpec& spec);

}  // namespace qqt
