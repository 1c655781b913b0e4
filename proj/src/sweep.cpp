#include "qqt/sweep.hpp"

#include "qqt/entanglement.hpp"
#include "qqt/evolve.hpp"

#include <cmath>

namespace qqt {

std::vector<double> accelerationGrid(double rMin, double rMax, int steps) {
    if (steps < 1)
        throw std::invalid_argument("accelerationGrid: need at least 1 step");
    if (!(rMin >= 0.0) || !(rMax <= kMaxAcceleration) || rMin > rMax)
        throw std::invalid_argument(
            "accelerationGrid: need 0 <= r-min <= r-max <= pi/4");
    if (steps == 1) return {rMin};
    std::vector<double> grid(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        grid[static_cast<size_t>(i)] =
            i == steps - 1
                ? rMax
                : rMin + (rMax - rMin) * static_cast<double>(i) /
                             static_cast<double>(steps - 1);
    return grid;
}

std::vector<SweepRow> sweepNegativity(const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    for (double r : accelerationGrid(spec.rMin, spec.rMax, spec.rSteps)) {
        SweepRow row;
        row.r = r;
        row.negativityNumeric = negativity(
            evolveScenario(Acceleration(r), spec.kind, spec.scenario));
        row.negativityAnalytic =
            analyticNegativity(spec.kind, spec.scenario.topology, r,
                               spec.scenario.p1, spec.scenario.p2,
                               spec.scenario.p)
                .value;
        row.absGap = std::abs(row.negativityNumeric - row.negativityAnalytic);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qqt
