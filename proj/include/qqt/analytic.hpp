#pragma once

#include "qqt/channels.hpp"

#include <array>
#include <vector>

namespace qqt {

/// One closed-form eigenvalue set, evaluated in its printed order
/// lambda_1..lambda_6. `domainError` is set when a radicand fell below the
/// roundoff allowance of -1e-12 (tiny negatives are clamped to zero).
struct AnalyticEigenvalues {
    std::array<double, 6> values{};
    bool domainError = false;
};

/// Catalog entry for one (channel, coupling) family of closed-form
/// partial-transpose eigenvalues. The formulas are transcribed exactly as
/// printed in their source, suspected typos included; the audit module is
/// where any disagreement with the numeric pipeline gets reported.
struct EigenFormulaSet {
    ChannelKind kind;
    Topology topology;
    /// Stable tag used in reports, e.g. "ad-qubit".
    const char* id;
    /// 1-based printed position the source designates as the only possibly
    /// negative eigenvalue.
    int designatedNegativeIndex;
    AnalyticEigenvalues (*eval)(double r, double p1, double p2, double p);
};

/// All twelve families, channel-major (ad, dep, pd), topology-minor
/// (qubit, qutrit, multilocal, global).
const std::array<EigenFormulaSet, 12>& formulaCatalog();

const EigenFormulaSet& formulaFor(ChannelKind kind, Topology topology);

/// Evaluate one family after validating parameter ranges
/// (r in [0, pi/4], p's in [0, 1]).
AnalyticEigenvalues analyticEigenvalues(ChannelKind kind, Topology topology,
                                        double r, double p1, double p2,
                                        double p);

/// Negativity implied by a printed set: sum of |entries| below -1e-12,
/// together with the 1-based printed positions that were negative.
struct AnalyticNegativity {
    double value = 0.0;
    std::vector<int> negativeIndices;
    bool domainError = false;
};

AnalyticNegativity analyticNegativity(ChannelKind kind, Topology topology,
                                      double r, double p1, double p2,
                                      double p);

}  // namespace qqt
