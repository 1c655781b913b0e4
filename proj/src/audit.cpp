#include "qqt/audit.hpp"

#include "qqt/entanglement.hpp"
#include "qqt/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qqt {

namespace {

double gridPoint(double lo, double hi, int steps, int i) {
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(steps - 1);
}

}  // namespace

std::string_view toString(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::FormulaDomainError: return "FORMULA_DOMAIN_ERROR";
        case Verdict::SolverError: return "SOLVER_ERROR";
    }
    return "?";
}

NoiseScenario scenarioAtLevel(Topology topology, double level) {
    switch (topology) {
        case Topology::QubitLocal: return NoiseScenario::qubitLocal(level);
        case Topology::QutritLocal: return NoiseScenario::qutritLocal(level);
        case Topology::MultiLocal:
            return NoiseScenario::multiLocal(level, level);
        case Topology::Global:
            return NoiseScenario::global(level, level, level);
    }
    throw std::logic_error("scenarioAtLevel: bad topology");
}

AuditRecord auditPoint(ChannelKind kind, Topology topology, double r,
                       double p1, double p2, double p) {
    AuditRecord rec;
    rec.kind = kind;
    rec.topology = topology;
    rec.r = r;
    rec.p1 = p1;
    rec.p2 = p2;
    rec.p = p;
    rec.designatedNegativeIndex = formulaFor(kind, topology).designatedNegativeIndex;

    const AnalyticEigenvalues analytic =
        analyticEigenvalues(kind, topology, r, p1, p2, p);
    rec.analyticEigs = analytic.values;
    std::sort(rec.analyticEigs.begin(), rec.analyticEigs.end());
    rec.traceSumAnalytic = 0.0;
    for (double v : analytic.values) rec.traceSumAnalytic += v;
    const AnalyticNegativity analyticNeg =
        analyticNegativity(kind, topology, r, p1, p2, p);
    rec.negativityAnalytic = analyticNeg.value;
    rec.analyticNegativeIndices = analyticNeg.negativeIndices;

    try {
        const NoiseScenario sc = NoiseScenario::make(topology, p1, p2, p);
        const DensityMatrix rho = evolveScenario(Acceleration(r), kind, sc);
        const RealVector eigs =
            hermitianEigenvalues(partialTransposeQubit(rho));
        for (int k = 0; k < 6; ++k) rec.numericEigs[static_cast<size_t>(k)] = eigs(k);
        rec.negativityNumeric = negativity(rho);
    } catch (const ConvergenceError& e) {
        rec.verdict = Verdict::SolverError;
        rec.error = e.what();
        return rec;
    }

    rec.eigGap = 0.0;
    for (int k = 0; k < 6; ++k)
        rec.eigGap = std::max(rec.eigGap,
                              std::abs(rec.numericEigs[static_cast<size_t>(k)] -
                                       rec.analyticEigs[static_cast<size_t>(k)]));

    if (analytic.domainError) {
        rec.verdict = Verdict::FormulaDomainError;
    } else if (rec.eigGap <= kMatchTol &&
               std::abs(rec.negativityNumeric - rec.negativityAnalytic) <=
                   kMatchTol) {
        rec.verdict = Verdict::Match;
    } else {
        rec.verdict = Verdict::Mismatch;
    }
    return rec;
}

bool AuditResult::allMatch() const {
    return std::all_of(records.begin(), records.end(), [](const AuditRecord& r) {
        return r.verdict == Verdict::Match;
    });
}

AuditResult auditGrid(const GridSpec& spec) {
    if (spec.rSteps < 2)
        throw std::invalid_argument("auditGrid: need at least 2 r steps");
    AuditResult result;
    for (ChannelKind kind : spec.kinds) {
        for (Topology topology : spec.topologies) {
            FamilySummary summary;
            summary.kind = kind;
            summary.topology = topology;
            for (double level : spec.pLevels) {
                const NoiseScenario sc = scenarioAtLevel(topology, level);
                for (int i = 0; i < spec.rSteps; ++i) {
                    const double r =
                        gridPoint(0.0, kMaxAcceleration, spec.rSteps, i);
                    AuditRecord rec =
                        auditPoint(kind, topology, r, sc.p1, sc.p2, sc.p);
                    ++summary.points;
                    switch (rec.verdict) {
                        case Verdict::Match: ++summary.matches; break;
                        case Verdict::Mismatch: ++summary.mismatches; break;
                        case Verdict::FormulaDomainError:
                            ++summary.domainErrors;
                            break;
                        case Verdict::SolverError:
                            ++summary.solverErrors;
                            break;
                    }
                    if (rec.verdict != Verdict::SolverError)
                        summary.maxGap = std::max(summary.maxGap, rec.eigGap);
                    if (!rec.analyticNegativeIndices.empty() &&
                        rec.analyticNegativeIndices !=
                            std::vector<int>{rec.designatedNegativeIndex})
                        summary.designationViolated = true;
                    result.records.push_back(std::move(rec));
                }
            }
            result.summaries.push_back(summary);
        }
    }
    return result;
}

std::vector<EsdViolation> checkNoEsdClaim(int rSteps,
                                          const std::vector<double>& levels) {
    std::vector<EsdViolation> violations;
    for (double level : levels) {
        for (ChannelKind kind : kAllChannelKinds) {
            for (Topology topology : kAllTopologies) {
                const NoiseScenario sc = scenarioAtLevel(topology, level);
                for (int i = 0; i < rSteps; ++i) {
                    const double r =
                        gridPoint(0.0, kMaxAcceleration, rSteps, i);
                    const double neg =
                        negativity(evolveScenario(Acceleration(r), kind, sc));
                    if (neg <= 1e-9)
                        violations.push_back({kind, topology, level, r, neg});
                }
            }
        }
    }
    return violations;
}

std::vector<OrderingCheck> checkOrderingClaims() {
    const double r = std::numbers::pi / 8.0;
    std::vector<OrderingCheck> checks;
    for (double level : {0.2, 0.5}) {
        OrderingCheck check;
        check.level = level;
        const NoiseScenario sc = scenarioAtLevel(Topology::Global, level);
        check.negAd = negativity(evolveScenario(
            Acceleration(r), ChannelKind::AmplitudeDamping, sc));
        check.negDep = negativity(
            evolveScenario(Acceleration(r), ChannelKind::Depolarizing, sc));
        check.negPd = negativity(evolveScenario(
            Acceleration(r), ChannelKind::PhaseDamping, sc));
        if (level == 0.2) {
            check.claim =
                "depolarizing degrades hardest at low noise: "
                "N(dep) < N(ad) and N(dep) < N(pd)";
            check.claimHolds =
                check.negDep < check.negAd && check.negDep < check.negPd;
        } else {
            check.claim =
                "amplitude damping degrades hardest at high noise: "
                "N(ad) < N(dep) and N(ad) < N(pd)";
            check.claimHolds =
                check.negAd < check.negDep && check.negAd < check.negPd;
        }
        checks.push_back(std::move(check));
    }
    return checks;
}

}  // namespace qqt
