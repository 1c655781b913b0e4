#pragma once

#include "qqt/analytic.hpp"

#include <string>
#include <vector>

namespace qqt {

/// Outcome of comparing one printed eigenvalue set against the numeric
/// pipeline at one grid point.
enum class Verdict {
    Match,              // sorted eigenvalue gap and negativity gap <= 1e-8
    Mismatch,
    FormulaDomainError, // a printed radicand fell below the roundoff allowance
    SolverError,        // the numeric eigensolver failed; run continues
};

std::string_view toString(Verdict v);

/// Tolerance below which analytic and numeric sides count as agreeing. Looser
/// than the eigensolver's precision so nested-radical roundoff never flips a
/// verdict.
inline constexpr double kMatchTol = 1e-8;

struct AuditRecord {
    ChannelKind kind{};
    Topology topology{};
    double r = 0, p1 = 0, p2 = 0, p = 0;
    std::array<double, 6> numericEigs{};   // ascending
    std::array<double, 6> analyticEigs{};  // ascending
    double eigGap = 0;                     // max |numeric - analytic| sorted
    double traceSumAnalytic = 0;
    double negativityNumeric = 0;
    double negativityAnalytic = 0;
    /// 1-based printed positions of the negative analytic entries.
    std::vector<int> analyticNegativeIndices;
    /// Position the source designates as the only possibly negative one.
    int designatedNegativeIndex = 0;
    Verdict verdict = Verdict::Match;
    /// Populated for SolverError records.
    std::string error;
};

/// Numeric side: scenario evolution -> partial transpose -> eigenvalues.
/// Analytic side: the printed set, sorted. Both negativities per the same
/// negative-eigenvalue rule.
AuditRecord auditPoint(ChannelKind kind, Topology topology, double r,
                       double p1, double p2, double p);

struct FamilySummary {
    ChannelKind kind{};
    Topology topology{};
    int points = 0;
    int matches = 0;
    int mismatches = 0;
    int domainErrors = 0;
    int solverErrors = 0;
    double maxGap = 0;
    /// True when some record's negative positions differ from the designated
    /// one while a negative entry exists.
    bool designationViolated = false;
};

struct GridSpec {
    std::vector<ChannelKind> kinds{kAllChannelKinds.begin(),
                                   kAllChannelKinds.end()};
    std::vector<Topology> topologies{kAllTopologies.begin(),
                                     kAllTopologies.end()};
    int rSteps = 25;
    /// Each level sets every parameter its topology uses (p1 = p2 = p =
    /// level), the convention of the figure captions.
    std::vector<double> pLevels{0.1, 0.2, 0.5};
};

struct AuditResult {
    std::vector<AuditRecord> records;     // grid order, deterministic
    std::vector<FamilySummary> summaries; // kind-major, topology-minor
    bool allMatch() const;
};

/// r runs over linspace(0, pi/4, rSteps) for every (kind, topology, level).
AuditResult auditGrid(const GridSpec& spec);

/// The parameters a topology uses, all set to `level`, the rest zero.
NoiseScenario scenarioAtLevel(Topology topology, double level);

/// One point where numeric negativity dropped to (or below) the detection
/// floor although the source claims entanglement never dies.
struct EsdViolation {
    ChannelKind kind{};
    Topology topology{};
    double level = 0;
    double r = 0;
    double negativity = 0;
};

/// Scan every family at the figure noise levels; any family whose negativity
/// is not strictly positive (> 1e-9) at every grid point is reported.
std::vector<EsdViolation> checkNoEsdClaim(int rSteps = 50,
                                          const std::vector<double>& levels = {
                                              0.2, 0.5});

/// Channel-ordering claims attached to the figures, evaluated at r = pi/8 on
/// the global topology with p1 = p2 = p = level.
struct OrderingCheck {
    double level = 0;
    double negAd = 0, negDep = 0, negPd = 0;
    std::string claim;      // the statement under audit
    bool claimHolds = false;
};

std::vector<OrderingCheck> checkOrderingClaims();

}  // namespace qqt
