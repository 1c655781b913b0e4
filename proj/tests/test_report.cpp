#include "qqt/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace qqt;

TEST_CASE("formatDouble renders 15 significant digits") {
    CHECK(formatDouble(0.0) == "0");
    CHECK(formatDouble(0.5) == "0.5");
    CHECK(formatDouble(1.0 / 3.0) == "0.333333333333333");
    CHECK(formatDouble(0.294326524091017) == "0.294326524091017");
}

TEST_CASE("sweep CSV shape and determinism") {
    SweepSpec spec;
    spec.kind = ChannelKind::PhaseDamping;
    spec.scenario = NoiseScenario::multiLocal(0.2, 0.2);
    spec.rSteps = 100;
    const auto rows = sweepNegativity(spec);
    REQUIRE(rows.size() == 100);

    // Negativity falls strictly with acceleration for this family.
    for (size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].negativityNumeric < rows[i - 1].negativityNumeric);
    CHECK(rows.front().r == 0.0);
    CHECK(rows.back().r == kMaxAcceleration);

    std::ostringstream once, twice;
    writeSweepCsv(once, rows);
    writeSweepCsv(twice, sweepNegativity(spec));
    CHECK(once.str() == twice.str());

    const std::string text = once.str();
    CHECK(text.starts_with(
        "r,negativity_numeric,negativity_analytic,abs_gap\n"));
    CHECK(text.find('\r') == std::string::npos);
    // header + 100 rows
    CHECK(std::count(text.begin(), text.end(), '\n') == 101);
}

TEST_CASE("long sweep CSV carries label columns") {
    SweepSpec spec;
    spec.kind = ChannelKind::AmplitudeDamping;
    spec.scenario = NoiseScenario::qubitLocal(0.2);
    spec.rSteps = 3;
    std::vector<LabeledSweep> sweeps;
    sweeps.push_back({spec.kind, spec.scenario.topology, sweepNegativity(spec)});
    spec.kind = ChannelKind::PhaseDamping;
    sweeps.push_back({spec.kind, spec.scenario.topology, sweepNegativity(spec)});

    std::ostringstream os;
    writeSweepCsvLong(os, sweeps);
    const std::string text = os.str();
    CHECK(text.starts_with(
        "channel,scenario,r,negativity_numeric,negativity_analytic,abs_gap\n"));
    CHECK(text.find("ad,qubit,") != std::string::npos);
    CHECK(text.find("pd,qubit,") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

TEST_CASE("audit CSV and summary") {
    GridSpec spec;
    spec.rSteps = 3;
    spec.pLevels = {0.2};
    const AuditResult result = auditGrid(spec);

    std::ostringstream csv;
    writeAuditCsv(csv, result.records);
    const std::string text = csv.str();
    CHECK(text.starts_with("channel,topology,r,p1,p2,p,numeric_eig1"));
    CHECK(std::count(text.begin(), text.end(), '\n') ==
          1 + static_cast<long>(result.records.size()));
    CHECK(text.find(",MISMATCH\n") != std::string::npos);
    CHECK(text.find(",MATCH\n") != std::string::npos);

    std::ostringstream csv2;
    writeAuditCsv(csv2, auditGrid(spec).records);
    CHECK(csv.str() == csv2.str());

    std::ostringstream summary;
    writeAuditSummary(summary, result);
    const std::string s = summary.str();
    CHECK(s.find("ad qubit points=3 match=1 mismatch=2 max_gap=") !=
          std::string::npos);
    CHECK(s.find("pd global points=3 match=3 mismatch=0 max_gap=") !=
          std::string::npos);
    CHECK(s.find("MISMATCH present") != std::string::npos);
    CHECK(s.find("ad-qubit: negative entries appear at printed positions") !=
          std::string::npos);
}

TEST_CASE("summary claim section") {
    GridSpec spec;
    spec.kinds = {ChannelKind::Depolarizing};
    spec.rSteps = 2;
    spec.pLevels = {0.5};
    const AuditResult result = auditGrid(spec);

    ClaimReport claims;
    claims.esdGridSteps = 5;
    claims.esdLevels = {0.2, 0.5};
    claims.esdViolations = checkNoEsdClaim(5, claims.esdLevels);
    claims.orderingChecks = checkOrderingClaims();

    std::ostringstream os;
    writeAuditSummary(os, result, &claims);
    const std::string s = os.str();
    CHECK(s.find("no-esd level=0.2 grid=5: negativity stays positive") !=
          std::string::npos);
    CHECK(s.find("no-esd level=0.5 grid=5: CLAIM DISCREPANCY") !=
          std::string::npos);
    CHECK(s.find("dep multilocal") != std::string::npos);
    CHECK(s.find("dep global") != std::string::npos);
    CHECK(s.find("ordering r=pi/8 level=0.2") != std::string::npos);
    CHECK(s.find("\" holds") != std::string::npos);
    CHECK(s.find("ordering r=pi/8 level=0.5") != std::string::npos);
}
