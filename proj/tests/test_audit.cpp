#include "qqt/audit.hpp"

#include <doctest.h>

#include <cmath>

using namespace qqt;

TEST_CASE("a hand-verified matching point: pd qubit-local") {
    const AuditRecord rec = auditPoint(ChannelKind::PhaseDamping,
                                       Topology::QubitLocal, 0.3, 0.2, 0.0,
                                       0.0);
    CHECK((rec.verdict == Verdict::Match));
    CHECK(rec.eigGap <= 1e-12);
    CHECK(std::abs(rec.negativityNumeric - rec.negativityAnalytic) <= 1e-12);
    CHECK(std::abs(rec.traceSumAnalytic - 1.0) <= 1e-12);
    CHECK(rec.analyticNegativeIndices == std::vector<int>{3});
    CHECK(rec.designatedNegativeIndex == 3);
}

TEST_CASE("the ad qubit-local family disagrees for r > 0") {
    const double r = 0.3, p1 = 0.2;
    const AuditRecord rec = auditPoint(ChannelKind::AmplitudeDamping,
                                       Topology::QubitLocal, r, p1, 0.0, 0.0);
    CHECK((rec.verdict == Verdict::Mismatch));
    CHECK(rec.eigGap > 1e-8);
    // Its printed sum is cos^2 r instead of 1.
    CHECK(rec.traceSumAnalytic ==
          doctest::Approx(std::cos(r) * std::cos(r)).epsilon(1e-12));
    // Numeric negativity keeps the cos^2 r factor the printed set lost.
    CHECK(rec.negativityNumeric ==
          doctest::Approx(0.5 * (1.0 - p1) * std::cos(r) * std::cos(r))
              .epsilon(1e-10));
    CHECK(rec.negativityAnalytic ==
          doctest::Approx(0.5 * (1.0 - p1)).epsilon(1e-12));
    // Designation finding: positions 4 and 6 go negative, not just 4.
    CHECK(rec.analyticNegativeIndices == std::vector<int>{4, 6});
}

TEST_CASE("at r = 0 even the ad qubit-local set coincides") {
    const AuditRecord rec = auditPoint(ChannelKind::AmplitudeDamping,
                                       Topology::QubitLocal, 0.0, 0.2, 0.0,
                                       0.0);
    CHECK((rec.verdict == Verdict::Match));
    CHECK(rec.eigGap <= 1e-12);
    // Sorted spectrum is {-0.4, 0, 0, 0.4, 0.5, 0.5} on both sides.
    CHECK(rec.numericEigs[0] == doctest::Approx(-0.4).epsilon(1e-12));
    CHECK(rec.numericEigs[5] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("zero-noise baseline matches everywhere except ad-qubit") {
    for (ChannelKind kind : kAllChannelKinds)
        for (Topology topo : kAllTopologies) {
            const AuditRecord rec = auditPoint(kind, topo, 0.5, 0, 0, 0);
            if (kind == ChannelKind::AmplitudeDamping &&
                topo == Topology::QubitLocal)
                CHECK((rec.verdict == Verdict::Mismatch));
            else
                CHECK((rec.verdict == Verdict::Match));
        }
}

TEST_CASE("grid audit aggregates per family") {
    GridSpec spec;
    spec.rSteps = 5;
    spec.pLevels = {0.2};
    const AuditResult result = auditGrid(spec);
    REQUIRE(result.summaries.size() == 12);
    REQUIRE(result.records.size() == 12 * 5);

    for (const auto& s : result.summaries) {
        CHECK(s.points == 5);
        if (s.kind == ChannelKind::AmplitudeDamping &&
            s.topology == Topology::QubitLocal) {
            CHECK(s.matches == 1);  // the r = 0 point
            CHECK(s.mismatches == 4);
            CHECK(s.designationViolated);
            CHECK(s.maxGap > 1e-3);
        } else {
            CHECK(s.matches == 5);
            CHECK(s.mismatches == 0);
            CHECK(!s.designationViolated);
            CHECK(s.maxGap <= 1e-10);
        }
    }
    CHECK(!result.allMatch());

    // The numeric side of every record independently stays physical.
    for (const auto& rec : result.records) {
        double sum = 0.0;
        for (double v : rec.numericEigs) sum += v;
        CHECK(std::abs(sum - 1.0) <= 1e-10);
        CHECK(rec.negativityNumeric >= 0.0);
        CHECK(rec.negativityNumeric <= 0.5 + 1e-12);
    }
}

TEST_CASE("grid audit is deterministic") {
    GridSpec spec;
    spec.kinds = {ChannelKind::PhaseDamping};
    spec.rSteps = 7;
    spec.pLevels = {0.1, 0.5};
    const AuditResult a = auditGrid(spec);
    const AuditResult b = auditGrid(spec);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].r == b.records[i].r);
        CHECK(a.records[i].eigGap == b.records[i].eigGap);
        CHECK(a.records[i].negativityNumeric == b.records[i].negativityNumeric);
        for (int k = 0; k < 6; ++k)
            CHECK(a.records[i].numericEigs[static_cast<size_t>(k)] ==
                  b.records[i].numericEigs[static_cast<size_t>(k)]);
    }
}

TEST_CASE("level convention fills exactly the used parameters") {
    const NoiseScenario qb = scenarioAtLevel(Topology::QubitLocal, 0.3);
    CHECK(qb.p1 == 0.3);
    CHECK(qb.p2 == 0.0);
    CHECK(qb.p == 0.0);
    const NoiseScenario g = scenarioAtLevel(Topology::Global, 0.3);
    CHECK(g.p1 == 0.3);
    CHECK(g.p2 == 0.3);
    CHECK(g.p == 0.3);
}

TEST_CASE("sudden-death scan flags only depolarizing at the high level") {
    const auto violations = checkNoEsdClaim(10, {0.2, 0.5});
    CHECK(violations.size() == 20);  // two families, every grid point
    for (const auto& v : violations) {
        CHECK((v.kind == ChannelKind::Depolarizing));
        CHECK(v.level == 0.5);
        CHECK((v.topology == Topology::MultiLocal ||
               v.topology == Topology::Global));
        CHECK(v.negativity <= 1e-9);
    }
}

TEST_CASE("ordering claims at r = pi/8") {
    const auto checks = checkOrderingClaims();
    REQUIRE(checks.size() == 2);

    CHECK(checks[0].level == 0.2);
    CHECK(checks[0].claimHolds);  // depolarizing degrades hardest
    CHECK(checks[0].negAd == doctest::Approx(0.150985018558322).epsilon(1e-9));
    CHECK(checks[0].negDep == doctest::Approx(0.0513505662017696).epsilon(1e-9));
    CHECK(checks[0].negPd == doctest::Approx(0.177539105243401).epsilon(1e-9));

    CHECK(checks[1].level == 0.5);
    // The high-noise claim fails: depolarizing is already dead, so amplitude
    // damping is not the smallest.
    CHECK(!checks[1].claimHolds);
    CHECK(checks[1].negDep == 0.0);
    CHECK(checks[1].negAd == doctest::Approx(0.0151495097355905).epsilon(1e-9));
    CHECK(checks[1].negPd == doctest::Approx(0.0533470869120796).epsilon(1e-9));
}
