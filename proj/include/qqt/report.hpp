#pragma once

#include "qqt/audit.hpp"
#include "qqt/sweep.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace qqt {

/// 15-significant-digit decimal rendering used in every report file, so that
/// identical runs emit identical bytes.
std::string formatDouble(double v);

/// Header: r,negativity_numeric,negativity_analytic,abs_gap. LF endings.
void writeSweepCsv(std::ostream& os, const std::vector<SweepRow>& rows);

struct LabeledSweep {
    ChannelKind kind{};
    Topology topology{};
    std::vector<SweepRow> rows;
};

/// Long format with leading channel/scenario label columns, used when one
/// file carries several families.
void writeSweepCsvLong(std::ostream& os,
                       const std::vector<LabeledSweep>& sweeps);

void writeAuditCsv(std::ostream& os, const std::vector<AuditRecord>& records);

/// Everything the audit run reports besides the record table.
struct ClaimReport {
    std::vector<EsdViolation> esdViolations;
    std::vector<OrderingCheck> orderingChecks;
    int esdGridSteps = 0;
    std::vector<double> esdLevels;
};

/// Plain-text summary: transcription notes, one pinned line per family
/// (`<kind> <topology> points=<n> match=<n> mismatch=<n> max_gap=<g>`),
/// designation notes, and the claim checks.
void writeAuditSummary(std::ostream& os, const AuditResult& result,
                       const ClaimReport* claims = nullptr);

}  // namespace qqt
