#include "qqt/report.hpp"

#include <cstdio>
#include <map>

namespace qqt {

std::string formatDouble(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void writeSweepCsv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "r,negativity_numeric,negativity_analytic,abs_gap\n";
    for (const auto& row : rows)
        os << formatDouble(row.r) << ',' << formatDouble(row.negativityNumeric)
           << ',' << formatDouble(row.negativityAnalytic) << ','
           << formatDouble(row.absGap) << '\n';
}

void writeSweepCsvLong(std::ostream& os,
                       const std::vector<LabeledSweep>& sweeps) {
    os << "channel,scenario,r,negativity_numeric,negativity_analytic,abs_gap\n";
    for (const auto& sweep : sweeps)
        for (const auto& row : sweep.rows)
            os << toString(sweep.kind) << ',' << toString(sweep.topology)
               << ',' << formatDouble(row.r) << ','
               << formatDouble(row.negativityNumeric) << ','
               << formatDouble(row.negativityAnalytic) << ','
               << formatDouble(row.absGap) << '\n';
}

void writeAuditCsv(std::ostream& os, const std::vector<AuditRecord>& records) {
    os << "channel,topology,r,p1,p2,p";
    for (int k = 1; k <= 6; ++k) os << ",numeric_eig" << k;
    for (int k = 1; k <= 6; ++k) os << ",analytic_eig" << k;
    os << ",eig_gap,trace_sum_analytic,negativity_numeric,negativity_analytic"
          ",analytic_negative_indices,designated_negative_index,verdict\n";
    for (const auto& rec : records) {
        os << toString(rec.kind) << ',' << toString(rec.topology) << ','
           << formatDouble(rec.r) << ',' << formatDouble(rec.p1) << ','
           << formatDouble(rec.p2) << ',' << formatDouble(rec.p);
        for (double v : rec.numericEigs) os << ',' << formatDouble(v);
        for (double v : rec.analyticEigs) os << ',' << formatDouble(v);
        os << ',' << formatDouble(rec.eigGap) << ','
           << formatDouble(rec.traceSumAnalytic) << ','
           << formatDouble(rec.negativityNumeric) << ','
           << formatDouble(rec.negativityAnalytic) << ',';
        for (size_t i = 0; i < rec.analyticNegativeIndices.size(); ++i) {
            if (i) os << ';';
            os << rec.analyticNegativeIndices[i];
        }
        os << ',' << rec.designatedNegativeIndex << ',' << toString(rec.verdict)
           << '\n';
    }
}

void writeAuditSummary(std::ostream& os, const AuditResult& result,
                       const ClaimReport* claims) {
    os << "audit summary\n";
    os << "transcription notes:\n"
          "  - eigenvalue lists are compared after ascending sort; the printed"
          " order is not a contract\n"
          "  - ad-global lambda_5/6: the doubled '+' before the p2 cos^2 r"
          " term is read as a single plus\n"
          "  - dep-multilocal, dep-global: the 2*sqrt(2)*sqrt(2*(...)^2*cos^4 r)"
          " radical is evaluated as printed, not simplified\n";
    os << "families:\n";
    for (const auto& s : result.summaries) {
        os << toString(s.kind) << ' ' << toString(s.topology) << " points="
           << s.points << " match=" << s.matches << " mismatch="
           << s.mismatches << " max_gap=" << formatDouble(s.maxGap) << '\n';
        if (s.domainErrors > 0)
            os << "  (formula domain errors: " << s.domainErrors << ")\n";
        if (s.solverErrors > 0)
            os << "  (solver errors: " << s.solverErrors << ")\n";
    }
    bool anyDesignation = false;
    for (const auto& s : result.summaries) {
        if (s.designationViolated) {
            if (!anyDesignation) {
                os << "designation notes:\n";
                anyDesignation = true;
            }
            os << "  - " << formulaFor(s.kind, s.topology).id
               << ": negative entries appear at printed positions other than"
                  " the designated "
               << formulaFor(s.kind, s.topology).designatedNegativeIndex
               << '\n';
        }
    }

    if (claims) {
        os << "claim checks:\n";
        for (double level : claims->esdLevels) {
            // One aggregate line per level; violating families listed with
            // their violation count and first violating grid point.
            std::map<std::pair<int, int>, std::pair<int, const EsdViolation*>>
                byFamily;
            for (const auto& v : claims->esdViolations) {
                if (v.level != level) continue;
                auto key = std::make_pair(static_cast<int>(v.kind),
                                          static_cast<int>(v.topology));
                auto it = byFamily.find(key);
                if (it == byFamily.end())
                    byFamily.emplace(key, std::make_pair(1, &v));
                else
                    ++it->second.first;
            }
            os << "  no-esd level=" << formatDouble(level)
               << " grid=" << claims->esdGridSteps << ": ";
            if (byFamily.empty()) {
                os << "negativity stays positive for every family\n";
            } else {
                os << "CLAIM DISCREPANCY —";
                bool first = true;
                for (const auto& [key, info] : byFamily) {
                    const EsdViolation& v = *info.second;
                    os << (first ? " " : "; ") << toString(v.kind) << ' '
                       << toString(v.topology) << " (" << info.first
                       << " points, first at r=" << formatDouble(v.r)
                       << ", negativity=" << formatDouble(v.negativity) << ")";
                    first = false;
                }
                os << '\n';
            }
        }
        for (const auto& check : claims->orderingChecks) {
            os << "  ordering r=pi/8 level=" << formatDouble(check.level)
               << ": N(ad)=" << formatDouble(check.negAd)
               << " N(dep)=" << formatDouble(check.negDep)
               << " N(pd)=" << formatDouble(check.negPd) << " -> claim \""
               << check.claim << "\" "
               << (check.claimHolds ? "holds" : "CLAIM DISCREPANCY") << '\n';
        }
    }
    os << "verdict: "
       << (result.allMatch() ? "all families match"
                             : "MISMATCH present (see families above)")
       << '\n';
}

}  // namespace qqt
