// Command-line front end: negativity sweeps over the acceleration parameter,
// the formula audit, and Kraus-set inspection.

#include "qqt/entanglement.hpp"
#include "qqt/evolve.hpp"
#include "qqt/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace qqt;

std::vector<std::string> splitList(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<ChannelKind> parseKinds(const std::string& csv) {
    std::vector<ChannelKind> kinds;
    for (const auto& tok : splitList(csv)) {
        auto kind = channelKindFromString(tok);
        if (!kind)
            throw std::invalid_argument("unknown channel '" + tok +
                                        "' (expected ad, dep or pd)");
        kinds.push_back(*kind);
    }
    if (kinds.empty()) throw std::invalid_argument("no channel given");
    return kinds;
}

std::vector<Topology> parseTopologies(const std::string& csv) {
    std::vector<Topology> topologies;
    for (const auto& tok : splitList(csv)) {
        auto topo = topologyFromString(tok);
        if (!topo)
            throw std::invalid_argument(
                "unknown scenario '" + tok +
                "' (expected qubit, qutrit, multilocal or global)");
        topologies.push_back(*topo);
    }
    if (topologies.empty()) throw std::invalid_argument("no scenario given");
    return topologies;
}

bool usesP1(Topology t) { return t != Topology::QutritLocal; }
bool usesP2(Topology t) { return t != Topology::QubitLocal; }
bool usesP(Topology t) { return t == Topology::Global; }

/// Writes through `emit` either to the file or to stdout, reporting I/O
/// failures as exit status 1.
int withOutput(const std::string& path,
               const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(std::cout);
        return std::cout ? 0 : 1;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 1;
    }
    emit(os);
    os.flush();
    if (!os) {
        std::cerr << "error: writing '" << path << "' failed\n";
        return 1;
    }
    return 0;
}

struct SweepOptions {
    std::string channels;
    std::string scenarios;
    double p1 = 0, p2 = 0, p = 0;
    double rMin = 0, rMax = kMaxAcceleration;
    int rSteps = 100;
    std::string output;
};

int runSweep(const SweepOptions& opt) {
    const auto kinds = parseKinds(opt.channels);
    const auto topologies = parseTopologies(opt.scenarios);

    // A p flag no requested scenario uses must stay zero.
    bool anyP1 = false, anyP2 = false, anyP = false;
    for (Topology t : topologies) {
        anyP1 |= usesP1(t);
        anyP2 |= usesP2(t);
        anyP |= usesP(t);
    }
    if ((!anyP1 && opt.p1 != 0.0) || (!anyP2 && opt.p2 != 0.0) ||
        (!anyP && opt.p != 0.0))
        throw std::invalid_argument(
            "a p flag was set that no requested scenario uses; drop it or "
            "pass 0");

    std::vector<LabeledSweep> sweeps;
    for (ChannelKind kind : kinds) {
        for (Topology topo : topologies) {
            SweepSpec spec;
            spec.kind = kind;
            spec.scenario = NoiseScenario::make(topo, usesP1(topo) ? opt.p1 : 0,
                                                usesP2(topo) ? opt.p2 : 0,
                                                usesP(topo) ? opt.p : 0);
            spec.rMin = opt.rMin;
            spec.rMax = opt.rMax;
            spec.rSteps = opt.rSteps;
            sweeps.push_back({kind, topo, sweepNegativity(spec)});
        }
    }

    return withOutput(opt.output, [&](std::ostream& os) {
        if (sweeps.size() == 1)
            writeSweepCsv(os, sweeps.front().rows);
        else
            writeSweepCsvLong(os, sweeps);
    });
}

struct AuditOptions {
    std::string only;      // channel filter
    std::string topology;  // topology filter
    int rSteps = 25;
    std::vector<double> pLevels{0.1, 0.2, 0.5};
    std::string output;    // optional record CSV
};

int runAudit(const AuditOptions& opt) {
    GridSpec spec;
    if (!opt.only.empty()) spec.kinds = parseKinds(opt.only);
    if (!opt.topology.empty()) spec.topologies = parseTopologies(opt.topology);
    spec.rSteps = opt.rSteps;
    if (!opt.pLevels.empty()) spec.pLevels = opt.pLevels;
    for (double level : spec.pLevels)
        if (!(level >= 0.0 && level <= 1.0))
            throw std::invalid_argument("p levels must lie in [0, 1]");

    const AuditResult result = auditGrid(spec);

    if (!opt.output.empty()) {
        const int rc = withOutput(opt.output, [&](std::ostream& os) {
            writeAuditCsv(os, result.records);
        });
        if (rc != 0) return rc;
    }

    ClaimReport claims;
    claims.esdGridSteps = 50;
    claims.esdLevels = {0.2, 0.5};
    claims.esdViolations = checkNoEsdClaim(claims.esdGridSteps, claims.esdLevels);
    claims.orderingChecks = checkOrderingClaims();
    writeAuditSummary(std::cout, result, &claims);

    return result.allMatch() ? 0 : 2;
}

struct ChannelsOptions {
    std::string kind;
    int dim = 0;
    double p = 0;
};

std::string formatComplex(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", z.real(), z.imag());
    return buf;
}

int runChannels(const ChannelsOptions& opt) {
    const auto kind = channelKindFromString(opt.kind);
    if (!kind)
        throw std::invalid_argument("unknown channel '" + opt.kind +
                                    "' (expected ad, dep or pd)");
    KrausChannel channel = [&] {
        switch (opt.dim) {
            case 2: return qubitKraus(*kind, opt.p);
            case 3: return qutritKraus(*kind, opt.p);
            case 6:
                return jointKraus(qubitKraus(*kind, opt.p),
                                  qutritKraus(*kind, opt.p));
            default:
                throw std::invalid_argument("--dim must be 2, 3 or 6");
        }
    }();

    std::cout << channel.label() << ": " << channel.operators().size()
              << " Kraus operators, dim " << channel.dim() << "\n";
    int index = 0;
    for (const auto& op : channel.operators()) {
        std::cout << "E" << index++ << ":\n";
        for (Eigen::Index i = 0; i < op.rows(); ++i) {
            std::cout << "  ";
            for (Eigen::Index j = 0; j < op.cols(); ++j)
                std::cout << formatComplex(op(i, j))
                          << (j + 1 < op.cols() ? "  " : "");
            std::cout << "\n";
        }
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", channel.completenessResidual());
    std::cout << "completeness residual: " << buf << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit-qutrit decoherence laboratory: negativity sweeps and "
                 "closed-form eigenvalue audits"};
    app.require_subcommand(1);

    SweepOptions sweepOpt;
    auto* sweep = app.add_subcommand(
        "sweep", "negativity as a function of the acceleration parameter");
    sweep->add_option("--channel", sweepOpt.channels,
                      "channel kind(s): ad|dep|pd, comma-separated")
        ->required();
    sweep->add_option("--scenario", sweepOpt.scenarios,
                      "coupling(s): qubit|qutrit|multilocal|global, "
                      "comma-separated")
        ->required();
    sweep->add_option("--p1", sweepOpt.p1, "qubit-side noise parameter");
    sweep->add_option("--p2", sweepOpt.p2, "qutrit-side noise parameter");
    sweep->add_option("--p", sweepOpt.p, "collective noise parameter");
    sweep->add_option("--r-min", sweepOpt.rMin, "grid start (default 0)");
    sweep->add_option("--r-max", sweepOpt.rMax, "grid end (default pi/4)");
    sweep->add_option("--r-steps", sweepOpt.rSteps,
                      "number of grid points (default 100)");
    sweep->add_option("-o,--output", sweepOpt.output,
                      "CSV path (stdout when omitted)");

    AuditOptions auditOpt;
    auto* audit = app.add_subcommand(
        "audit",
        "cross-validate the closed-form eigenvalue sets against simulation");
    audit->add_option("--only", auditOpt.only,
                      "restrict to channel kind(s): ad|dep|pd");
    audit->add_option("--topology", auditOpt.topology,
                      "restrict to coupling(s)");
    audit->add_option("--r-steps", auditOpt.rSteps,
                      "r grid points per family (default 25)");
    audit->add_option("--p-levels", auditOpt.pLevels,
                      "noise levels; each sets every parameter its topology "
                      "uses (default 0.1,0.2,0.5)")
        ->delimiter(',');
    audit->add_option("-o,--output", auditOpt.output,
                      "write the per-point record CSV here");

    ChannelsOptions channelsOpt;
    auto* channels =
        app.add_subcommand("channels", "print a Kraus set and its "
                                       "completeness residual");
    channels->add_option("--kind", channelsOpt.kind, "ad|dep|pd")->required();
    channels->add_option("--dim", channelsOpt.dim, "2 (qubit), 3 (qutrit) or "
                                                   "6 (joint)")
        ->required();
    channels->add_option("--p", channelsOpt.p, "noise parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep->parsed()) return runSweep(sweepOpt);
        if (audit->parsed()) return runAudit(auditOpt);
        if (channels->parsed()) return runChannels(channelsOpt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
