#include "qqt/channels.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

namespace qqt {

namespace {

void requireUnitRange(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0) || !std::isfinite(p))
        throw std::invalid_argument(std::string(who) +
                                    ": noise parameter must lie in [0, 1]");
}

std::string paramLabel(ChannelKind kind, double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s(p=%g)", std::string(toString(kind)).c_str(), p);
    return buf;
}

}  // namespace

std::string_view toString(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return "ad";
        case ChannelKind::Depolarizing: return "dep";
        case ChannelKind::PhaseDamping: return "pd";
    }
    return "?";
}

std::string_view toString(Topology topology) {
    switch (topology) {
        case Topology::QubitLocal: return "qubit";
        case Topology::QutritLocal: return "qutrit";
        case Topology::MultiLocal: return "multilocal";
        case Topology::Global: return "global";
    }
    return "?";
}

std::optional<ChannelKind> channelKindFromString(std::string_view s) {
    if (s == "ad") return ChannelKind::AmplitudeDamping;
    if (s == "dep") return ChannelKind::Depolarizing;
    if (s == "pd") return ChannelKind::PhaseDamping;
    return std::nullopt;
}

std::optional<Topology> topologyFromString(std::string_view s) {
    if (s == "qubit") return Topology::QubitLocal;
    if (s == "qutrit") return Topology::QutritLocal;
    if (s == "multilocal") return Topology::MultiLocal;
    if (s == "global") return Topology::Global;
    return std::nullopt;
}

Complex omega() {
    return std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
}

ComplexMatrix qutritShift() {
    ComplexMatrix y = ComplexMatrix::Zero(3, 3);
    y(0, 1) = 1.0;
    y(1, 2) = 1.0;
    y(2, 0) = 1.0;
    return y;
}

ComplexMatrix qutritClock() {
    ComplexMatrix z = ComplexMatrix::Zero(3, 3);
    const Complex w = omega();
    z(0, 0) = 1.0;
    z(1, 1) = w;
    z(2, 2) = w * w;
    return z;
}

ComplexMatrix pauliX() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauliY() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

ComplexMatrix pauliZ() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

KrausChannel::KrausChannel(Eigen::Index dim,
                           std::vector<ComplexMatrix> operators,
                           std::string label)
    : dim_(dim), operators_(std::move(operators)), label_(std::move(label)) {
    if (dim_ <= 0)
        throw std::invalid_argument("KrausChannel: dimension must be positive");
    if (operators_.empty())
        throw std::invalid_argument("KrausChannel: operator list is empty");
    for (const auto& op : operators_) {
        if (op.rows() != dim_ || op.cols() != dim_)
            throw std::invalid_argument(
                "KrausChannel: operator dimension differs from channel "
                "dimension");
        if (!op.allFinite())
            throw std::invalid_argument(
                "KrausChannel: operator contains NaN or Inf entries");
    }
    const double residual = completenessResidual();
    if (residual > kCompletenessTol)
        throw std::invalid_argument(
            "KrausChannel '" + label_ + "': completeness residual " +
            std::to_string(residual) + " exceeds tolerance");
}

double KrausChannel::completenessResidual() const {
    ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& op : operators_) sum += op.adjoint() * op;
    return (sum - ComplexMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

NoiseScenario NoiseScenario::qubitLocal(double p1) {
    return make(Topology::QubitLocal, p1, 0.0, 0.0);
}

NoiseScenario NoiseScenario::qutritLocal(double p2) {
    return make(Topology::QutritLocal, 0.0, p2, 0.0);
}

NoiseScenario NoiseScenario::multiLocal(double p1, double p2) {
    return make(Topology::MultiLocal, p1, p2, 0.0);
}

NoiseScenario NoiseScenario::global(double p1, double p2, double p) {
    return make(Topology::Global, p1, p2, p);
}

NoiseScenario NoiseScenario::make(Topology topology, double p1, double p2,
                                  double p) {
    requireUnitRange(p1, "NoiseScenario(p1)");
    requireUnitRange(p2, "NoiseScenario(p2)");
    requireUnitRange(p, "NoiseScenario(p)");
    const bool usesP1 = topology == Topology::QubitLocal ||
                        topology == Topology::MultiLocal ||
                        topology == Topology::Global;
    const bool usesP2 = topology == Topology::QutritLocal ||
                        topology == Topology::MultiLocal ||
                        topology == Topology::Global;
    const bool usesP = topology == Topology::Global;
    if ((!usesP1 && p1 != 0.0) || (!usesP2 && p2 != 0.0) || (!usesP && p != 0.0))
        throw std::invalid_argument(
            "NoiseScenario: parameters unused by the topology must be zero");
    return NoiseScenario{topology, p1, p2, p};
}

KrausChannel qubitKraus(ChannelKind kind, double p) {
    requireUnitRange(p, "qubitKraus");
    std::vector<ComplexMatrix> ops;
    switch (kind) {
        case ChannelKind::AmplitudeDamping: {
            ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
            e0(0, 0) = 1.0;
            e0(1, 1) = std::sqrt(1.0 - p);
            ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
            e1(0, 1) = std::sqrt(p);
            ops = {e0, e1};
            break;
        }
        case ChannelKind::PhaseDamping: {
            ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
            e0(0, 0) = 1.0;
            e0(1, 1) = std::sqrt(1.0 - p);
            ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
            e1(1, 1) = std::sqrt(p);
            ops = {e0, e1};
            break;
        }
        case ChannelKind::Depolarizing: {
            const double c0 = std::sqrt(1.0 - 3.0 * p / 4.0);
            const double c = std::sqrt(p / 4.0);
            ops = {c0 * ComplexMatrix::Identity(2, 2), c * pauliX(),
                   c * pauliY(), c * pauliZ()};
            break;
        }
    }
    return KrausChannel(2, std::move(ops), paramLabel(kind, p) + "@qubit");
}

KrausChannel qutritKraus(ChannelKind kind, double p) {
    requireUnitRange(p, "qutritKraus");
    std::vector<ComplexMatrix> ops;
    switch (kind) {
        case ChannelKind::AmplitudeDamping: {
            // Decay of levels |1> and |2> into |0>.
            ComplexMatrix e0 = ComplexMatrix::Zero(3, 3);
            e0(0, 0) = 1.0;
            e0(1, 1) = std::sqrt(1.0 - p);
            e0(2, 2) = std::sqrt(1.0 - p);
            ComplexMatrix e1 = ComplexMatrix::Zero(3, 3);
            e1(0, 1) = std::sqrt(p);
            ComplexMatrix e2 = ComplexMatrix::Zero(3, 3);
            e2(0, 2) = std::sqrt(p);
            ops = {e0, e1, e2};
            break;
        }
        case ChannelKind::PhaseDamping: {
            ops = {std::sqrt(1.0 - p) * ComplexMatrix::Identity(3, 3),
                   std::sqrt(p) * qutritClock()};
            break;
        }
        case ChannelKind::Depolarizing: {
            // sqrt(1-p) I3 plus the eight non-identity shift/clock words,
            // each weighted sqrt(p/8).
            const ComplexMatrix y = qutritShift();
            const ComplexMatrix z = qutritClock();
            const double c = std::sqrt(p / 8.0);
            ops = {std::sqrt(1.0 - p) * ComplexMatrix::Identity(3, 3),
                   c * y,
                   c * z,
                   c * (y * y),
                   c * (y * z),
                   c * (y * y * z),
                   c * (y * z * z),
                   c * (y * y * z * z),
                   c * (z * z)};
            break;
        }
    }
    return KrausChannel(3, std::move(ops), paramLabel(kind, p) + "@qutrit");
}

KrausChannel liftQubit(const KrausChannel& ch) {
    if (ch.dim() != 2)
        throw std::invalid_argument("liftQubit: channel dimension must be 2");
    const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
    std::vector<ComplexMatrix> ops;
    ops.reserve(ch.operators().size());
    for (const auto& op : ch.operators()) ops.push_back(kron(op, i3));
    return KrausChannel(6, std::move(ops), ch.label() + "⊗I3");
}

KrausChannel liftQutrit(const KrausChannel& ch) {
    if (ch.dim() != 3)
        throw std::invalid_argument("liftQutrit: channel dimension must be 3");
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    std::vector<ComplexMatrix> ops;
    ops.reserve(ch.operators().size());
    for (const auto& op : ch.operators()) ops.push_back(kron(i2, op));
    return KrausChannel(6, std::move(ops), "I2⊗" + ch.label());
}

KrausChannel jointKraus(const KrausChannel& qubitCh,
                        const KrausChannel& qutritCh) {
    if (qubitCh.dim() != 2 || qutritCh.dim() != 3)
        throw std::invalid_argument(
            "jointKraus: expected a dim-2 and a dim-3 channel");
    std::vector<ComplexMatrix> ops;
    ops.reserve(qubitCh.operators().size() * qutritCh.operators().size());
    for (const auto& a : qubitCh.operators())
        for (const auto& b : qutritCh.operators()) ops.push_back(kron(a, b));
    return KrausChannel(6, std::move(ops),
                        qubitCh.label() + "⊗" + qutritCh.label());
}

std::vector<KrausChannel> scenarioChannels(ChannelKind kind,
                                           const NoiseScenario& sc) {
    std::vector<KrausChannel> chain;
    switch (sc.topology) {
        case Topology::QubitLocal:
            chain.push_back(liftQubit(qubitKraus(kind, sc.p1)));
            break;
        case Topology::QutritLocal:
            chain.push_back(liftQutrit(qutritKraus(kind, sc.p2)));
            break;
        case Topology::MultiLocal:
            chain.push_back(liftQutrit(qutritKraus(kind, sc.p2)));
            chain.push_back(liftQubit(qubitKraus(kind, sc.p1)));
            break;
        case Topology::Global:
            chain.push_back(liftQutrit(qutritKraus(kind, sc.p2)));
            chain.push_back(liftQubit(qubitKraus(kind, sc.p1)));
            chain.push_back(
                jointKraus(qubitKraus(kind, sc.p), qutritKraus(kind, sc.p)));
            break;
    }
    return chain;
}

}  // namespace qqt
