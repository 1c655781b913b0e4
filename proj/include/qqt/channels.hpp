#pragma once

#include "qqt/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qqt {

enum class ChannelKind { AmplitudeDamping, Depolarizing, PhaseDamping };
enum class Topology { QubitLocal, QutritLocal, MultiLocal, Global };

/// Short tags used by the CLI and in report files: ad / dep / pd.
std::string_view toString(ChannelKind kind);
/// qubit / qutrit / multilocal / global.
std::string_view toString(Topology topology);
std::optional<ChannelKind> channelKindFromString(std::string_view s);
std::optional<Topology> topologyFromString(std::string_view s);

inline constexpr std::array<ChannelKind, 3> kAllChannelKinds = {
    ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing,
    ChannelKind::PhaseDamping};
inline constexpr std::array<Topology, 4> kAllTopologies = {
    Topology::QubitLocal, Topology::QutritLocal, Topology::MultiLocal,
    Topology::Global};

/// omega = exp(2 pi i / 3), the primitive cube root of unity.
Complex omega();

/// 3x3 cyclic shift (|0> -> |2> -> |1> -> |0| as column action).
ComplexMatrix qutritShift();
/// 3x3 clock matrix diag(1, omega, omega^2).
ComplexMatrix qutritClock();

ComplexMatrix pauliX();
ComplexMatrix pauliY();
ComplexMatrix pauliZ();

/// Ordered Kraus operator set of common dimension. Construction enforces the
/// completeness relation sum_k E_k^dag E_k = I to 1e-10 entrywise.
class KrausChannel {
public:
    KrausChannel(Eigen::Index dim, std::vector<ComplexMatrix> operators,
                 std::string label);

    Eigen::Index dim() const noexcept { return dim_; }
    const std::vector<ComplexMatrix>& operators() const noexcept {
        return operators_;
    }
    const std::string& label() const noexcept { return label_; }

    /// max entrywise |sum_k E_k^dag E_k - I|.
    double completenessResidual() const;

    static constexpr double kCompletenessTol = 1e-10;

private:
    Eigen::Index dim_;
    std::vector<ComplexMatrix> operators_;
    std::string label_;
};

/// Coupling topology plus decoherence parameters. Parameters a topology does
/// not use must be exactly zero.
struct NoiseScenario {
    Topology topology;
    double p1 = 0.0;  // qubit-side local noise
    double p2 = 0.0;  // qutrit-side local noise
    double p = 0.0;   // collective noise

    static NoiseScenario qubitLocal(double p1);
    static NoiseScenario qutritLocal(double p2);
    static NoiseScenario multiLocal(double p1, double p2);
    static NoiseScenario global(double p1, double p2, double p);

    /// Validating constructor used by the CLI; rejects out-of-range
    /// parameters and nonzero unused ones.
    static NoiseScenario make(Topology topology, double p1, double p2,
                              double p);
};

/// Single-qubit Kraus set for the requested channel at noise strength p.
KrausChannel qubitKraus(ChannelKind kind, double p);

/// Single-qutrit Kraus set for the requested channel at noise strength p.
/// Amplitude damping has 3 operators, phase damping 2, depolarizing 9.
KrausChannel qutritKraus(ChannelKind kind, double p);

/// Embed a qubit channel into the 6-dimensional composite: E -> E (x) I3.
KrausChannel liftQubit(const KrausChannel& ch);

/// Embed a qutrit channel into the 6-dimensional composite: E -> I2 (x) E.
KrausChannel liftQutrit(const KrausChannel& ch);

/// Collective channel: all n*m products E_m (x) F_n, ordered
/// lexicographically by (m, n).
KrausChannel jointKraus(const KrausChannel& qubitCh,
                        const KrausChannel& qutritCh);

/// The 6-dimensional channels a scenario applies, in application order:
///   qubit-local:  [qubit(p1) (x) I3]
///   qutrit-local: [I2 (x) qutrit(p2)]
///   multilocal:   [I2 (x) qutrit(p2), qubit(p1) (x) I3]
///   global:       [I2 (x) qutrit(p2), qubit(p1) (x) I3, joint(p)]
std::vector<KrausChannel> scenarioChannels(ChannelKind kind,
                                           const NoiseScenario& sc);

}  // namespace qqt
