#include "qqt/evolve.hpp"

namespace qqt {

DensityMatrix applyChannel(const DensityMatrix& rho, const KrausChannel& ch) {
    if (ch.dim() != DensityMatrix::kDim)
        throw std::invalid_argument(
            "applyChannel: channel dimension must be 6, got channel '" +
            ch.label() + "'");
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim(), ch.dim());
    for (const auto& op : ch.operators())
        out += op * rho.matrix() * op.adjoint();
    return DensityMatrix::fromMatrix(std::move(out));
}

DensityMatrix evolveScenario(Acceleration acc, ChannelKind kind,
                             const NoiseScenario& sc) {
    DensityMatrix rho = initialState(acc);
    for (const auto& ch : scenarioChannels(kind, sc))
        rho = applyChannel(rho, ch);
    return rho;
}

}  // namespace qqt
