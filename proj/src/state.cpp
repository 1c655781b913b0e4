#include "qqt/state.hpp"

#include <cmath>
#include <string>

namespace qqt {

Acceleration::Acceleration(double r) : r_(r) {
    if (!std::isfinite(r) || r < 0.0 || r > kMaxAcceleration)
        throw std::invalid_argument(
            "Acceleration: r must lie in [0, pi/4], got " + std::to_string(r));
}

DensityMatrix DensityMatrix::fromMatrix(ComplexMatrix m) {
    if (m.rows() != kDim || m.cols() != kDim)
        throw StateConsistencyError("DensityMatrix: expected a 6x6 matrix");
    if (!m.allFinite())
        throw StateConsistencyError("DensityMatrix: non-finite entries");
    const double herm = hermiticityResidual(m);
    if (herm > kTol)
        throw StateConsistencyError(
            "DensityMatrix: hermiticity residual " + std::to_string(herm));
    const double traceErr = std::abs(m.trace() - Complex(1.0, 0.0));
    if (traceErr > kTol)
        throw StateConsistencyError("DensityMatrix: trace deviates by " +
                                    std::to_string(traceErr));
    const RealVector eigs = hermitianEigenvalues(m, kTol);
    if (eigs(0) < -kTol)
        throw StateConsistencyError("DensityMatrix: negative eigenvalue " +
                                    std::to_string(eigs(0)));
    return DensityMatrix(std::move(m));
}

DensityMatrix initialState(Acceleration acc) {
    const double c2 = std::cos(acc.r()) * std::cos(acc.r());
    const double s2 = std::sin(acc.r()) * std::sin(acc.r());
    ComplexMatrix m = ComplexMatrix::Zero(6, 6);
    m(1, 1) = c2 / 2.0;  // |01><01|
    m(3, 3) = c2 / 2.0;  // |10><10|
    m(1, 3) = c2 / 2.0;  // |01><10|
    m(3, 1) = c2 / 2.0;  // |10><01|
    m(2, 2) = s2 / 2.0;  // |02><02|
    m(5, 5) = s2 / 2.0;  // |12><12|
    return DensityMatrix::fromMatrix(std::move(m));
}

}  // namespace qqt
