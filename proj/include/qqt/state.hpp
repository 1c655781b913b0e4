#pragma once

#include "qqt/linalg.hpp"

#include <utility>

namespace qqt {

/// Upper end of the dimensionless acceleration parameter range.
inline constexpr double kMaxAcceleration = 0.7853981633974483;  // pi/4

/// Dimensionless acceleration parameter r in [0, pi/4].
class Acceleration {
public:
    explicit Acceleration(double r);
    double r() const noexcept { return r_; }

private:
    double r_;
};

/// Thrown when a matrix that should be a physical state (or a channel output
/// that should stay one) violates the trace / hermiticity / positivity
/// tolerances.
class StateConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 6x6 qubit (x) qutrit density matrix in the basis |qubit, qutrit> with flat
/// index 3*i + a (qubit i in {0,1}, qutrit a in {0,1,2}).
///
/// Invariants, enforced on construction: Hermitian to 1e-10, unit trace to
/// 1e-10, minimum eigenvalue >= -1e-10.
class DensityMatrix {
public:
    static constexpr Eigen::Index kDim = 6;
    static constexpr double kTol = 1e-10;

    static DensityMatrix fromMatrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const& noexcept { return mat_; }
    /// Rvalue access moves the storage out, so binding a reference to
    /// `someCall().matrix()` cannot dangle.
    ComplexMatrix matrix() && noexcept { return std::move(mat_); }

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// The shared entangled state seen from the accelerated frame:
///   cos^2(r)/2 on the |01>,|10> coherence block,
///   sin^2(r)/2 on the |02> and |12> populations.
DensityMatrix initialState(Acceleration acc);

}  // namespace qqt
