#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qqt {

using Complex = std::complex<double>;

/// Dense complex matrix, the universal carrier for states and operators.
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Default gate on how non-Hermitian an eigensolver input may be.
inline constexpr double kHermiticityTol = 1e-9;

/// Eigenvalues above this threshold are treated as roundoff zeros, not as
/// genuinely negative.
inline constexpr double kNegativeEigThreshold = -1e-12;

/// Thrown when the Jacobi sweep cap is reached before the off-diagonal mass
/// has drained below the stopping threshold.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    /// Off-diagonal Frobenius mass left when the solver gave up.
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Matrix product with an explicit dimension check (Eigen would assert).
ComplexMatrix matMul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Sum of diagonal entries; rejects non-square input.
Complex trace(const ComplexMatrix& a);

/// sqrt(sum |a_ij - b_ij|^2); rejects mismatched dimensions.
double frobeniusDistance(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - conj(a_ji)|; rejects non-square input.
double hermiticityResidual(const ComplexMatrix& a);

/// Kronecker product with the block convention
/// (a (x) b)[i*b.rows()+k, j*b.cols()+l] = a(i,j) * b(k,l).
template <typename DerivedA, typename DerivedB>
ComplexMatrix kron(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
    const ComplexMatrix lhs = a.template cast<Complex>();
    const ComplexMatrix rhs = b.template cast<Complex>();
    ComplexMatrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
        for (Eigen::Index j = 0; j < lhs.cols(); ++j)
            out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) =
                lhs(i, j) * rhs;
    return out;
}

/// All eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic Jacobi rotations on the complex Hermitian matrix, sweeping until the
/// off-diagonal Frobenius mass is below 1e-14 * ||a||_F, hard cap 100 sweeps.
/// Inputs whose hermiticity residual exceeds `tol` are rejected.
RealVector hermitianEigenvalues(const ComplexMatrix& a,
                                double tol = kHermiticityTol);

namespace detail {

/// Full Jacobi decomposition; eigenvectors are not part of the public
/// contract and exist for internal reconstruction checks.
struct JacobiResult {
    RealVector eigenvalues;      // ascending
    ComplexMatrix eigenvectors;  // columns, matching order
    double offDiagonalResidual = 0.0;
    int sweeps = 0;
};

JacobiResult jacobiHermitian(const ComplexMatrix& a);

}  // namespace detail

}  // namespace qqt
