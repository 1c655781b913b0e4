#include "qqt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qqt {

namespace {

void requireFinite(const ComplexMatrix& a, const char* who) {
    if (!a.allFinite())
        throw std::invalid_argument(std::string(who) +
                                    ": matrix contains NaN or Inf entries");
}

double offDiagonalMass(const ComplexMatrix& w) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < w.rows(); ++i)
        for (Eigen::Index j = 0; j < w.cols(); ++j)
            if (i != j) sum += std::norm(w(i, j));
    return std::sqrt(sum);
}

}  // namespace

ComplexMatrix matMul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matMul: inner dimensions disagree (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("trace: matrix is not square");
    return a.trace();
}

double frobeniusDistance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobeniusDistance: dimension mismatch");
    return (a - b).norm();
}

double hermiticityResidual(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("hermiticityResidual: matrix is not square");
    return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

namespace detail {

JacobiResult jacobiHermitian(const ComplexMatrix& a) {
    const Eigen::Index n = a.rows();
    // Symmetrize once so the iteration sees an exactly Hermitian matrix.
    ComplexMatrix w = 0.5 * (a + a.adjoint().eval());
    ComplexMatrix v = ComplexMatrix::Identity(n, n);

    const double stop = 1e-14 * a.norm();
    constexpr int kMaxSweeps = 100;

    int sweeps = 0;
    double off = offDiagonalMass(w);
    while (off > stop && sweeps < kMaxSweeps) {
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double g = std::abs(w(p, q));
                if (g == 0.0) continue;

                // Phase-factored complex rotation: with the off-diagonal phase
                // absorbed into the plane, the angle is the classic real
                // Jacobi choice that annihilates w(p,q).
                const Complex phase = w(p, q) / g;
                const double tau = (w(q, q).real() - w(p, p).real()) / (2.0 * g);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex wkp = w(k, p), wkq = w(k, q);
                    w(k, p) = c * wkp - s * std::conj(phase) * wkq;
                    w(k, q) = s * phase * wkp + c * wkq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex wpk = w(p, k), wqk = w(q, k);
                    w(p, k) = c * wpk - s * phase * wqk;
                    w(q, k) = s * std::conj(phase) * wpk + c * wqk;
                }
            }
        }
        ++sweeps;
        off = offDiagonalMass(w);
    }

    if (off > stop)
        throw ConvergenceError(
            "jacobiHermitian: sweep cap reached with off-diagonal residual " +
                std::to_string(off),
            off);

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return w(i, i).real() < w(j, j).real();
    });

    JacobiResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        result.eigenvalues(k) = w(order[static_cast<size_t>(k)],
                                  order[static_cast<size_t>(k)]).real();
        result.eigenvectors.col(k) = v.col(order[static_cast<size_t>(k)]);
    }
    result.offDiagonalResidual = off;
    result.sweeps = sweeps;
    return result;
}

}  // namespace detail

RealVector hermitianEigenvalues(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("hermitianEigenvalues: matrix is not square");
    requireFinite(a, "hermitianEigenvalues");
    const double residual = hermiticityResidual(a);
    if (residual > tol)
        throw std::invalid_argument(
            "hermitianEigenvalues: input is not Hermitian (residual " +
            std::to_string(residual) + " exceeds tolerance)");
    return detail::jacobiHermitian(a).eigenvalues;
}

}  // namespace qqt
