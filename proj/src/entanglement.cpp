#include "qqt/entanglement.hpp"

namespace qqt {

ComplexMatrix partialTransposeQubit(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(6, 6);
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 3; ++a)
            for (int j = 0; j < 2; ++j)
                for (int b = 0; b < 3; ++b)
                    out(3 * i + a, 3 * j + b) = m(3 * j + a, 3 * i + b);
    return out;
}

double negativity(const DensityMatrix& rho) {
    const RealVector eigs = hermitianEigenvalues(partialTransposeQubit(rho));
    double sum = 0.0;
    for (Eigen::Index k = 0; k < eigs.size(); ++k)
        if (eigs(k) < kNegativeEigThreshold) sum += -eigs(k);
    return sum;
}

}  // namespace qqt
