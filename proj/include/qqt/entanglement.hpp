#pragma once

#include "qqt/state.hpp"

namespace qqt {

/// Transpose the qubit factor only: out[(i,a),(j,b)] = rho[(j,a),(i,b)] under
/// the 3*i + a flattening. Hermitian and trace-preserving, but generally not
/// positive; its negative spectrum is what measures entanglement.
ComplexMatrix partialTransposeQubit(const DensityMatrix& rho);

/// Sum of |lambda| over eigenvalues lambda < -1e-12 of the partial transpose;
/// zero when none are negative. Ranges over [0, 1/2] for this state family.
double negativity(const DensityMatrix& rho);

}  // namespace qqt
