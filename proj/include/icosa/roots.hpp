#pragma once

// Univariate polynomial roots: companion-matrix eigenvalues in double precision,
// then Newton polishing in 50-digit arithmetic.

#include <vector>

#include "icosa/scalar.hpp"

namespace icosa {

/// Eigenvalues of the companion matrix of sum c_k z^k (ascending coefficients).
std::vector<Complex> companionRoots(const std::vector<Complex>& ascending);

/// All roots of an exact polynomial, polished until the Newton correction is
/// below 10^-digits relative.  Exact zero roots are returned exactly.
/// Throws RootFindingFailure if polishing does not converge or roots collide.
std::vector<Complex50> polishedRoots(const std::vector<Rational>& ascending, int digits = 30);

/// Value of an exact polynomial at a 50-digit point (Horner).
Complex50 evaluatePolynomial(const std::vector<Real50>& ascending, const Complex50& z);

}  // namespace icosa
