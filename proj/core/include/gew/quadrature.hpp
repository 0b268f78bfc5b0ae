#pragma once

#include <vector>

namespace gew {

struct QuadratureRule {
    std::vector<double> nodes;   // on [0,1]
    std::vector<double> weights; // sum to 1
};

/// n-point Gauss-Legendre rule mapped to [0,1]; exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_legendre(int n);

/// The 8-point rule used for all element integrals.
const QuadratureRule& element_rule();

} // namespace gew
