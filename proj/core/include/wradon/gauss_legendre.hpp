#pragma once

#include <vector>

namespace wradon {

/// Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule computed by Newton iteration on P_n. Throws InvalidArgument for n < 1.
GaussRule gauss_legendre(int n);

/// Rule for integrals over [-pi/2, pi/2] of g(sin(theta)) cos(theta) style integrands.
/// Nodes are theta values; weights include the (pi/2) interval scaling but not the cosine.
GaussRule gauss_legendre_angle(int n);

}  // namespace wradon
