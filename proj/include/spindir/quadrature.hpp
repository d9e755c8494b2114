#pragma once

#include <utility>
#include <vector>

#include "spindir/direction.hpp"

namespace spindir {

// Product quadrature on the unit sphere normalized so that the weights sum
// to one (the measure integrates to 1, not 4*pi).
struct SphereQuadrature {
    struct Node {
        Direction dir;
        double weight;
    };
    int degree = 0;
    std::vector<Node> nodes;
};

// Gauss-Legendre nodes and weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int order);

// Gauss-Legendre in cos(theta) times a uniform phi rule; exact (to roundoff)
// for spherical polynomials of total degree <= max_degree, which covers the
// rotation-matrix products D^j D^j'* cos(theta) with j + j' + 1 <= max_degree.
SphereQuadrature sphere_quadrature(int max_degree);

}  // namespace spindir
