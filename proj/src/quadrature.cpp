#include "spindir/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace spindir {

std::vector<std::pair<double, double>> gauss_legendre(int order) {
    if (order < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
    std::vector<std::pair<double, double>> out(static_cast<std::size_t>(order));
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_order from the Chebyshev-like initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        out[static_cast<std::size_t>(i)] = {x, w};
        out[static_cast<std::size_t>(order - 1 - i)] = {-x, w};
    }
    if (order & 1) out[static_cast<std::size_t>(order / 2)].first = 0.0;
    return out;
}

SphereQuadrature sphere_quadrature(int max_degree) {
    if (max_degree < 1) throw std::domain_error("sphere_quadrature: max_degree must be >= 1");
    const int n_theta = (max_degree + 2) / 2;
    const int n_phi = max_degree + 1;
    const auto gl = gauss_legendre(n_theta);

    SphereQuadrature quad;
    quad.degree = max_degree;
    quad.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (const auto& [x, w] : gl) {
        const double theta = std::acos(x);
        for (int k = 0; k < n_phi; ++k) {
            const double phi = 2.0 * M_PI * k / n_phi;
            quad.nodes.push_back({Direction(theta, phi), 0.5 * w / n_phi});
        }
    }
    return quad;
}

}  // namespace spindir
