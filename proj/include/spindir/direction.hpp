#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace spindir {

// Point on the unit sphere, theta in [0, pi], phi in [0, 2*pi).
struct Direction {
    double theta = 0.0;
    double phi = 0.0;

    Direction() = default;
    Direction(double theta_, double phi_) : theta(theta_), phi(phi_) {
        if (!(theta >= -1e-12 && theta <= M_PI + 1e-12))
            throw std::domain_error("Direction: theta outside [0, pi]");
        const double two_pi = 2.0 * M_PI;
        phi = std::fmod(phi, two_pi);
        if (phi < 0.0) phi += two_pi;
    }

    std::array<double, 3> cartesian() const {
        const double s = std::sin(theta);
        return {std::cos(phi) * s, std::sin(phi) * s, std::cos(theta)};
    }

    double dot(const Direction& other) const {
        const auto a = cartesian();
        const auto b = other.cartesian();
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    }

    static Direction from_cartesian(double x, double y, double z) {
        const double r = std::sqrt(x * x + y * y + z * z);
        if (r < 1e-300) throw std::domain_error("Direction: zero vector");
        double c = z / r;
        if (c > 1.0) c = 1.0;
        if (c < -1.0) c = -1.0;
        return Direction(std::acos(c), std::atan2(y, x));
    }
};

// Apply the rotation matrix (rows) to a direction; used to test rotational
// invariance of measurement constructions.
inline Direction rotate(const std::array<std::array<double, 3>, 3>& rot, const Direction& n) {
    const auto v = n.cartesian();
    double out[3];
    for (int i = 0; i < 3; ++i)
        out[i] = rot[i][0] * v[0] + rot[i][1] * v[1] + rot[i][2] * v[2];
    return Direction::from_cartesian(out[0], out[1], out[2]);
}

// Rotation by angle about the z or y axis; compositions of these reach any
// rotation and are enough for the invariance tests.
inline std::array<std::array<double, 3>, 3> rotation_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

inline std::array<std::array<double, 3>, 3> rotation_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

}  // namespace spindir
