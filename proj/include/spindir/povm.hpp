#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spindir/fidelity.hpp"
#include "spindir/half_int.hpp"
#include "spindir/matrix.hpp"
#include "spindir/quadrature.hpp"
#include "spindir/wigner.hpp"

namespace spindir {

// Decoding reference state |B>: components B_j = sqrt((2j+1)/c) on the
// blocks j = mB..J, with c = (J+1)^2 - mB^2 the dimension of that block
// space. Rotating |B> over the sphere (with total weight c) resolves the
// identity on the block space.
struct PovmReference {
    HalfInt J;
    HalfInt mB;
    std::vector<double> components;  // indexed ascending from j = mB
    double weight = 0.0;             // c

    double component(HalfInt j) const;
    int block_count() const { return static_cast<int>(components.size()); }
};

PovmReference reference_state(HalfInt J, HalfInt mB);

struct PovmOutcome {
    double weight = 0.0;  // c_r
    Direction direction;
};

struct PovmSpec {
    enum class Kind { continuous, discrete };
    PovmReference reference;
    Kind kind = Kind::continuous;
    std::vector<PovmOutcome> outcomes;  // empty for continuous
};

PovmSpec continuous_povm(HalfInt J, HalfInt mB);

// Four unit-weight outcomes at tetrahedron vertices, J = 1, mB = 0.
PovmSpec tetrahedron_povm();

// Six outcomes at +-x, +-y, +-z with uniform weights c/6, J = 3/2,
// mB in {1/2, 3/2}.
PovmSpec octahedron_povm(HalfInt mB);

// Rotated reference vector U(n)|B> over the block space j = mB..J.
std::vector<std::complex<double>> rotated_reference(const PovmReference& ref, const Direction& n);

// Max-norm residual of sum_r O_r - 1 (discrete) or the quadrature of the
// continuous family against the identity, on the block space j = mB..J.
double verify_completeness(const PovmSpec& povm);
double verify_completeness(const PovmSpec& povm, const SphereQuadrature& quad);

// Matrix elements omega_{kj} = sum_r <k| U^dag(n_r) O_r U(n_r) |j> in the
// two-spin basis {+, 0, -, s}; defined for J = 1 geometries only.
struct OmegaSummary {
    ComplexMatrix omega;  // 4x4

    std::complex<double> pp() const { return omega.at(0, 0); }
    std::complex<double> zz() const { return omega.at(1, 1); }
    std::complex<double> mm() const { return omega.at(2, 2); }
    std::complex<double> ss() const { return omega.at(3, 3); }
    std::complex<double> zs() const { return omega.at(1, 3); }
};

OmegaSummary omega_summary(const PovmSpec& povm);

// As above for an explicit list of (guess direction, outcome operator); used
// to probe measurement sets that are not rotations of one reference state.
OmegaSummary omega_summary(const std::vector<std::pair<Direction, ComplexMatrix>>& outcomes, HalfInt J);

struct QuadratureFidelity {
    double value = 0.0;
    bool quadrature_sufficient = true;  // degree >= 2J + 2
};

// Average fidelity by explicit integration: for a discrete measurement the
// outcome sum is exact and the source direction is integrated by quadrature;
// for the continuous family rotational invariance reduces the double
// integral to one quadrature.
QuadratureFidelity quadrature_fidelity(const CoupledState& state, const PovmSpec& povm,
                                       const SphereQuadrature& quad);

// Continuous decoding family on the full N-spin space with its repeated
// blocks: one copy of the reference per multiplicity slot, each copy picking
// an orthogonal direction in the multiplicity space, so the rotated family
// resolves the identity on the whole 2^N-dimensional space when mB is
// minimal.
struct DegeneratePovm {
    int n_spins = 0;
    HalfInt J;
    HalfInt mB;
    double weight = 0.0;  // c = (J+1)^2 - mB^2
    int copies = 0;       // highest multiplicity in the product decomposition
    std::vector<HalfInt> block_js;       // distinct blocks j = mB..J
    std::vector<int> multiplicities;     // occurrences of each block
    int total_dimension() const;
};

DegeneratePovm degenerate_povm(int n_spins, HalfInt mB);

double verify_completeness(const DegeneratePovm& povm, const SphereQuadrature& quad);

// JSON shape: {J2, mB2, kind, outcomes: [{weight, theta, phi}]}.
nlohmann::json to_json(const PovmSpec& povm);
PovmSpec povm_from_json(const nlohmann::json& j);

}  // namespace spindir
