#include "spindir/povm.hpp"

#include <cmath>
#include <stdexcept>

#include "spindir/multiplicity.hpp"

namespace spindir {

namespace {

void require_reference_sector(HalfInt J, HalfInt mB, const char* where) {
    if (mB < HalfInt(0)) throw std::domain_error(std::string(where) + ": mB must be >= 0");
    require_valid_jm(J, mB, where);
}

int block_space_dim(HalfInt J, HalfInt mB) {
    int dim = 0;
    for (HalfInt j = mB; j <= J; j = j + HalfInt(1)) dim += num_states(j);
    return dim;
}

}  // namespace

double PovmReference::component(HalfInt j) const {
    if (!same_parity(j, J) || j < mB || j > J)
        throw std::domain_error("PovmReference::component: block out of range");
    return components[static_cast<std::size_t>((j - mB).twice() / 2)];
}

PovmReference reference_state(HalfInt J, HalfInt mB) {
    require_reference_sector(J, mB, "reference_state");
    PovmReference ref;
    ref.J = J;
    ref.mB = mB;
    ref.weight = static_cast<double>(block_space_dim(J, mB));
    for (HalfInt j = mB; j <= J; j = j + HalfInt(1))
        ref.components.push_back(std::sqrt(num_states(j) / ref.weight));
    return ref;
}

PovmSpec continuous_povm(HalfInt J, HalfInt mB) {
    return {reference_state(J, mB), PovmSpec::Kind::continuous, {}};
}

PovmSpec tetrahedron_povm() {
    PovmSpec povm;
    povm.reference = reference_state(HalfInt(1), HalfInt(0));
    povm.kind = PovmSpec::Kind::discrete;
    povm.outcomes.push_back({1.0, Direction(0.0, 0.0)});
    const double theta = std::acos(-1.0 / 3.0);
    for (int r = 2; r <= 4; ++r)
        povm.outcomes.push_back({1.0, Direction(theta, (r - 2) * 2.0 * M_PI / 3.0)});
    return povm;
}

PovmSpec octahedron_povm(HalfInt mB) {
    if (mB != HalfInt::half() && mB != HalfInt::from_twice(3))
        throw std::invalid_argument("octahedron_povm: mB must be 1/2 or 3/2");
    PovmSpec povm;
    povm.reference = reference_state(HalfInt::from_twice(3), mB);
    povm.kind = PovmSpec::Kind::discrete;
    const double w = povm.reference.weight / 6.0;
    const double half_pi = 0.5 * M_PI;
    povm.outcomes = {
        {w, Direction(0.0, 0.0)},          {w, Direction(M_PI, 0.0)},
        {w, Direction(half_pi, 0.0)},      {w, Direction(half_pi, M_PI)},
        {w, Direction(half_pi, half_pi)},  {w, Direction(half_pi, 1.5 * M_PI)},
    };
    return povm;
}

std::vector<std::complex<double>> rotated_reference(const PovmReference& ref, const Direction& n) {
    // Blocks ordered j = J down to mB, entries within a block ordered by
    // descending m'; for J = 1, mB = 0 this is the {+, 0, -, s} basis.
    std::vector<std::complex<double>> psi;
    psi.reserve(static_cast<std::size_t>(block_space_dim(ref.J, ref.mB)));
    for (HalfInt j = ref.J; j >= ref.mB; j = j - HalfInt(1)) {
        const auto column = wigner_D_column(j, ref.mB, n);
        const double bj = ref.component(j);
        for (const auto& entry : column) psi.push_back(bj * entry);
    }
    return psi;
}

double verify_completeness(const PovmSpec& povm) {
    return verify_completeness(povm, sphere_quadrature(std::max(1, povm.reference.J.twice() + 4)));
}

double verify_completeness(const PovmSpec& povm, const SphereQuadrature& quad) {
    const int dim = block_space_dim(povm.reference.J, povm.reference.mB);
    ComplexMatrix sum(dim);
    if (povm.kind == PovmSpec::Kind::discrete) {
        for (const auto& outcome : povm.outcomes)
            sum.add_outer(rotated_reference(povm.reference, outcome.direction), outcome.weight);
    } else {
        for (const auto& node : quad.nodes)
            sum.add_outer(rotated_reference(povm.reference, node.dir),
                          povm.reference.weight * node.weight);
    }
    return max_abs_deviation_from_identity(sum);
}

OmegaSummary omega_summary(const PovmSpec& povm) {
    if (povm.reference.J != HalfInt(1))
        throw std::invalid_argument("omega_summary: defined for the two-spin geometry (J = 1)");
    if (povm.kind == PovmSpec::Kind::continuous) {
        // Reference projectors are weight * |B><B| for every direction, so
        // omega = c * B B^t directly.
        OmegaSummary out;
        out.omega = ComplexMatrix(4);
        std::vector<double> b(4, 0.0);
        b[1] = povm.reference.mB == HalfInt(0) ? povm.reference.component(HalfInt(1)) : 0.0;
        b[3] = povm.reference.mB == HalfInt(0) ? povm.reference.component(HalfInt(0)) : 0.0;
        if (povm.reference.mB == HalfInt(1)) b[0] = povm.reference.component(HalfInt(1));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out.omega.at(r, c) = povm.reference.weight * b[r] * b[c];
        return out;
    }
    std::vector<std::pair<Direction, ComplexMatrix>> realized;
    realized.reserve(povm.outcomes.size());
    const int dim = block_space_dim(povm.reference.J, povm.reference.mB);
    for (const auto& outcome : povm.outcomes) {
        ComplexMatrix op(dim);
        op.add_outer(rotated_reference(povm.reference, outcome.direction), outcome.weight);
        if (povm.reference.mB != HalfInt(0)) {
            // Embed a j >= mB block operator into the full {+,0,-,s} space.
            ComplexMatrix full(4);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) full.at(r, c) = op.at(r, c);
            op = std::move(full);
        }
        realized.emplace_back(outcome.direction, std::move(op));
    }
    return omega_summary(realized, povm.reference.J);
}

OmegaSummary omega_summary(const std::vector<std::pair<Direction, ComplexMatrix>>& outcomes, HalfInt J) {
    if (J != HalfInt(1)) throw std::invalid_argument("omega_summary: defined for J = 1");
    OmegaSummary out;
    out.omega = ComplexMatrix(4);
    for (const auto& [dir, op] : outcomes) {
        if (op.n != 4) throw std::invalid_argument("omega_summary: outcome operators must be 4x4");
        // U(n) = D^1(n) + D^0(n) acting on {+,0,-} + {s}.
        ComplexMatrix u(4);
        const WignerBlock d1 = wigner_D(HalfInt(1), dir);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) u.at(r, c) = d1.at(r, c);
        u.at(3, 3) = 1.0;
        const ComplexMatrix rotated = multiply(multiply(adjoint(u), op), u);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out.omega.at(r, c) += rotated.at(r, c);
    }
    return out;
}

QuadratureFidelity quadrature_fidelity(const CoupledState& state, const PovmSpec& povm,
                                       const SphereQuadrature& quad) {
    state.validate();
    const PovmReference& ref = povm.reference;
    if (state.J != ref.J) throw std::invalid_argument("quadrature_fidelity: spin mismatch");

    QuadratureFidelity result;
    result.quadrature_sufficient = quad.degree >= state.J.twice() + 2;

    const HalfInt m_low = std::max(state.min_j(), ref.mB);

    if (povm.kind == PovmSpec::Kind::continuous) {
        // F = c * integral (1+cos)/2 |<B|U(n)|A>|^2
        double acc = 0.0;
        for (const auto& node : quad.nodes) {
            std::complex<double> overlap = 0.0;
            for (HalfInt j = m_low; j <= state.J; j = j + HalfInt(1)) {
                const auto column = wigner_D_column(j, state.mA, node.dir);
                overlap += ref.component(j) * state.component(j) *
                           column[static_cast<std::size_t>((j - ref.mB).twice() / 2)];
            }
            acc += node.weight * 0.5 * (1.0 + std::cos(node.dir.theta)) * std::norm(overlap);
        }
        result.value = ref.weight * acc;
        return result;
    }

    // Discrete: precompute per outcome the row <B| U^dag(n_r) restricted to
    // the blocks carrying the signal.
    struct OutcomeRows {
        double weight;
        std::array<double, 3> guess;
        std::vector<std::vector<std::complex<double>>> rows;  // per block, over m'
    };
    std::vector<OutcomeRows> prepared;
    prepared.reserve(povm.outcomes.size());
    for (const auto& outcome : povm.outcomes) {
        OutcomeRows rows;
        rows.weight = outcome.weight;
        rows.guess = outcome.direction.cartesian();
        for (HalfInt j = m_low; j <= state.J; j = j + HalfInt(1)) {
            auto column = wigner_D_column(j, ref.mB, outcome.direction);
            const double bj = ref.component(j);
            for (auto& entry : column) entry = bj * std::conj(entry);
            rows.rows.push_back(std::move(column));
        }
        prepared.push_back(std::move(rows));
    }

    double acc = 0.0;
    for (const auto& node : quad.nodes) {
        const auto nvec = node.dir.cartesian();
        std::vector<std::vector<std::complex<double>>> columns;
        for (HalfInt j = m_low; j <= state.J; j = j + HalfInt(1)) {
            auto column = wigner_D_column(j, state.mA, node.dir);
            const double aj = state.component(j);
            for (auto& entry : column) entry *= aj;
            columns.push_back(std::move(column));
        }
        for (const auto& outcome : prepared) {
            std::complex<double> overlap = 0.0;
            for (std::size_t blk = 0; blk < columns.size(); ++blk) {
                const auto& row = outcome.rows[blk];
                const auto& col = columns[blk];
                for (std::size_t i = 0; i < col.size(); ++i) overlap += row[i] * col[i];
            }
            const double score =
                0.5 * (1.0 + nvec[0] * outcome.guess[0] + nvec[1] * outcome.guess[1] + nvec[2] * outcome.guess[2]);
            acc += node.weight * outcome.weight * score * std::norm(overlap);
        }
    }
    result.value = acc;
    return result;
}

int DegeneratePovm::total_dimension() const {
    int dim = 0;
    for (std::size_t i = 0; i < block_js.size(); ++i) dim += multiplicities[i] * num_states(block_js[i]);
    return dim;
}

DegeneratePovm degenerate_povm(int n_spins, HalfInt mB) {
    if (n_spins < 1 || n_spins > 8)
        throw std::invalid_argument("degenerate_povm: n_spins must be in [1, 8]");
    const HalfInt J = HalfInt::from_twice(n_spins);
    require_reference_sector(J, mB, "degenerate_povm");

    DegeneratePovm povm;
    povm.n_spins = n_spins;
    povm.J = J;
    povm.mB = mB;
    povm.weight = static_cast<double>(block_space_dim(J, mB));
    povm.copies = 0;
    for (HalfInt j = mB; j <= J; j = j + HalfInt(1)) {
        povm.block_js.push_back(j);
        const int g = multiplicity_count(n_spins, j);
        povm.multiplicities.push_back(g);
        povm.copies = std::max(povm.copies, g);
    }
    return povm;
}

double verify_completeness(const DegeneratePovm& povm, const SphereQuadrature& quad) {
    const int dim = povm.total_dimension();
    // Offsets of each (block, occurrence) segment in the full space.
    std::vector<std::vector<int>> offsets(povm.block_js.size());
    int at = 0;
    for (std::size_t b = 0; b < povm.block_js.size(); ++b) {
        for (int alpha = 0; alpha < povm.multiplicities[b]; ++alpha) {
            offsets[b].push_back(at);
            at += num_states(povm.block_js[b]);
        }
    }

    ComplexMatrix sum(dim);
    std::vector<std::complex<double>> psi(static_cast<std::size_t>(dim));
    for (const auto& node : quad.nodes) {
        // Copy p of the reference populates occurrence alpha = p of every
        // block that has one; distinct copies are orthogonal in the
        // multiplicity index, which is what kills the cross terms between
        // equivalent representations.
        for (int p = 0; p < povm.copies; ++p) {
            std::fill(psi.begin(), psi.end(), std::complex<double>(0.0));
            for (std::size_t b = 0; b < povm.block_js.size(); ++b) {
                if (p >= povm.multiplicities[b]) continue;
                const HalfInt j = povm.block_js[b];
                const auto column = wigner_D_column(j, povm.mB, node.dir);
                const double bj = std::sqrt(num_states(j) / povm.weight);
                const int base = offsets[b][static_cast<std::size_t>(p)];
                for (std::size_t i = 0; i < column.size(); ++i)
                    psi[static_cast<std::size_t>(base) + i] = bj * column[i];
            }
            sum.add_outer(psi, povm.weight * node.weight);
        }
    }
    // The identity is resolved only on blocks with j >= mB; for minimal mB
    // that is the whole space.
    return max_abs_deviation_from_identity(sum);
}

nlohmann::json to_json(const PovmSpec& povm) {
    nlohmann::json out;
    out["J2"] = povm.reference.J.twice();
    out["mB2"] = povm.reference.mB.twice();
    out["kind"] = povm.kind == PovmSpec::Kind::continuous ? "continuous" : "discrete";
    out["outcomes"] = nlohmann::json::array();
    for (const auto& outcome : povm.outcomes)
        out["outcomes"].push_back(
            {{"weight", outcome.weight}, {"theta", outcome.direction.theta}, {"phi", outcome.direction.phi}});
    return out;
}

PovmSpec povm_from_json(const nlohmann::json& j) {
    PovmSpec povm;
    povm.reference = reference_state(HalfInt::from_twice(j.at("J2").get<int>()),
                                     HalfInt::from_twice(j.at("mB2").get<int>()));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "continuous")
        povm.kind = PovmSpec::Kind::continuous;
    else if (kind == "discrete")
        povm.kind = PovmSpec::Kind::discrete;
    else
        throw std::invalid_argument("povm_from_json: unknown kind '" + kind + "'");
    for (const auto& item : j.at("outcomes"))
        povm.outcomes.push_back(
            {item.at("weight").get<double>(),
             Direction(item.at("theta").get<double>(), item.at("phi").get<double>())});
    return povm;
}

}  // namespace spindir
