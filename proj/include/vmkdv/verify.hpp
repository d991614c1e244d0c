#pragma once

// The acceptance suite: golden symbolic checks against the printed flows and
// Lax matrices, exact zero-curvature and commutativity checks, the formal
// integration round trip with its variational-derivative oracle, and the
// numeric identity/residual batteries for the closed-form solutions.

#include "vmkdv/hierarchy.hpp"
#include "vmkdv/numerics.hpp"

#include <string>
#include <vector>

namespace vmkdv::verify {

/// Variational derivative (Euler operator) of a scalar differential
/// polynomial: sum_k (-D_x)^k (d p / d u_k). Annihilates total derivatives
/// and nothing else; used as the independent exactness oracle for
/// d_x_inverse, which never calls it.
VectorPoly euler_operator(const ScalarPoly& p);

/// Gradient of p with respect to the vector u_k.
VectorPoly partial_gradient(const ScalarPoly& p, int k);

struct Options {
    bool quick = false;   // skip the n = 3 symbolic zero-curvature check
    unsigned seed = 20240811;
    Grid grid;            // default desk-scale grid

    Options() : grid(default_grid()) {}
};

struct Criterion {
    int number = 0;
    std::string title;
    std::vector<VerificationReport> checks;

    bool pass() const;
    /// Worst residual / tolerance ratio over the checks (0 when all exact).
    double worst_ratio() const;
};

/// Runs the full acceptance suite in order. Criteria are independent; a
/// failure in one does not stop the others.
std::vector<Criterion> run_acceptance(FlowTable& flows, const Options& options = {});

// Individual criteria (exposed for targeted tests and the CLI).
Criterion golden_flow_t3(FlowTable& flows);
Criterion golden_flow_t5(FlowTable& flows);
Criterion golden_lax_v3(FlowTable& flows);
Criterion exact_zero_curvature(FlowTable& flows, bool quick);
Criterion commuting_flows(FlowTable& flows);
Criterion dx_inverse_round_trip(unsigned seed);
Criterion soliton_flow_residuals(FlowTable& flows, const Grid& grid, unsigned seed);
Criterion dressing_path_identity(unsigned seed);
Criterion darboux_identities(unsigned seed);
Criterion breather_consistency(FlowTable& flows, const Grid& grid, unsigned seed);
Criterion backlund_checks(unsigned seed);
Criterion symmetry_suite(unsigned seed);

} // namespace vmkdv::verify
