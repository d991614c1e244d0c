#include "vmkdv/hierarchy.hpp"
#include "vmkdv/solutions.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace vmkdv;

namespace {

Jet<double> random_jet(int max_order, int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Jet<double> jet(static_cast<std::size_t>(max_order) + 1,
                    std::vector<double>(static_cast<std::size_t>(n)));
    for (auto& level : jet)
        for (auto& v : level) v = dist(rng);
    return jet;
}

} // namespace

TEST_CASE("recursion operator reproduces the vmKdV flow") {
    const VectorPoly got = recursion_apply(VectorPoly::u(1));
    CHECK(to_string(got) == "-u3 - 3/2*<u0,u0>*u1");
}

TEST_CASE("recursion operator reproduces the t5 flow coefficients") {
    FlowTable table;
    const VectorPoly& t5 = table.flow(2);
    CHECK(t5.coeff(5) == ScalarPoly::one());
    CHECK(t5.coeff(3) == Rational(5, 2) * ScalarPoly::pairing(0, 0));
    CHECK(t5.coeff(2) == Rational(5) * ScalarPoly::pairing(0, 1));
    ScalarPoly c1 = Rational(5) * ScalarPoly::pairing(0, 2);
    c1 += Rational(5, 2) * ScalarPoly::pairing(1, 1);
    c1 += Rational(15, 8) * (ScalarPoly::pairing(0, 0) * ScalarPoly::pairing(0, 0));
    CHECK(t5.coeff(1) == c1);
    CHECK(t5.terms().size() == 4);
}

TEST_CASE("recursion operator is linear at zero") {
    CHECK(recursion_apply(VectorPoly::zero()).is_zero());
}

TEST_CASE("flows are homogeneous of weight 2n+2") {
    FlowTable table;
    for (int n = 0; n <= 3; ++n) CHECK(homogeneous_weight(table.flow(n)) == 2 * n + 2);
}

TEST_CASE("flow table caps the recursion depth") {
    FlowTable table(2);
    CHECK_NOTHROW(table.flow(2));
    CHECK_THROWS_AS(table.flow(3), Error);
}

TEST_CASE("U(lambda) blocks match the paper form") {
    const LaxMatrix u = lax_u();
    CHECK(u.degree() == 1);
    CHECK(u.coeff(1).a == ScalarPoly::one());
    CHECK(u.coeff(1).v1.is_zero());
    CHECK(u.coeff(1).v2.is_zero());
    CHECK(u.coeff(1).w.is_zero());
    CHECK(u.coeff(0).a.is_zero());
    CHECK(u.coeff(0).v2 == VectorPoly::u(0));
}

TEST_CASE("numeric U(lambda) is skew-symmetric") {
    const Jet<double> jet = {{1.0, 0.0}};
    const Eigen::MatrixXcd m = lax_matrix_value(lax_u(), jet, 2, Complex(2.0, 0.0));
    CHECK((m + m.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(m(0, 1) - Complex(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(m(1, 2) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("V1 = U and the V3 recursion matches the printed blocks") {
    FlowTable table;
    CHECK(table.lax_v(0) == lax_u());

    LaxCoeff j;
    j.a = ScalarPoly::one();
    LaxCoeff u;
    u.v2 = VectorPoly::u(0);
    const LaxCoeff dxu = d_x(u);
    const ScalarPoly half_norm = Rational(1, 2) * ScalarPoly::pairing(0, 0);
    LaxMatrix expected = lax_u().shifted(2);
    expected.add_coeff(1, -(commutator(j, dxu) + half_norm * j));
    expected.add_coeff(0, -d_x(dxu) - half_norm * u + commutator(dxu, u));
    CHECK(table.lax_v(1) == expected);
}

TEST_CASE("V_{2n+1} structure: degree, leading block, parity") {
    FlowTable table;
    for (int n = 0; n <= 3; ++n) {
        const LaxMatrix& v = table.lax_v(n);
        CHECK(v.degree() == 2 * n + 1);
        CHECK(v.coeff(2 * n + 1).a == ScalarPoly::one()); // J
        CHECK(v.coeff(2 * n + 1).v1.is_zero());
        CHECK(reduction_parity_ok(v));
    }
}

TEST_CASE("zero curvature holds exactly for n = 1, 2") {
    FlowTable table;
    CHECK(zero_curvature_residual(table, 1).is_zero());
    CHECK(zero_curvature_residual(table, 2).is_zero());
}

TEST_CASE("a corrupted flow coefficient breaks zero curvature at degree 0") {
    // replace 3/2 by 1 in the vmKdV flow
    VectorPoly bad_flow = -VectorPoly::u(3);
    bad_flow -= ScalarPoly::pairing(0, 0) * VectorPoly::u(1);
    FlowTable table;
    const LaxMatrix u_lambda = lax_u();
    const LaxMatrix residual = evolutionary_derivative(u_lambda, bad_flow) -
                               d_x(table.lax_v(1)) + commutator(u_lambda, table.lax_v(1));
    CHECK(!residual.is_zero());
    CHECK(!residual.coeff(0).is_zero());
}

TEST_CASE("symbolically-zero curvature evaluates to exact numeric zero") {
    FlowTable table;
    const LaxMatrix residual = zero_curvature_residual(table, 1);
    const Jet<double> jet = random_jet(4, 3, 41);
    const Eigen::MatrixXcd m = lax_matrix_value(residual, jet, 3, Complex(0.7, 1.3));
    CHECK(m.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("reduction group relations hold numerically for U and V3") {
    FlowTable table;
    const Jet<double> jet = random_jet(4, 3, 43);
    const std::vector<Complex> samples = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 2.0}};
    for (const LaxMatrix& x : {lax_u(), table.lax_v(1)}) {
        const auto dev = check_reduction_group(x, jet, 3, samples);
        CHECK(dev.max() < 1e-12);
    }
}

TEST_CASE("an injected parity fault is detected") {
    LaxMatrix broken = lax_u();
    LaxCoeff fault;
    fault.v1 = VectorPoly::u(0); // v1 at an even degree violates Q X(-l) Q = X(l)
    broken.add_coeff(0, fault);
    CHECK(!reduction_parity_ok(broken));
    const Jet<double> jet = random_jet(1, 2, 47);
    const auto dev = check_reduction_group(broken, jet, 2, {{1.0, 0.0}, {0.5, 0.5}});
    CHECK(dev.parity > 0.1);
    CHECK(dev.skew < 1e-12); // the matrix itself stays skew-symmetric
}

TEST_CASE("flow(3) matches the t7 derivative of a dressed soliton") {
    FlowTable table;
    SolitonParams params{1.1, 0.2, Eigen::VectorXd(1)};
    params.c = Eigen::VectorXd::Constant(1, std::sqrt(1.0 - 0.04));
    TimeVector times(0.0);
    times.set(1, 0.05);
    times.set(3, 0.02); // t7 active
    const SolitonSolution sol(params, times);
    for (const double x : {-1.5, 0.3, 0.9}) {
        const auto jet = sol.jet(x, 7);
        Jet<double> djet(jet.size());
        for (std::size_t k = 0; k < jet.size(); ++k)
            djet[k] = {static_cast<double>(jet[k][0])};
        const auto rhs = evaluate(table.flow(3), djet, 1);

        const double delta = 1e-4;
        const SolitonSolution plus(params, TimeVector(times).set(3, 0.02 + delta));
        const SolitonSolution minus(params, TimeVector(times).set(3, 0.02 - delta));
        const double dt = static_cast<double>((plus.value(x)[0] - minus.value(x)[0]) / (2 * delta));
        CHECK(dt == doctest::Approx(rhs[0]).epsilon(1e-6));
    }
}

TEST_CASE("evolutionary derivative of U uses the requested flow") {
    FlowTable table;
    const LaxMatrix dt_u = evolutionary_derivative(lax_u(), table.flow(1));
    CHECK(dt_u.coeff(0).v2 == table.flow(1));
    CHECK(dt_u.coeff(1).is_zero());
}
