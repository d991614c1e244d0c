#include "vmkdv/numerics.hpp"

#include "doctest.h"

#include <cmath>

using namespace vmkdv;

namespace {

SolitonParams sech_soliton(double mu) {
    SolitonParams p;
    p.mu = mu;
    p.c0 = 0.0;
    p.c = Eigen::VectorXd::Constant(1, 1.0);
    return p;
}

// Sampler wrapper scaling a genuine solution; the result solves nothing.
class PerturbedSampler final : public SolutionSampler {
  public:
    PerturbedSampler(const SolutionSampler& base, double factor) : base_(base), factor_(factor) {}
    int components() const override { return base_.components(); }
    std::vector<long double> value(long double x) const override {
        auto v = base_.value(x);
        for (auto& e : v) e *= factor_;
        return v;
    }
    std::vector<long double> time_derivative(long double x, int n) const override {
        auto v = base_.time_derivative(x, n);
        for (auto& e : v) e *= factor_;
        return v;
    }
    std::unique_ptr<SolutionSampler> shifted_time(int n, double delta) const override {
        throw Error("PerturbedSampler: fd time derivative not supported");
        (void)n;
        (void)delta;
    }
    std::string provenance() const override { return "perturbed"; }

  private:
    const SolutionSampler& base_;
    double factor_;
};

} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS((Grid{1.0, -1.0, 100}).validate(), ConfigError);
    CHECK_THROWS_AS((Grid{0.0, 1.0, 1}).validate(), ConfigError);
    const Grid g = default_grid();
    CHECK(g.nx == 3001);
    CHECK(g.h() == doctest::Approx(0.01));
}

TEST_CASE("fd weights match the classical tables") {
    const auto d1 = fd_weights(1, 2);
    const std::vector<double> d1_expected = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
    for (std::size_t i = 0; i < d1.size(); ++i)
        CHECK(static_cast<double>(d1[i]) == doctest::Approx(d1_expected[i]).epsilon(1e-15));

    const auto d2 = fd_weights(2, 2);
    const std::vector<double> d2_expected = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
    for (std::size_t i = 0; i < d2.size(); ++i)
        CHECK(static_cast<double>(d2[i]) == doctest::Approx(d2_expected[i]).epsilon(1e-15));

    // any stencil annihilates constants and reproduces x^order exactly
    for (int order = 1; order <= 5; ++order) {
        const int r = fd_radius(order, 8);
        const auto w = fd_weights(order, r);
        long double sum = 0.0L, moment = 0.0L;
        long double factorial = 1.0L;
        for (int k = 2; k <= order; ++k) factorial *= k;
        for (int k = -r; k <= r; ++k) {
            sum += w[static_cast<std::size_t>(k + r)];
            moment += w[static_cast<std::size_t>(k + r)] * powl(static_cast<long double>(k), order);
        }
        CHECK(std::abs(static_cast<double>(sum)) < 1e-14);
        CHECK(static_cast<double>(moment) == doctest::Approx(static_cast<double>(factorial)));
    }
}

TEST_CASE("fd radius gives the requested accuracy") {
    CHECK(fd_radius(1, 4) == 2);
    CHECK(fd_radius(3, 4) == 3);
    CHECK(fd_radius(5, 4) == 4); // the 9-point stencil
    CHECK(fd_radius(5, 8) == 6);
}

TEST_CASE("fd_derivative of sin is cos to fourth order") {
    Grid g{-3.0, 3.0, 601};
    SolutionField field;
    field.grid = g;
    field.samples = Eigen::MatrixXd(g.nx, 1);
    for (int i = 0; i < g.nx; ++i) field.samples(i, 0) = std::sin(g.x(i));
    const SolutionField d1 = fd_derivative(field, 1);
    double worst = 0.0;
    for (int i = d1.margin; i < g.nx - d1.margin; ++i)
        worst = std::max(worst, std::abs(d1.samples(i, 0) - std::cos(g.x(i))));
    CHECK(worst < 1e-8); // h = 1e-2, fourth order
}

TEST_CASE("fd_derivative order 3 matches the soliton's analytic derivative") {
    SolitonSampler sampler(sech_soliton(1.0), TimeVector(0.0));
    Grid g{-5.0, 5.0, 1001};
    const SolutionField field = sample_solution(sampler, g);
    const SolutionField d3 = fd_derivative(field, 3);
    double worst = 0.0;
    for (int i = d3.margin; i < g.nx - d3.margin; ++i) {
        const auto jet = sampler.solution().jet(g.x(i), 3);
        worst = std::max(worst, std::abs(d3.samples(i, 0) - static_cast<double>(jet[3][0])));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("fd_derivative of a constant field is exactly zero") {
    SolutionField field;
    field.grid = Grid{-1.0, 1.0, 51};
    field.samples = Eigen::MatrixXd::Constant(51, 2, 3.7);
    for (int order = 1; order <= 5; ++order) {
        const SolutionField d = fd_derivative(field, order);
        CHECK(d.samples.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("fd_derivative margins and grid-size errors") {
    SolutionField field;
    field.grid = Grid{-1.0, 1.0, 13};
    field.samples = Eigen::MatrixXd::Zero(13, 1);
    const SolutionField d = fd_derivative(field, 3, 4); // radius 3
    CHECK(d.margin == 3);
    // boundary rows are untouched (zero), interior computed
    field.grid.nx = 6;
    field.samples = Eigen::MatrixXd::Zero(6, 1);
    CHECK_THROWS_AS(fd_derivative(field, 3, 4), GridTooSmallError);
    CHECK_THROWS_AS(fd_derivative(field, 6), ConfigError);
}

TEST_CASE("exactly minimal grids have one residual point") {
    FlowTable flows;
    SolitonSampler sampler(sech_soliton(0.8), TimeVector(0.0));
    ResidualOptions opts;
    opts.accuracy = 4;
    // flow(1) needs u3: radius 3 at accuracy 4 -> 7 points minimum
    Grid minimal{-0.3, 0.3, 7};
    CHECK_NOTHROW(flow_residual(sampler, minimal, flows, 1, 1.0, opts));
    Grid too_small{-0.3, 0.3, 6};
    CHECK_THROWS_AS(flow_residual(sampler, too_small, flows, 1, 1.0, opts), GridTooSmallError);
}

TEST_CASE("soliton flow residuals are small for n = 1 and n = 2") {
    FlowTable flows;
    const Grid g = default_grid();
    SolitonParams params = sech_soliton(1.0);
    TimeVector t(0.0);
    t.set(1, 0.3);
    {
        SolitonSampler sampler(params, t);
        const auto rep = flow_residual(sampler, g, flows, 1, 1e-6);
        CHECK(rep.pass);
        CHECK(rep.max_residual < 1e-8);
    }
    {
        TimeVector t5 = t;
        t5.set(2, 0.1);
        SolitonSampler sampler(params, t5);
        const auto rep = flow_residual(sampler, g, flows, 2, 1e-5);
        CHECK(rep.pass);
    }
}

TEST_CASE("fd and analytic time derivatives agree") {
    FlowTable flows;
    const Grid g{-10.0, 10.0, 2001};
    SolitonSampler sampler(sech_soliton(1.2), TimeVector(0.0).set(1, 0.2));
    ResidualOptions fd_opts;
    fd_opts.method = TimeDerivativeMethod::fd;
    fd_opts.delta = 1e-5;
    const auto analytic = flow_residual(sampler, g, flows, 1, 1e-6);
    const auto fd = flow_residual(sampler, g, flows, 1, 1e-6, fd_opts);
    CHECK(analytic.pass);
    CHECK(fd.pass);
}

TEST_CASE("a perturbed field fails the residual check") {
    FlowTable flows;
    const Grid g{-10.0, 10.0, 1001};
    SolitonSampler base(sech_soliton(1.0), TimeVector(0.0));
    PerturbedSampler perturbed(base, 1.05);
    const auto rep = flow_residual(perturbed, g, flows, 1, 1e-6);
    CHECK(!rep.pass);
    CHECK(rep.max_residual > 1e-3);
}

TEST_CASE("hand-coded vmKdV right-hand side agrees with the symbolic flow") {
    FlowTable flows;
    const Grid g{-8.0, 8.0, 1601};
    SolitonSampler sampler(sech_soliton(0.9), TimeVector(0.0));
    const SolutionField field = sample_solution(sampler, g);
    const SolutionField d1 = fd_derivative(field, 1, 8);
    const SolutionField d3 = fd_derivative(field, 3, 8);
    double worst = 0.0;
    for (int i = d3.margin; i < g.nx - d3.margin; ++i) {
        const double u = field.samples(i, 0);
        const double hand = -d3.samples(i, 0) - 1.5 * u * u * d1.samples(i, 0);
        Jet<double> jet = {{u}, {d1.samples(i, 0)}, {0.0}, {d3.samples(i, 0)}};
        const auto sym = evaluate(flows.flow(1), jet, 1);
        worst = std::max(worst, std::abs(hand - sym[0]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("convergence study recovers the stencil order and flags non-solutions") {
    FlowTable flows;
    SolitonSampler sampler(sech_soliton(1.0), TimeVector(0.0).set(1, 0.15));
    const auto genuine = [&](double h) {
        Grid g{-15.0, 15.0, static_cast<int>(std::lround(30.0 / h)) + 1};
        return flow_residual(sampler, g, flows, 1, 1.0).max_residual;
    };
    const ConvergenceStudy study = convergence_study(genuine, {0.1, 0.05, 0.025});
    CHECK(study.slope > 3.5);
    CHECK(study.points.size() == 3);

    PerturbedSampler perturbed(sampler, 1.02);
    const auto fake = [&](double h) {
        Grid g{-15.0, 15.0, static_cast<int>(std::lround(30.0 / h)) + 1};
        return flow_residual(perturbed, g, flows, 1, 1.0).max_residual;
    };
    CHECK(convergence_study(fake, {0.1, 0.05, 0.025}).slope < 1.0);
    CHECK_THROWS_AS(convergence_study(genuine, {0.1}), ConfigError);
}

TEST_CASE("soliton tails decay exponentially at the domain edges") {
    const double mu = 0.8;
    SolitonSampler sampler(sech_soliton(mu), TimeVector(0.0));
    const Grid g = default_grid();
    const SolutionField field = sample_solution(sampler, g);
    for (const int i : {0, g.nx - 1}) {
        const double xi_val = mu * g.x(i);
        CHECK(std::abs(field.samples(i, 0)) <= 4.0 * mu * std::exp(-std::abs(xi_val)) + 1e-300);
    }
}

TEST_CASE("matrix identity check detects injected faults") {
    const auto good = [](Complex) { return Eigen::MatrixXcd::Identity(3, 3).eval(); };
    const auto bad = [](Complex) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
        m(0, 1) = Complex(0.2, 0.0); // not orthogonal
        return m;
    };
    const std::vector<Complex> samples = {{1.0, 0.5}};
    CHECK(matrix_identity_check(good, {MatrixRelation::orthogonality}, samples, 1e-10, "good").pass);
    CHECK(!matrix_identity_check(bad, {MatrixRelation::orthogonality}, samples, 1e-10, "bad").pass);
}
