#include "vmkdv/numerics.hpp"

#include "vmkdv/rational.hpp"

#include <cmath>
#include <sstream>

namespace vmkdv {

void Grid::validate() const {
    if (!(x1 > x0)) throw ConfigError("Grid: x1 must exceed x0");
    if (nx < 2) throw ConfigError("Grid: nx must be at least 2");
}

Grid default_grid() { return Grid{-15.0, 15.0, 3001}; }

VerificationReport VerificationReport::make(std::string name, double residual, double tolerance) {
    VerificationReport r;
    r.name = std::move(name);
    r.max_residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    return r;
}

// ---- finite differences ---------------------------------------------------------

std::vector<long double> fd_weights(int order, int radius) {
    // Fornberg's recursion on the offsets -radius..radius, carried out in
    // exact rational arithmetic and rounded once at the end.
    const int n = 2 * radius;          // last point index
    const int m = order;
    std::vector<std::vector<Rational>> c(
        static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(m + 1), 0));
    auto x = [radius](int i) { return Rational(i - radius); };

    Rational c1 = 1;
    Rational c4 = x(0);
    c[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        Rational c2 = 1;
        Rational c5 = c4;
        c4 = x(i);
        for (int j = 0; j < i; ++j) {
            const Rational c3 = x(i) - x(j);
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (Rational(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - Rational(k) * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }

    std::vector<long double> w(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = to_real<long double>(c[j][m]);
    return w;
}

int fd_radius(int order, int accuracy) {
    if (accuracy % 2 != 0) throw ConfigError("fd_radius: accuracy must be even");
    return (accuracy + order - 1) / 2;
}

SolutionField fd_derivative(const SolutionField& field, int order, int accuracy) {
    if (order < 1 || order > 5) throw ConfigError("fd_derivative: order must be in 1..5");
    if (accuracy < 4) throw ConfigError("fd_derivative: accuracy must be at least 4");
    field.grid.validate();
    const int radius = fd_radius(order, accuracy);
    const int nx = field.grid.nx;
    if (nx < 2 * radius + 1 + 2 * field.margin)
        throw GridTooSmallError("fd_derivative: grid too small for the stencil radius " +
                                std::to_string(radius));
    const std::vector<long double> w = fd_weights(order, radius);
    const long double hm = powl(static_cast<long double>(field.grid.h()), order);

    SolutionField out;
    out.grid = field.grid;
    out.provenance = field.provenance + ":d" + std::to_string(order);
    out.margin = field.margin + radius;
    out.samples = Eigen::MatrixXd::Zero(nx, field.samples.cols());
    for (int i = field.margin + radius; i < nx - field.margin - radius; ++i) {
        for (int j = 0; j < field.samples.cols(); ++j) {
            long double acc = 0.0L;
            for (int k = -radius; k <= radius; ++k)
                acc += w[static_cast<std::size_t>(k + radius)] *
                       static_cast<long double>(field.samples(i + k, j));
            out.samples(i, j) = static_cast<double>(acc / hm);
        }
    }
    return out;
}

// ---- samplers --------------------------------------------------------------------

namespace {

TimeVector shift(const TimeVector& times, int n, double delta) {
    TimeVector out = times;
    const auto it = times.entries().find(n);
    const double current = it == times.entries().end() ? 0.0 : it->second;
    out.set(n, current + delta);
    return out;
}

} // namespace

std::unique_ptr<SolutionSampler> SolitonSampler::shifted_time(int n, double delta) const {
    return std::make_unique<SolitonSampler>(solution_.params(), shift(solution_.times(), n, delta));
}

std::unique_ptr<SolutionSampler> ScalarBreatherSampler::shifted_time(int n, double delta) const {
    return std::make_unique<ScalarBreatherSampler>(mu_, shift(times_, n, delta));
}

SolutionField sample_solution(const SolutionSampler& sampler, const Grid& grid) {
    grid.validate();
    SolutionField field;
    field.grid = grid;
    field.provenance = sampler.provenance();
    field.samples = Eigen::MatrixXd(grid.nx, sampler.components());
    for (int i = 0; i < grid.nx; ++i) {
        const auto v = sampler.value(static_cast<long double>(grid.x(i)));
        for (int j = 0; j < sampler.components(); ++j)
            field.samples(i, j) = static_cast<double>(v[static_cast<std::size_t>(j)]);
    }
    return field;
}

// ---- flow residual -----------------------------------------------------------------

VerificationReport flow_residual(const SolutionSampler& sampler, const Grid& grid,
                                 FlowTable& flows, int n, double tolerance,
                                 const ResidualOptions& options) {
    grid.validate();
    const VectorPoly& flow = flows.flow(n);
    const int n_comp = sampler.components();
    const int max_order = std::max(1, flow.max_order());

    std::vector<std::vector<long double>> weights(static_cast<std::size_t>(max_order) + 1);
    std::vector<int> radii(static_cast<std::size_t>(max_order) + 1, 0);
    int reach = 0;
    for (int o = 1; o <= max_order; ++o) {
        radii[static_cast<std::size_t>(o)] = fd_radius(o, options.accuracy);
        weights[static_cast<std::size_t>(o)] = fd_weights(o, radii[static_cast<std::size_t>(o)]);
        reach = std::max(reach, radii[static_cast<std::size_t>(o)]);
    }
    if (grid.nx < 2 * reach + 1)
        throw GridTooSmallError("flow_residual: grid too small for the jet stencils");

    const long double h = static_cast<long double>(grid.x1 - grid.x0) / (grid.nx - 1);
    std::vector<long double> hm(static_cast<std::size_t>(max_order) + 1, 1.0L);
    for (int o = 1; o <= max_order; ++o) hm[static_cast<std::size_t>(o)] = powl(h, o);

    // sample u once
    std::vector<std::vector<long double>> u(static_cast<std::size_t>(grid.nx));
    for (int i = 0; i < grid.nx; ++i)
        u[static_cast<std::size_t>(i)] = sampler.value(static_cast<long double>(grid.x0) + h * i);

    // time derivative per interior point
    std::unique_ptr<SolutionSampler> plus, minus;
    if (options.method == TimeDerivativeMethod::fd) {
        plus = sampler.shifted_time(n, options.delta);
        minus = sampler.shifted_time(n, -options.delta);
    }

    long double worst = 0.0L;
    Jet<long double> jet(static_cast<std::size_t>(max_order) + 1,
                         std::vector<long double>(static_cast<std::size_t>(n_comp)));
    for (int i = reach; i < grid.nx - reach; ++i) {
        const long double x = static_cast<long double>(grid.x0) + h * i;
        jet[0] = u[static_cast<std::size_t>(i)];
        for (int o = 1; o <= max_order; ++o) {
            const int r = radii[static_cast<std::size_t>(o)];
            const auto& w = weights[static_cast<std::size_t>(o)];
            for (int j = 0; j < n_comp; ++j) {
                long double acc = 0.0L;
                for (int k = -r; k <= r; ++k)
                    acc += w[static_cast<std::size_t>(k + r)] *
                           u[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j)];
                jet[static_cast<std::size_t>(o)][static_cast<std::size_t>(j)] =
                    acc / hm[static_cast<std::size_t>(o)];
            }
        }
        const std::vector<long double> rhs = evaluate(flow, jet, n_comp);

        std::vector<long double> dt;
        if (options.method == TimeDerivativeMethod::analytic_xi) {
            dt = sampler.time_derivative(x, n);
        } else {
            const auto up = plus->value(x);
            const auto um = minus->value(x);
            dt.resize(static_cast<std::size_t>(n_comp));
            for (int j = 0; j < n_comp; ++j)
                dt[static_cast<std::size_t>(j)] =
                    (up[static_cast<std::size_t>(j)] - um[static_cast<std::size_t>(j)]) /
                    (2.0L * static_cast<long double>(options.delta));
        }
        for (int j = 0; j < n_comp; ++j)
            worst = std::max(worst, fabsl(dt[static_cast<std::size_t>(j)] -
                                          rhs[static_cast<std::size_t>(j)]));
    }

    VerificationReport report = VerificationReport::make(
        "flow_residual(n=" + std::to_string(n) + ", " + sampler.provenance() + ")",
        static_cast<double>(worst), tolerance);
    report.metadata["provenance"] = sampler.provenance();
    report.metadata["n"] = std::to_string(n);
    report.metadata["nx"] = std::to_string(grid.nx);
    report.metadata["h"] = std::to_string(grid.h());
    report.metadata["accuracy"] = std::to_string(options.accuracy);
    report.metadata["method"] =
        options.method == TimeDerivativeMethod::analytic_xi ? "analytic_xi" : "fd";
    return report;
}

// ---- matrix identities ----------------------------------------------------------------

VerificationReport matrix_identity_check(const std::function<Eigen::MatrixXcd(Complex)>& builder,
                                         const std::vector<MatrixRelation>& relations,
                                         const std::vector<Complex>& samples, double tolerance,
                                         const std::string& name) {
    double worst = 0.0;
    for (const Complex lambda : samples) {
        const Eigen::MatrixXcd m = builder(lambda);
        const Eigen::Index dim = m.rows();
        for (const MatrixRelation rel : relations) {
            double dev = 0.0;
            switch (rel) {
            case MatrixRelation::orthogonality:
                dev = (m * m.transpose() - Eigen::MatrixXcd::Identity(dim, dim))
                          .cwiseAbs()
                          .maxCoeff();
                break;
            case MatrixRelation::conjugation:
                dev = (builder(std::conj(lambda)).conjugate() - m).cwiseAbs().maxCoeff();
                break;
            case MatrixRelation::parity: {
                Eigen::MatrixXcd g = builder(-lambda);
                g.row(0) = -g.row(0);
                g.col(0) = -g.col(0);
                dev = (g - m).cwiseAbs().maxCoeff();
                break;
            }
            }
            worst = std::max(worst, dev);
        }
    }
    return VerificationReport::make(name, worst, tolerance);
}

// ---- convergence ------------------------------------------------------------------------

ConvergenceStudy convergence_study(const std::function<double(double)>& residual_op,
                                   const std::vector<double>& h_values) {
    if (h_values.size() < 2) throw ConfigError("convergence_study: need at least two h values");
    ConvergenceStudy study;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const double h : h_values) {
        const double res = residual_op(h);
        study.points.emplace_back(h, res);
        const double lx = std::log(h);
        const double ly = std::log(std::max(res, 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const auto n = static_cast<double>(h_values.size());
    study.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return study;
}

} // namespace vmkdv
