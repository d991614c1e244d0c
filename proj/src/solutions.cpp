#include "vmkdv/solutions.hpp"

#include <algorithm>
#include <cmath>

namespace vmkdv {

namespace {

constexpr double kAxisTolerance = 1e-8;
constexpr double kPoleTolerance = 1e-12;

// Q = diag(-1, 1, ..., 1) acting from the left: negates the first row.
Eigen::MatrixXcd q_conjugate(const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out = m;
    out.row(0) = -out.row(0);
    out.col(0) = -out.col(0);
    return out;
}

Eigen::MatrixXcd q_left(const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out = m;
    out.row(0) = -out.row(0);
    return out;
}

long double pow_odd(long double base, int n) {
    // base^{2n+1}
    long double out = base;
    for (int i = 0; i < n; ++i) out *= base * base;
    return out;
}

std::complex<long double> pow_odd(std::complex<long double> base, int n) {
    std::complex<long double> out = base;
    for (int i = 0; i < n; ++i) out *= base * base;
    return out;
}

} // namespace

// ---- TimeVector ----------------------------------------------------------------

TimeVector& TimeVector::set(int n, double value) {
    if (n < 0) throw ConfigError("TimeVector: negative flow index");
    entries_[n] = value;
    return *this;
}

TimeVector TimeVector::with_x(double x) const {
    TimeVector out = *this;
    out.entries_[0] = x;
    return out;
}

// ---- phase and fundamental solution ----------------------------------------------

Complex xi(const TimeVector& times, Complex mu, XiConvention variant) {
    Complex sum = 0.0;
    for (const auto& [n, t] : times.entries()) {
        Complex term = std::pow(mu, 2 * n + 1) * t;
        if (variant == XiConvention::soliton && n % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

Eigen::MatrixXcd fundamental_solution(const TimeVector& times, Complex lambda, int n_components) {
    const Complex zeta = xi(times, lambda, XiConvention::breather);
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Identity(n_components + 2, n_components + 2);
    psi(0, 0) = std::cos(zeta);
    psi(0, 1) = std::sin(zeta);
    psi(1, 0) = -std::sin(zeta);
    psi(1, 1) = std::cos(zeta);
    return psi;
}

// ---- soliton -------------------------------------------------------------------

void SolitonParams::validate() const {
    if (!(mu > 0.0)) throw ConfigError("SolitonParams: mu must be positive");
    if (c.size() < 1) throw ConfigError("SolitonParams: c must have at least one component");
    const double sphere = c0 * c0 + c.squaredNorm();
    if (std::abs(sphere - 1.0) > 1e-9)
        throw ConfigError("SolitonParams: c0^2 + |c|^2 = 1 violated (got " +
                          std::to_string(sphere) + ")");
}

Eigen::VectorXcd soliton_q(const SolitonParams& params, const TimeVector& times) {
    params.validate();
    const double xi_val = std::real(xi(times, Complex(params.mu, 0.0), XiConvention::soliton));
    const double ch = std::cosh(xi_val);
    const double sh = std::sinh(xi_val);
    const int n = params.components();
    Eigen::VectorXcd q(n + 2);
    q(0) = Complex(0.0, ch + params.c0 * sh);
    q(1) = Complex(params.c0 * ch + sh, 0.0);
    for (int j = 0; j < n; ++j) q(j + 2) = Complex(params.c(j), 0.0);
    return q;
}

Eigen::MatrixXcd projector(const Eigen::VectorXcd& q) {
    Complex den = -q(0) * q(0);
    for (Eigen::Index k = 1; k < q.size(); ++k) den += q(k) * q(k);
    const double scale = std::max(1.0, q.squaredNorm());
    if (std::abs(den) <= 1e-12 * scale)
        throw DegenerateDenominatorError("projector: q^T Q q vanishes (lightlike q)");
    Eigen::VectorXcd qq = q;
    qq(0) = -qq(0); // Q q
    return (qq * q.transpose()) / den;
}

Eigen::MatrixXcd soliton_darboux(const SolitonParams& params, const TimeVector& times,
                                 Complex lambda) {
    params.validate();
    const Complex pole(0.0, params.mu);
    const double scale = std::max(1.0, params.mu);
    if (std::abs(lambda - pole) < kPoleTolerance * scale ||
        std::abs(lambda + pole) < kPoleTolerance * scale)
        throw PoleEvaluationError("soliton_darboux: lambda at a pole +-i mu");
    const Eigen::MatrixXcd p = projector(soliton_q(params, times));
    const int m = static_cast<int>(p.rows());
    const Complex two_imu(0.0, 2.0 * params.mu);
    return Eigen::MatrixXcd::Identity(m, m) + (two_imu / (lambda - pole)) * p -
           (two_imu / (lambda + pole)) * q_conjugate(p);
}

Eigen::VectorXd one_soliton(const SolitonParams& params, const TimeVector& times) {
    params.validate();
    const double xi_val = std::real(xi(times, Complex(params.mu, 0.0), XiConvention::soliton));
    const double den = std::cosh(xi_val) + params.c0 * std::sinh(xi_val);
    return (2.0 * params.mu / den) * params.c;
}

Eigen::VectorXd dressing_apply(const Eigen::VectorXcd& q, double mu, const Eigen::VectorXd& u) {
    const int n = static_cast<int>(q.size()) - 2;
    if (u.size() != n) throw ConfigError("dressing_apply: background dimension mismatch");
    Complex den = -q(0) * q(0);
    for (Eigen::Index k = 1; k < q.size(); ++k) den += q(k) * q(k);
    if (std::abs(den) <= 1e-12 * std::max(1.0, q.squaredNorm()))
        throw DegenerateDenominatorError("dressing_apply: -q_1^2 + sum q_k^2 vanishes");
    const Complex four_imu(0.0, 4.0 * mu);
    Eigen::VectorXd out(n);
    double max_imag = 0.0;
    for (int j = 0; j < n; ++j) {
        const Complex value = u(j) - four_imu * q(0) * q(j + 2) / den;
        max_imag = std::max(max_imag, std::abs(std::imag(value)));
        out(j) = std::real(value);
    }
    if (max_imag > 1e-10)
        throw NonRealOutputError("dressing_apply: dressed field has imaginary residue " +
                                 std::to_string(max_imag));
    return out;
}

// ---- Backlund ---------------------------------------------------------------------

BacklundReport backlund_residual(const std::vector<Eigen::VectorXd>& u,
                                 const std::vector<Eigen::VectorXd>& u_x,
                                 const std::vector<Eigen::VectorXd>& u_tilde,
                                 const std::vector<Eigen::VectorXd>& u_tilde_x, double mu,
                                 BacklundBranch branch, bool strict) {
    if (u.size() != u_x.size() || u.size() != u_tilde.size() || u.size() != u_tilde_x.size())
        throw ConfigError("backlund_residual: sample arrays must share one length");
    if (!(mu > 0.0)) throw ConfigError("backlund_residual: mu must be positive");

    BacklundReport report;
    for (std::size_t p = 0; p < u.size(); ++p) {
        const Eigen::VectorXd diff = u_tilde[p] - u[p];
        const Eigen::VectorXd diff_x = u_tilde_x[p] - u_x[p];
        const Eigen::VectorXd sum = u_tilde[p] + u[p];
        const double a_norm2 = diff.squaredNorm() / (4.0 * mu * mu);
        const double slack = 1.0 - a_norm2;
        if (slack < -1e-9 && strict)
            throw ConstraintViolationError("backlund_residual: |u~ - u| > 2 mu at a sample point");
        const double a0_sq = std::max(slack, 0.0);
        report.constraint_deviation = std::max(report.constraint_deviation, a0_sq - slack);
        const double a0 = std::sqrt(a0_sq);

        double best = std::numeric_limits<double>::infinity();
        auto try_branch = [&](double a0_signed) {
            const double res = (diff_x + mu * a0_signed * sum).cwiseAbs().maxCoeff();
            best = std::min(best, res);
        };
        if (branch != BacklundBranch::minus) try_branch(a0);
        if (branch != BacklundBranch::plus) try_branch(-a0);
        report.ode_residual = std::max(report.ode_residual, best);
    }
    return report;
}

// ---- breather ------------------------------------------------------------------------

void BreatherParams::validate() const {
    const int n = components();
    if (n < 1) throw ConfigError("BreatherParams: C must have at least 3 rows");
    if (s < 1 || s != C.cols()) throw ConfigError("BreatherParams: C must have s columns");
    if (s > n + 1) throw ConfigError("BreatherParams: rank s exceeds N+1");
    if (std::abs(mu.real()) < kAxisTolerance || std::abs(mu.imag()) < kAxisTolerance)
        throw AxisPoleError("BreatherParams: mu too close to the real or imaginary axis");
    const double scale = std::max(1.0, C.squaredNorm());
    const double isotropy = (C.transpose() * C).cwiseAbs().maxCoeff();
    if (isotropy > 1e-10 * scale)
        throw ConfigError("BreatherParams: C^T C = 0 violated (deviation " +
                          std::to_string(isotropy) + ")");
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(C);
    if (qr.rank() < s) throw ConfigError("BreatherParams: C is column-rank deficient");
}

BreatherFGH breather_fgh(const Eigen::MatrixXcd& q, Complex mu) {
    if (std::abs(mu.real()) < kAxisTolerance || std::abs(mu.imag()) < kAxisTolerance)
        throw AxisPoleError("breather_fgh: mu on the real or imaginary axis");
    BreatherFGH out;
    const Eigen::MatrixXcd qq = q_left(q);
    out.F = (q.transpose() * qq) / (2.0 * mu);
    out.G = (q.adjoint() * q) / (mu - std::conj(mu));
    out.H = (q.adjoint() * qq) / (mu + std::conj(mu));
    return out;
}

BreatherBCD breather_bcd(const BreatherFGH& fgh) {
    const auto& [f, g, h] = fgh;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu_h(h);
    if (!lu_h.isInvertible()) throw SingularHError("breather_bcd: H is singular");
    const Eigen::MatrixXcd h_inv = lu_h.inverse();
    const Eigen::MatrixXcd h_star_inv = h_inv.conjugate();

    const Eigen::MatrixXcd d_defining =
        f * h_inv * f.conjugate() + g.conjugate() * h_star_inv * g.conjugate() - h.conjugate();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu_d(d_defining);
    if (!lu_d.isInvertible())
        throw SingularDError("breather_bcd: F H^{-1} F* + G* H*^{-1} G* - H* is singular");

    BreatherBCD out;
    out.D = -lu_d.inverse();
    out.B = out.D * g.conjugate() * h_star_inv;
    out.C = -out.D.conjugate() * f.conjugate() * h_star_inv;
    return out;
}

Eigen::MatrixXcd breather_m0(const Eigen::MatrixXcd& q, const BreatherBCD& bcd) {
    return q.conjugate() * bcd.B * q.transpose() + q_left(q) * bcd.C * q.transpose() +
           q_left(q.conjugate()) * bcd.D * q.transpose();
}

Eigen::MatrixXcd breather_darboux(const BreatherParams& params, const TimeVector& times,
                                  Complex lambda) {
    params.validate();
    const Complex mu = params.mu;
    const double scale = std::max(1.0, std::abs(mu));
    for (const Complex pole : {mu, -mu, std::conj(mu), -std::conj(mu)})
        if (std::abs(lambda - pole) < kPoleTolerance * scale)
            throw PoleEvaluationError("breather_darboux: lambda at a pole");

    const int n = params.components();
    const Eigen::MatrixXcd q = fundamental_solution(times, mu, n) * params.C;
    const Eigen::MatrixXcd m0 = breather_m0(q, breather_bcd(breather_fgh(q, mu)));
    const Eigen::MatrixXcd m0c = m0.conjugate();
    return Eigen::MatrixXcd::Identity(n + 2, n + 2) + m0 / (lambda - mu) -
           q_conjugate(m0) / (lambda + mu) + m0c / (lambda - std::conj(mu)) -
           q_conjugate(m0c) / (lambda + std::conj(mu));
}

Eigen::VectorXd breather_dress(const BreatherParams& params, const TimeVector& times) {
    params.validate();
    const int n = params.components();
    const Eigen::MatrixXcd q = fundamental_solution(times, params.mu, n) * params.C;
    const BreatherBCD bcd = breather_bcd(breather_fgh(q, params.mu));

    // u~_j = -4 Re sum_{k,l} | q_1^k  0           0          |
    //                        | 0      q_{j+2}^l   B*_kl-D*_kl|
    //                        | 0      q*_{j+2}^l  C_kl       |
    Eigen::VectorXd out(n);
    for (int j = 0; j < n; ++j) {
        Complex sum = 0.0;
        for (int k = 0; k < params.s; ++k) {
            for (int l = 0; l < params.s; ++l) {
                const Complex minor = q(j + 2, l) * bcd.C(k, l) -
                                      (std::conj(bcd.B(k, l)) - std::conj(bcd.D(k, l))) *
                                          std::conj(q(j + 2, l));
                sum += q(0, k) * minor;
            }
        }
        out(j) = -4.0 * std::real(sum);
    }
    return out;
}

Eigen::VectorXd rank1_breather(const BreatherParams& params, const TimeVector& times) {
    params.validate();
    if (params.s != 1) throw ConfigError("rank1_breather: requires s = 1");
    const int n = params.components();
    const Eigen::MatrixXcd q = fundamental_solution(times, params.mu, n) * params.C;
    const BreatherFGH fgh = breather_fgh(q, params.mu);
    const Complex f = fgh.F(0, 0);
    const Complex g = fgh.G(0, 0);
    const Complex h = fgh.H(0, 0);
    const Complex delta = rank1_delta(f, g, h);
    if (std::abs(delta) < 1e-14)
        throw DegenerateDenominatorError("rank1_breather: Delta vanishes");

    const Eigen::VectorXcd c = params.C.col(0).tail(n);
    const Complex q1 = q(0, 0);
    Eigen::VectorXd out(n);
    for (int j = 0; j < n; ++j) {
        const Complex num = q1 * (std::conj(f) * c(j) + (g - h) * std::conj(c(j)));
        out(j) = -4.0 * std::real(num / delta);
    }
    return out;
}

Complex rank1_delta(Complex f, Complex g, Complex h) {
    return f * std::conj(f) - (h - g) * (g + h);
}

double rank1_delta_closed_form(double r, double theta, double a, double b) {
    const double tan_th = std::tan(theta);
    const double sin_a = std::sin(a);
    const double cosh_b = std::cosh(b);
    const double bracket = tan_th * sin_a * sin_a + cosh_b * cosh_b / tan_th;
    return -bracket * bracket / (r * r);
}

double scalar_breather_closed_form(double r, double theta, double a, double b) {
    const double num =
        std::sin(theta) * std::sin(a) * std::sinh(b) - std::cos(theta) * std::cos(a) * std::cosh(b);
    const double den =
        std::tan(theta) * std::sin(a) * std::sin(a) + std::cosh(b) * std::cosh(b) / std::tan(theta);
    return 4.0 * r * num / den;
}

Eigen::MatrixXcd axis_breather_c(int n_components, int j) {
    if (j < 1 || j > n_components) throw ConfigError("axis_breather_c: component index out of range");
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n_components + 2, 1);
    c(0, 0) = Complex(1.0, 0.0);
    c(j + 1, 0) = Complex(0.0, 1.0);
    return c;
}

Eigen::MatrixXcd random_isotropic_matrix(int n_components, int s, std::mt19937& rng) {
    const int m = n_components + 2;
    if (2 * s > m)
        throw ConfigError("random_isotropic_matrix: isotropic rank bound 2s <= N+2 violated");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd a(m, 2 * s);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2 * s; ++j) a(i, j) = gauss(rng);
    const Eigen::MatrixXd frame =
        Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ() * Eigen::MatrixXd::Identity(m, 2 * s);
    Eigen::MatrixXcd c(m, s);
    for (int k = 0; k < s; ++k)
        c.col(k) = (frame.col(2 * k).cast<Complex>() +
                    Complex(0.0, 1.0) * frame.col(2 * k + 1).cast<Complex>()) /
                   std::sqrt(2.0);
    return c;
}

// ---- long double samplers ---------------------------------------------------------

SolitonSolution::SolitonSolution(SolitonParams params, TimeVector times)
    : params_(std::move(params)), times_(std::move(times)) {
    params_.validate();
}

long double SolitonSolution::xi_at(long double x) const {
    const auto mu = static_cast<long double>(params_.mu);
    long double sum = 0.0L;
    for (const auto& [n, t] : times_.entries()) {
        const long double value = n == 0 ? x : static_cast<long double>(t);
        long double term = pow_odd(mu, n) * value;
        if (n % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

std::vector<long double> SolitonSolution::value(long double x) const {
    const auto mu = static_cast<long double>(params_.mu);
    const auto c0 = static_cast<long double>(params_.c0);
    const long double xi0 = xi_at(x);
    const long double den = coshl(xi0) + c0 * sinhl(xi0);
    std::vector<long double> out(static_cast<std::size_t>(params_.components()));
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = 2.0L * mu * static_cast<long double>(params_.c(static_cast<Eigen::Index>(j))) / den;
    return out;
}

TaylorSeries SolitonSolution::denominator_series(long double xi0, long double slope,
                                                 std::size_t size) const {
    const auto c0 = static_cast<long double>(params_.c0);
    TaylorSeries ch = taylor_cosh(xi0, slope, size);
    TaylorSeries sh = taylor_sinh(xi0, slope, size);
    return ch + c0 * sh;
}

Jet<long double> SolitonSolution::jet(long double x, int max_order) const {
    const auto mu = static_cast<long double>(params_.mu);
    const std::size_t size = static_cast<std::size_t>(max_order) + 1;
    // xi(x + s) = xi0 + mu s along the grid line
    const TaylorSeries g = denominator_series(xi_at(x), mu, size).reciprocal();
    const int n = params_.components();
    Jet<long double> jet(size, std::vector<long double>(static_cast<std::size_t>(n)));
    for (std::size_t k = 0; k < size; ++k) {
        const long double gk = g.derivative(k);
        for (int j = 0; j < n; ++j)
            jet[k][static_cast<std::size_t>(j)] =
                2.0L * mu * static_cast<long double>(params_.c(j)) * gk;
    }
    return jet;
}

std::vector<long double> SolitonSolution::time_derivative(long double x, int n_flow) const {
    // d xi / d t_{2n+1} = (-1)^n mu^{2n+1} and du/dxi = u_x / mu
    const auto mu = static_cast<long double>(params_.mu);
    long double rate = pow_odd(mu, n_flow) / mu;
    if (n_flow % 2 == 1) rate = -rate;
    const Jet<long double> j1 = jet(x, 1);
    std::vector<long double> out = j1[1];
    for (auto& v : out) v *= rate;
    return out;
}

ScalarBreatherSolution::ScalarBreatherSolution(Complex mu, TimeVector times)
    : mu_(mu), times_(std::move(times)) {
    if (std::abs(mu.real()) < kAxisTolerance || std::abs(mu.imag()) < kAxisTolerance)
        throw AxisPoleError("ScalarBreatherSolution: mu on an axis");
}

namespace {

std::complex<long double> breather_xi_l(const TimeVector& times, std::complex<long double> mu,
                                        long double x) {
    std::complex<long double> sum = 0.0L;
    for (const auto& [n, t] : times.entries()) {
        const long double value = n == 0 ? x : static_cast<long double>(t);
        sum += pow_odd(mu, n) * value;
    }
    return sum;
}

} // namespace

TaylorSeries ScalarBreatherSolution::directional_series(long double x, long double da,
                                                        long double db, std::size_t size) const {
    const std::complex<long double> mu_l(static_cast<long double>(mu_.real()),
                                         static_cast<long double>(mu_.imag()));
    const std::complex<long double> xi0 = breather_xi_l(times_, mu_l, x);
    const long double a0 = xi0.real();
    const long double b0 = xi0.imag();
    const long double r = std::abs(mu_l);
    const long double theta = std::arg(mu_l);
    const long double tan_th = tanl(theta);

    const TaylorSeries sin_a = taylor_sin(a0, da, size);
    const TaylorSeries cos_a = taylor_cos(a0, da, size);
    const TaylorSeries sinh_b = taylor_sinh(b0, db, size);
    const TaylorSeries cosh_b = taylor_cosh(b0, db, size);

    const TaylorSeries num =
        4.0L * r * (sinl(theta) * (sin_a * sinh_b) - cosl(theta) * (cos_a * cosh_b));
    const TaylorSeries den = tan_th * (sin_a * sin_a) + (1.0L / tan_th) * (cosh_b * cosh_b);
    return num / den;
}

long double ScalarBreatherSolution::value(long double x) const {
    return directional_series(x, 0.0L, 0.0L, 1)[0];
}

Jet<long double> ScalarBreatherSolution::jet(long double x, int max_order) const {
    // x enters through xi = ... + mu x: direction (Re mu, Im mu) in (A, B)
    const std::size_t size = static_cast<std::size_t>(max_order) + 1;
    const TaylorSeries s = directional_series(x, static_cast<long double>(mu_.real()),
                                              static_cast<long double>(mu_.imag()), size);
    Jet<long double> jet(size, std::vector<long double>(1));
    for (std::size_t k = 0; k < size; ++k) jet[k][0] = s.derivative(k);
    return jet;
}

long double ScalarBreatherSolution::time_derivative(long double x, int n_flow) const {
    // d xi / d t_{2n+1} = mu^{2n+1}
    const std::complex<long double> mu_l(static_cast<long double>(mu_.real()),
                                         static_cast<long double>(mu_.imag()));
    const std::complex<long double> rate = pow_odd(mu_l, n_flow);
    const TaylorSeries s = directional_series(x, rate.real(), rate.imag(), 2);
    return s.derivative(1);
}

} // namespace vmkdv
