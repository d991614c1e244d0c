#include "vmkdv/hierarchy.hpp"

#include <cmath>
#include <cstddef>

namespace vmkdv {

// ---- LaxCoeff ----------------------------------------------------------------

LaxCoeff commutator(const LaxCoeff& x, const LaxCoeff& y) {
    // Block form of [X, Y] for X = (a, v1, v2, W), Y = (b, w1, w2, V):
    //   a-block: <v2,w1> - <v1,w2>
    //   v1:      a w2 - b v2 + W w1 - V v1
    //   v2:      b v1 - a w1 + W w2 - V v2
    //   W:       -(v1^w1) - (v2^w2) + [W,V]
    LaxCoeff z;
    z.a = contract(x.v2, y.v1) - contract(x.v1, y.v2);
    z.v1 = x.a * y.v2 - y.a * x.v2 + apply(x.w, y.v1) - apply(y.w, x.v1);
    z.v2 = y.a * x.v1 - x.a * y.v1 + apply(x.w, y.v2) - apply(y.w, x.v2);
    z.w = -wedge(x.v1, y.v1) - wedge(x.v2, y.v2) + commutator(x.w, y.w);
    return z;
}

LaxCoeff d_x(const LaxCoeff& x) { return {d_x(x.a), d_x(x.v1), d_x(x.v2), d_x(x.w)}; }

LaxCoeff d_x_inverse(const LaxCoeff& x) {
    if (!x.v1.is_zero() || !x.v2.is_zero())
        throw NotExactError("d_x_inverse(LaxCoeff): vector blocks are not integrable here");
    return {d_x_inverse(x.a), {}, {}, d_x_inverse(x.w)};
}

LaxCoeff evolutionary_derivative(const LaxCoeff& x, const VectorPoly& flow) {
    return {evolutionary_derivative(x.a, flow), evolutionary_derivative(x.v1, flow),
            evolutionary_derivative(x.v2, flow), evolutionary_derivative(x.w, flow)};
}

// ---- LaxMatrix ----------------------------------------------------------------

LaxCoeff LaxMatrix::coeff(int d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? LaxCoeff{} : it->second;
}

void LaxMatrix::add_coeff(int d, const LaxCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(d, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaxMatrix LaxMatrix::shifted(int s) const {
    LaxMatrix out;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + s, c);
    return out;
}

LaxMatrix LaxMatrix::operator-() const {
    LaxMatrix out;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
    return out;
}

LaxMatrix& LaxMatrix::operator+=(const LaxMatrix& rhs) {
    for (const auto& [d, c] : rhs.coeffs_) add_coeff(d, c);
    return *this;
}

LaxMatrix& LaxMatrix::operator-=(const LaxMatrix& rhs) {
    for (const auto& [d, c] : rhs.coeffs_) add_coeff(d, -c);
    return *this;
}

LaxMatrix d_x(const LaxMatrix& x) {
    LaxMatrix out;
    for (const auto& [d, c] : x.coeffs()) out.add_coeff(d, d_x(c));
    return out;
}

LaxMatrix evolutionary_derivative(const LaxMatrix& x, const VectorPoly& flow) {
    LaxMatrix out;
    for (const auto& [d, c] : x.coeffs()) out.add_coeff(d, evolutionary_derivative(c, flow));
    return out;
}

LaxMatrix commutator(const LaxMatrix& x, const LaxMatrix& y) {
    LaxMatrix out;
    for (const auto& [dx_, cx] : x.coeffs())
        for (const auto& [dy, cy] : y.coeffs()) out.add_coeff(dx_ + dy, commutator(cx, cy));
    return out;
}

// ---- recursion operator --------------------------------------------------------

VectorPoly recursion_apply(const VectorPoly& f) {
    if (f.is_zero()) return {};
    const VectorPoly u0 = VectorPoly::u(0);
    const VectorPoly u1 = VectorPoly::u(1);
    VectorPoly out = -d_x(f, 2);
    out -= ScalarPoly::pairing(0, 0) * f;
    out -= d_x_inverse(contract(u0, f)) * u1;
    out -= apply(d_x_inverse(wedge(u1, f)), u0);
    return out;
}

// ---- Lax operators --------------------------------------------------------------

namespace {

LaxCoeff j_coeff() {
    LaxCoeff j;
    j.a = ScalarPoly::one();
    return j;
}

LaxCoeff u_coeff(const VectorPoly& v) {
    LaxCoeff u;
    u.v2 = v;
    return u;
}

} // namespace

LaxMatrix lax_u() {
    LaxMatrix m;
    m.add_coeff(1, j_coeff());
    m.add_coeff(0, u_coeff(VectorPoly::u(0)));
    return m;
}

bool reduction_parity_ok(const LaxMatrix& x) {
    for (const auto& [d, c] : x.coeffs()) {
        if (d % 2 != 0) {
            if (!c.v2.is_zero() || !c.w.is_zero()) return false;
        } else {
            if (!c.a.is_zero() || !c.v1.is_zero()) return false;
        }
    }
    return true;
}

// ---- FlowTable ------------------------------------------------------------------

const VectorPoly& FlowTable::flow(int n) {
    std::lock_guard lock(mutex_);
    return flow_locked(n);
}

const VectorPoly& FlowTable::flow_locked(int n) {
    if (n < 0) throw Error("flow: n must be non-negative");
    if (n > max_n_)
        throw Error("flow: n exceeds the recursion cap " + std::to_string(max_n_) +
                    "; construct FlowTable with a larger max_n");
    auto it = flows_.find(n);
    if (it != flows_.end()) return it->second;
    VectorPoly value = n == 0 ? VectorPoly::u(1) : recursion_apply(flow_locked(n - 1));
    return flows_.emplace(n, std::move(value)).first->second;
}

const LaxMatrix& FlowTable::lax_v(int n) {
    std::lock_guard lock(mutex_);
    return lax_v_locked(n);
}

const LaxMatrix& FlowTable::lax_v_locked(int n) {
    if (n < 0) throw Error("lax_v: n must be non-negative");
    auto it = vmats_.find(n);
    if (it != vmats_.end()) return it->second;
    LaxMatrix value;
    if (n == 0) {
        value = lax_u();
    } else {
        // V_{2n+1} = lambda^2 V_{2n-1} + lambda A_{2n-1} + B_{2n-1} with
        //   A = -[J, U_t] - D_x^{-1}<u, u_t> J
        //   B = -D_x U_t - D_x^{-1}<u, u_t> U + D_x^{-1}[D_x U_t, U]
        // where u_t = flow(n-1) and U_t is the U block shape with v2 = u_t.
        const VectorPoly& f = flow_locked(n - 1);
        const LaxCoeff j = j_coeff();
        const LaxCoeff u = u_coeff(VectorPoly::u(0));
        const LaxCoeff ut = u_coeff(f);
        const ScalarPoly flux = d_x_inverse(contract(VectorPoly::u(0), f));

        const LaxCoeff a = -commutator(j, ut) - flux * j;
        const LaxCoeff b = -d_x(ut) - flux * u + d_x_inverse(commutator(d_x(ut), u));

        value = lax_v_locked(n - 1).shifted(2);
        value.add_coeff(1, a);
        value.add_coeff(0, b);
    }
    return vmats_.emplace(n, std::move(value)).first->second;
}

LaxMatrix zero_curvature_residual(FlowTable& table, int n) {
    if (n < 1) throw Error("zero_curvature_residual: n must be positive");
    const LaxMatrix u_lambda = lax_u();
    const LaxMatrix& v = table.lax_v(n);
    const VectorPoly& f = table.flow(n);
    return evolutionary_derivative(u_lambda, f) - d_x(v) + commutator(u_lambda, v);
}

// ---- numeric reconstruction ------------------------------------------------------

Eigen::MatrixXd lax_coeff_value(const LaxCoeff& c, const Jet<double>& jet, int n) {
    const double a = evaluate(c.a, jet);
    const std::vector<double> v1 = evaluate(c.v1, jet, n);
    const std::vector<double> v2 = evaluate(c.v2, jet, n);
    const std::vector<std::vector<double>> w = evaluate(c.w, jet, n);

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 2, n + 2);
    m(0, 1) = a;
    m(1, 0) = -a;
    for (int i = 0; i < n; ++i) {
        m(0, i + 2) = v1[static_cast<std::size_t>(i)];
        m(i + 2, 0) = -v1[static_cast<std::size_t>(i)];
        m(1, i + 2) = v2[static_cast<std::size_t>(i)];
        m(i + 2, 1) = -v2[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            m(i + 2, j + 2) = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Eigen::MatrixXcd lax_matrix_value(const LaxMatrix& x, const Jet<double>& jet, int n,
                                  std::complex<double> lambda) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n + 2, n + 2);
    for (const auto& [d, c] : x.coeffs())
        m += std::pow(lambda, d) * lax_coeff_value(c, jet, n).cast<std::complex<double>>();
    return m;
}

double ReductionGroupDeviations::max() const {
    return std::max({skew, conjugation, parity});
}

ReductionGroupDeviations check_reduction_group(const LaxMatrix& x, const Jet<double>& jet, int n,
                                               const std::vector<std::complex<double>>& samples) {
    ReductionGroupDeviations dev;
    Eigen::VectorXd q_diag = Eigen::VectorXd::Ones(n + 2);
    q_diag(0) = -1.0;
    const Eigen::MatrixXcd q = q_diag.asDiagonal().toDenseMatrix().cast<std::complex<double>>();
    for (const auto& lambda : samples) {
        const Eigen::MatrixXcd at = lax_matrix_value(x, jet, n, lambda);
        const Eigen::MatrixXcd at_conj = lax_matrix_value(x, jet, n, std::conj(lambda));
        const Eigen::MatrixXcd at_neg = lax_matrix_value(x, jet, n, -lambda);

        dev.skew = std::max(dev.skew, (at + at.transpose()).cwiseAbs().maxCoeff());
        dev.conjugation = std::max(dev.conjugation, (at_conj.conjugate() - at).cwiseAbs().maxCoeff());
        dev.parity = std::max(dev.parity, (q * at_neg * q - at).cwiseAbs().maxCoeff());
    }
    return dev;
}

} // namespace vmkdv
