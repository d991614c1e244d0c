#pragma once

// The vmKdV hierarchy: flows generated by the recursion operator, Lax
// matrices built by the degree-two recursion, and the exact zero-curvature
// verification that ties the two together.

#include "vmkdv/diffalg.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vmkdv {

/// One lambda-coefficient of a Lax matrix: an element of so_{N+2} in block
/// form. The full (N+2)x(N+2) matrix is
///
///     [  0    a    v1^T ]
///     [ -a    0    v2^T ]
///     [ -v1  -v2    W   ]
///
/// so skew-symmetry is structural. J is (a=1, rest 0); U is (v2=u, rest 0).
struct LaxCoeff {
    ScalarPoly a;
    VectorPoly v1;
    VectorPoly v2;
    BivectorPoly w;

    bool is_zero() const { return a.is_zero() && v1.is_zero() && v2.is_zero() && w.is_zero(); }
    bool operator==(const LaxCoeff&) const = default;

    friend LaxCoeff operator+(const LaxCoeff& x, const LaxCoeff& y) {
        return {x.a + y.a, x.v1 + y.v1, x.v2 + y.v2, x.w + y.w};
    }
    friend LaxCoeff operator-(const LaxCoeff& x, const LaxCoeff& y) {
        return {x.a - y.a, x.v1 - y.v1, x.v2 - y.v2, x.w - y.w};
    }
    friend LaxCoeff operator-(const LaxCoeff& x) { return {-x.a, -x.v1, -x.v2, -x.w}; }
    friend LaxCoeff operator*(const ScalarPoly& c, const LaxCoeff& x) {
        return {c * x.a, c * x.v1, c * x.v2, c * x.w};
    }
    friend LaxCoeff operator*(const Rational& c, const LaxCoeff& x) {
        return {c * x.a, c * x.v1, c * x.v2, c * x.w};
    }
};

/// so_{N+2} commutator in block form.
LaxCoeff commutator(const LaxCoeff& x, const LaxCoeff& y);

LaxCoeff d_x(const LaxCoeff& x);
LaxCoeff d_x_inverse(const LaxCoeff& x);
LaxCoeff evolutionary_derivative(const LaxCoeff& x, const VectorPoly& flow);

/// Polynomial in the spectral parameter with LaxCoeff coefficients.
class LaxMatrix {
  public:
    LaxMatrix() = default;

    const std::map<int, LaxCoeff>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    LaxCoeff coeff(int d) const;

    void add_coeff(int d, const LaxCoeff& c);
    /// Multiplies by lambda^s.
    LaxMatrix shifted(int s) const;

    LaxMatrix operator-() const;
    LaxMatrix& operator+=(const LaxMatrix& rhs);
    LaxMatrix& operator-=(const LaxMatrix& rhs);
    friend LaxMatrix operator+(LaxMatrix a, const LaxMatrix& b) { return a += b; }
    friend LaxMatrix operator-(LaxMatrix a, const LaxMatrix& b) { return a -= b; }
    bool operator==(const LaxMatrix&) const = default;

  private:
    std::map<int, LaxCoeff> coeffs_;
};

LaxMatrix d_x(const LaxMatrix& x);
LaxMatrix evolutionary_derivative(const LaxMatrix& x, const VectorPoly& flow);
/// Matrix commutator [X, Y], convolving lambda degrees.
LaxMatrix commutator(const LaxMatrix& x, const LaxMatrix& y);

/// The recursion operator:
/// R f = -D_x^2 f - |u|^2 f - u_1 D_x^{-1}<u,f> - D_x^{-1}(u_1 f^T - f u_1^T) u.
/// Throws NotExactError when an integrand is not a total derivative.
VectorPoly recursion_apply(const VectorPoly& f);

/// U(lambda) = lambda J + U.
LaxMatrix lax_u();

/// Reduction-group parity: odd lambda degrees may carry only (a, v1), even
/// degrees only (v2, W).
bool reduction_parity_ok(const LaxMatrix& x);

/// Memoizing store for flows u_{t_{2n+1}} = R^n u_1 and Lax matrices V_{2n+1}.
/// Thread-safe: computation happens under a lock, values are immutable.
class FlowTable {
  public:
    explicit FlowTable(int max_n = 4) : max_n_(max_n) {}

    /// flow(n) = R^n u_1; flow(0) = u_1. Weight-homogeneous of weight 2n+2.
    const VectorPoly& flow(int n);
    /// lax_v(n) = V_{2n+1}(lambda); lax_v(0) = U(lambda).
    const LaxMatrix& lax_v(int n);

    int max_n() const { return max_n_; }

  private:
    const VectorPoly& flow_locked(int n);
    const LaxMatrix& lax_v_locked(int n);

    int max_n_;
    std::map<int, VectorPoly> flows_;
    std::map<int, LaxMatrix> vmats_;
    std::recursive_mutex mutex_;
};

/// D_{t_{2n+1}} U(lambda) - D_x V_{2n+1}(lambda) + [U(lambda), V_{2n+1}(lambda)].
/// Identically zero exactly when flow(n) and V_{2n+1} form a Lax pair.
LaxMatrix zero_curvature_residual(FlowTable& table, int n);

// ---- numeric reconstruction --------------------------------------------------

/// Builds the (N+2)x(N+2) numeric matrix of one LaxCoeff on a real jet.
Eigen::MatrixXd lax_coeff_value(const LaxCoeff& c, const Jet<double>& jet, int n_components);

/// Evaluates X(lambda) numerically on a real jet.
Eigen::MatrixXcd lax_matrix_value(const LaxMatrix& x, const Jet<double>& jet, int n_components,
                                  std::complex<double> lambda);

/// Max deviations of the three reduction-group relations of X(lambda) on a
/// numeric jet, over the given lambda samples:
///   skew:        X(l) + X(l)^T = 0
///   conjugation: X(l*)* = X(l)
///   parity:      Q X(-l) Q^{-1} = X(l)
struct ReductionGroupDeviations {
    double skew = 0.0;
    double conjugation = 0.0;
    double parity = 0.0;

    double max() const;
};
ReductionGroupDeviations check_reduction_group(const LaxMatrix& x, const Jet<double>& jet,
                                               int n_components,
                                               const std::vector<std::complex<double>>& samples);

} // namespace vmkdv
