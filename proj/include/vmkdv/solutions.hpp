#pragma once

// Closed-form solutions of the vmKdV hierarchy over the trivial background:
// one-soliton and rank-s breather Darboux matrices, the dressing formulas,
// and the Backlund residual. Everything here is numeric (complex double);
// the exact symbolic layer lives in diffalg/hierarchy.

#include "vmkdv/diffalg.hpp"
#include "vmkdv/errors.hpp"
#include "vmkdv/taylor.hpp"

#include <complex>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace vmkdv {

using Complex = std::complex<double>;

/// Active hierarchy times: entry n holds the value of t_{2n+1}. The space
/// variable is t_1 = x (entry 0), always present.
class TimeVector {
  public:
    TimeVector() { entries_[0] = 0.0; }
    explicit TimeVector(double x) { entries_[0] = x; }

    /// Sets t_{2n+1}. Inactive times are absent (and read as 0).
    TimeVector& set(int n, double value);
    double x() const { return entries_.at(0); }
    TimeVector with_x(double x) const;

    const std::map<int, double>& entries() const { return entries_; }

  private:
    std::map<int, double> entries_;
};

enum class XiConvention {
    soliton,  // xi = sum (-1)^n mu^{2n+1} t_{2n+1}
    breather, // xi = sum mu^{2n+1} t_{2n+1}
};

/// The phase xi truncated to the active times.
Complex xi(const TimeVector& times, Complex mu, XiConvention variant);

/// Fundamental solution Psi = exp(zeta J) of the linear problem over u = 0,
/// with zeta = sum lambda^{2n+1} t_{2n+1}:
/// a cos/sin rotation in the top-left 2x2 block, identity elsewhere. At
/// lambda = i mu the block becomes the soliton cosh/sinh form, at real
/// lambda = mu the breather cos/sin form.
Eigen::MatrixXcd fundamental_solution(const TimeVector& times, Complex lambda, int n_components);

// ---- soliton -------------------------------------------------------------------

/// Soliton data: Darboux poles at lambda = +-i mu and the constant vector
/// C = (i, c0, c^T)^T on the unit sphere c0^2 + |c|^2 = 1.
struct SolitonParams {
    double mu = 1.0;
    double c0 = 0.0;
    Eigen::VectorXd c;

    int components() const { return static_cast<int>(c.size()); }
    /// Throws ConfigError when mu <= 0 or the sphere constraint fails.
    void validate() const;
};

/// q = Psi(i mu) (i, c0, c^T)^T in closed form:
/// (i cosh xi + i c0 sinh xi, c0 cosh xi + sinh xi, c^T)^T.
Eigen::VectorXcd soliton_q(const SolitonParams& params, const TimeVector& times);

/// Rank-1 projector P = Q q q^T / (q^T Q q). Throws DegenerateDenominatorError
/// on lightlike q.
Eigen::MatrixXcd projector(const Eigen::VectorXcd& q);

/// Soliton Darboux matrix
/// M(lambda) = 1 + 2 i mu / (lambda - i mu) P - 2 i mu / (lambda + i mu) Q P Q.
Eigen::MatrixXcd soliton_darboux(const SolitonParams& params, const TimeVector& times,
                                 Complex lambda);

/// One-soliton solution 2 mu c / (cosh xi + c0 sinh xi).
Eigen::VectorXd one_soliton(const SolitonParams& params, const TimeVector& times);

/// Dressing formula u_j - 4 i mu q_1 q_{j+2} / (-q_1^2 + sum_{k>=2} q_k^2).
/// Requires the soliton reality structure of q (first component imaginary,
/// rest real); throws NonRealOutputError above the 1e-10 imaginary residue.
Eigen::VectorXd dressing_apply(const Eigen::VectorXcd& q, double mu, const Eigen::VectorXd& u);

// ---- Backlund transformation ------------------------------------------------------

enum class BacklundBranch { plus, minus, auto_select };

struct BacklundReport {
    double ode_residual = 0.0;        // sup |(u~ - u)_x + mu a0 (u~ + u)|
    double constraint_deviation = 0.0; // sup |a0^2 + |a|^2 - 1|
    double max() const { return std::max(ode_residual, constraint_deviation); }
};

/// Checks the Backlund relations for a pair of fields sampled with their
/// x-derivatives at common points. a0 is recovered from the sphere constraint
/// with the requested sign branch (auto_select tries both per point). In
/// strict mode, |u~ - u| > 2 mu raises ConstraintViolationError; otherwise a0
/// is clamped and the clamp shows up in constraint_deviation.
BacklundReport backlund_residual(const std::vector<Eigen::VectorXd>& u,
                                 const std::vector<Eigen::VectorXd>& u_x,
                                 const std::vector<Eigen::VectorXd>& u_tilde,
                                 const std::vector<Eigen::VectorXd>& u_tilde_x, double mu,
                                 BacklundBranch branch = BacklundBranch::auto_select,
                                 bool strict = false);

// ---- breather -----------------------------------------------------------------------

/// Breather data: generic pole mu (off both axes) and a constant isotropic
/// (N+2) x s matrix C with C^T C = 0 and full column rank.
struct BreatherParams {
    Complex mu{0.8, 0.6};
    int s = 1;
    Eigen::MatrixXcd C; // (N+2) x s

    int components() const { return static_cast<int>(C.rows()) - 2; }
    /// Throws AxisPoleError near the axes and ConfigError on shape, isotropy
    /// or rank violations.
    void validate() const;
};

struct BreatherFGH {
    Eigen::MatrixXcd F, G, H;
};

/// F = q^T Q q / (2 mu), G = q*^T q / (mu - mu*), H = q*^T Q q / (mu + mu*).
BreatherFGH breather_fgh(const Eigen::MatrixXcd& q, Complex mu);

struct BreatherBCD {
    Eigen::MatrixXcd B, C, D;
};

/// B = D G* H*^{-1}, C = -D* F* H*^{-1},
/// D = -(F H^{-1} F* + G* H*^{-1} G* - H*)^{-1}.
BreatherBCD breather_bcd(const BreatherFGH& fgh);

/// Residue datum M0 = q* B q^T + Q q C q^T + Q q* D q^T.
Eigen::MatrixXcd breather_m0(const Eigen::MatrixXcd& q, const BreatherBCD& bcd);

/// Breather Darboux matrix with poles at +-mu, +-mu*.
Eigen::MatrixXcd breather_darboux(const BreatherParams& params, const TimeVector& times,
                                  Complex lambda);

/// Rank-s dressing over the trivial background, via the 3x3 determinant sum.
Eigen::VectorXd breather_dress(const BreatherParams& params, const TimeVector& times);

/// Rank-1 closed form -(4/Delta) Re((C1 cos xi + C2 sin xi)(F* c + (G - H) c*)).
/// Requires s = 1.
Eigen::VectorXd rank1_breather(const BreatherParams& params, const TimeVector& times);

/// Delta through the 2x2 determinant | F  H-G ; G+H  F* | (scalar s = 1 case).
Complex rank1_delta(Complex f, Complex g, Complex h);

/// Closed form Delta = -(1/r^2)(tan th sin^2 A + cosh^2 B / tan th)^2 for the
/// axis-aligned C of the worked example.
double rank1_delta_closed_form(double r, double theta, double a, double b);

/// Scalar breather value
/// 4 r (sin th sin A sinh B - cos th cos A cosh B)/(tan th sin^2 A + cosh^2 B / tan th).
double scalar_breather_closed_form(double r, double theta, double a, double b);

/// The axis-aligned isotropic C of the worked example: real part e_1,
/// imaginary part e_{j+2}.
Eigen::MatrixXcd axis_breather_c(int n_components, int j);

/// Random (N+2) x s isotropic matrix of full column rank: columns
/// (a_k + i b_k)/sqrt(2) from a random orthonormal 2s-frame, then a random
/// well-conditioned right GL_s factor. Requires 2 s <= N+2.
Eigen::MatrixXcd random_isotropic_matrix(int n_components, int s, std::mt19937& rng);

// ---- long double closed-form samplers (for FD residual checks) --------------------

/// One-soliton evaluated in long double with analytic x-jets and analytic
/// time derivatives, for the PDE residual checks.
class SolitonSolution {
  public:
    SolitonSolution(SolitonParams params, TimeVector times);

    int components() const { return params_.components(); }
    const SolitonParams& params() const { return params_; }
    const TimeVector& times() const { return times_; }

    long double xi_at(long double x) const;
    std::vector<long double> value(long double x) const;
    /// u, u_1, ..., u_{max_order} at x, each an N-vector.
    Jet<long double> jet(long double x, int max_order) const;
    /// Analytic d u / d t_{2n+1} at x.
    std::vector<long double> time_derivative(long double x, int n) const;

  private:
    TaylorSeries denominator_series(long double xi0, long double slope, std::size_t size) const;

    SolitonParams params_;
    TimeVector times_;
};

/// Scalar (N = 1) breather of the worked example, in long double, with
/// analytic jets via directional Taylor expansion in (A, B) = (Re xi, Im xi).
class ScalarBreatherSolution {
  public:
    ScalarBreatherSolution(Complex mu, TimeVector times);

    long double value(long double x) const;
    Jet<long double> jet(long double x, int max_order) const;
    long double time_derivative(long double x, int n) const;

  private:
    TaylorSeries directional_series(long double x, long double da, long double db,
                                    std::size_t size) const;

    Complex mu_;
    TimeVector times_;
};

} // namespace vmkdv
