#pragma once

// Grid sampling, high-order centered finite differences, PDE residuals for
// arbitrary hierarchy flows, numeric matrix-identity checks, and convergence
// studies. This module closes the loop between the symbolic flows and the
// closed-form solutions.

#include "vmkdv/diffalg.hpp"
#include "vmkdv/errors.hpp"
#include "vmkdv/hierarchy.hpp"
#include "vmkdv/solutions.hpp"

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vmkdv {

struct Grid {
    double x0 = -15.0;
    double x1 = 15.0;
    int nx = 3001;

    double h() const { return (x1 - x0) / (nx - 1); }
    double x(int i) const { return x0 + h() * i; }
    void validate() const;
};

/// Default desk-scale grid used by the CLI and the verification suite.
Grid default_grid();

/// Numeric samples of u on a grid at a fixed slice of the active times.
struct SolutionField {
    Grid grid;
    Eigen::MatrixXd samples; // nx x N
    std::string provenance;
    int margin = 0; // leading/trailing rows not meaningful (stencil boundary)

    int components() const { return static_cast<int>(samples.cols()); }
};

struct VerificationReport {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::map<std::string, std::string> metadata;

    static VerificationReport make(std::string name, double residual, double tolerance);
};

// ---- finite differences -----------------------------------------------------------

/// Centered finite-difference weights for the m-th derivative at unit spacing,
/// offsets -radius..radius, computed exactly (Fornberg) and rounded once.
std::vector<long double> fd_weights(int order, int radius);

/// Smallest centered radius achieving the requested (even) accuracy.
int fd_radius(int order, int accuracy);

/// Derivative of a sampled field by centered stencils (accuracy >= 4). The
/// output margin marks boundary rows that were not computed.
SolutionField fd_derivative(const SolutionField& field, int order, int accuracy = 4);

// ---- flow residuals -----------------------------------------------------------------

/// A closed-form solution that can be sampled along x with analytic time
/// derivatives. Implemented by SolitonSampler / ScalarBreatherSampler below.
class SolutionSampler {
  public:
    virtual ~SolutionSampler() = default;
    virtual int components() const = 0;
    virtual std::vector<long double> value(long double x) const = 0;
    virtual std::vector<long double> time_derivative(long double x, int n) const = 0;
    /// A copy with t_{2n+1} shifted by delta (for the FD time derivative).
    virtual std::unique_ptr<SolutionSampler> shifted_time(int n, double delta) const = 0;
    virtual std::string provenance() const = 0;
};

class SolitonSampler final : public SolutionSampler {
  public:
    SolitonSampler(SolitonParams params, TimeVector times) : solution_(params, times) {}

    int components() const override { return solution_.components(); }
    std::vector<long double> value(long double x) const override { return solution_.value(x); }
    std::vector<long double> time_derivative(long double x, int n) const override {
        return solution_.time_derivative(x, n);
    }
    std::unique_ptr<SolutionSampler> shifted_time(int n, double delta) const override;
    std::string provenance() const override { return "one_soliton"; }

    const SolitonSolution& solution() const { return solution_; }

  private:
    SolitonSolution solution_;
};

class ScalarBreatherSampler final : public SolutionSampler {
  public:
    ScalarBreatherSampler(Complex mu, TimeVector times) : mu_(mu), times_(times), solution_(mu, times) {}

    int components() const override { return 1; }
    std::vector<long double> value(long double x) const override {
        return {solution_.value(x)};
    }
    std::vector<long double> time_derivative(long double x, int n) const override {
        return {solution_.time_derivative(x, n)};
    }
    std::unique_ptr<SolutionSampler> shifted_time(int n, double delta) const override;
    std::string provenance() const override { return "rank1_breather"; }

  private:
    Complex mu_;
    TimeVector times_;
    ScalarBreatherSolution solution_;
};

/// Samples a closed form onto a grid (double precision, for CSV dumps).
SolutionField sample_solution(const SolutionSampler& sampler, const Grid& grid);

enum class TimeDerivativeMethod { analytic_xi, fd };

struct ResidualOptions {
    int accuracy = 8;      // stencil accuracy for the x-jet
    double delta = 1e-5;   // step for the fd time derivative
    TimeDerivativeMethod method = TimeDerivativeMethod::analytic_xi;
};

/// Sup-norm of D_t u - flow_n(u, u_1, ...) over the grid interior, with the
/// x-jet from centered finite differences in long double.
VerificationReport flow_residual(const SolutionSampler& sampler, const Grid& grid,
                                 FlowTable& flows, int n, double tolerance,
                                 const ResidualOptions& options = {});

// ---- matrix identity checks -----------------------------------------------------------

enum class MatrixRelation {
    orthogonality, // M(l) M(l)^T = 1
    conjugation,   // M(l*)* = M(l)
    parity,        // Q M(-l) Q^{-1} = M(l)
};

/// Max deviation of the selected relations over the lambda samples for a
/// numeric matrix factory (Darboux or Lax).
VerificationReport matrix_identity_check(const std::function<Eigen::MatrixXcd(Complex)>& builder,
                                         const std::vector<MatrixRelation>& relations,
                                         const std::vector<Complex>& samples, double tolerance,
                                         const std::string& name);

// ---- convergence -----------------------------------------------------------------------

struct ConvergenceStudy {
    std::vector<std::pair<double, double>> points; // (h, residual)
    double slope = 0.0;                            // log-log least squares fit
};

/// Runs residual_op over the h values and fits the convergence order.
ConvergenceStudy convergence_study(const std::function<double(double)>& residual_op,
                                   const std::vector<double>& h_values);

} // namespace vmkdv
