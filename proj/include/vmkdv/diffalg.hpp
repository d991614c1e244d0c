#pragma once

// Exact differential polynomial algebra over an N-component field u(x).
//
// Everything is O_N-covariant by construction: scalars are polynomials in the
// pairings <u_i,u_j> (the component ring never appears), vectors are sums
// c_k(pairings) * u_k, and antisymmetric matrices are sums
// a_kl(pairings) * (u_k u_l^T - u_l u_k^T). The component dimension N stays
// generic; it only enters at numeric evaluation time.
//
// Canonical text grammar (see docs/grammar.md):
//   pairing   := '<' 'u' int ',' 'u' int '>'          e.g.  <u0,u1>
//   monomial  := pairing ('^' int)? ('*' pairing ('^' int)?)*
//   scalar    := signed sum of  coeff '*' monomial    e.g.  1 - 2*<u0,u0>
//   vector    := signed sum of  coeff '*' monomial '*' 'u' int
//                                                     e.g.  -u3 - 3/2*<u0,u0>*u1
//   bivector  := signed sum of  coeff '*' monomial '*' '(' 'u' int '^' 'u' int ')'
//                                                     e.g.  (u0^u1) - 1/2*<u0,u0>*(u0^u2)
// Term order is deterministic, so equal polynomials print identically.

#include "vmkdv/errors.hpp"
#include "vmkdv/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vmkdv {

/// The pairing <u_i, u_j>, stored with i <= j.
struct Pairing {
    int i = 0;
    int j = 0;

    Pairing(int a, int b) : i(a <= b ? a : b), j(a <= b ? b : a) {}

    int weight() const { return i + j + 2; }
    int max_order() const { return j; }

    auto operator<=>(const Pairing&) const = default;
};

/// A commutative product of pairings, kept sorted. The empty product is 1.
struct ScalarMonomial {
    std::vector<Pairing> factors; // sorted ascending

    ScalarMonomial() = default;
    explicit ScalarMonomial(std::vector<Pairing> fs);

    int weight() const;
    int degree() const { return static_cast<int>(factors.size()); }
    int max_order() const;
    bool is_one() const { return factors.empty(); }

    ScalarMonomial times(const Pairing& p) const;
    ScalarMonomial times(const ScalarMonomial& other) const;
    /// Monomial with one copy of factors[idx] removed.
    ScalarMonomial without(std::size_t idx) const;

    bool operator==(const ScalarMonomial&) const = default;
    /// Graded order: degree first, then lexicographic on the factor list.
    bool operator<(const ScalarMonomial& other) const;
};

/// Exact polynomial in the pairings with rational coefficients.
class ScalarPoly {
  public:
    ScalarPoly() = default;
    explicit ScalarPoly(Rational c); // constant
    ScalarPoly(const ScalarMonomial& m, Rational c);

    static ScalarPoly zero() { return {}; }
    static ScalarPoly one() { return ScalarPoly(Rational(1)); }
    /// The pairing <u_i,u_j> as a polynomial.
    static ScalarPoly pairing(int i, int j);

    const std::map<ScalarMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    void add_term(const ScalarMonomial& m, const Rational& c);

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& rhs);
    ScalarPoly& operator-=(const ScalarPoly& rhs);
    // Operators are hidden friends: keeping them out of ordinary lookup stops
    // Eigen expressions from probing Rational conversions (a boost 1.74 trait
    // hard-errors on that probe).
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }
    friend ScalarPoly operator*(const Rational& c, const ScalarPoly& p) {
        ScalarPoly out;
        if (c == 0) return out;
        for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
        return out;
    }
    bool operator==(const ScalarPoly&) const = default;

    int max_order() const;

  private:
    std::map<ScalarMonomial, Rational> terms_;
};

/// Sum over derivative orders k of  c_k(pairings) * u_k.
class VectorPoly {
  public:
    VectorPoly() = default;

    /// The basis vector u_k.
    static VectorPoly u(int k);
    static VectorPoly zero() { return {}; }

    const std::map<int, ScalarPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ScalarPoly coeff(int k) const;

    void add_term(int k, const ScalarPoly& c);

    VectorPoly operator-() const;
    VectorPoly& operator+=(const VectorPoly& rhs);
    VectorPoly& operator-=(const VectorPoly& rhs);
    friend VectorPoly operator+(VectorPoly a, const VectorPoly& b) { return a += b; }
    friend VectorPoly operator-(VectorPoly a, const VectorPoly& b) { return a -= b; }
    friend VectorPoly operator*(const ScalarPoly& c, const VectorPoly& v) {
        VectorPoly out;
        if (c.is_zero()) return out;
        for (const auto& [k, ck] : v.terms_) out.add_term(k, c * ck);
        return out;
    }
    friend VectorPoly operator*(const Rational& c, const VectorPoly& v) {
        VectorPoly out;
        if (c == 0) return out;
        for (const auto& [k, ck] : v.terms_) out.terms_.emplace(k, c * ck);
        return out;
    }
    bool operator==(const VectorPoly&) const = default;

    int max_order() const;

  private:
    std::map<int, ScalarPoly> terms_;
};

/// Sum over ordered pairs k < l of  a_kl(pairings) * (u_k u_l^T - u_l u_k^T).
/// Antisymmetry is structural: only k < l keys are stored.
class BivectorPoly {
  public:
    using Key = std::pair<int, int>;

    BivectorPoly() = default;

    /// The wedge u_k ^ u_l = u_k u_l^T - u_l u_k^T (zero when k == l).
    static BivectorPoly wedge_basis(int k, int l);
    static BivectorPoly zero() { return {}; }

    const std::map<Key, ScalarPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * (u_k ^ u_l) handling orientation and k == l.
    void add_term(int k, int l, const ScalarPoly& c);

    BivectorPoly operator-() const;
    BivectorPoly& operator+=(const BivectorPoly& rhs);
    BivectorPoly& operator-=(const BivectorPoly& rhs);
    friend BivectorPoly operator+(BivectorPoly a, const BivectorPoly& b) { return a += b; }
    friend BivectorPoly operator-(BivectorPoly a, const BivectorPoly& b) { return a -= b; }
    friend BivectorPoly operator*(const ScalarPoly& c, const BivectorPoly& w) {
        BivectorPoly out;
        if (c.is_zero()) return out;
        for (const auto& [kl, a] : w.terms_) out.add_term(kl.first, kl.second, c * a);
        return out;
    }
    friend BivectorPoly operator*(const Rational& c, const BivectorPoly& w) {
        BivectorPoly out;
        if (c == 0) return out;
        for (const auto& [kl, a] : w.terms_) out.terms_.emplace(kl, c * a);
        return out;
    }
    bool operator==(const BivectorPoly&) const = default;

    int max_order() const;

  private:
    std::map<Key, ScalarPoly> terms_;
};

// ---- multiplicative structure across kinds --------------------------------

/// Pairing contraction <f, g> of two vector polynomials.
ScalarPoly contract(const VectorPoly& f, const VectorPoly& g);

/// Antisymmetrised outer product f g^T - g f^T.
BivectorPoly wedge(const VectorPoly& f, const VectorPoly& g);

/// Matrix-vector contraction W f, using
/// (u_k u_l^T - u_l u_k^T) u_m = <u_l,u_m> u_k - <u_k,u_m> u_l.
VectorPoly apply(const BivectorPoly& w, const VectorPoly& f);

/// Matrix commutator [W, V] of two antisymmetric matrix polynomials.
BivectorPoly commutator(const BivectorPoly& w, const BivectorPoly& v);

// ---- calculus --------------------------------------------------------------

ScalarPoly d_x(const ScalarPoly& p);
VectorPoly d_x(const VectorPoly& p);
BivectorPoly d_x(const BivectorPoly& p);

ScalarPoly d_x(const ScalarPoly& p, int times);
VectorPoly d_x(const VectorPoly& p, int times);
BivectorPoly d_x(const BivectorPoly& p, int times);

/// Formal integration: returns q with D_x q = p exactly and no constant term.
/// Throws NotExactError when p is not a total x-derivative.
ScalarPoly d_x_inverse(const ScalarPoly& p);
BivectorPoly d_x_inverse(const BivectorPoly& p);

/// Evolutionary derivative D_t along u_t = flow: acts by u_k -> D_x^k(flow).
ScalarPoly evolutionary_derivative(const ScalarPoly& p, const VectorPoly& flow);
VectorPoly evolutionary_derivative(const VectorPoly& p, const VectorPoly& flow);
BivectorPoly evolutionary_derivative(const BivectorPoly& p, const VectorPoly& flow);

// ---- grading ---------------------------------------------------------------

/// Scaling weight of a homogeneous polynomial (u_k has weight k+1), or
/// nullopt when terms of different weights are mixed. The zero polynomial
/// reports weight 0.
std::optional<int> homogeneous_weight(const ScalarPoly& p);
std::optional<int> homogeneous_weight(const VectorPoly& p);
std::optional<int> homogeneous_weight(const BivectorPoly& p);

std::map<int, ScalarPoly> decompose_by_weight(const ScalarPoly& p);
std::map<int, BivectorPoly> decompose_by_weight(const BivectorPoly& p);

/// All scalar monomials of the given weight (weight 0 -> the empty monomial).
std::vector<ScalarMonomial> scalar_monomials_of_weight(int w);

/// All bivector basis elements (monomial, k, l) of the given weight.
struct BivectorBasisElement {
    ScalarMonomial monomial;
    int k = 0;
    int l = 0; // k < l
};
std::vector<BivectorBasisElement> bivector_basis_of_weight(int w);

// ---- numeric evaluation -----------------------------------------------------

/// A numeric jet: jet[k] holds the components of u_k in R^N. All entries must
/// share the same N.
template <typename Real>
using Jet = std::vector<std::vector<Real>>;

double evaluate(const ScalarPoly& p, const Jet<double>& jet);
std::vector<double> evaluate(const VectorPoly& p, const Jet<double>& jet, int n_components);
std::vector<std::vector<double>> evaluate(const BivectorPoly& p, const Jet<double>& jet,
                                          int n_components);

long double evaluate(const ScalarPoly& p, const Jet<long double>& jet);
std::vector<long double> evaluate(const VectorPoly& p, const Jet<long double>& jet,
                                  int n_components);
std::vector<std::vector<long double>> evaluate(const BivectorPoly& p, const Jet<long double>& jet,
                                               int n_components);

// ---- canonical text form ----------------------------------------------------

std::string to_string(const Pairing& p);
std::string to_string(const ScalarMonomial& m);
std::string to_string(const ScalarPoly& p);
std::string to_string(const VectorPoly& p);
std::string to_string(const BivectorPoly& p);

} // namespace vmkdv
