#include "vmkdv/diffalg.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace vmkdv {

namespace {

// p * (c * m), term by term
ScalarPoly mul_mono(const ScalarPoly& p, const ScalarMonomial& m, const Rational& c) {
    ScalarPoly out;
    for (const auto& [mono, coeff] : p.terms()) out.add_term(mono.times(m), coeff * c);
    return out;
}

std::string rational_str(const Rational& r) { return r.str(); }

// Formats a sum from (negative?, body) pairs.
std::string join_terms(const std::vector<std::pair<bool, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [neg, body] : parts) {
        if (first) {
            if (neg) os << '-';
            os << body;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << body;
        }
    }
    return os.str();
}

// Body of one printed term: |c| and the symbol factors, joined by '*'.
std::string term_body(const Rational& coeff, const std::string& symbols) {
    const Rational a = abs(coeff);
    if (symbols.empty()) return rational_str(a);
    if (a == 1) return symbols;
    return rational_str(a) + "*" + symbols;
}

} // namespace

// ---- ScalarMonomial ---------------------------------------------------------

ScalarMonomial::ScalarMonomial(std::vector<Pairing> fs) : factors(std::move(fs)) {
    std::sort(factors.begin(), factors.end());
}

int ScalarMonomial::weight() const {
    int w = 0;
    for (const auto& p : factors) w += p.weight();
    return w;
}

int ScalarMonomial::max_order() const {
    int m = -1;
    for (const auto& p : factors) m = std::max(m, p.max_order());
    return m;
}

ScalarMonomial ScalarMonomial::times(const Pairing& p) const {
    ScalarMonomial out = *this;
    out.factors.insert(std::upper_bound(out.factors.begin(), out.factors.end(), p), p);
    return out;
}

ScalarMonomial ScalarMonomial::times(const ScalarMonomial& other) const {
    ScalarMonomial out;
    out.factors.resize(factors.size() + other.factors.size(), Pairing(0, 0));
    std::merge(factors.begin(), factors.end(), other.factors.begin(), other.factors.end(),
               out.factors.begin());
    return out;
}

ScalarMonomial ScalarMonomial::without(std::size_t idx) const {
    ScalarMonomial out = *this;
    out.factors.erase(out.factors.begin() + static_cast<std::ptrdiff_t>(idx));
    return out;
}

bool ScalarMonomial::operator<(const ScalarMonomial& other) const {
    if (factors.size() != other.factors.size()) return factors.size() < other.factors.size();
    return std::lexicographical_compare(factors.begin(), factors.end(), other.factors.begin(),
                                        other.factors.end());
}

// ---- ScalarPoly -------------------------------------------------------------

ScalarPoly::ScalarPoly(Rational c) {
    if (c != 0) terms_.emplace(ScalarMonomial{}, std::move(c));
}

ScalarPoly::ScalarPoly(const ScalarMonomial& m, Rational c) {
    if (c != 0) terms_.emplace(m, std::move(c));
}

ScalarPoly ScalarPoly::pairing(int i, int j) {
    return ScalarPoly(ScalarMonomial({Pairing(i, j)}), Rational(1));
}

bool ScalarPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ScalarPoly::constant_term() const {
    auto it = terms_.find(ScalarMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ScalarPoly::add_term(const ScalarMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

int ScalarPoly::max_order() const {
    int m = -1;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_order());
    return m;
}

// ---- VectorPoly -------------------------------------------------------------

VectorPoly VectorPoly::u(int k) {
    VectorPoly v;
    v.terms_.emplace(k, ScalarPoly::one());
    return v;
}

ScalarPoly VectorPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? ScalarPoly{} : it->second;
}

void VectorPoly::add_term(int k, const ScalarPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VectorPoly VectorPoly::operator-() const {
    VectorPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

VectorPoly& VectorPoly::operator+=(const VectorPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

VectorPoly& VectorPoly::operator-=(const VectorPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

int VectorPoly::max_order() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max({m, k, c.max_order()});
    return m;
}

// ---- BivectorPoly -----------------------------------------------------------

BivectorPoly BivectorPoly::wedge_basis(int k, int l) {
    BivectorPoly w;
    w.add_term(k, l, ScalarPoly::one());
    return w;
}

void BivectorPoly::add_term(int k, int l, const ScalarPoly& c) {
    if (c.is_zero() || k == l) return;
    const bool flip = k > l;
    const Key key = flip ? Key{l, k} : Key{k, l};
    const ScalarPoly value = flip ? -c : c;
    auto [it, inserted] = terms_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivectorPoly BivectorPoly::operator-() const {
    BivectorPoly out;
    for (const auto& [kl, c] : terms_) out.terms_.emplace(kl, -c);
    return out;
}

BivectorPoly& BivectorPoly::operator+=(const BivectorPoly& rhs) {
    for (const auto& [kl, c] : rhs.terms_) add_term(kl.first, kl.second, c);
    return *this;
}

BivectorPoly& BivectorPoly::operator-=(const BivectorPoly& rhs) {
    for (const auto& [kl, c] : rhs.terms_) add_term(kl.first, kl.second, -c);
    return *this;
}

int BivectorPoly::max_order() const {
    int m = -1;
    for (const auto& [kl, c] : terms_) m = std::max({m, kl.second, c.max_order()});
    return m;
}

// ---- cross-kind products ----------------------------------------------------

ScalarPoly contract(const VectorPoly& f, const VectorPoly& g) {
    ScalarPoly out;
    for (const auto& [k, ck] : f.terms())
        for (const auto& [l, dl] : g.terms())
            out += mul_mono(ck * dl, ScalarMonomial({Pairing(k, l)}), Rational(1));
    return out;
}

BivectorPoly wedge(const VectorPoly& f, const VectorPoly& g) {
    BivectorPoly out;
    for (const auto& [k, ck] : f.terms())
        for (const auto& [l, dl] : g.terms()) out.add_term(k, l, ck * dl);
    return out;
}

VectorPoly apply(const BivectorPoly& w, const VectorPoly& f) {
    VectorPoly out;
    for (const auto& [kl, a] : w.terms()) {
        const auto [k, l] = kl;
        for (const auto& [m, cm] : f.terms()) {
            const ScalarPoly ac = a * cm;
            out.add_term(k, mul_mono(ac, ScalarMonomial({Pairing(l, m)}), Rational(1)));
            out.add_term(l, mul_mono(ac, ScalarMonomial({Pairing(k, m)}), Rational(-1)));
        }
    }
    return out;
}

BivectorPoly commutator(const BivectorPoly& w, const BivectorPoly& v) {
    // [u_k^u_l, u_m^u_n] = <u_l,u_m>(u_k^u_n) - <u_l,u_n>(u_k^u_m)
    //                    - <u_k,u_m>(u_l^u_n) + <u_k,u_n>(u_l^u_m)
    BivectorPoly out;
    for (const auto& [kl, a] : w.terms()) {
        const auto [k, l] = kl;
        for (const auto& [mn, b] : v.terms()) {
            const auto [m, n] = mn;
            const ScalarPoly ab = a * b;
            out.add_term(k, n, mul_mono(ab, ScalarMonomial({Pairing(l, m)}), Rational(1)));
            out.add_term(k, m, mul_mono(ab, ScalarMonomial({Pairing(l, n)}), Rational(-1)));
            out.add_term(l, n, mul_mono(ab, ScalarMonomial({Pairing(k, m)}), Rational(-1)));
            out.add_term(l, m, mul_mono(ab, ScalarMonomial({Pairing(k, n)}), Rational(1)));
        }
    }
    return out;
}

// ---- total derivative -------------------------------------------------------

namespace {

// D_x <u_i,u_j> = <u_{i+1},u_j> + <u_i,u_{j+1}>
ScalarPoly d_x_pairing(const Pairing& p) {
    ScalarPoly out;
    out.add_term(ScalarMonomial({Pairing(p.i + 1, p.j)}), Rational(1));
    out.add_term(ScalarMonomial({Pairing(p.i, p.j + 1)}), Rational(1));
    return out;
}

// Leibniz rule over a monomial's factors; runs of equal factors contribute
// once with their multiplicity.
ScalarPoly d_x_monomial(const ScalarMonomial& m) {
    ScalarPoly out;
    for (std::size_t i = 0; i < m.factors.size();) {
        std::size_t j = i;
        while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
        const auto mult = static_cast<long>(j - i);
        out += mul_mono(d_x_pairing(m.factors[i]), m.without(i), Rational(mult));
        i = j;
    }
    return out;
}

} // namespace

ScalarPoly d_x(const ScalarPoly& p) {
    ScalarPoly out;
    for (const auto& [m, c] : p.terms()) out += c * d_x_monomial(m);
    return out;
}

VectorPoly d_x(const VectorPoly& p) {
    VectorPoly out;
    for (const auto& [k, c] : p.terms()) {
        out.add_term(k, d_x(c));
        out.add_term(k + 1, c);
    }
    return out;
}

BivectorPoly d_x(const BivectorPoly& p) {
    BivectorPoly out;
    for (const auto& [kl, a] : p.terms()) {
        const auto [k, l] = kl;
        out.add_term(k, l, d_x(a));
        out.add_term(k + 1, l, a);
        out.add_term(k, l + 1, a);
    }
    return out;
}

ScalarPoly d_x(const ScalarPoly& p, int times) {
    ScalarPoly out = p;
    for (int i = 0; i < times; ++i) out = d_x(out);
    return out;
}

VectorPoly d_x(const VectorPoly& p, int times) {
    VectorPoly out = p;
    for (int i = 0; i < times; ++i) out = d_x(out);
    return out;
}

BivectorPoly d_x(const BivectorPoly& p, int times) {
    BivectorPoly out = p;
    for (int i = 0; i < times; ++i) out = d_x(out);
    return out;
}

// ---- grading ---------------------------------------------------------------

std::optional<int> homogeneous_weight(const ScalarPoly& p) {
    std::optional<int> w;
    for (const auto& [m, c] : p.terms()) {
        const int mw = m.weight();
        if (!w)
            w = mw;
        else if (*w != mw)
            return std::nullopt;
    }
    return w ? w : std::optional<int>(0);
}

std::optional<int> homogeneous_weight(const VectorPoly& p) {
    std::optional<int> w;
    for (const auto& [k, c] : p.terms()) {
        for (const auto& [m, coeff] : c.terms()) {
            const int tw = k + 1 + m.weight();
            if (!w)
                w = tw;
            else if (*w != tw)
                return std::nullopt;
        }
    }
    return w ? w : std::optional<int>(0);
}

std::optional<int> homogeneous_weight(const BivectorPoly& p) {
    std::optional<int> w;
    for (const auto& [kl, c] : p.terms()) {
        for (const auto& [m, coeff] : c.terms()) {
            const int tw = kl.first + 1 + kl.second + 1 + m.weight();
            if (!w)
                w = tw;
            else if (*w != tw)
                return std::nullopt;
        }
    }
    return w ? w : std::optional<int>(0);
}

std::map<int, ScalarPoly> decompose_by_weight(const ScalarPoly& p) {
    std::map<int, ScalarPoly> out;
    for (const auto& [m, c] : p.terms()) out[m.weight()].add_term(m, c);
    return out;
}

std::map<int, BivectorPoly> decompose_by_weight(const BivectorPoly& p) {
    std::map<int, BivectorPoly> out;
    for (const auto& [kl, c] : p.terms())
        for (const auto& [m, coeff] : c.terms())
            out[kl.first + kl.second + 2 + m.weight()].add_term(kl.first, kl.second,
                                                                ScalarPoly(m, coeff));
    return out;
}

namespace {

// Pairings of a given weight, ascending.
std::vector<Pairing> pairings_of_weight(int w) {
    std::vector<Pairing> out;
    for (int i = 0; 2 * i <= w - 2; ++i) out.emplace_back(i, w - 2 - i);
    return out;
}

void enumerate_monomials(int remaining, const Pairing& min_factor, std::vector<Pairing>& current,
                         std::vector<ScalarMonomial>& out) {
    if (remaining == 0) {
        ScalarMonomial m;
        m.factors = current;
        out.push_back(std::move(m));
        return;
    }
    for (int w = 2; w <= remaining; ++w) {
        for (const Pairing& p : pairings_of_weight(w)) {
            if (p < min_factor) continue;
            current.push_back(p);
            enumerate_monomials(remaining - w, p, current, out);
            current.pop_back();
        }
    }
}

} // namespace

std::vector<ScalarMonomial> scalar_monomials_of_weight(int w) {
    std::vector<ScalarMonomial> out;
    if (w < 0) return out;
    std::vector<Pairing> current;
    enumerate_monomials(w, Pairing(0, 0), current, out);
    return out;
}

std::vector<BivectorBasisElement> bivector_basis_of_weight(int w) {
    std::vector<BivectorBasisElement> out;
    for (int k = 0; 2 * k + 3 <= w; ++k) {
        for (int l = k + 1; k + l + 2 <= w; ++l) {
            for (const auto& m : scalar_monomials_of_weight(w - (k + l + 2)))
                out.push_back({m, k, l});
        }
    }
    return out;
}

// ---- formal integration -----------------------------------------------------

namespace {

// Exact solve of A x = b by Gauss elimination. Returns nullopt on an
// inconsistent system; free variables (none are expected here, D_x is
// injective on positive-weight polynomials) are set to zero.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        const Rational inv = a[row][col];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational factor = a[r][col] / inv;
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
            b[r] -= factor * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < row; ++r) x[pivot_col_of_row[r]] = b[r] / a[r][pivot_col_of_row[r]];
    return x;
}

ScalarPoly integrate_homogeneous(const ScalarPoly& p, int w) {
    if (p.is_zero()) return {};
    if (w <= 1)
        throw NotExactError("d_x_inverse: no antiderivative of weight " + std::to_string(w - 1));
    const auto basis = scalar_monomials_of_weight(w - 1);
    if (basis.empty()) throw NotExactError("d_x_inverse: empty ansatz space");

    std::vector<ScalarPoly> columns;
    columns.reserve(basis.size());
    std::map<ScalarMonomial, std::size_t> row_of;
    auto row_index = [&row_of](const ScalarMonomial& m) {
        return row_of.emplace(m, row_of.size()).first->second;
    };
    for (const auto& m : basis) {
        columns.push_back(d_x_monomial(m));
        for (const auto& [tm, tc] : columns.back().terms()) row_index(tm);
    }
    for (const auto& [tm, tc] : p.terms()) row_index(tm);

    std::vector<std::vector<Rational>> a(row_of.size(),
                                         std::vector<Rational>(basis.size(), Rational(0)));
    std::vector<Rational> b(row_of.size(), Rational(0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [tm, tc] : columns[c].terms()) a[row_of.at(tm)][c] = tc;
    for (const auto& [tm, tc] : p.terms()) b[row_of.at(tm)] = tc;

    const auto x = solve_exact(std::move(a), std::move(b));
    if (!x) throw NotExactError("d_x_inverse: scalar input is not a total x-derivative");
    ScalarPoly out;
    for (std::size_t c = 0; c < basis.size(); ++c) out.add_term(basis[c], (*x)[c]);
    return out;
}

BivectorPoly integrate_homogeneous(const BivectorPoly& p, int w) {
    if (p.is_zero()) return {};
    const auto basis = bivector_basis_of_weight(w - 1);
    if (basis.empty())
        throw NotExactError("d_x_inverse: bivector input is not a total x-derivative");

    using Entry = std::pair<BivectorPoly::Key, ScalarMonomial>;
    std::map<Entry, std::size_t> row_of;
    auto row_index = [&row_of](const Entry& e) {
        return row_of.emplace(e, row_of.size()).first->second;
    };
    std::vector<BivectorPoly> columns;
    columns.reserve(basis.size());
    for (const auto& el : basis) {
        BivectorPoly basis_poly;
        basis_poly.add_term(el.k, el.l, ScalarPoly(el.monomial, Rational(1)));
        columns.push_back(d_x(basis_poly));
        for (const auto& [kl, c] : columns.back().terms())
            for (const auto& [m, coeff] : c.terms()) row_index({kl, m});
    }
    for (const auto& [kl, c] : p.terms())
        for (const auto& [m, coeff] : c.terms()) row_index({kl, m});

    std::vector<std::vector<Rational>> a(row_of.size(),
                                         std::vector<Rational>(basis.size(), Rational(0)));
    std::vector<Rational> b(row_of.size(), Rational(0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [kl, poly] : columns[c].terms())
            for (const auto& [m, coeff] : poly.terms()) a[row_of.at({kl, m})][c] = coeff;
    for (const auto& [kl, poly] : p.terms())
        for (const auto& [m, coeff] : poly.terms()) b[row_of.at({kl, m})] = coeff;

    const auto x = solve_exact(std::move(a), std::move(b));
    if (!x) throw NotExactError("d_x_inverse: bivector input is not a total x-derivative");
    BivectorPoly out;
    for (std::size_t c = 0; c < basis.size(); ++c)
        out.add_term(basis[c].k, basis[c].l, ScalarPoly(basis[c].monomial, (*x)[c]));
    return out;
}

} // namespace

ScalarPoly d_x_inverse(const ScalarPoly& p) {
    ScalarPoly out;
    for (const auto& [w, comp] : decompose_by_weight(p)) out += integrate_homogeneous(comp, w);
    return out;
}

BivectorPoly d_x_inverse(const BivectorPoly& p) {
    BivectorPoly out;
    for (const auto& [w, comp] : decompose_by_weight(p)) out += integrate_homogeneous(comp, w);
    return out;
}

// ---- evolutionary derivative -------------------------------------------------

namespace {

// Lazily extended cache of D_x^k(flow).
class FlowDerivatives {
  public:
    explicit FlowDerivatives(const VectorPoly& flow) { cache_.push_back(flow); }

    const VectorPoly& operator[](int k) {
        while (static_cast<int>(cache_.size()) <= k) cache_.push_back(d_x(cache_.back()));
        return cache_[static_cast<std::size_t>(k)];
    }

  private:
    std::vector<VectorPoly> cache_;
};

// D_t <u_i,u_j> = <D_x^i flow, u_j> + <u_i, D_x^j flow>
ScalarPoly d_t_pairing(const Pairing& p, FlowDerivatives& flow) {
    return contract(flow[p.i], VectorPoly::u(p.j)) + contract(VectorPoly::u(p.i), flow[p.j]);
}

ScalarPoly d_t_monomial(const ScalarMonomial& m, FlowDerivatives& flow) {
    ScalarPoly out;
    for (std::size_t i = 0; i < m.factors.size();) {
        std::size_t j = i;
        while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
        const auto mult = static_cast<long>(j - i);
        out += mul_mono(d_t_pairing(m.factors[i], flow), m.without(i), Rational(mult));
        i = j;
    }
    return out;
}

ScalarPoly d_t_scalar(const ScalarPoly& p, FlowDerivatives& flow) {
    ScalarPoly out;
    for (const auto& [m, c] : p.terms()) out += c * d_t_monomial(m, flow);
    return out;
}

} // namespace

ScalarPoly evolutionary_derivative(const ScalarPoly& p, const VectorPoly& flow) {
    FlowDerivatives cache(flow);
    return d_t_scalar(p, cache);
}

VectorPoly evolutionary_derivative(const VectorPoly& p, const VectorPoly& flow) {
    FlowDerivatives cache(flow);
    VectorPoly out;
    for (const auto& [k, c] : p.terms()) {
        out.add_term(k, d_t_scalar(c, cache));
        out += c * cache[k];
    }
    return out;
}

BivectorPoly evolutionary_derivative(const BivectorPoly& p, const VectorPoly& flow) {
    FlowDerivatives cache(flow);
    BivectorPoly out;
    for (const auto& [kl, a] : p.terms()) {
        const auto [k, l] = kl;
        out.add_term(k, l, d_t_scalar(a, cache));
        out += a * wedge(cache[k], VectorPoly::u(l));
        out += a * wedge(VectorPoly::u(k), cache[l]);
    }
    return out;
}

// ---- numeric evaluation -----------------------------------------------------

namespace {

template <typename Real>
const std::vector<Real>& jet_at(const Jet<Real>& jet, int k) {
    if (k < 0 || k >= static_cast<int>(jet.size()))
        throw MissingJetOrderError("evaluate: jet lacks derivative order u" + std::to_string(k));
    return jet[static_cast<std::size_t>(k)];
}

template <typename Real>
Real dot(const std::vector<Real>& a, const std::vector<Real>& b) {
    Real s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <typename Real>
Real eval_scalar(const ScalarPoly& p, const Jet<Real>& jet) {
    Real sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Real term = to_real<Real>(c);
        for (const auto& f : m.factors) term *= dot(jet_at(jet, f.i), jet_at(jet, f.j));
        sum += term;
    }
    return sum;
}

template <typename Real>
std::vector<Real> eval_vector(const VectorPoly& p, const Jet<Real>& jet, int n) {
    std::vector<Real> out(static_cast<std::size_t>(n), Real(0));
    for (const auto& [k, c] : p.terms()) {
        const Real ck = eval_scalar(c, jet);
        const auto& uk = jet_at(jet, k);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += ck * uk[i];
    }
    return out;
}

template <typename Real>
std::vector<std::vector<Real>> eval_bivector(const BivectorPoly& p, const Jet<Real>& jet, int n) {
    std::vector<std::vector<Real>> out(static_cast<std::size_t>(n),
                                       std::vector<Real>(static_cast<std::size_t>(n), Real(0)));
    for (const auto& [kl, c] : p.terms()) {
        const Real a = eval_scalar(c, jet);
        const auto& uk = jet_at(jet, kl.first);
        const auto& ul = jet_at(jet, kl.second);
        for (std::size_t r = 0; r < out.size(); ++r)
            for (std::size_t s = 0; s < out.size(); ++s)
                out[r][s] += a * (uk[r] * ul[s] - ul[r] * uk[s]);
    }
    return out;
}

} // namespace

double evaluate(const ScalarPoly& p, const Jet<double>& jet) { return eval_scalar(p, jet); }
std::vector<double> evaluate(const VectorPoly& p, const Jet<double>& jet, int n) {
    return eval_vector(p, jet, n);
}
std::vector<std::vector<double>> evaluate(const BivectorPoly& p, const Jet<double>& jet, int n) {
    return eval_bivector(p, jet, n);
}

long double evaluate(const ScalarPoly& p, const Jet<long double>& jet) {
    return eval_scalar(p, jet);
}
std::vector<long double> evaluate(const VectorPoly& p, const Jet<long double>& jet, int n) {
    return eval_vector(p, jet, n);
}
std::vector<std::vector<long double>> evaluate(const BivectorPoly& p, const Jet<long double>& jet,
                                               int n) {
    return eval_bivector(p, jet, n);
}

// ---- printing ----------------------------------------------------------------

std::string to_string(const Pairing& p) {
    return "<u" + std::to_string(p.i) + ",u" + std::to_string(p.j) + ">";
}

std::string to_string(const ScalarMonomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.factors.size();) {
        std::size_t j = i;
        while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
        if (!first) os << '*';
        os << to_string(m.factors[i]);
        if (j - i > 1) os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

std::string to_string(const ScalarPoly& p) {
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [m, c] : p.terms())
        parts.emplace_back(c < 0, term_body(c, m.is_one() ? "" : to_string(m)));
    return join_terms(parts);
}

std::string to_string(const VectorPoly& p) {
    std::vector<std::pair<bool, std::string>> parts;
    // derivative order descending, monomials ascending within each order
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const std::string uk = "u" + std::to_string(it->first);
        for (const auto& [m, c] : it->second.terms()) {
            const std::string symbols = m.is_one() ? uk : to_string(m) + "*" + uk;
            parts.emplace_back(c < 0, term_body(c, symbols));
        }
    }
    return join_terms(parts);
}

std::string to_string(const BivectorPoly& p) {
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [kl, poly] : p.terms()) {
        const std::string wedge_str =
            "(u" + std::to_string(kl.first) + "^u" + std::to_string(kl.second) + ")";
        for (const auto& [m, c] : poly.terms()) {
            const std::string symbols = m.is_one() ? wedge_str : to_string(m) + "*" + wedge_str;
            parts.emplace_back(c < 0, term_body(c, symbols));
        }
    }
    return join_terms(parts);
}

} // namespace vmkdv
