#pragma once

#include "dtn/gauge.hpp"
#include "dtn/jet.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dtn {

inline constexpr int kMaxTangential = 9;

// Packed xi' exponents: six bits per tangential variable (xi_a at bit
// 6(a-1)) and the xi-degree in the top byte.
using XiKey = std::uint64_t;

inline int xi_degree(XiKey k) { return static_cast<int>(k >> 56); }
inline int xi_exp(XiKey k, int a) { return static_cast<int>((k >> (6 * (a - 1))) & 0x3fu); }
inline XiKey xi_unit(int a) { return (XiKey{1} << 56) | (XiKey{1} << (6 * (a - 1))); }
XiKey xi_key(const std::vector<int>& exponents);
std::vector<int> xi_exponents(XiKey k, int tangential);
XiKey xi_add(XiKey a, XiKey b);

class MissingGradedPart : public std::logic_error {
public:
    explicit MissingGradedPart(int degree)
        : std::logic_error("missing graded part of degree " + std::to_string(degree)), degree(degree) {}
    int degree;
};

// coeff(x) * xi'^xi * w1^p * s_{-1}^q, times i when `imag` is set.
template <class C>
struct SymbolTerm {
    Jet<C> coeff;
    XiKey xi = 0;
    int p = 0;
    int q = 0;
    bool imag = false;

    int degree() const { return xi_degree(xi) + p - q; }
    auto key() const { return std::tuple(q, p, xi, imag); }
};

template <class C>
class Symbol {
public:
    using Term = SymbolTerm<C>;

    Symbol() = default;
    explicit Symbol(int n) : n_(n) {}

    static Symbol single(int n, Jet<C> coeff, XiKey xi, int p, int q, bool imag = false) {
        Symbol s(n);
        if (!coeff.is_zero()) s.terms_.push_back(Term{std::move(coeff), xi, p, q, imag});
        return s;
    }

    static Symbol from_terms(int n, std::vector<Term> terms) {
        Symbol s(n);
        s.terms_ = std::move(terms);
        s.normalize();
        return s;
    }

    int dim() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Symbol& operator+=(const Symbol& o) {
        check(o);
        if (o.terms_.empty()) return *this;
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        normalize();
        return *this;
    }
    Symbol& operator-=(const Symbol& o) {
        check(o);
        if (o.terms_.empty()) return *this;
        for (const auto& t : o.terms_) terms_.push_back(Term{-t.coeff, t.xi, t.p, t.q, t.imag});
        normalize();
        return *this;
    }
    friend Symbol operator+(Symbol a, const Symbol& b) { return a += b; }
    friend Symbol operator-(Symbol a, const Symbol& b) { return a -= b; }

    Symbol operator-() const {
        Symbol s = *this;
        for (auto& t : s.terms_) t.coeff = -t.coeff;
        return s;
    }

    Symbol scaled(const Rational& r) const {
        if (sgn(r) == 0) return Symbol(n_);
        Symbol s = *this;
        for (auto& t : s.terms_) t.coeff.scale(r);
        return s;
    }

    Symbol scaled_by(const C& c) const {
        if (dtn::is_zero(c)) return Symbol(n_);
        Symbol s = *this;
        for (auto& t : s.terms_) t.coeff.scale_by(c);
        s.normalize();
        return s;
    }

    // Multiplies by i^power.
    Symbol times_i(int power) const {
        power = ((power % 4) + 4) % 4;
        Symbol s = *this;
        for (auto& t : s.terms_) {
            bool neg = false;
            for (int k = 0; k < power; ++k) {
                if (t.imag) neg = !neg;
                t.imag = !t.imag;
            }
            if (neg) t.coeff = -t.coeff;
        }
        s.normalize();
        return s;
    }

    // Multiplies by w1^dp.
    Symbol shift_p(int dp) const {
        Symbol s = *this;
        for (auto& t : s.terms_) t.p += dp;
        return s;
    }

    friend Symbol operator*(const Symbol& a, const Symbol& b) {
        a.check(b);
        Symbol out(a.n_);
        if (a.terms_.empty() || b.terms_.empty()) return out;
        out.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                Jet<C> c = x.coeff * y.coeff;
                if (c.is_zero()) continue;
                bool imag = x.imag != y.imag;
                if (x.imag && y.imag) c = -c;
                out.terms_.push_back(Term{std::move(c), xi_add(x.xi, y.xi), x.p + y.p, x.q + y.q, imag});
            }
        out.normalize();
        return out;
    }

    Symbol homogeneous_part(int d) const {
        Symbol s(n_);
        for (const auto& t : terms_)
            if (t.degree() == d) s.terms_.push_back(t);
        return s;
    }

    Symbol imaginary_part() const {
        Symbol s(n_);
        for (const auto& t : terms_)
            if (t.imag) s.terms_.push_back(t);
        return s;
    }

    Symbol truncated(int order) const {
        Symbol s(n_);
        for (const auto& t : terms_) {
            Jet<C> c = t.coeff.truncated(order);
            if (!c.is_zero()) s.terms_.push_back(Term{std::move(c), t.xi, t.p, t.q, t.imag});
        }
        return s;
    }

    Symbol restricted_to_boundary() const {
        Symbol s(n_);
        for (const auto& t : terms_) {
            Jet<C> c = restrict_to_boundary(t.coeff);
            if (!c.is_zero()) s.terms_.push_back(Term{std::move(c), t.xi, t.p, t.q, t.imag});
        }
        return s;
    }

    // Lowest jet order over the terms (the order the symbol is known to).
    int min_order() const {
        int o = 1 << 20;
        for (const auto& t : terms_) o = std::min(o, t.coeff.order());
        return o;
    }

    // Structural equality of the term lists, ignoring jet truncation labels.
    bool same_terms(const Symbol& o) const {
        if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& a = terms_[i];
            const auto& b = o.terms_[i];
            if (a.key() != b.key() || a.coeff.terms() != b.coeff.terms()) return false;
        }
        return true;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.key() < b.key(); });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms_.size();) {
            std::size_t s = r + 1;
            while (s < terms_.size() && terms_[s].key() == terms_[r].key()) {
                terms_[r].coeff += terms_[s].coeff;
                ++s;
            }
            if (!terms_[r].coeff.is_zero()) {
                if (w != r) terms_[w] = std::move(terms_[r]);
                ++w;
            }
            r = s;
        }
        terms_.resize(w);
    }

private:
    void check(const Symbol& o) const {
        if (n_ != o.n_) throw DimensionMismatch();
    }

    int n_ = 0;
    std::vector<Term> terms_;
};

template <class C>
Symbol<C> sym_add(const Symbol<C>& a, const Symbol<C>& b) { return a + b; }
template <class C>
Symbol<C> sym_scale(const Symbol<C>& a, const Rational& r) { return a.scaled(r); }
template <class C>
Symbol<C> sym_mul(const Symbol<C>& a, const Symbol<C>& b) { return a * b; }
template <class C>
Symbol<C> homogeneous_part(const Symbol<C>& a, int d) { return a.homogeneous_part(d); }

// Inverse-metric data the differentiation rules of w1 and s_{-1} need.
template <class C>
struct SymbolContext {
    int n = 0;
    bool boundary = false;
    std::vector<Jet<C>> ginv;  // tangential block, (n-1)^2
    // quad[j]: sum_{a,b} d_j g^{ab} xi_a xi_b as (xi-key, jet) pairs.
    std::vector<std::vector<std::pair<XiKey, Jet<C>>>> quad;
    // raised[a]: xi^a = sum_b g^{ab} xi_b as (xi-key, jet) pairs.
    std::vector<std::vector<std::pair<XiKey, Jet<C>>>> raised;
};

// Context built from full jets (x_n dependence kept) or from jets
// restricted to the boundary x_n = 0.
template <class C>
SymbolContext<C> make_symbol_context(const GaugeJets<C>& jets, bool boundary) {
    SymbolContext<C> ctx;
    int n = jets.n;
    int d = n - 1;
    if (d > kMaxTangential) throw std::invalid_argument("too many tangential variables for the symbol algebra");
    ctx.n = n;
    ctx.boundary = boundary;
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            Jet<C> x = jets.inverse(a, b);
            if (boundary) x = restrict_to_boundary(x);
            ctx.ginv.push_back(std::move(x));
        }
    auto gi = [&](int a, int b) -> const Jet<C>& { return ctx.ginv[static_cast<std::size_t>((a - 1) * d + (b - 1))]; };
    ctx.quad.resize(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n; ++j) {
        if (boundary && j == n) continue;
        for (int a = 1; a <= d; ++a)
            for (int b = a; b <= d; ++b) {
                Jet<C> dj = gi(a, b).derivative(j);
                if (dj.is_zero()) continue;
                if (a != b) dj.scale(Rational(2));
                ctx.quad[static_cast<std::size_t>(j)].emplace_back(xi_add(xi_unit(a), xi_unit(b)), std::move(dj));
            }
    }
    ctx.raised.resize(static_cast<std::size_t>(n));
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b)
            if (!gi(a, b).is_zero()) ctx.raised[static_cast<std::size_t>(a)].emplace_back(xi_unit(b), gi(a, b));
    return ctx;
}

// d/dx_j, Leibniz over the jet coefficient, w1^p and s_{-1}^q with
// d_j w1^p = (p/2) w1^{p-2} sum g^{ab}_{,j} xi_a xi_b and
// d_j s_{-1}^q = -q s_{-1}^{q+1} d_j w1, where s_{-1} = (w1 - tau)^{-1}.
template <class C>
Symbol<C> sym_dx(const Symbol<C>& a, int j, const SymbolContext<C>& ctx) {
    if (ctx.boundary && j == ctx.n) throw std::invalid_argument("normal derivative in a boundary context");
    using Term = SymbolTerm<C>;
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        int ord = t.coeff.order() - 1;
        if (ord < 0) throw OrderTooLow("x-derivative of an order-0 symbol coefficient");
        Jet<C> dc = t.coeff.derivative(j);
        if (!dc.is_zero()) out.push_back(Term{std::move(dc), t.xi, t.p, t.q, t.imag});
        if (t.p == 0 && t.q == 0) continue;
        for (const auto& [key, jet] : ctx.quad[static_cast<std::size_t>(j)]) {
            Jet<C> prod = Jet<C>::multiply(t.coeff, jet, ord);
            if (prod.is_zero()) continue;
            if (t.p != 0) {
                Jet<C> c = prod;
                c.scale(make_rational(t.p, 2));
                out.push_back(Term{std::move(c), xi_add(t.xi, key), t.p - 2, t.q, t.imag});
            }
            if (t.q != 0) {
                Jet<C> c = prod;
                c.scale(make_rational(-t.q, 2));
                out.push_back(Term{std::move(c), xi_add(t.xi, key), t.p - 1, t.q + 1, t.imag});
            }
        }
    }
    return Symbol<C>::from_terms(a.dim(), std::move(out));
}

// d/dxi_a with d w1^p = p w1^{p-2} xi^a and d s_{-1}^q = -q s_{-1}^{q+1} w1^{-1} xi^a.
template <class C>
Symbol<C> sym_dxi(const Symbol<C>& a, int alpha, const SymbolContext<C>& ctx) {
    using Term = SymbolTerm<C>;
    std::vector<Term> out;
    XiKey unit = xi_unit(alpha);
    for (const auto& t : a.terms()) {
        int e = xi_exp(t.xi, alpha);
        if (e > 0) {
            Jet<C> c = t.coeff;
            c.scale(Rational(e));
            out.push_back(Term{std::move(c), t.xi - unit, t.p, t.q, t.imag});
        }
        if (t.p == 0 && t.q == 0) continue;
        for (const auto& [key, jet] : ctx.raised[static_cast<std::size_t>(alpha)]) {
            Jet<C> prod = Jet<C>::multiply(t.coeff, jet, t.coeff.order());
            if (prod.is_zero()) continue;
            if (t.p != 0) {
                Jet<C> c = prod;
                c.scale(Rational(t.p));
                out.push_back(Term{std::move(c), xi_add(t.xi, key), t.p - 2, t.q, t.imag});
            }
            if (t.q != 0) {
                Jet<C> c = prod;
                c.scale(Rational(-t.q));
                out.push_back(Term{std::move(c), xi_add(t.xi, key), t.p - 1, t.q + 1, t.imag});
            }
        }
    }
    return Symbol<C>::from_terms(a.dim(), std::move(out));
}

// Graded parts indexed by homogeneity degree, with cached derivatives
// d_xi^J and d_x'^J (J a sorted list of tangential indices).
template <class C>
class GradedFamily {
public:
    explicit GradedFamily(const SymbolContext<C>* ctx) : ctx_(ctx) {}

    void set(int degree, Symbol<C> s) {
        parts_[degree] = std::move(s);
        for (auto it = dxi_.begin(); it != dxi_.end();)
            it = it->first.first == degree ? dxi_.erase(it) : std::next(it);
        for (auto it = dx_.begin(); it != dx_.end();)
            it = it->first.first == degree ? dx_.erase(it) : std::next(it);
    }
    bool has(int degree) const { return parts_.count(degree) != 0; }
    const Symbol<C>& part(int degree) const {
        auto it = parts_.find(degree);
        if (it == parts_.end()) throw MissingGradedPart(degree);
        return it->second;
    }
    const std::map<int, Symbol<C>>& parts() const { return parts_; }
    const SymbolContext<C>& context() const { return *ctx_; }

    const Symbol<C>& dxi(int degree, const std::vector<int>& J) { return cached(dxi_, degree, J, true); }
    const Symbol<C>& dx(int degree, const std::vector<int>& J) { return cached(dx_, degree, J, false); }

private:
    using Key = std::pair<int, std::vector<int>>;

    const Symbol<C>& cached(std::map<Key, Symbol<C>>& cache, int degree, const std::vector<int>& J, bool xi) {
        if (J.empty()) return part(degree);
        Key key(degree, J);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::vector<int> head(J.begin(), J.end() - 1);
        const Symbol<C>& base = cached(cache, degree, head, xi);
        Symbol<C> d = xi ? sym_dxi(base, J.back(), *ctx_) : sym_dx(base, J.back(), *ctx_);
        return cache.emplace(std::move(key), std::move(d)).first->second;
    }

    const SymbolContext<C>* ctx_;
    std::map<int, Symbol<C>> parts_;
    std::map<Key, Symbol<C>> dxi_;
    std::map<Key, Symbol<C>> dx_;
};

// Sorted tangential index lists of length r over 1..d.
std::vector<std::vector<int>> multi_indices(int d, int r);
// J! for a sorted index list.
Integer multi_index_factorial(const std::vector<int>& J);

// sum over (j, k) in the given degree ranges and |J| = j + k + m of
// (-i)^{|J|}/J! d_xi^J f_j d_x'^J g_k. Pairs listed in `skip` are left out.
template <class C>
Symbol<C> product_expansion(GradedFamily<C>& f, GradedFamily<C>& g, int m, int j_lo, int j_hi, int k_lo, int k_hi,
                            const std::vector<std::pair<int, int>>& skip = {}) {
    int n = f.context().n;
    Symbol<C> total(n);
    std::vector<SymbolTerm<C>> acc;
    for (int j = j_lo; j <= j_hi; ++j)
        for (int k = k_lo; k <= k_hi; ++k) {
            int r = j + k + m;
            if (r < 0) continue;
            if (std::find(skip.begin(), skip.end(), std::pair(j, k)) != skip.end()) continue;
            if (!f.has(j)) throw MissingGradedPart(j);
            if (!g.has(k)) throw MissingGradedPart(k);
            for (const auto& J : multi_indices(n - 1, r)) {
                const Symbol<C>& a = f.dxi(j, J);
                if (a.is_zero()) continue;
                const Symbol<C>& b = g.dx(k, J);
                if (b.is_zero()) continue;
                Symbol<C> prod = (a * b).scaled(ratio(1, multi_index_factorial(J)));
                // (-i)^r = i^{3r}
                if (r % 4 != 0) prod = prod.times_i(3 * r);
                for (auto& t : prod.terms()) acc.push_back(t);
            }
        }
    return Symbol<C>::from_terms(n, std::move(acc));
}

std::string symbol_to_string(const Symbol<AtomPoly>& s);
std::string symbol_to_string(const Symbol<Rational>& s);

} // namespace dtn
