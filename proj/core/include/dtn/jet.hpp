#pragma once

#include "dtn/atom_poly.hpp"
#include "dtn/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtn {

inline constexpr int kMaxJetDim = 15;

// Packed exponent vector of a Taylor monomial in x_1..x_n: four bits per
// variable (x_j at bit 4(j-1)) and the total degree in the top nibble, so
// adding keys multiplies monomials and key order is graded.
using MonoKey = std::uint64_t;

inline int mono_degree(MonoKey k) { return static_cast<int>(k >> 60); }
inline int mono_exp(MonoKey k, int var) { return static_cast<int>((k >> (4 * (var - 1))) & 0xfu); }
inline MonoKey mono_unit(int var) { return (MonoKey{1} << 60) | (MonoKey{1} << (4 * (var - 1))); }
MonoKey mono_key(const std::vector<int>& exponents);
std::vector<int> mono_exponents(MonoKey k, int n);
// mu! = prod mu_j!
Integer mono_factorial(MonoKey k, int n);

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch() : std::invalid_argument("dimension mismatch") {}
};

class OrderTooLow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Truncated Taylor expansion at the base point with coefficients in C.
// Coefficients are Taylor coefficients: the jet of f stores
// d^mu f(0) / mu! under key mu.
template <class C>
class Jet {
public:
    using Term = std::pair<MonoKey, C>;

    Jet() = default;
    Jet(int n, int order) : n_(n), order_(order) {
        if (n < 1 || n > kMaxJetDim) throw std::invalid_argument("jet dimension out of range");
    }

    static Jet constant(int n, int order, const C& c) {
        Jet j(n, order);
        if (order >= 0 && !dtn::is_zero(c)) j.terms_.emplace_back(MonoKey{0}, c);
        return j;
    }

    static Jet monomial(int n, int order, MonoKey key, const C& c) {
        Jet j(n, order);
        if (mono_degree(key) <= order && !dtn::is_zero(c)) j.terms_.emplace_back(key, c);
        return j;
    }

    static Jet from_terms(int n, int order, std::vector<Term> terms) {
        Jet j(n, order);
        j.terms_ = std::move(terms);
        j.normalize();
        return j;
    }

    int dim() const { return n_; }
    int order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coefficient(MonoKey key) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, MonoKey k) { return t.first < k; });
        if (it != terms_.end() && it->first == key) return it->second;
        return C(0);
    }

    C value() const { return coefficient(MonoKey{0}); }

    // Partial derivative d^mu at the origin.
    C derivative_at_origin(const std::vector<int>& exponents) const {
        MonoKey k = mono_key(exponents);
        C c = coefficient(k);
        if (dtn::is_zero(c)) return c;
        return C(c * Rational(mono_factorial(k, n_)));
    }

    void add_term(MonoKey key, const C& c) {
        if (mono_degree(key) > order_ || dtn::is_zero(c)) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, MonoKey k) { return t.first < k; });
        if (it != terms_.end() && it->first == key) {
            it->second += c;
            if (dtn::is_zero(it->second)) terms_.erase(it);
        } else {
            terms_.insert(it, Term(key, c));
        }
    }

    Jet truncated(int order) const {
        Jet j(n_, std::min(order, order_));
        for (const auto& t : terms_)
            if (mono_degree(t.first) <= j.order_) j.terms_.push_back(t);
        return j;
    }

    Jet& operator+=(const Jet& o) { return combine(o, false); }
    Jet& operator-=(const Jet& o) { return combine(o, true); }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    Jet operator-() const {
        Jet j = *this;
        for (auto& t : j.terms_) t.second = C(-t.second);
        return j;
    }

    Jet& scale_by(const C& c) {
        if (dtn::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second = C(t.second * c);
        return *this;
    }

    Jet& scale(const Rational& r) {
        if (sgn(r) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second = C(t.second * r);
        return *this;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        if (a.n_ != b.n_) throw DimensionMismatch();
        return multiply(a, b, std::min(a.order_, b.order_));
    }

    // Product truncated at `order` (<= min of the factor orders).
    static Jet multiply(const Jet& a, const Jet& b, int order) {
        if (a.n_ != b.n_) throw DimensionMismatch();
        Jet out(a.n_, order);
        if (a.terms_.empty() || b.terms_.empty() || order < 0) return out;
        if (a.terms_.size() == 1 && a.terms_[0].first == 0) {
            for (const auto& t : b.terms_) {
                if (mono_degree(t.first) > order) break;
                out.terms_.emplace_back(t.first, C(a.terms_[0].second * t.second));
            }
            return out;
        }
        if (b.terms_.size() == 1 && b.terms_[0].first == 0) {
            for (const auto& t : a.terms_) {
                if (mono_degree(t.first) > order) break;
                out.terms_.emplace_back(t.first, C(t.second * b.terms_[0].second));
            }
            return out;
        }
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_) {
            int dx = mono_degree(x.first);
            if (dx > order) break;
            for (const auto& y : b.terms_) {
                if (dx + mono_degree(y.first) > order) break;
                acc.emplace_back(x.first + y.first, C(x.second * y.second));
            }
        }
        out.terms_ = std::move(acc);
        out.normalize();
        return out;
    }

    Jet derivative(int var) const {
        if (var < 1 || var > n_) throw std::out_of_range("jet derivative variable");
        Jet out(n_, order_ - 1);
        MonoKey unit = mono_unit(var);
        for (const auto& t : terms_) {
            int e = mono_exp(t.first, var);
            if (e == 0) continue;
            out.terms_.emplace_back(t.first - unit, C(t.second * Rational(e)));
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return out;
    }

    // Sets x_var = 0.
    Jet restricted(int var) const {
        Jet out(n_, order_);
        for (const auto& t : terms_)
            if (mono_exp(t.first, var) == 0) out.terms_.push_back(t);
        return out;
    }

    bool depends_on(int var) const {
        for (const auto& t : terms_)
            if (mono_exp(t.first, var) != 0) return true;
        return false;
    }

    template <class D, class F>
    Jet<D> map(F&& f) const {
        std::vector<typename Jet<D>::Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.emplace_back(t.first, f(t.second));
        return Jet<D>::from_terms(n_, order_, std::move(out));
    }

    bool operator==(const Jet& o) const {
        return n_ == o.n_ && order_ == o.order_ && terms_ == o.terms_;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms_.size();) {
            std::size_t s = r + 1;
            while (s < terms_.size() && terms_[s].first == terms_[r].first) {
                terms_[r].second += terms_[s].second;
                ++s;
            }
            if (mono_degree(terms_[r].first) <= order_ && !dtn::is_zero(terms_[r].second)) {
                if (w != r) terms_[w] = std::move(terms_[r]);
                ++w;
            }
            r = s;
        }
        terms_.resize(w);
    }

    Jet& combine(const Jet& o, bool subtract) {
        if (n_ != o.n_) throw DimensionMismatch();
        int order = std::min(order_, o.order_);
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        auto push = [&](MonoKey k, C c) {
            if (mono_degree(k) <= order) out.emplace_back(k, std::move(c));
        };
        while (i != terms_.end() && j != o.terms_.end()) {
            if (i->first < j->first) {
                push(i->first, std::move(i->second));
                ++i;
            } else if (j->first < i->first) {
                push(j->first, subtract ? C(-j->second) : j->second);
                ++j;
            } else {
                C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
                if (!dtn::is_zero(c)) push(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        for (; i != terms_.end(); ++i) push(i->first, std::move(i->second));
        for (; j != o.terms_.end(); ++j) push(j->first, subtract ? C(-j->second) : j->second);
        terms_ = std::move(out);
        order_ = order;
        return *this;
    }

    int n_ = 1;
    int order_ = 0;
    std::vector<Term> terms_;
};

template <class C>
Jet<C> jet_mul(const Jet<C>& a, const Jet<C>& b) { return a * b; }

template <class C>
Jet<C> jet_derivative(const Jet<C>& a, int var) { return a.derivative(var); }

// Substitutes x_n = 0 where n is the jet dimension.
template <class C>
Jet<C> restrict_to_boundary(const Jet<C>& a) { return a.restricted(a.dim()); }

std::string jet_to_string(const Jet<AtomPoly>& j);
std::string jet_to_string(const Jet<Rational>& j);

} // namespace dtn
