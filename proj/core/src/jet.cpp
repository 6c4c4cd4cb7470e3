#include "dtn/jet.hpp"

namespace dtn {

MonoKey mono_key(const std::vector<int>& exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxJetDim)) throw std::invalid_argument("too many variables");
    MonoKey k = 0;
    int deg = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        int e = exponents[i];
        if (e < 0 || e > 15) throw std::invalid_argument("jet exponent out of range");
        k |= static_cast<MonoKey>(e) << (4 * i);
        deg += e;
    }
    if (deg > 15) throw std::invalid_argument("jet degree out of range");
    return k | (static_cast<MonoKey>(deg) << 60);
}

std::vector<int> mono_exponents(MonoKey k, int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) e[static_cast<std::size_t>(j - 1)] = mono_exp(k, j);
    return e;
}

Integer mono_factorial(MonoKey k, int n) {
    Integer f = 1;
    for (int j = 1; j <= n; ++j) f *= factorial(mono_exp(k, j));
    return f;
}

namespace {

template <class C>
std::string render(const Jet<C>& j) {
    if (j.is_zero()) return "0";
    std::string s;
    for (const auto& t : j.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(t.second) + ")";
        for (int v = 1; v <= j.dim(); ++v) {
            int e = mono_exp(t.first, v);
            if (e == 0) continue;
            s += "*x" + std::to_string(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace

std::string jet_to_string(const Jet<AtomPoly>& j) { return render(j); }
std::string jet_to_string(const Jet<Rational>& j) { return render(j); }

} // namespace dtn
