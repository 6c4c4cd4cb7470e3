#include "dtn/symbol.hpp"

#include <sstream>

namespace dtn {

XiKey xi_key(const std::vector<int>& exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxTangential)) throw std::invalid_argument("too many xi variables");
    XiKey k = 0;
    int deg = 0;
    for (std::size_t a = 0; a < exponents.size(); ++a) {
        int e = exponents[a];
        if (e < 0 || e > 63) throw std::invalid_argument("xi exponent out of range");
        k |= XiKey(e) << (6 * a);
        deg += e;
    }
    if (deg > 255) throw std::invalid_argument("xi degree out of range");
    return k | (XiKey(deg) << 56);
}

std::vector<int> xi_exponents(XiKey k, int tangential) {
    std::vector<int> e(static_cast<std::size_t>(tangential));
    for (int a = 1; a <= tangential; ++a) e[static_cast<std::size_t>(a - 1)] = xi_exp(k, a);
    return e;
}

XiKey xi_add(XiKey a, XiKey b) { return a + b; }

std::vector<std::vector<int>> multi_indices(int d, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int a = start; a <= d; ++a) {
            cur.push_back(a);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

Integer multi_index_factorial(const std::vector<int>& J) {
    Integer f = 1;
    std::size_t i = 0;
    while (i < J.size()) {
        std::size_t j = i;
        while (j < J.size() && J[j] == J[i]) ++j;
        f *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return f;
}

namespace {

template <class C>
std::string render(const Symbol<C>& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : s.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << jet_to_string(t.coeff) << ")";
        if (t.imag) os << "*i";
        for (int a = 1; a <= s.dim() - 1; ++a) {
            int e = xi_exp(t.xi, a);
            if (e == 1) os << "*xi" << a;
            if (e > 1) os << "*xi" << a << "^" << e;
        }
        if (t.p != 0) os << "*w1^" << t.p;
        if (t.q != 0) os << "*s^" << t.q;
    }
    return os.str();
}

} // namespace

std::string symbol_to_string(const Symbol<AtomPoly>& s) { return render(s); }
std::string symbol_to_string(const Symbol<Rational>& s) { return render(s); }

} // namespace dtn
