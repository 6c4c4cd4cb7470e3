#include "dtn/atom.hpp"

#include "dtn/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtn {

namespace {

constexpr int slot_shift(int slot) { return 48 - 8 * slot; }

struct KindInfo {
    AtomKind kind;
    std::string_view name;
};

constexpr KindInfo kKinds[] = {
    {AtomKind::MetricJet, "g"},       {AtomKind::PhiJet, "phi"},
    {AtomKind::VJet, "V"},            {AtomKind::BoundaryRiemann, "R"},
    {AtomKind::SecondNormalJet, "S"}, {AtomKind::ThirdNormalJet, "T"},
    {AtomKind::Kappa, "kappa"},       {AtomKind::K0, "K0"},
    {AtomKind::Aux, "x"},
};

} // namespace

std::string_view kind_name(AtomKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.name;
    return "?";
}

Atom Atom::raw(AtomKind kind, const std::vector<int>& indices) {
    if (indices.size() > static_cast<std::size_t>(kMaxIndices))
        throw std::invalid_argument("atom has too many indices");
    std::uint64_t code = static_cast<std::uint64_t>(kind) << 56;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        int v = indices[i];
        if (v < 0 || v > kMaxIndexValue) throw std::invalid_argument("atom index out of range");
        code |= static_cast<std::uint64_t>(v + 1) << slot_shift(static_cast<int>(i));
    }
    return Atom(code);
}

Atom Atom::metric_jet(int a, int b, std::vector<int> derivs) {
    if (a > b) std::swap(a, b);
    std::sort(derivs.begin(), derivs.end());
    std::vector<int> idx{a, b};
    idx.insert(idx.end(), derivs.begin(), derivs.end());
    return raw(AtomKind::MetricJet, idx);
}

Atom Atom::phi(std::vector<int> derivs) {
    std::sort(derivs.begin(), derivs.end());
    return raw(AtomKind::PhiJet, derivs);
}

Atom Atom::potential(std::vector<int> derivs) {
    std::sort(derivs.begin(), derivs.end());
    return raw(AtomKind::VJet, derivs);
}

Atom Atom::second_normal(int a, int b) {
    if (a > b) std::swap(a, b);
    return raw(AtomKind::SecondNormalJet, {a, b});
}

Atom Atom::third_normal(int a, int b) {
    if (a > b) std::swap(a, b);
    return raw(AtomKind::ThirdNormalJet, {a, b});
}

Atom Atom::kappa(int a) { return raw(AtomKind::Kappa, {a}); }
Atom Atom::k0() { return raw(AtomKind::K0, {}); }
Atom Atom::aux(int i) { return raw(AtomKind::Aux, {i}); }

Atom Atom::riemann_basis(int a, int b, int c, int d) {
    return raw(AtomKind::BoundaryRiemann, {a, b, c, d});
}

int Atom::arity() const {
    int k = 0;
    while (k < kMaxIndices && ((code_ >> slot_shift(k)) & 0xffu) != 0) ++k;
    return k;
}

int Atom::index(int slot) const {
    return static_cast<int>((code_ >> slot_shift(slot)) & 0xffu) - 1;
}

std::vector<int> Atom::indices() const {
    std::vector<int> out;
    for (int k = 0; k < arity(); ++k) out.push_back(index(k));
    return out;
}

std::string Atom::name() const {
    std::string s(kind_name(kind()));
    if (kind() == AtomKind::K0) return s;
    s += '[';
    auto idx = indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0) s += (kind() == AtomKind::MetricJet && i == 2) ? '|' : ',';
        s += std::to_string(idx[i]);
    }
    s += ']';
    return s;
}

Atom Atom::parse(std::string_view text) {
    auto open = text.find('[');
    std::string_view head = text.substr(0, open);
    const KindInfo* info = nullptr;
    for (const auto& k : kKinds)
        if (k.name == head) info = &k;
    if (info == nullptr) throw ParseError("unknown atom: " + std::string(text));
    if (open == std::string_view::npos) {
        if (info->kind != AtomKind::K0) throw ParseError("missing indices: " + std::string(text));
        return k0();
    }
    if (text.back() != ']') throw ParseError("unterminated atom: " + std::string(text));
    std::vector<int> idx;
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = body.find_first_of(",|", pos);
        if (end == std::string_view::npos) end = body.size();
        std::string tok(body.substr(pos, end - pos));
        if (tok.empty()) throw ParseError("empty atom index: " + std::string(text));
        for (char c : tok)
            if (c < '0' || c > '9') throw ParseError("bad atom index: " + std::string(text));
        idx.push_back(std::stoi(tok));
        pos = end + 1;
    }
    return raw(info->kind, idx);
}

} // namespace dtn
