#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dtn {

enum class AtomKind : std::uint8_t {
    MetricJet = 1,
    PhiJet,
    VJet,
    BoundaryRiemann,
    SecondNormalJet,
    ThirdNormalJet,
    Kappa,
    K0,
    Aux,
};

// A free Taylor coefficient at the base point, packed into one word:
// kind in the top byte, then up to seven index slots of one byte each
// (stored as index + 1, so an empty slot is 0). Numeric order of the
// packed word is the (kind, indices) lexicographic order.
class Atom {
public:
    static constexpr int kMaxIndices = 7;
    static constexpr int kMaxIndexValue = 254;

    constexpr Atom() = default;

    static Atom raw(AtomKind kind, const std::vector<int>& indices);

    // g_{ab, d...}; component and derivative multiset are each sorted.
    static Atom metric_jet(int a, int b, std::vector<int> derivs);
    static Atom phi(std::vector<int> derivs);
    static Atom potential(std::vector<int> derivs);
    static Atom second_normal(int a, int b);
    static Atom third_normal(int a, int b);
    static Atom kappa(int a);
    static Atom k0();
    static Atom aux(int i);
    // Already-canonical Riemann basis atom; use riemann_component() for
    // arbitrary index quadruples.
    static Atom riemann_basis(int a, int b, int c, int d);

    AtomKind kind() const { return static_cast<AtomKind>(code_ >> 56); }
    int arity() const;
    int index(int slot) const;
    std::vector<int> indices() const;
    std::uint64_t code() const { return code_; }

    std::string name() const;
    static Atom parse(std::string_view text);

    auto operator<=>(const Atom&) const = default;

private:
    explicit constexpr Atom(std::uint64_t code) : code_(code) {}
    std::uint64_t code_ = 0;
};

std::string_view kind_name(AtomKind kind);

} // namespace dtn

template <>
struct std::hash<dtn::Atom> {
    std::size_t operator()(const dtn::Atom& a) const noexcept {
        return std::hash<std::uint64_t>{}(a.code());
    }
};
