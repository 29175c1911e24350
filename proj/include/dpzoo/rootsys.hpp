#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dpzoo/lattice.hpp"

namespace dpzoo {

struct RootSet {
    PicLattice lattice;
    std::vector<DivisorClass> roots;  // sorted
};

// All classes x with x.x = self and K.x = k_dot, by exhaustive search inside
// the Cauchy-Schwarz box. Output is sorted.
std::vector<DivisorClass> classes_with(const PicLattice& lat, Int self, Int k_dot);

RootSet enumerate_roots(const PicLattice& lat);
std::vector<DivisorClass> enumerate_minus_one_classes(const PicLattice& lat);

// Simple roots of the full root system of the lattice (empty when it has none).
std::vector<DivisorClass> standard_simple_roots(const PicLattice& lat);

// Orbit closure under the reflections in `generators`. Sorted output.
std::vector<DivisorClass> reflection_orbit(const PicLattice& lat, const std::vector<DivisorClass>& generators,
                                           const std::vector<DivisorClass>& seeds);

// Independent enumerations by reflection closure, used to cross-check the searches above.
std::vector<DivisorClass> roots_by_reflection(const PicLattice& lat);
std::vector<DivisorClass> minus_one_classes_by_reflection(const PicLattice& lat);

// c + (c.R) R
DivisorClass reflect(const PicLattice& lat, const DivisorClass& root, const DivisorClass& c);

struct AdeComponent {
    char kind;  // 'A', 'D' or 'E'
    int rank;
    bool operator==(const AdeComponent&) const = default;
};

class AdeType {
public:
    AdeType() = default;
    explicit AdeType(std::vector<AdeComponent> comps);
    static AdeType parse(const std::string& text);  // "D4+2A1", "E7+A1", "smooth"

    const std::vector<AdeComponent>& components() const { return comps_; }
    bool smooth() const { return comps_.empty(); }
    int rank() const;
    std::string str() const;
    bool operator==(const AdeType&) const = default;

private:
    std::vector<AdeComponent> comps_;  // canonical order: E, D, A; larger rank first
};

class AdeError : public std::runtime_error {
public:
    enum class Kind { NotSimpleNormalCrossing, NotNegativeDefinite, NotARoot, Duplicate };
    AdeError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

// Connected components of the intersection graph, as index lists in increasing order.
std::vector<std::vector<int>> root_components(const PicLattice& lat, const std::vector<DivisorClass>& roots);

AdeType ade_type(const PicLattice& lat, const std::vector<DivisorClass>& simple_roots);

}  // namespace dpzoo
