#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpzoo/lattice.hpp"
#include "dpzoo/rational.hpp"
#include "dpzoo/rootsys.hpp"

namespace dpzoo {

struct SurfaceConfig {
    PicLattice lattice;
    std::vector<DivisorClass> simple_roots;

    SurfaceConfig(PicLattice lat, std::vector<DivisorClass> roots);
    int degree() const { return lattice.degree(); }
};

struct ClassGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors >= 2, each dividing the next
    // Row-vector change of basis: a class x maps to x * basis_change; the first
    // `diagonal.size()` coordinates live in Z/diagonal[i] (diagonal 1 means trivial),
    // the remaining ones are free.
    IntMatrix basis_change;
    std::vector<Int> diagonal;

    Int torsion_order() const;
    // Coordinates of the image of x: reduced modulo the diagonal in the torsion part.
    std::vector<Int> image(const DivisorClass& x) const;
    bool divisible_by(const DivisorClass& x, Int t) const;
};

enum class NodeColor { Circle, Bullet };

struct DualGraph {
    std::vector<NodeColor> nodes;
    struct Edge {
        int a, b, mult;
        bool operator==(const Edge&) const = default;
    };
    std::vector<Edge> edges;  // a < b, sorted

    int count(NodeColor c) const;
    int multiplicity(int a, int b) const;
    std::string to_dot(const std::string& name = "G") const;
};

// Smith normal form of a k x r integer matrix: returns U-free data (D diagonal, V) with rows
// of M*V spanning the same lattice as diag(D). Only V and D are needed for quotients.
struct SmithForm {
    std::vector<Int> diagonal;
    IntMatrix column_transform;  // V, r x r unimodular
};
SmithForm smith_normal_form(const IntMatrix& m, int columns);

AdeType singularity_type(const SurfaceConfig& cfg);
std::vector<DivisorClass> lines(const SurfaceConfig& cfg);
int picard_rank(const SurfaceConfig& cfg);
ClassGroup class_group(const SurfaceConfig& cfg);
int fano_weil_index(const SurfaceConfig& cfg);
Rational pushforward_self_intersection(const SurfaceConfig& cfg, const DivisorClass& line);
std::vector<DivisorClass> lines_through_component(const SurfaceConfig& cfg, const std::vector<DivisorClass>& component);
bool is_weakly_minimal(const SurfaceConfig& cfg);
std::vector<DivisorClass> conic_bundle_classes(const SurfaceConfig& cfg);
// The same classes as sums E1 + E2 of (-1)-classes with E1.E2 = 1 plus direct nef filtering.
std::vector<DivisorClass> conic_classes_by_decomposition(const SurfaceConfig& cfg);

DualGraph dual_graph(const SurfaceConfig& cfg);
bool graphs_isomorphic(const DualGraph& g1, const DualGraph& g2);

// Place the nodes of `g` as roots (circles) and (-1)-classes (bullets) with the prescribed
// pairings, and keep the first placement whose own line set reproduces the bullets.
std::optional<SurfaceConfig> embed_graph(const PicLattice& lat, const DualGraph& g);

struct OrbitRepresentative {
    SurfaceConfig config;
    bool exact;  // false when orbit identity was decided by fingerprint only
};
std::vector<OrbitRepresentative> enumerate_configs(const PicLattice& lat, int max_roots);

}  // namespace dpzoo
