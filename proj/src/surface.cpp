#include "dpzoo/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dpzoo {

SurfaceConfig::SurfaceConfig(PicLattice lat, std::vector<DivisorClass> roots)
    : lattice(std::move(lat)), simple_roots(std::move(roots)) {
    for (const auto& r : simple_roots)
        if (static_cast<int>(r.size()) != lattice.rank())
            throw std::invalid_argument("SurfaceConfig: class " + to_string(r) + " has the wrong length");
    if (static_cast<int>(simple_roots.size()) > lattice.rank() - 1)
        throw std::invalid_argument("SurfaceConfig: too many simple roots for Picard rank >= 1");
    ade_type(lattice, simple_roots);  // throws on invalid configurations
}

Int ClassGroup::torsion_order() const {
    Int n = 1;
    for (Int t : torsion) n *= t;
    return n;
}

std::vector<Int> ClassGroup::image(const DivisorClass& x) const {
    const std::size_t r = basis_change.size();
    std::vector<Int> y(r, 0);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) y[j] += x[i] * basis_change[i][j];
    for (std::size_t i = 0; i < diagonal.size(); ++i) y[i] = ((y[i] % diagonal[i]) + diagonal[i]) % diagonal[i];
    return y;
}

bool ClassGroup::divisible_by(const DivisorClass& x, Int t) const {
    auto y = image(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        Int mod = i < diagonal.size() ? std::gcd(t, diagonal[i]) : t;
        if (y[i] % mod != 0) return false;
    }
    return true;
}

SmithForm smith_normal_form(const IntMatrix& input, int columns) {
    IntMatrix m = input;
    const int rows = static_cast<int>(m.size());
    IntMatrix v(columns, std::vector<Int>(columns, 0));
    for (int i = 0; i < columns; ++i) v[i][i] = 1;
    auto col_op = [&](int dst, int src, Int f) {  // col dst += f * col src
        for (int i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
        for (int i = 0; i < columns; ++i) v[i][dst] += f * v[i][src];
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (int i = 0; i < columns; ++i) std::swap(v[i][a], v[i][b]);
    };
    std::vector<Int> diag;
    for (int t = 0; t < std::min(rows, columns); ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < columns; ++j)
                    if (m[i][j] != 0 && (pr < 0 || std::abs(m[i][j]) < std::abs(m[pr][pc]))) pr = i, pc = j;
            if (pr < 0) return {diag, v};
            std::swap(m[t], m[pr]);
            col_swap(t, pc);
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                Int q = m[i][t] / m[t][t];
                for (int j = t; j < columns; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < columns; ++j) {
                col_op(j, t, -(m[t][j] / m[t][t]));
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // the pivot must divide the rest of the matrix
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < columns; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < columns; ++j) m[t][j] += m[bad][j];
        }
        diag.push_back(std::abs(m[t][t]));
    }
    return {diag, v};
}

AdeType singularity_type(const SurfaceConfig& cfg) { return ade_type(cfg.lattice, cfg.simple_roots); }

std::vector<DivisorClass> lines(const SurfaceConfig& cfg) {
    // A (-1)-class is a line iff it meets every effective (-2)-curve non-negatively.
    // Positive roots are non-negative combinations of simple roots, so the simple ones suffice.
    std::vector<DivisorClass> out;
    for (auto& e : enumerate_minus_one_classes(cfg.lattice)) {
        bool ok = std::all_of(cfg.simple_roots.begin(), cfg.simple_roots.end(),
                              [&](const DivisorClass& r) { return cfg.lattice.pair(e, r) >= 0; });
        if (ok) out.push_back(std::move(e));
    }
    return out;
}

int picard_rank(const SurfaceConfig& cfg) {
    return cfg.lattice.rank() - static_cast<int>(cfg.simple_roots.size());
}

ClassGroup class_group(const SurfaceConfig& cfg) {
    const int r = cfg.lattice.rank();
    auto snf = smith_normal_form(cfg.simple_roots, r);
    ClassGroup g;
    g.basis_change = snf.column_transform;
    g.diagonal = snf.diagonal;
    g.free_rank = r - static_cast<int>(snf.diagonal.size());
    for (Int d : snf.diagonal)
        if (d >= 2) g.torsion.push_back(d);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

int fano_weil_index(const SurfaceConfig& cfg) {
    auto g = class_group(cfg);
    const auto minus_k = -cfg.lattice.canonical();
    auto y = g.image(minus_k);
    // -K pairs positively with itself, so its free part is nonzero and bounds t.
    Int bound = 0;
    for (std::size_t i = g.diagonal.size(); i < y.size(); ++i) bound = std::gcd(bound, y[i]);
    for (Int t = bound; t > 1; --t)
        if (g.divisible_by(minus_k, t)) return static_cast<int>(t);
    return 1;
}

Rational pushforward_self_intersection(const SurfaceConfig& cfg, const DivisorClass& line) {
    const auto& lat = cfg.lattice;
    const auto& rs = cfg.simple_roots;
    const std::size_t k = rs.size();
    // (E + sum a_i R_i).R_j = 0 for all j
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = lat.pair(rs[i], rs[j]);
        a[i][k] = -lat.pair(line, rs[i]);
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && a[p][c] == 0) ++p;
        if (p == k) throw std::logic_error("pushforward_self_intersection: singular Cartan matrix");
        std::swap(a[c], a[p]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[c][j];
        }
    }
    Rational value = lat.self(line);
    for (std::size_t i = 0; i < k; ++i) value += (a[i][k] / a[i][i]) * lat.pair(line, rs[i]);
    return value;
}

std::vector<DivisorClass> lines_through_component(const SurfaceConfig& cfg,
                                                  const std::vector<DivisorClass>& component) {
    std::set<DivisorClass> wanted(component.begin(), component.end());
    bool found = false;
    for (const auto& members : root_components(cfg.lattice, cfg.simple_roots)) {
        std::set<DivisorClass> have;
        for (int i : members) have.insert(cfg.simple_roots[i]);
        if (have == wanted) found = true;
    }
    if (!found || wanted.size() != component.size())
        throw std::invalid_argument("lines_through_component: not a connected component of the configuration");
    std::vector<DivisorClass> out;
    for (auto& e : lines(cfg))
        if (std::any_of(component.begin(), component.end(),
                        [&](const DivisorClass& r) { return cfg.lattice.pair(e, r) > 0; }))
            out.push_back(std::move(e));
    return out;
}

bool is_weakly_minimal(const SurfaceConfig& cfg) {
    for (const auto& e : lines(cfg)) {
        bool meets = std::any_of(cfg.simple_roots.begin(), cfg.simple_roots.end(),
                                 [&](const DivisorClass& r) { return cfg.lattice.pair(e, r) > 0; });
        if (!meets) return false;
    }
    return true;
}

namespace {

bool nef_against_negative_curves(const SurfaceConfig& cfg, const std::vector<DivisorClass>& ls,
                                 const DivisorClass& f) {
    for (const auto& r : cfg.simple_roots)
        if (cfg.lattice.pair(f, r) < 0) return false;
    for (const auto& e : ls)
        if (cfg.lattice.pair(f, e) < 0) return false;
    return true;
}

}  // namespace

// A fibration of the resolution descends to X exactly when its fibre class
// is orthogonal to every exceptional curve.
static bool descends_to_x(const SurfaceConfig& cfg, const DivisorClass& f) {
    for (const auto& r : cfg.simple_roots)
        if (cfg.lattice.pair(f, r) != 0) return false;
    return true;
}

std::vector<DivisorClass> conic_bundle_classes(const SurfaceConfig& cfg) {
    const auto ls = lines(cfg);
    std::vector<DivisorClass> out;
    for (auto& f : classes_with(cfg.lattice, 0, -2))
        if (descends_to_x(cfg, f) && nef_against_negative_curves(cfg, ls, f)) out.push_back(std::move(f));
    return out;
}

std::vector<DivisorClass> conic_classes_by_decomposition(const SurfaceConfig& cfg) {
    const auto ls = lines(cfg);
    const auto es = enumerate_minus_one_classes(cfg.lattice);
    std::set<DivisorClass> out;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (cfg.lattice.pair(es[i], es[j]) == 1) {
                auto f = es[i] + es[j];
                if (descends_to_x(cfg, f) && nef_against_negative_curves(cfg, ls, f)) out.insert(std::move(f));
            }
    return {out.begin(), out.end()};
}

int DualGraph::count(NodeColor c) const {
    return static_cast<int>(std::count(nodes.begin(), nodes.end(), c));
}

int DualGraph::multiplicity(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges)
        if (e.a == a && e.b == b) return e.mult;
    return 0;
}

std::string DualGraph::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << "  n" << i << " [shape=" << (nodes[i] == NodeColor::Circle ? "circle, label=\"\"" : "point") << "];\n";
    for (const auto& e : edges) {
        os << "  n" << e.a << " -- n" << e.b;
        if (e.mult != 1) os << " [label=\"" << e.mult << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

DualGraph dual_graph(const SurfaceConfig& cfg) {
    std::vector<DivisorClass> all = cfg.simple_roots;
    DualGraph g;
    g.nodes.assign(all.size(), NodeColor::Circle);
    for (auto& e : lines(cfg)) {
        all.push_back(std::move(e));
        g.nodes.push_back(NodeColor::Bullet);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (Int p = cfg.lattice.pair(all[i], all[j]); p != 0)
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(p)});
    return g;
}

namespace {

using Signature = std::pair<NodeColor, std::vector<std::pair<NodeColor, int>>>;

std::vector<Signature> signatures(const DualGraph& g, const std::vector<std::vector<int>>& adj) {
    std::vector<Signature> sig(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        sig[i].first = g.nodes[i];
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            if (adj[i][j] != 0) sig[i].second.emplace_back(g.nodes[j], adj[i][j]);
        std::sort(sig[i].second.begin(), sig[i].second.end());
    }
    return sig;
}

std::vector<std::vector<int>> adjacency(const DualGraph& g) {
    std::vector<std::vector<int>> adj(g.nodes.size(), std::vector<int>(g.nodes.size(), 0));
    for (const auto& e : g.edges) adj[e.a][e.b] = adj[e.b][e.a] = e.mult;
    return adj;
}

}  // namespace

bool graphs_isomorphic(const DualGraph& g1, const DualGraph& g2) {
    const std::size_t n = g1.nodes.size();
    if (n != g2.nodes.size() || g1.edges.size() != g2.edges.size()) return false;
    const auto adj1 = adjacency(g1), adj2 = adjacency(g2);
    const auto sig1 = signatures(g1, adj1), sig2 = signatures(g2, adj2);
    {
        auto s1 = sig1, s2 = sig2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || sig1[i] != sig2[c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = adj1[i][j] == adj2[c][static_cast<std::size_t>(map[j])];
            if (!ok) continue;
            map[i] = static_cast<int>(c);
            used[c] = true;
            if (self(self, i + 1)) return true;
            used[c] = false;
        }
        map[i] = -1;
        return false;
    };
    return extend(extend, 0);
}

std::optional<SurfaceConfig> embed_graph(const PicLattice& lat, const DualGraph& g) {
    const std::size_t n = g.nodes.size();
    const auto adj = adjacency(g);
    // BFS order keeps every new node adjacent to an earlier one where possible.
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        order.push_back(static_cast<int>(s));
        for (std::size_t q = order.size() - 1; q < order.size(); ++q)
            for (std::size_t j = 0; j < n; ++j)
                if (!seen[j] && adj[static_cast<std::size_t>(order[q])][j] != 0) {
                    seen[j] = true;
                    order.push_back(static_cast<int>(j));
                }
    }
    const auto roots = enumerate_roots(lat).roots;
    const auto minus_ones = enumerate_minus_one_classes(lat);
    const auto simple = standard_simple_roots(lat);
    // The first node may be taken up to the Weyl group: one candidate per orbit.
    auto orbit_reps = [&](const std::vector<DivisorClass>& all) {
        std::vector<DivisorClass> reps;
        std::set<DivisorClass> covered;
        for (const auto& c : all) {
            if (covered.count(c)) continue;
            reps.push_back(c);
            for (auto& x : reflection_orbit(lat, simple, {c})) covered.insert(std::move(x));
        }
        return reps;
    };
    std::vector<DivisorClass> assigned(n);
    std::set<DivisorClass> taken;
    std::optional<SurfaceConfig> result;
    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == n) {
            std::vector<DivisorClass> rs, bullets;
            for (std::size_t i = 0; i < n; ++i)
                (g.nodes[i] == NodeColor::Circle ? rs : bullets).push_back(assigned[i]);
            if (static_cast<int>(rs.size()) > lat.rank() - 1) return false;
            SurfaceConfig cfg(lat, rs);
            auto ls = lines(cfg);
            std::sort(bullets.begin(), bullets.end());
            if (ls != bullets) return false;
            result = std::move(cfg);
            return true;
        }
        const int node = order[k];
        const bool circle = g.nodes[static_cast<std::size_t>(node)] == NodeColor::Circle;
        const auto& pool = circle ? roots : minus_ones;
        const auto candidates = k == 0 ? orbit_reps(pool) : pool;
        for (const auto& c : candidates) {
            if (taken.count(c)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int other = order[j];
                ok = lat.pair(c, assigned[static_cast<std::size_t>(other)]) ==
                     adj[static_cast<std::size_t>(node)][static_cast<std::size_t>(other)];
            }
            if (!ok) continue;
            assigned[static_cast<std::size_t>(node)] = c;
            taken.insert(c);
            if (self(self, k + 1)) return true;
            taken.erase(c);
        }
        return false;
    };
    search(search, 0);
    return result;
}

namespace {

using ConfigKey = std::vector<DivisorClass>;  // sorted simple roots

struct Fingerprint {
    std::string type;
    std::size_t num_lines;
    std::vector<Int> torsion;
    std::vector<Signature> graph;
    auto tie() const { return std::tie(type, num_lines, torsion, graph); }
    bool operator<(const Fingerprint& o) const { return tie() < o.tie(); }
};

Fingerprint fingerprint(const SurfaceConfig& cfg) {
    auto g = dual_graph(cfg);
    auto sig = signatures(g, adjacency(g));
    std::sort(sig.begin(), sig.end());
    return {singularity_type(cfg).str(), static_cast<std::size_t>(g.count(NodeColor::Bullet)),
            class_group(cfg).torsion, std::move(sig)};
}

ConfigKey apply_reflection(const PicLattice& lat, const DivisorClass& r, const ConfigKey& s) {
    ConfigKey out;
    out.reserve(s.size());
    for (const auto& c : s) out.push_back(reflect(lat, r, c));
    std::sort(out.begin(), out.end());
    return out;
}

std::set<ConfigKey> config_orbit(const PicLattice& lat, const std::vector<DivisorClass>& gens, const ConfigKey& s) {
    std::set<ConfigKey> seen{s};
    std::vector<const ConfigKey*> queue{&*seen.begin()};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens) {
            auto [it, fresh] = seen.insert(apply_reflection(lat, g, *queue[q]));
            if (fresh) queue.push_back(&*it);
        }
    return seen;
}

}  // namespace

std::vector<OrbitRepresentative> enumerate_configs(const PicLattice& lat, int max_roots) {
    const auto roots = enumerate_roots(lat).roots;
    const auto gens = standard_simple_roots(lat);
    // Full orbits of configurations are only affordable when the Weyl group is small.
    const bool exact = lat.kind() == LatticeKind::Hirzebruch || lat.degree() >= 3;
    max_roots = std::min(max_roots, lat.rank() - 1);

    struct Rep {
        ConfigKey key;
        std::optional<std::set<ConfigKey>> orbit;
    };
    std::vector<OrbitRepresentative> out;
    std::vector<ConfigKey> level{ConfigKey{}};
    out.push_back({SurfaceConfig(lat, {}), true});
    for (int size = 1; size <= max_roots && !level.empty(); ++size) {
        std::map<Fingerprint, std::vector<Rep>> buckets;
        std::vector<ConfigKey> next;
        std::set<ConfigKey> tried;
        for (const auto& base : level) {
            for (const auto& r : roots) {
                bool ok = true;
                for (const auto& s : base) {
                    Int p = lat.pair(r, s);
                    if (r == s || r == -s || (p != 0 && p != 1)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                ConfigKey cand = base;
                cand.push_back(r);
                std::sort(cand.begin(), cand.end());
                if (!tried.insert(cand).second) continue;
                std::optional<SurfaceConfig> cfg;
                try {
                    cfg.emplace(lat, cand);
                } catch (const AdeError&) {
                    continue;
                }
                auto& bucket = buckets[fingerprint(*cfg)];
                bool known = false;
                if (exact) {
                    for (auto& rep : bucket) {
                        if (!rep.orbit) rep.orbit = config_orbit(lat, gens, rep.key);
                        if (rep.orbit->count(cand)) {
                            known = true;
                            break;
                        }
                    }
                } else {
                    known = !bucket.empty();
                }
                if (known) continue;
                bucket.push_back({cand, std::nullopt});
                next.push_back(cand);
                out.push_back({std::move(*cfg), exact});
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace dpzoo
