#include "dpzoo/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <regex>
#include <set>

namespace dpzoo {

namespace {

Int isqrt(Int v) {
    if (v < 0) return -1;
    auto r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Fill b[pos..] with integers of total `sum` and sum of squares `sq`.
void fill_tail(std::vector<Int>& b, std::size_t pos, Int sum, Int sq, const std::function<void()>& emit) {
    const Int m = static_cast<Int>(b.size() - pos);
    if (m == 0) {
        if (sum == 0 && sq == 0) emit();
        return;
    }
    // Cauchy-Schwarz and parity (b^2 = b mod 2) prune infeasible tails.
    if (sq < 0 || sum * sum > m * sq || ((sum - sq) % 2) != 0) return;
    const Int lim = isqrt(sq);
    for (Int v = -lim; v <= lim; ++v) {
        b[pos] = v;
        fill_tail(b, pos + 1, sum - v, sq - v * v, emit);
    }
}

std::vector<DivisorClass> blowup_classes(const PicLattice& lat, Int self, Int k_dot) {
    // x = a h - sum b_i e_i:  sum b_i = 3a + k,  sum b_i^2 = a^2 - s.
    // Cauchy-Schwarz (3a+k)^2 <= n (a^2 - s) gives d a^2 + 6k a + (k^2 + n s) <= 0.
    const Int n = lat.parameter();
    const Int d = 9 - n;
    const Int qb = 6 * k_dot, qc = k_dot * k_dot + n * self;
    const double disc = static_cast<double>(qb * qb - 4 * d * qc);
    std::vector<DivisorClass> out;
    if (disc < 0) return out;
    const double r = std::sqrt(disc);
    const auto lo = static_cast<Int>(std::floor((-static_cast<double>(qb) - r) / (2.0 * d))) - 1;
    const auto hi = static_cast<Int>(std::ceil((-static_cast<double>(qb) + r) / (2.0 * d))) + 1;
    std::vector<Int> b(static_cast<std::size_t>(n));
    for (Int a = lo; a <= hi; ++a) {
        if (d * a * a + qb * a + qc > 0) continue;
        fill_tail(b, 0, 3 * a + k_dot, a * a - self, [&] {
            DivisorClass x(static_cast<std::size_t>(n + 1));
            x[0] = a;
            for (Int i = 0; i < n; ++i) x[static_cast<std::size_t>(i + 1)] = -b[static_cast<std::size_t>(i)];
            out.push_back(std::move(x));
        });
    }
    return out;
}

std::vector<DivisorClass> hirzebruch_classes(const PicLattice& lat, Int self, Int k_dot) {
    // x = (a, b): K.x = -2a + (m-2) b,  x.x = 2ab - m b^2.
    // Either way 2b^2 - 2cb + s = 0 with c = -k/2, and a = c - b (m = 0) or a = c (m = 2).
    std::vector<DivisorClass> out;
    if (k_dot % 2 != 0) return out;
    const Int m = lat.parameter();
    const Int c = -k_dot / 2;
    const Int disc = 4 * c * c - 8 * self;
    const Int sq = isqrt(disc);
    if (sq < 0 || sq * sq != disc) return out;
    std::set<Int> bs;
    for (Int num : {2 * c + sq, 2 * c - sq})
        if (num % 4 == 0) bs.insert(num / 4);
    for (Int b : bs) out.push_back({m == 0 ? c - b : c, b});
    return out;
}

}  // namespace

std::vector<DivisorClass> classes_with(const PicLattice& lat, Int self, Int k_dot) {
    auto out = lat.kind() == LatticeKind::BlowUp ? blowup_classes(lat, self, k_dot)
                                                  : hirzebruch_classes(lat, self, k_dot);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RootSet enumerate_roots(const PicLattice& lat) { return RootSet{lat, classes_with(lat, -2, 0)}; }

std::vector<DivisorClass> enumerate_minus_one_classes(const PicLattice& lat) { return classes_with(lat, -1, -1); }

std::vector<DivisorClass> standard_simple_roots(const PicLattice& lat) {
    std::vector<DivisorClass> s;
    if (lat.kind() == LatticeKind::Hirzebruch) {
        s.push_back(lat.parameter() == 0 ? DivisorClass{1, -1} : DivisorClass{0, 1});
        return s;
    }
    const int n = lat.parameter();
    for (int i = 1; i < n; ++i) s.push_back(lat.basis(i) - lat.basis(i + 1));
    if (n >= 3) s.push_back(lat.basis(0) - lat.basis(1) - lat.basis(2) - lat.basis(3));
    return s;
}

DivisorClass reflect(const PicLattice& lat, const DivisorClass& root, const DivisorClass& c) {
    if (lat.self(root) != -2) throw std::invalid_argument("reflect: " + to_string(root) + " is not a (-2)-class");
    return c + lat.pair(c, root) * root;
}

std::vector<DivisorClass> reflection_orbit(const PicLattice& lat, const std::vector<DivisorClass>& generators,
                                           const std::vector<DivisorClass>& seeds) {
    std::set<DivisorClass> seen(seeds.begin(), seeds.end());
    std::deque<DivisorClass> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        DivisorClass c = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            auto img = reflect(lat, g, c);
            if (seen.insert(img).second) queue.push_back(std::move(img));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<DivisorClass> roots_by_reflection(const PicLattice& lat) {
    auto simple = standard_simple_roots(lat);
    return reflection_orbit(lat, simple, simple);
}

std::vector<DivisorClass> minus_one_classes_by_reflection(const PicLattice& lat) {
    if (lat.kind() == LatticeKind::Hirzebruch || lat.parameter() == 0) return {};
    std::vector<DivisorClass> seeds{lat.basis(1)};
    // Degree 7 is the one case where the (-1)-classes form two Weyl orbits.
    if (lat.parameter() == 2) seeds.push_back(lat.basis(0) - lat.basis(1) - lat.basis(2));
    return reflection_orbit(lat, standard_simple_roots(lat), seeds);
}

AdeType::AdeType(std::vector<AdeComponent> comps) : comps_(std::move(comps)) {
    auto order = [](char k) { return k == 'E' ? 0 : k == 'D' ? 1 : 2; };
    std::sort(comps_.begin(), comps_.end(), [&](const AdeComponent& x, const AdeComponent& y) {
        if (order(x.kind) != order(y.kind)) return order(x.kind) < order(y.kind);
        return x.rank > y.rank;
    });
}

AdeType AdeType::parse(const std::string& text) {
    if (text == "smooth" || text.empty()) return {};
    static const std::regex token(R"(\+?([0-9]*)([ADE])([0-9]+))");
    std::vector<AdeComponent> comps;
    std::size_t pos = 0;
    std::smatch m;
    while (pos < text.size()) {
        auto it = text.cbegin() + static_cast<std::ptrdiff_t>(pos);
        if (!std::regex_search(it, text.cend(), m, token, std::regex_constants::match_continuous))
            throw std::invalid_argument("bad singularity type '" + text + "' at position " + std::to_string(pos));
        int mult = m[1].length() ? std::stoi(m[1]) : 1;
        AdeComponent c{m[2].str()[0], std::stoi(m[3])};
        bool ok = c.rank >= 1 && (c.kind != 'D' || c.rank >= 4) && (c.kind != 'E' || (c.rank >= 6 && c.rank <= 8));
        if (!ok || mult < 1) throw std::invalid_argument("bad singularity type '" + text + "'");
        for (int i = 0; i < mult; ++i) comps.push_back(c);
        pos += static_cast<std::size_t>(m.length());
    }
    return AdeType(std::move(comps));
}

int AdeType::rank() const {
    int r = 0;
    for (const auto& c : comps_) r += c.rank;
    return r;
}

std::string AdeType::str() const {
    if (comps_.empty()) return "smooth";
    std::string s;
    for (std::size_t i = 0; i < comps_.size();) {
        std::size_t j = i;
        while (j < comps_.size() && comps_[j] == comps_[i]) ++j;
        if (!s.empty()) s += '+';
        if (j - i > 1) s += std::to_string(j - i);
        s += comps_[i].kind + std::to_string(comps_[i].rank);
        i = j;
    }
    return s;
}

std::vector<std::vector<int>> root_components(const PicLattice& lat, const std::vector<DivisorClass>& roots) {
    const int n = static_cast<int>(roots.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t q = 0; q < members.size(); ++q)
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && lat.pair(roots[members[q]], roots[j]) != 0) {
                    comp[j] = comp[s];
                    members.push_back(j);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

AdeType ade_type(const PicLattice& lat, const std::vector<DivisorClass>& simple_roots) {
    const int n = static_cast<int>(simple_roots.size());
    for (int i = 0; i < n; ++i) {
        const auto& r = simple_roots[i];
        if (lat.self(r) != -2 || lat.dot_k(r) != 0)
            throw AdeError(AdeError::Kind::NotARoot, "ade_type: " + to_string(r) + " is not a root");
        for (int j = 0; j < i; ++j) {
            if (simple_roots[j] == r)
                throw AdeError(AdeError::Kind::Duplicate, "ade_type: duplicate root " + to_string(r));
            Int p = lat.pair(simple_roots[j], r);
            if (p != 0 && p != 1)
                throw AdeError(AdeError::Kind::NotSimpleNormalCrossing,
                               "ade_type: roots " + to_string(simple_roots[j]) + " and " + to_string(r) +
                                   " meet with multiplicity " + std::to_string(p));
        }
    }
    std::vector<AdeComponent> comps;
    for (const auto& members : root_components(lat, simple_roots)) {
        const int k = static_cast<int>(members.size());
        std::map<int, std::vector<int>> nbrs;
        int edges = 0;
        for (int a : members)
            for (int b : members)
                if (a != b && lat.pair(simple_roots[a], simple_roots[b]) == 1) {
                    nbrs[a].push_back(b);
                    ++edges;
                }
        edges /= 2;
        auto fail = [&] {
            throw AdeError(AdeError::Kind::NotNegativeDefinite,
                           "ade_type: a component with " + std::to_string(k) + " roots is not a Dynkin diagram");
        };
        if (edges != k - 1) fail();
        std::vector<int> branch;
        for (int a : members) {
            auto deg = nbrs[a].size();
            if (deg > 3) fail();
            if (deg == 3) branch.push_back(a);
        }
        if (branch.empty()) {
            comps.push_back({'A', k});
            continue;
        }
        if (branch.size() > 1) fail();
        std::vector<int> arms;
        for (int start : nbrs[branch[0]]) {
            int len = 1, prev = branch[0], cur = start;
            while (nbrs[cur].size() == 2) {
                int nxt = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
            comps.push_back({'D', k});
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
            comps.push_back({'E', k});
        else
            fail();
    }
    return AdeType(std::move(comps));
}

}  // namespace dpzoo
