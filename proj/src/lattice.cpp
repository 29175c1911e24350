#include "dpzoo/lattice.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace dpzoo {

PicLattice::PicLattice(LatticeKind kind, int parameter, IntMatrix gram, DivisorClass canonical)
    : kind_(kind), parameter_(parameter), gram_(std::move(gram)), canonical_(std::move(canonical)) {
    degree_ = static_cast<int>(pair(canonical_, canonical_));
}

PicLattice PicLattice::blowup_of_p2(int n_points) {
    if (n_points < 0 || n_points > 8)
        throw std::invalid_argument("blowup_of_p2: number of points must be in 0..8, got " +
                                    std::to_string(n_points));
    int r = n_points + 1;
    IntMatrix g(r, std::vector<Int>(r, 0));
    DivisorClass k(r, 1);
    g[0][0] = 1;
    k[0] = -3;
    for (int i = 1; i < r; ++i) g[i][i] = -1;
    return PicLattice(LatticeKind::BlowUp, n_points, std::move(g), std::move(k));
}

PicLattice PicLattice::hirzebruch(int m) {
    if (m != 0 && m != 2)
        throw std::invalid_argument("hirzebruch: only F_0 and F_2 are modelled here, got F_" +
                                    std::to_string(m));
    // basis (f, s): fibre and negative section
    IntMatrix g{{0, 1}, {1, -m}};
    DivisorClass k{-2 - m, -2};
    return PicLattice(LatticeKind::Hirzebruch, m, std::move(g), std::move(k));
}

std::string PicLattice::describe() const {
    if (kind_ == LatticeKind::BlowUp) return "blowup:" + std::to_string(parameter_);
    return "hirzebruch:" + std::to_string(parameter_);
}

Int PicLattice::pair(const DivisorClass& a, const DivisorClass& b) const {
    const auto r = static_cast<std::size_t>(rank());
    if (a.size() != r || b.size() != r)
        throw std::invalid_argument("pair: class length does not match lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

DivisorClass PicLattice::basis(int i) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("basis index out of range");
    DivisorClass v(rank(), 0);
    v[i] = 1;
    return v;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

DivisorClass operator-(const DivisorClass& a) {
    DivisorClass r(a);
    for (auto& x : r) x = -x;
    return r;
}

DivisorClass operator*(Int s, const DivisorClass& a) {
    DivisorClass r(a);
    for (auto& x : r) x *= s;
    return r;
}

Int determinant(IntMatrix m) {
    // Bareiss
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::string to_string(const DivisorClass& c) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

}  // namespace dpzoo
