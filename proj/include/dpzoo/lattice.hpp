#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dpzoo {

using Int = std::int64_t;
using DivisorClass = std::vector<Int>;
using IntMatrix = std::vector<std::vector<Int>>;

enum class LatticeKind { BlowUp, Hirzebruch };

// Pic of a weak del Pezzo surface: an odd unimodular lattice with its canonical class.
class PicLattice {
public:
    static PicLattice blowup_of_p2(int n_points);
    static PicLattice hirzebruch(int m);

    int rank() const { return static_cast<int>(gram_.size()); }
    const IntMatrix& gram() const { return gram_; }
    const DivisorClass& canonical() const { return canonical_; }
    int degree() const { return degree_; }
    LatticeKind kind() const { return kind_; }
    // number of blown-up points, or m for F_m
    int parameter() const { return parameter_; }
    std::string describe() const;

    Int pair(const DivisorClass& a, const DivisorClass& b) const;
    Int self(const DivisorClass& a) const { return pair(a, a); }
    Int dot_k(const DivisorClass& a) const { return pair(canonical_, a); }

    DivisorClass zero() const { return DivisorClass(rank(), 0); }
    // basis vector; for blow-ups 0 is h and i is e_i
    DivisorClass basis(int i) const;

    bool operator==(const PicLattice& o) const { return kind_ == o.kind_ && parameter_ == o.parameter_; }

private:
    PicLattice(LatticeKind kind, int parameter, IntMatrix gram, DivisorClass canonical);
    LatticeKind kind_;
    int parameter_;
    IntMatrix gram_;
    DivisorClass canonical_;
    int degree_;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(Int s, const DivisorClass& a);

// Exact determinant by fraction-free elimination.
Int determinant(IntMatrix m);

std::string to_string(const DivisorClass& c);

}  // namespace dpzoo
