#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpzoo/rational.hpp"

namespace dpzoo {

// Variables of a polynomial ring with their multi-degree. Parameters (t, a, lambda, ...)
// carry the zero degree. Ambient spaces built from several projective factors use
// one grading component per factor.
class Ring {
public:
    Ring(std::vector<std::string> names, std::vector<std::vector<int>> grading);
    static std::shared_ptr<const Ring> make(std::vector<std::string> names, std::vector<std::vector<int>> grading) {
        return std::make_shared<const Ring>(std::move(names), std::move(grading));
    }

    int size() const { return static_cast<int>(names_.size()); }
    int gradings() const { return gradings_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& grading(int i) const { return grading_[static_cast<std::size_t>(i)]; }
    bool is_parameter(int i) const;
    int index(const std::string& name) const;  // -1 if absent

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> grading_;
    int gradings_;
};
using RingPtr = std::shared_ptr<const Ring>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class WPoly {
public:
    using Exponents = std::vector<int>;  // negative entries only for unit parameters

    explicit WPoly(RingPtr ring) : ring_(std::move(ring)) {}
    static WPoly constant(RingPtr ring, const Rational& c);
    static WPoly variable(RingPtr ring, int index, int power = 1);
    // Grammar: sums and products of rationals p/q, identifiers and parentheses, `^` with
    // integer exponents, `*` optional between factors; "lhs = rhs" parses as lhs - rhs.
    static WPoly parse(const std::string& text, RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    WPoly operator+(const WPoly& o) const;
    WPoly operator-(const WPoly& o) const;
    WPoly operator-() const;
    WPoly operator*(const WPoly& o) const;
    WPoly pow(int e) const;  // negative powers only for monomials
    bool operator==(const WPoly& o) const { return terms_ == o.terms_; }

    // Replace each mapped variable by its image; unmapped variables stay.
    WPoly substitute(const std::map<int, WPoly>& images) const;
    WPoly derivative(int var) const;
    // Substitute rational values for some variables.
    WPoly evaluate(const std::map<int, Rational>& values) const;

    std::vector<int> degree_of(const Exponents& e) const;
    std::string str() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    RingPtr ring_;
    std::map<Exponents, Rational> terms_;
};

bool is_quasi_homogeneous(const WPoly& f, const std::vector<int>& degree);
bool is_quasi_homogeneous(const WPoly& f, int degree);

enum class ParamDomain { Unit, Additive };  // t != 0, or a in the field

struct GroupActionFamily {
    std::map<std::string, WPoly> substitution;
    std::vector<std::pair<std::string, ParamDomain>> parameters;
    WPoly multiplier;
};

// f o phi == lambda * f identically in the variables and all parameters.
bool check_invariance(const WPoly& f, const GroupActionFamily& action);
// Every image has the degree of the variable it replaces.
bool action_is_graded(const GroupActionFamily& action);

// `images` maps ambient variables to polynomials in curve parameters whose scalar
// weights are given in `param_weights`; images must be weight-consistent.
bool vanishes_on_parametrized_curve(const WPoly& f, const std::map<std::string, WPoly>& images,
                                    const std::map<std::string, int>& param_weights);

enum class PointStatus { NotOnSurface, Smooth, Singular };
PointStatus singular_at(const WPoly& f, const std::string& chart, const std::map<std::string, Rational>& point);

}  // namespace dpzoo
