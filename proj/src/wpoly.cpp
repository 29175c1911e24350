#include "dpzoo/wpoly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace dpzoo {

namespace {

Rational rpow(Rational base, int e) {
    if (e < 0) {
        base = Rational(1) / base;
        e = -e;
    }
    Rational r = 1;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

}  // namespace

Ring::Ring(std::vector<std::string> names, std::vector<std::vector<int>> grading)
    : names_(std::move(names)), grading_(std::move(grading)), gradings_(0) {
    if (names_.size() != grading_.size()) throw std::invalid_argument("Ring: names and grading differ in length");
    for (const auto& g : grading_) gradings_ = std::max(gradings_, static_cast<int>(g.size()));
    for (auto& g : grading_) g.resize(static_cast<std::size_t>(gradings_), 0);
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("Ring: duplicate variable " + names_[i]);
}

bool Ring::is_parameter(int i) const {
    const auto& g = grading(i);
    return std::all_of(g.begin(), g.end(), [](int w) { return w == 0; });
}

int Ring::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

WPoly WPoly::constant(RingPtr ring, const Rational& c) {
    WPoly p(std::move(ring));
    p.add_term(Exponents(static_cast<std::size_t>(p.ring_->size()), 0), c);
    return p;
}

WPoly WPoly::variable(RingPtr ring, int index, int power) {
    WPoly p(std::move(ring));
    Exponents e(static_cast<std::size_t>(p.ring_->size()), 0);
    e.at(static_cast<std::size_t>(index)) = power;
    p.add_term(e, 1);
    return p;
}

void WPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WPoly WPoly::operator+(const WPoly& o) const {
    WPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

WPoly WPoly::operator-(const WPoly& o) const { return *this + (-o); }

WPoly WPoly::operator-() const {
    WPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

WPoly WPoly::operator*(const WPoly& o) const {
    if (ring_ != o.ring_ && ring_->size() != o.ring_->size())
        throw std::invalid_argument("WPoly: operands live in different rings");
    WPoly r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

WPoly WPoly::pow(int e) const {
    if (e < 0) {
        if (!is_monomial()) throw std::invalid_argument("WPoly: negative power of a non-monomial");
        const auto& [ex, c] = *terms_.begin();
        WPoly r(ring_);
        Exponents ne(ex);
        for (auto& x : ne) x *= e;
        r.add_term(ne, rpow(c, e));
        return r;
    }
    WPoly r = constant(ring_, 1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

WPoly WPoly::substitute(const std::map<int, WPoly>& images) const {
    WPoly out(ring_);
    for (const auto& [e, c] : terms_) {
        WPoly term = constant(ring_, c);
        Exponents rest(e);
        for (const auto& [var, img] : images) {
            const auto v = static_cast<std::size_t>(var);
            if (rest[v] == 0) continue;
            term = term * img.pow(rest[v]);
            rest[v] = 0;
        }
        WPoly mono(ring_);
        mono.add_term(rest, 1);
        out = out + term * mono;
    }
    return out;
}

WPoly WPoly::derivative(int var) const {
    WPoly out(ring_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents ne(e);
        ne[v] -= 1;
        out.add_term(ne, c * e[v]);
    }
    return out;
}

WPoly WPoly::evaluate(const std::map<int, Rational>& values) const {
    WPoly out(ring_);
    for (const auto& [e, c] : terms_) {
        Rational coef = c;
        Exponents ne(e);
        for (const auto& [var, val] : values) {
            const auto v = static_cast<std::size_t>(var);
            if (ne[v] == 0) continue;
            if (val == 0 && ne[v] < 0) throw std::domain_error("WPoly::evaluate: division by zero");
            coef *= rpow(val, ne[v]);
            ne[v] = 0;
        }
        out.add_term(ne, coef);
    }
    return out;
}

std::vector<int> WPoly::degree_of(const Exponents& e) const {
    std::vector<int> d(static_cast<std::size_t>(ring_->gradings()), 0);
    for (int i = 0; i < ring_->size(); ++i)
        for (std::size_t k = 0; k < d.size(); ++k) d[k] += e[static_cast<std::size_t>(i)] * ring_->grading(i)[k];
    return d;
}

std::string WPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent vectors first reads closer to how the equations are written
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        bool neg = c < 0;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool wrote = false;
        if (a != 1 || constant_term) {
            os << a;
            wrote = true;
        }
        for (int i = 0; i < ring_->size(); ++i) {
            int x = e[static_cast<std::size_t>(i)];
            if (x == 0) continue;
            os << (wrote ? "*" : "") << ring_->name(i);
            if (x != 1) os << '^' << x;
            wrote = true;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(const std::string& s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

    WPoly parse_all() {
        WPoly lhs = expr();
        skip();
        if (peek() == '=') {
            ++pos_;
            WPoly rhs = expr();
            lhs = lhs - rhs;
            skip();
        }
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return lhs;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    static bool starts_factor(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    WPoly expr() {
        WPoly acc(ring_);
        bool first = true;
        for (;;) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            WPoly t = term();
            acc = sign < 0 ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    WPoly term() {
        WPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor(c)) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    WPoly factor() {
        WPoly base = primary();
        if (peek() != '^') return base;
        ++pos_;
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected exponent", pos_);
        int e = std::stoi(s_.substr(start, pos_ - start));
        if (neg && !base.is_monomial()) throw ParseError("negative exponent on a non-monomial", start);
        return base.pow(neg ? -e : e);
    }

    boost::multiprecision::cpp_int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return boost::multiprecision::cpp_int(s_.substr(start, pos_ - start));
    }

    WPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            WPoly inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v(integer());
            if (peek() == '/') {
                ++pos_;
                std::size_t at = pos_;
                auto q = integer();
                if (q == 0) throw ParseError("zero denominator", at);
                v /= Rational(q);
            }
            return WPoly::constant(ring_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int idx = ring_->index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return WPoly::variable(ring_, idx);
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

std::map<int, WPoly> index_images(const RingPtr& ring, const std::map<std::string, WPoly>& images) {
    std::map<int, WPoly> out;
    for (const auto& [name, img] : images) {
        int idx = ring->index(name);
        if (idx < 0) throw std::invalid_argument("substitution for unknown variable '" + name + "'");
        if (img.ring()->size() != ring->size()) throw std::invalid_argument("image of '" + name + "' lives in another ring");
        out.emplace(idx, img);
    }
    return out;
}

}  // namespace

WPoly WPoly::parse(const std::string& text, RingPtr ring) { return Parser(text, std::move(ring)).parse_all(); }

bool is_quasi_homogeneous(const WPoly& f, const std::vector<int>& degree) {
    if (f.is_zero()) return false;
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& t) { return f.degree_of(t.first) == degree; });
}

bool is_quasi_homogeneous(const WPoly& f, int degree) { return is_quasi_homogeneous(f, std::vector<int>{degree}); }

bool check_invariance(const WPoly& f, const GroupActionFamily& action) {
    const auto& ring = f.ring();
    const auto& lam = action.multiplier;
    if (!lam.is_monomial()) throw std::invalid_argument("check_invariance: multiplier is not a monomial");
    std::map<std::string, ParamDomain> domains(action.parameters.begin(), action.parameters.end());
    for (int i = 0; i < ring->size(); ++i) {
        if (lam.terms().begin()->first[static_cast<std::size_t>(i)] != 0 && !domains.count(ring->name(i)))
            throw std::invalid_argument("check_invariance: multiplier involves '" + ring->name(i) +
                                        "', which is not a parameter of the action");
    }
    auto images = index_images(ring, action.substitution);
    // Negative powers are meaningful only for parameters that are units.
    auto check_laurent = [&](const WPoly& p) {
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i < ring->size(); ++i) {
                if (e[static_cast<std::size_t>(i)] >= 0) continue;
                auto it = domains.find(ring->name(i));
                if (it == domains.end() || it->second != ParamDomain::Unit)
                    throw std::invalid_argument("check_invariance: negative power of '" + ring->name(i) + "'");
            }
    };
    for (const auto& [v, img] : images) check_laurent(img);
    check_laurent(lam);
    return f.substitute(images) == lam * f;
}

bool action_is_graded(const GroupActionFamily& action) {
    for (const auto& [name, img] : action.substitution) {
        const auto& ring = img.ring();
        int idx = ring->index(name);
        if (idx < 0) return false;
        if (img.is_zero() || !is_quasi_homogeneous(img, ring->grading(idx))) return false;
    }
    return true;
}

bool vanishes_on_parametrized_curve(const WPoly& f, const std::map<std::string, WPoly>& images,
                                    const std::map<std::string, int>& param_weights) {
    const auto& ring = f.ring();
    auto indexed = index_images(ring, images);
    std::vector<int> weight(static_cast<std::size_t>(ring->size()), 0);
    for (const auto& [name, w] : param_weights) {
        int idx = ring->index(name);
        if (idx < 0 || !ring->is_parameter(idx))
            throw std::invalid_argument("curve parameter '" + name + "' is not a weight-0 ring variable");
        weight[static_cast<std::size_t>(idx)] = w;
    }
    // Per grading component, deg(image) / weight(variable) must be one common ratio.
    std::vector<std::optional<Rational>> ratio(static_cast<std::size_t>(ring->gradings()));
    for (int i = 0; i < ring->size(); ++i) {
        if (ring->is_parameter(i)) continue;
        auto it = indexed.find(i);
        if (it == indexed.end()) throw std::invalid_argument("no image given for '" + ring->name(i) + "'");
        const WPoly& img = it->second;
        if (img.is_zero()) continue;
        std::optional<int> deg;
        for (const auto& [e, c] : img.terms()) {
            int d = 0;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] != 0 && !ring->is_parameter(static_cast<int>(k)))
                    throw std::invalid_argument("image of '" + ring->name(i) + "' involves an ambient variable");
                d += e[k] * weight[k];
            }
            if (deg && *deg != d)
                throw std::invalid_argument("image of '" + ring->name(i) + "' is not weighted homogeneous");
            deg = d;
        }
        const auto& g = ring->grading(i);
        int comps = 0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g[k] == 0) continue;
            ++comps;
            Rational r(*deg, g[k]);
            if (ratio[k] && *ratio[k] != r)
                throw std::invalid_argument("parametrization of '" + ring->name(i) + "' breaks the weights");
            ratio[k] = r;
        }
        if (comps != 1) throw std::invalid_argument("parametrized curves need one grading component per variable");
    }
    return f.substitute(indexed).is_zero();
}

PointStatus singular_at(const WPoly& f, const std::string& chart, const std::map<std::string, Rational>& point) {
    const auto& ring = f.ring();
    int c = ring->index(chart);
    if (c < 0) throw std::invalid_argument("singular_at: unknown chart variable '" + chart + "'");
    if (ring->gradings() != 1 || ring->grading(c)[0] != 1)
        throw std::invalid_argument("singular_at: chart variable must have weight 1 in a single grading");
    std::map<int, Rational> values{{c, 1}};
    for (const auto& [name, v] : point) {
        int idx = ring->index(name);
        if (idx < 0 || idx == c) throw std::invalid_argument("singular_at: bad coordinate '" + name + "'");
        values[idx] = v;
    }
    auto is_zero_at = [&](const WPoly& p) {
        WPoly v = p.evaluate(values);
        for (const auto& [e, coef] : v.terms())
            if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; }))
                throw std::invalid_argument("singular_at: point does not fix every variable");
        return v.is_zero();
    };
    if (!is_zero_at(f)) return PointStatus::NotOnSurface;
    for (int i = 0; i < ring->size(); ++i) {
        if (i == c || ring->is_parameter(i)) continue;
        if (!is_zero_at(f.derivative(i))) return PointStatus::Smooth;
    }
    return PointStatus::Singular;
}

}  // namespace dpzoo
