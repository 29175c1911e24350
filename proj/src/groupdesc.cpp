#include "dpzoo/groupdesc.hpp"

#include <cctype>
#include <cstdlib>

namespace dpzoo {

namespace {

using Kind = GroupExpr::Kind;

GroupExpr atom(Kind k, int n = 1, int mu = 1) {
    GroupExpr g;
    g.kind = k;
    g.n = n;
    g.mu = mu;
    return g;
}

GroupExpr binary(Kind k, GroupExpr a, GroupExpr b, int twist = -1) {
    GroupExpr g;
    g.kind = k;
    g.twist = twist;
    g.children = {std::move(a), std::move(b)};
    return g;
}

class GroupParser {
public:
    explicit GroupParser(const std::string& s) : s_(s) {}

    GroupExpr parse() {
        GroupExpr g = semidirect();
        skip();
        if (pos_ != s_.size()) throw GroupParseError("unexpected '" + s_.substr(pos_) + "'", pos_);
        return g;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(const std::string& tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    // the product sign "x" must not swallow the semidirect sign "x|"
    bool accept_times() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == 'x' && (pos_ + 1 >= s_.size() || s_[pos_ + 1] != '|')) {
            ++pos_;
            return true;
        }
        return false;
    }
    int number(bool allow_sign = false) {
        skip();
        std::size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            throw GroupParseError("expected a number", start);
        return std::stoi(s_.substr(start, pos_ - start));
    }

    GroupExpr semidirect() {
        GroupExpr left = product();
        while (accept("x|")) {
            std::size_t at = pos_;
            int twist = -1;
            if (accept("(")) {
                twist = std::abs(number(true));
                if (!accept(")")) throw GroupParseError("expected ')'", pos_);
            }
            GroupExpr right = product();
            if (twist >= 0) {
                bool ga_gm = left.kind == Kind::Ga && left.n == 1 && right.kind == Kind::Gm && right.n == 1;
                if (!ga_gm) throw GroupParseError("a twist is only defined for Ga x|(n) Gm", at);
                if (twist == 1) {
                    left = atom(Kind::Borel, 2);
                    continue;
                }
                if (twist == 0) {
                    left = binary(Kind::Product, left, right);
                    continue;
                }
            }
            left = binary(Kind::Semidirect, std::move(left), std::move(right), twist);
        }
        return left;
    }

    GroupExpr product() {
        GroupExpr left = primary();
        while (accept_times()) left = binary(Kind::Product, std::move(left), primary());
        return left;
    }

    GroupExpr primary() {
        skip();
        std::size_t at = pos_;
        if (accept("(")) {
            GroupExpr inner = semidirect();
            if (!accept(")")) throw GroupParseError("expected ')'", pos_);
            return inner;
        }
        if (accept("Ga")) return atom(Kind::Ga, accept("^") ? number() : 1);
        if (accept("Gm")) return atom(Kind::Gm, accept("^") ? number() : 1);
        if (accept("PGL")) return atom(Kind::PGL, number());
        if (accept("GL")) {
            int n = number();
            int mu = 1;
            if (accept("/")) {
                if (!accept("mu")) throw GroupParseError("expected 'mu'", pos_);
                mu = number();
            }
            return atom(Kind::GL, n, mu);
        }
        if (accept("B")) return atom(Kind::Borel, number());
        if (accept("U")) return atom(Kind::Unipotent, number());
        throw GroupParseError("expected a group", at);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string render_child(const GroupExpr& g) {
    bool wrap = g.kind == Kind::Product || g.kind == Kind::Semidirect;
    return wrap ? "(" + render(g) + ")" : render(g);
}

}  // namespace

GroupExpr parse_group(const std::string& text) { return GroupParser(text).parse(); }

std::string render(const GroupExpr& g) {
    auto power = [&](const char* base) { return std::string(base) + (g.n == 1 ? "" : "^" + std::to_string(g.n)); };
    switch (g.kind) {
    case Kind::Ga: return power("Ga");
    case Kind::Gm: return power("Gm");
    case Kind::Borel: return "B" + std::to_string(g.n);
    case Kind::Unipotent: return "U" + std::to_string(g.n);
    case Kind::PGL: return "PGL" + std::to_string(g.n);
    case Kind::GL: return "GL" + std::to_string(g.n) + (g.mu > 1 ? "/mu" + std::to_string(g.mu) : "");
    case Kind::Product: {
        // direct products are left-nested by the parser and render without extra parentheses
        const auto& a = g.children[0];
        std::string left = a.kind == Kind::Product ? render(a) : render_child(a);
        return left + " x " + render_child(g.children[1]);
    }
    case Kind::Semidirect: {
        const auto& a = g.children[0];
        const auto& b = g.children[1];
        std::string left = a.kind == Kind::Product ? render(a) : render_child(a);
        std::string right = b.kind == Kind::Product ? render(b) : render_child(b);
        std::string op = g.twist >= 0 ? " x|(" + std::to_string(g.twist) + ") " : " x| ";
        return left + op + right;
    }
    }
    return {};
}

int dimension(const GroupExpr& g) {
    switch (g.kind) {
    case Kind::Ga:
    case Kind::Gm: return g.n;
    case Kind::Borel: return g.n * (g.n + 1) / 2 - 1;
    case Kind::Unipotent: return g.n * (g.n - 1) / 2;
    case Kind::PGL: return g.n * g.n - 1;
    case Kind::GL: return g.n * g.n;
    default: return dimension(g.children[0]) + dimension(g.children[1]);
    }
}

int rank(const GroupExpr& g) {
    switch (g.kind) {
    case Kind::Ga:
    case Kind::Unipotent: return 0;
    case Kind::Gm: return g.n;
    case Kind::Borel:
    case Kind::PGL: return g.n - 1;
    case Kind::GL: return g.n;
    default: return rank(g.children[0]) + rank(g.children[1]);
    }
}

bool is_reductive(const GroupExpr& g) {
    switch (g.kind) {
    case Kind::Ga:
    case Kind::Unipotent:
    case Kind::Borel: return false;
    case Kind::Gm:
    case Kind::PGL:
    case Kind::GL: return true;
    default: return is_reductive(g.children[0]) && is_reductive(g.children[1]);
    }
}

bool is_solvable(const GroupExpr& g) {
    switch (g.kind) {
    case Kind::PGL:
    case Kind::GL: return g.n < 2;
    case Kind::Product:
    case Kind::Semidirect: return is_solvable(g.children[0]) && is_solvable(g.children[1]);
    default: return true;
    }
}

bool is_unipotent(const GroupExpr& g) { return rank(g) == 0; }

int max_unipotent_dimension(const GroupExpr& g) {
    switch (g.kind) {
    case Kind::Ga: return g.n;
    case Kind::Gm: return 0;
    case Kind::Borel:
    case Kind::Unipotent:
    case Kind::PGL:
    case Kind::GL: return g.n * (g.n - 1) / 2;
    default: return max_unipotent_dimension(g.children[0]) + max_unipotent_dimension(g.children[1]);
    }
}

}  // namespace dpzoo
