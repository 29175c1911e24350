#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dpzoo {

// Symbolic descriptor of a connected algebraic group as it appears in the Aut^0 column.
struct GroupExpr {
    enum class Kind { Ga, Gm, Borel, Unipotent, PGL, GL, Product, Semidirect };
    Kind kind = Kind::Gm;
    int n = 1;      // power for Ga/Gm, size for the matrix groups
    int mu = 1;     // GL_n / mu_mu
    int twist = -1; // Ga x|(twist) Gm; -1 when the action is left unspecified
    std::vector<GroupExpr> children;

    bool operator==(const GroupExpr&) const = default;
};

class GroupParseError : public std::runtime_error {
public:
    GroupParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Grammar (ASCII): Ga, Ga^k, Gm, Gm^k, Bn, Un, PGLn, GLn, GLn/mum, parentheses,
// "A x B" for direct and "A x| B" or "Ga x|(n) Gm" for semidirect products.
// Semidirect binds weaker than direct. Twists are normalised: |n|, with
// Ga x|(1) Gm = B2 and Ga x|(0) Gm = Ga x Gm.
GroupExpr parse_group(const std::string& text);
std::string render(const GroupExpr& g);

int dimension(const GroupExpr& g);
int rank(const GroupExpr& g);  // dimension of a maximal torus
bool is_reductive(const GroupExpr& g);
bool is_solvable(const GroupExpr& g);
bool is_unipotent(const GroupExpr& g);
// Dimension of a maximal unipotent subgroup; at least 2 exactly when Ga^2 embeds.
int max_unipotent_dimension(const GroupExpr& g);

}  // namespace dpzoo
