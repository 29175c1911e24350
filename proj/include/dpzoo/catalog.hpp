#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpzoo/groupdesc.hpp"
#include "dpzoo/rootsys.hpp"
#include "dpzoo/surface.hpp"
#include "dpzoo/wpoly.hpp"

namespace dpzoo {

// Product of weighted projective spaces: one grading component per factor.
struct Ambient {
    std::string name;
    std::vector<std::string> variables;
    std::vector<std::vector<int>> weights;
};

struct Equation {
    std::string text;
    std::vector<int> degree;
};

// An isomorphic model in other coordinates, used where the listed equation is not
// convenient (lines needing sqrt(-1), actions written in a weighted embedding).
struct Model {
    Ambient ambient;
    Equation equation;
};

struct LineData {
    std::string description;
    std::map<std::string, int> parameters;  // curve parameter -> weight
    std::map<std::string, std::string> image;
    std::optional<Model> model;
};

struct ActionData {
    std::string description;
    std::vector<std::pair<std::string, ParamDomain>> parameters;
    std::map<std::string, std::string> map;
    std::string multiplier;
    std::optional<Model> model;
};

struct TableEntry {
    std::string id;
    int degree = 0;
    int rho = 0;
    int num_lines = 0;
    AdeType type;
    int index = 0;
    std::string aut0_text;
    GroupExpr aut0;
    std::vector<std::string> blowup_of;
    bool weakly_minimal = false;
    SurfaceConfig config{PicLattice::blowup_of_p2(0), {}};
    DualGraph expected_graph;
    std::string graph_source;  // "transcribed", "transcribed-corrected" or "derived"
    std::optional<Ambient> ambient;
    std::vector<Equation> equations;
    std::vector<std::string> parameters;  // free moduli such as lambda
    std::vector<LineData> line_data;
    std::vector<ActionData> actions;
    std::string notes;
};

struct IndexRow {
    std::string id;
    int degree = 0;
    int rho = 0;
    AdeType type;
    int index = 0;
    Ambient ambient;
    std::optional<Equation> equation;
    std::vector<std::string> parameters;
};

struct PlaneCurveEntry {
    std::string equation;
    int degree = 0;
    std::string stabilizer_text;
    GroupExpr stabilizer;
    std::vector<std::string> parameters;
    std::vector<ActionData> actions;
    // Entry whose equation is w^2 = (this curve) after renaming x_i -> cover variables.
    std::optional<std::string> cover_id;
    std::map<std::string, std::string> cover_variables;
    std::string branch_variable;
};

struct CyclicSurface {
    int degree = 0;
    Ambient ambient;
    Equation equation;
    std::optional<std::string> id;
    std::optional<std::pair<int, int>> singular_members;  // (cuspidal, nodal)
};

struct CyclicClassGroupData {
    std::vector<CyclicSurface> surfaces;
    std::map<int, AdeType> types;
    std::map<int, GroupExpr> aut0;
    std::map<int, std::string> known_discrepancies;
};

struct CorollaryLists {
    std::vector<std::string> non_reductive;
    std::vector<std::string> weakly_minimal_index_one;
};

struct Catalog {
    std::vector<TableEntry> entries;  // in table order
    std::vector<IndexRow> index_rows;
    std::vector<PlaneCurveEntry> plane_curves;
    CyclicClassGroupData cyclic;
    CorollaryLists lists;
    const TableEntry* find(const std::string& id) const;
};

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Ambient ambient_from_json_text(const std::string& json_text);
DualGraph graph_from_json_text(const std::string& json_text);
std::string graph_to_json_text(const DualGraph& g);

// Throws CatalogError naming the file, entry and field on any schema violation.
Catalog load_catalog(const std::filesystem::path& data_dir);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    bool passed() const;
    int failures() const;
    void add(std::string name, bool pass, std::string detail = {});
};

struct Recomputed {
    AdeType type;
    int rho = 0;
    int num_lines = 0;
    int index = 0;
    bool weakly_minimal = false;
    ClassGroup class_group;
};

struct EntryReport {
    std::string id;
    Recomputed values;
    Report report;
};

EntryReport verify_entry(const TableEntry& e);
// Equations, transcribed lines and group actions of one entry.
Report poly_check(const TableEntry& e);
std::vector<EntryReport> verify_all(const Catalog& c, int jobs = 1);

Report check_corollaries(const Catalog& c);
Report check_index_table(const Catalog& c);
Report check_plane_curves(const Catalog& c);
Report check_cyclic_class_group(const Catalog& c);
Report check_pushforwards(const Catalog& c);
// Orbit census of the blow-up lattice of degree 5, 6 or 7 matched against the rows.
Report enumerate_and_match(const Catalog& c, int degree);

// K^2 of a complete intersection of the given multidegrees, by adjunction.
Rational adjunction_degree(const Ambient& a, const std::vector<std::vector<int>>& degrees);

}  // namespace dpzoo
