#include "dpzoo/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace dpzoo {

using nlohmann::json;

namespace {

// ------------------------------------------------------------------ loading

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw CatalogError(where + ": " + what);
}

const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema_error(where, "missing field '" + key + "'");
    return j.at(key);
}

template <class T>
T get(const json& j, const std::string& key, const std::string& where) {
    const json& v = need(j, key, where);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        schema_error(where, "field '" + key + "' has the wrong type");
    }
}

json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw CatalogError(p.string() + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CatalogError(p.string() + ": " + e.what());
    }
}

Ambient parse_ambient(const json& j, const std::string& where) {
    Ambient a;
    a.name = get<std::string>(j, "name", where);
    const json& vars = need(j, "variables", where);
    if (!vars.is_array() || vars.empty()) schema_error(where, "field 'variables' must be a nonempty array");
    for (const auto& v : vars) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_array())
            schema_error(where, "field 'variables' needs [name, [weights]] pairs");
        a.variables.push_back(v[0].get<std::string>());
        a.weights.push_back(v[1].get<std::vector<int>>());
        if (a.weights.back().size() != a.weights.front().size())
            schema_error(where, "field 'variables' mixes grading lengths");
    }
    return a;
}

Equation parse_equation(const json& j, const std::string& where) {
    return {get<std::string>(j, "text", where), get<std::vector<int>>(j, "degree", where)};
}

std::optional<Model> parse_model(const json& j, const std::string& where) {
    if (!j.contains("model")) return std::nullopt;
    const json& m = j.at("model");
    std::string w = where + " model";
    Model out;
    if (need(m, "ambient", w).is_string()) {
        out.ambient.name = m.at("ambient").get<std::string>();
    } else {
        out.ambient = parse_ambient(m.at("ambient"), w);
    }
    out.equation = {get<std::string>(m, "equation", w), get<std::vector<int>>(m, "degree", w)};
    return out;
}

ParamDomain parse_domain(const std::string& s, const std::string& where) {
    if (s == "unit") return ParamDomain::Unit;
    if (s == "additive") return ParamDomain::Additive;
    schema_error(where, "parameter domain must be 'unit' or 'additive', got '" + s + "'");
}

ActionData parse_action(const json& j, const std::string& where) {
    ActionData a;
    a.description = get<std::string>(j, "description", where);
    for (const auto& p : need(j, "parameters", where)) {
        if (!p.is_array() || p.size() != 2) schema_error(where, "field 'parameters' needs [name, domain] pairs");
        a.parameters.emplace_back(p[0].get<std::string>(), parse_domain(p[1].get<std::string>(), where));
    }
    a.map = get<std::map<std::string, std::string>>(j, "map", where);
    a.multiplier = get<std::string>(j, "multiplier", where);
    a.model = parse_model(j, where);
    return a;
}

RingPtr make_ring(const Ambient& a, const std::vector<std::string>& extra) {
    std::vector<std::string> names = a.variables;
    std::vector<std::vector<int>> grading = a.weights;
    std::size_t g = a.weights.empty() ? 1 : a.weights.front().size();
    for (const auto& e : extra) {
        if (std::find(names.begin(), names.end(), e) != names.end()) continue;
        names.push_back(e);
        grading.emplace_back(g, 0);
    }
    return Ring::make(std::move(names), std::move(grading));
}

template <class C>
std::vector<std::string> keys_of(const C& c) {
    std::vector<std::string> out;
    for (const auto& kv : c) out.push_back(kv.first);
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<std::string> action_params(const ActionData& a) {
    std::vector<std::string> out;
    for (const auto& p : a.parameters) out.push_back(p.first);
    return out;
}

WPoly parse_checked(const std::string& text, const RingPtr& ring, const std::string& where) {
    try {
        return WPoly::parse(text, ring);
    } catch (const ParseError& e) {
        schema_error(where, std::string("polynomial '") + text + "': " + e.what());
    }
}

void resolve_model(std::optional<Model>& m, const std::map<std::string, Ambient>& reg, const std::string& where) {
    if (!m || !m->ambient.variables.empty()) return;
    auto it = reg.find(m->ambient.name);
    if (it == reg.end()) schema_error(where, "model ambient '" + m->ambient.name + "' is not defined by any entry");
    m->ambient = it->second;
}

// Parse every polynomial once so that grammar errors surface at load time.
void validate_polynomials(const TableEntry& e, const std::string& where) {
    if (!e.ambient) {
        if (!e.equations.empty() || !e.line_data.empty() || !e.actions.empty())
            schema_error(where, "equations, lines or actions given without an ambient");
        return;
    }
    for (const auto& q : e.equations) {
        parse_checked(q.text, make_ring(*e.ambient, e.parameters), where + " equations");
        if (q.degree.size() != e.ambient->weights.front().size())
            schema_error(where + " equations", "degree has the wrong number of components");
    }
    for (const auto& l : e.line_data) {
        const Ambient& a = l.model ? l.model->ambient : *e.ambient;
        auto ring = make_ring(a, concat(e.parameters, keys_of(l.parameters)));
        for (const auto& v : a.variables)
            if (!l.image.count(v)) schema_error(where + " line_data", "line '" + l.description + "' has no image for " + v);
        for (const auto& [v, text] : l.image) parse_checked(text, ring, where + " line_data");
        if (l.model) parse_checked(l.model->equation.text, make_ring(a, e.parameters), where + " line_data model");
    }
    for (const auto& act : e.actions) {
        const Ambient& a = act.model ? act.model->ambient : *e.ambient;
        auto ring = make_ring(a, concat(e.parameters, action_params(act)));
        for (const auto& [v, text] : act.map) {
            if (ring->index(v) < 0) schema_error(where + " actions", "map names unknown variable '" + v + "'");
            parse_checked(text, ring, where + " actions");
        }
        parse_checked(act.multiplier, ring, where + " actions");
        if (act.model) parse_checked(act.model->equation.text, make_ring(a, e.parameters), where + " actions model");
    }
}

DualGraph graph_from_json(const json& j, const std::string& where) {
    DualGraph g;
    for (const auto& n : need(j, "nodes", where)) {
        std::string s = n.get<std::string>();
        if (s == "circle") g.nodes.push_back(NodeColor::Circle);
        else if (s == "bullet") g.nodes.push_back(NodeColor::Bullet);
        else schema_error(where, "node colour must be 'circle' or 'bullet'");
    }
    int n = static_cast<int>(g.nodes.size());
    for (const auto& e : need(j, "edges", where)) {
        if (!e.is_array() || e.size() != 3) schema_error(where, "edges are [a, b, multiplicity] triples");
        int a = e[0].get<int>(), b = e[1].get<int>(), m = e[2].get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a == b || m < 1) schema_error(where, "edge out of range");
        g.edges.push_back({std::min(a, b), std::max(a, b), m});
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return g;
}

PicLattice parse_lattice(const json& j, const std::string& where) {
    std::string kind = get<std::string>(j, "kind", where);
    try {
        if (kind == "blowup") return PicLattice::blowup_of_p2(get<int>(j, "points", where));
        if (kind == "hirzebruch") return PicLattice::hirzebruch(get<int>(j, "m", where));
    } catch (const std::invalid_argument& e) {
        schema_error(where, e.what());
    }
    schema_error(where, "lattice kind must be 'blowup' or 'hirzebruch'");
}

AdeType parse_type(const std::string& s, const std::string& where) {
    try {
        return AdeType::parse(s);
    } catch (const std::exception& e) {
        schema_error(where, "bad singularity type '" + s + "': " + e.what());
    }
}

GroupExpr parse_group_checked(const std::string& s, const std::string& where) {
    try {
        return parse_group(s);
    } catch (const GroupParseError& e) {
        schema_error(where, "bad group '" + s + "': " + e.what());
    }
}

TableEntry parse_entry(const json& j, const std::filesystem::path& dir, std::size_t pos) {
    std::string where = "entries.json entry #" + std::to_string(pos);
    TableEntry e;
    e.id = get<std::string>(j, "id", where);
    where = "entries.json entry " + e.id;
    e.degree = get<int>(j, "degree", where);
    e.rho = get<int>(j, "rho", where);
    e.num_lines = get<int>(j, "lines", where);
    e.type = parse_type(get<std::string>(j, "type", where), where + " field 'type'");
    e.index = get<int>(j, "index", where);
    e.aut0_text = get<std::string>(j, "aut0", where);
    e.aut0 = parse_group_checked(e.aut0_text, where + " field 'aut0'");
    e.blowup_of = get<std::vector<std::string>>(j, "blowup_of", where);
    e.weakly_minimal = get<bool>(j, "weakly_minimal", where);
    PicLattice lat = parse_lattice(need(j, "lattice", where), where + " field 'lattice'");
    auto roots = get<std::vector<DivisorClass>>(j, "simple_roots", where);
    try {
        e.config = SurfaceConfig(lat, roots);
    } catch (const std::exception& ex) {
        schema_error(where + " field 'simple_roots'", ex.what());
    }
    std::string gpath = get<std::string>(j, "graph", where);
    json gj = read_json(dir / gpath);
    e.expected_graph = graph_from_json(gj, gpath);
    e.graph_source = get<std::string>(gj, "source", gpath);
    if (j.contains("ambient") && !j.at("ambient").is_null())
        e.ambient = parse_ambient(j.at("ambient"), where + " field 'ambient'");
    for (const auto& q : need(j, "equations", where)) e.equations.push_back(parse_equation(q, where + " field 'equations'"));
    e.parameters = get<std::vector<std::string>>(j, "parameters", where);
    for (const auto& l : need(j, "line_data", where)) {
        std::string w = where + " field 'line_data'";
        LineData d;
        d.description = get<std::string>(l, "description", w);
        d.parameters = get<std::map<std::string, int>>(l, "parameters", w);
        d.image = get<std::map<std::string, std::string>>(l, "image", w);
        d.model = parse_model(l, w);
        e.line_data.push_back(std::move(d));
    }
    for (const auto& a : need(j, "actions", where)) e.actions.push_back(parse_action(a, where + " field 'actions'"));
    if (j.contains("notes")) e.notes = get<std::string>(j, "notes", where);
    return e;
}

}  // namespace

const TableEntry* Catalog::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

Ambient ambient_from_json_text(const std::string& text) { return parse_ambient(json::parse(text), "ambient"); }

DualGraph graph_from_json_text(const std::string& text) { return graph_from_json(json::parse(text), "graph"); }

std::string graph_to_json_text(const DualGraph& g) {
    json j;
    j["nodes"] = json::array();
    for (auto n : g.nodes) j["nodes"].push_back(n == NodeColor::Circle ? "circle" : "bullet");
    j["edges"] = json::array();
    for (const auto& e : g.edges) j["edges"].push_back({e.a, e.b, e.mult});
    return j.dump();
}

Catalog load_catalog(const std::filesystem::path& dir) {
    Catalog c;
    json entries = read_json(dir / "entries.json");
    const json& list = need(entries, "entries", "entries.json");
    std::set<std::string> ids;
    std::map<std::string, Ambient> reg;
    for (std::size_t i = 0; i < list.size(); ++i) {
        TableEntry e = parse_entry(list[i], dir, i);
        if (!ids.insert(e.id).second) throw CatalogError("entries.json entry " + e.id + ": duplicate id");
        if (e.ambient) reg[e.ambient->name] = *e.ambient;
        c.entries.push_back(std::move(e));
    }
    for (auto& e : c.entries) {
        std::string where = "entries.json entry " + e.id;
        for (const auto& ref : e.blowup_of)
            if (!ids.count(ref)) throw CatalogError(where + " field 'blowup_of': unknown id '" + ref + "'");
        for (auto& l : e.line_data) resolve_model(l.model, reg, where + " field 'line_data'");
        for (auto& a : e.actions) resolve_model(a.model, reg, where + " field 'actions'");
    }

    json thm = read_json(dir / "index_table.json");
    for (const auto& r : need(thm, "rows", "index_table.json")) {
        IndexRow row;
        row.id = get<std::string>(r, "id", "index_table.json row");
        std::string where = "index_table.json row " + row.id;
        if (!ids.count(row.id)) throw CatalogError(where + ": unknown id");
        row.degree = get<int>(r, "degree", where);
        row.rho = get<int>(r, "rho", where);
        row.type = parse_type(get<std::string>(r, "type", where), where + " field 'type'");
        row.index = get<int>(r, "index", where);
        row.ambient = parse_ambient(need(r, "ambient", where), where + " field 'ambient'");
        if (!need(r, "equation", where).is_null()) row.equation = parse_equation(r.at("equation"), where + " field 'equation'");
        if (r.contains("parameters")) row.parameters = get<std::vector<std::string>>(r, "parameters", where);
        reg[row.ambient.name] = row.ambient;
        if (row.equation) parse_checked(row.equation->text, make_ring(row.ambient, row.parameters), where);
        c.index_rows.push_back(std::move(row));
    }

    json pc = read_json(dir / "plane_curves.json");
    Ambient plane{"P2", {"x0", "x1", "x2"}, {{1}, {1}, {1}}};
    std::size_t k = 0;
    for (const auto& r : need(pc, "curves", "plane_curves.json")) {
        std::string where = "plane_curves.json curve #" + std::to_string(++k);
        PlaneCurveEntry p;
        p.equation = get<std::string>(r, "equation", where);
        p.degree = get<int>(r, "degree", where);
        p.stabilizer_text = get<std::string>(r, "stabilizer", where);
        p.stabilizer = parse_group_checked(p.stabilizer_text, where + " field 'stabilizer'");
        if (r.contains("parameters")) p.parameters = get<std::vector<std::string>>(r, "parameters", where);
        for (const auto& a : need(r, "actions", where)) p.actions.push_back(parse_action(a, where + " field 'actions'"));
        if (r.contains("double_cover")) {
            const json& dc = r.at("double_cover");
            p.cover_id = get<std::string>(dc, "id", where);
            if (!ids.count(*p.cover_id)) throw CatalogError(where + " field 'double_cover': unknown id");
            p.cover_variables = get<std::map<std::string, std::string>>(dc, "variables", where);
            p.branch_variable = get<std::string>(dc, "branch_of", where);
        }
        parse_checked(p.equation, make_ring(plane, p.parameters), where);
        c.plane_curves.push_back(std::move(p));
    }

    json b = read_json(dir / "cyclic_class_group.json");
    for (const auto& s : need(b, "hypersurfaces", "cyclic_class_group.json")) {
        std::string where = "cyclic_class_group.json hypersurface";
        CyclicSurface cs;
        cs.degree = get<int>(s, "degree", where);
        cs.ambient = parse_ambient(need(s, "ambient", where), where);
        cs.equation = {get<std::string>(s, "equation", where), {get<int>(s, "weighted_degree", where)}};
        if (!need(s, "id", where).is_null()) {
            cs.id = s.at("id").get<std::string>();
            if (!ids.count(*cs.id)) throw CatalogError(where + ": unknown id '" + *cs.id + "'");
        }
        if (s.contains("singular_pencil_members")) {
            const json& m = s.at("singular_pencil_members");
            cs.singular_members = std::make_pair(get<int>(m, "cuspidal", where), get<int>(m, "nodal", where));
        }
        parse_checked(cs.equation.text, make_ring(cs.ambient, {}), where);
        c.cyclic.surfaces.push_back(std::move(cs));
    }
    for (const auto& [d, t] : get<std::map<std::string, std::string>>(b, "cyclic_class_group_types", "cyclic_class_group.json"))
        c.cyclic.types[std::stoi(d)] = parse_type(t, "cyclic_class_group.json cyclic_class_group_types");
    for (const auto& [d, g] : get<std::map<std::string, std::string>>(b, "cyclic_class_group_aut0", "cyclic_class_group.json"))
        c.cyclic.aut0[std::stoi(d)] = parse_group_checked(g, "cyclic_class_group.json cyclic_class_group_aut0");
    if (b.contains("known_discrepancies"))
        for (const auto& [d, s] : get<std::map<std::string, std::string>>(b, "known_discrepancies", "cyclic_class_group.json"))
            c.cyclic.known_discrepancies[std::stoi(d)] = s;

    json lists = read_json(dir / "corollaries.json");
    c.lists.non_reductive = get<std::vector<std::string>>(lists, "non_reductive", "corollaries.json");
    c.lists.weakly_minimal_index_one = get<std::vector<std::string>>(lists, "weakly_minimal_index_one", "corollaries.json");
    for (const auto& v : {c.lists.non_reductive, c.lists.weakly_minimal_index_one})
        for (const auto& id : v)
            if (!ids.count(id)) throw CatalogError("corollaries.json: unknown id '" + id + "'");

    for (auto& e : c.entries) validate_polynomials(e, "entries.json entry " + e.id);
    return c;
}

// ------------------------------------------------------------------ reports

bool Report::passed() const { return failures() == 0; }

int Report::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

Rational adjunction_degree(const Ambient& a, const std::vector<std::vector<int>>& degrees) {
    const std::size_t m = a.weights.front().size();
    std::vector<int> dim(m, -1);
    std::vector<Rational> top(m, Rational(1));
    std::vector<Rational> minus_k(m, Rational(0));
    for (const auto& w : a.weights) {
        int comps = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (w[k] == 0) continue;
            ++comps;
            dim[k] += 1;
            top[k] /= w[k];
            minus_k[k] += w[k];
        }
        if (comps != 1) throw std::invalid_argument("adjunction_degree: each variable must belong to one factor");
    }
    for (const auto& d : degrees)
        for (std::size_t k = 0; k < m; ++k) minus_k[k] -= d[k];
    int total = 0;
    for (int x : dim) total += x;
    if (total - static_cast<int>(degrees.size()) != 2)
        throw std::invalid_argument("adjunction_degree: not a surface");
    // Multiply linear forms in the hyperplane classes and read off the top monomial.
    using Poly = std::map<std::vector<int>, Rational>;
    auto times = [&](const Poly& p, const std::vector<Rational>& lin) {
        Poly out;
        for (const auto& [e, c] : p)
            for (std::size_t k = 0; k < m; ++k) {
                if (lin[k] == 0) continue;
                auto f = e;
                if (++f[k] > dim[k]) continue;
                out[f] += c * lin[k];
            }
        return out;
    };
    Poly p{{std::vector<int>(m, 0), Rational(1)}};
    for (const auto& d : degrees) p = times(p, std::vector<Rational>(d.begin(), d.end()));
    p = times(times(p, minus_k), minus_k);
    Rational result = 0;
    if (auto it = p.find(dim); it != p.end()) {
        result = it->second;
        for (const auto& t : top) result *= t;
    }
    return result;
}

namespace {

std::string str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Recomputed recompute(const SurfaceConfig& cfg) {
    Recomputed v;
    v.type = singularity_type(cfg);
    v.rho = picard_rank(cfg);
    v.num_lines = static_cast<int>(lines(cfg).size());
    v.index = fano_weil_index(cfg);
    v.weakly_minimal = is_weakly_minimal(cfg);
    v.class_group = class_group(cfg);
    return v;
}

std::string torsion_str(const ClassGroup& g) {
    std::string s = "Z^" + std::to_string(g.free_rank);
    for (auto t : g.torsion) s += " + Z/" + std::to_string(t);
    return s;
}

// Polynomial checks on an equation list; returns false with a message on failure.
void check_equations(Report& r, const Ambient& a, const std::vector<Equation>& eqs,
                     const std::vector<std::string>& params, int expected_k2, const std::string& prefix) {
    auto ring = make_ring(a, params);
    std::vector<std::vector<int>> degrees;
    for (const auto& q : eqs) {
        WPoly f = WPoly::parse(q.text, ring);
        r.add(prefix + "quasi-homogeneous: " + q.text, is_quasi_homogeneous(f, q.degree));
        degrees.push_back(q.degree);
    }
    try {
        Rational k2 = adjunction_degree(a, degrees);
        r.add(prefix + "adjunction gives K^2 = " + std::to_string(expected_k2), k2 == expected_k2, "got " + str(k2));
    } catch (const std::exception& ex) {
        r.add(prefix + "adjunction degree", false, ex.what());
    }
}

bool run_line(const TableEntry& e, const LineData& l, std::string& err) {
    const Ambient& a = l.model ? l.model->ambient : *e.ambient;
    std::vector<Equation> eqs = l.model ? std::vector<Equation>{l.model->equation} : e.equations;
    auto ring = make_ring(a, concat(e.parameters, keys_of(l.parameters)));
    std::map<std::string, WPoly> images;
    for (const auto& [v, text] : l.image) images.emplace(v, WPoly::parse(text, ring));
    try {
        for (const auto& q : eqs)
            if (!vanishes_on_parametrized_curve(WPoly::parse(q.text, ring), images, l.parameters)) return false;
    } catch (const std::exception& ex) {
        err = ex.what();
        return false;
    }
    return true;
}

bool run_action(const Ambient& base, const std::vector<Equation>& base_eqs, const std::vector<std::string>& params,
                const ActionData& act, std::string& err) {
    const Ambient& a = act.model ? act.model->ambient : base;
    std::vector<Equation> eqs = act.model ? std::vector<Equation>{act.model->equation} : base_eqs;
    auto ring = make_ring(a, concat(params, action_params(act)));
    GroupActionFamily fam{{}, act.parameters, WPoly::parse(act.multiplier, ring)};
    for (const auto& [v, text] : act.map) fam.substitution.emplace(v, WPoly::parse(text, ring));
    try {
        if (!action_is_graded(fam)) {
            err = "substitution does not preserve degrees";
            return false;
        }
        for (const auto& q : eqs)
            if (!check_invariance(WPoly::parse(q.text, ring), fam)) {
                err = "f o phi != lambda f";
                return false;
            }
    } catch (const std::exception& ex) {
        err = ex.what();
        return false;
    }
    return true;
}

}  // namespace

EntryReport verify_entry(const TableEntry& e) {
    EntryReport out;
    out.id = e.id;
    out.report.title = e.id;
    Report& r = out.report;
    const SurfaceConfig& cfg = e.config;
    Recomputed v = recompute(cfg);
    out.values = v;

    r.add("degree", cfg.degree() == e.degree, "lattice degree " + std::to_string(cfg.degree()));
    r.add("type", v.type == e.type, "computed " + v.type.str() + ", table " + e.type.str());
    r.add("rho", v.rho == e.rho, "computed " + std::to_string(v.rho) + ", table " + std::to_string(e.rho));
    r.add("lines", v.num_lines == e.num_lines,
          "computed " + std::to_string(v.num_lines) + ", table " + std::to_string(e.num_lines));
    r.add("index", v.index == e.index, "computed " + std::to_string(v.index) + ", table " + std::to_string(e.index));
    r.add("weakly minimal", v.weakly_minimal == e.weakly_minimal,
          std::string("computed ") + (v.weakly_minimal ? "yes" : "no"));
    const DualGraph& g = e.expected_graph;
    r.add("graph census",
          g.count(NodeColor::Circle) == static_cast<int>(cfg.simple_roots.size()) &&
              g.count(NodeColor::Bullet) == e.num_lines,
          std::to_string(g.count(NodeColor::Circle)) + " circles, " + std::to_string(g.count(NodeColor::Bullet)) +
              " bullets");
    r.add("dual graph", graphs_isomorphic(dual_graph(cfg), g), "against " + e.graph_source + " graph");
    r.add("aut0 round trip", parse_group(render(e.aut0)) == e.aut0, render(e.aut0));

    for (auto& c : poly_check(e).checks) r.checks.push_back(std::move(c));
    return out;
}

Report poly_check(const TableEntry& e) {
    Report r;
    r.title = e.id + " polynomials";
    if (!e.ambient || e.equations.empty()) {
        r.add("equation", true, "no equation in source");
    } else {
        check_equations(r, *e.ambient, e.equations, e.parameters, e.degree, "");
    }
    std::set<std::string> models;
    auto check_model = [&](const std::optional<Model>& m) {
        if (m && models.insert(m->ambient.name + " " + m->equation.text).second)
            check_equations(r, m->ambient, {m->equation}, e.parameters, e.degree, "model ");
    };
    for (const auto& l : e.line_data) {
        std::string err;
        bool ok = run_line(e, l, err);
        r.add("line " + l.description, ok, err);
        check_model(l.model);
    }
    for (const auto& act : e.actions) {
        std::string err;
        bool ok = run_action(*e.ambient, e.equations, e.parameters, act, err);
        r.add("action " + act.description, ok, err);
        check_model(act.model);
    }
    return r;
}

std::vector<EntryReport> verify_all(const Catalog& c, int jobs) {
    std::vector<EntryReport> out(c.entries.size());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(c.entries.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < c.entries.size(); ++i) out[i] = verify_entry(c.entries[i]);
        return out;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < c.entries.size(); i += static_cast<std::size_t>(jobs))
                out[i] = verify_entry(c.entries[i]);
        });
    for (auto& t : pool) t.join();
    return out;
}

namespace {

std::vector<std::vector<DivisorClass>> components_of(const SurfaceConfig& cfg) {
    std::vector<std::vector<DivisorClass>> out;
    for (const auto& idx : root_components(cfg.lattice, cfg.simple_roots)) {
        out.emplace_back();
        for (int i : idx) out.back().push_back(cfg.simple_roots[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? "none" : s;
}

}  // namespace

Report check_corollaries(const Catalog& c) {
    Report r;
    r.title = "corollaries";
    std::map<std::string, Recomputed> val;
    for (const auto& e : c.entries) val[e.id] = recompute(e.config);

    std::set<std::string> nonred, expected(c.lists.non_reductive.begin(), c.lists.non_reductive.end());
    for (const auto& e : c.entries)
        if (!is_reductive(e.aut0)) nonred.insert(e.id);
    r.add("non-reductive Aut0 are exactly the listed surfaces", nonred == expected && expected.size() == 23,
          std::to_string(nonred.size()) + " non-reductive");

    std::vector<std::string> bad;
    for (const auto& e : c.entries)
        if (e.degree == 1 && val[e.id].rho != 1) bad.push_back(e.id);
    r.add("degree 1 forces rho = 1", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries)
        if (e.degree <= 7 && val[e.id].num_lines < val[e.id].rho) bad.push_back(e.id);
    r.add("lines >= rho for d <= 7", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries)
        if (e.config.lattice.kind() == LatticeKind::BlowUp &&
            val[e.id].rho + static_cast<int>(e.config.simple_roots.size()) != 10 - e.degree)
            bad.push_back(e.id);
    r.add("rho + #roots = 10 - d on blow-up lattices", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries)
        if (val[e.id].class_group.torsion_order() * e.degree > 9) bad.push_back(e.id);
    r.add("torsion order n satisfies n*d <= 9", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries)
        if (e.degree % val[e.id].index != 0) bad.push_back(e.id);
    r.add("index divides the degree", bad.empty(), join(bad));

    bad.clear();
    std::vector<std::string> missing;
    for (const auto& e : c.entries) {
        int bound = e.degree == 3 ? 6 : e.degree == 4 ? 4 : e.degree >= 5 ? 3 : 1 << 20;
        for (const auto& comp : components_of(e.config)) {
            auto through = lines_through_component(e.config, comp);
            if (e.degree >= 3 && static_cast<int>(through.size()) > bound) bad.push_back(e.id);
            if (e.degree <= 7 && through.empty()) missing.push_back(e.id);
        }
    }
    r.add("lines through a singular point: <= 6, 4, 3 for d = 3, 4, >= 5", bad.empty(), join(bad));
    r.add("every singular point of a d <= 7 surface lies on a line", missing.empty(), join(missing));

    Report t = check_index_table(c);
    r.add("index table rows reproduced", t.passed(), std::to_string(t.checks.size()) + " checks");

    bad.clear();
    for (const auto& e : c.entries) {
        const auto& v = val[e.id];
        auto it = c.cyclic.types.find(e.degree);
        if (v.rho == 1 && it != c.cyclic.types.end() && v.type == it->second &&
            !(v.class_group.free_rank == 1 && v.class_group.torsion.empty()))
            bad.push_back(e.id);
    }
    r.add("rho = 1 with the cyclic types has class group Z", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries)
        if (val[e.id].rho == 1 && e.degree >= 3 && val[e.id].num_lines > 0 && val[e.id].index != e.degree)
            bad.push_back(e.id);
    r.add("rho = 1, d >= 3 and a line give index = d", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries)
        for (const auto& ref : e.blowup_of) {
            const TableEntry* y = c.find(ref);
            if (!y || y->degree != e.degree + 1 || val[ref].rho != val[e.id].rho - 1 || val[ref].type != val[e.id].type)
                bad.push_back(e.id + "<-" + ref);
        }
    r.add("blow-up column: degree +1, rho -1, same type", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries) {
        if (e.degree > 7) continue;
        const GroupExpr& g = e.aut0;
        bool ok = is_solvable(g) && dimension(g) <= 5 && rank(g) <= 2;
        if (is_reductive(g)) ok = ok && (g == parse_group("Gm") || g == parse_group("Gm^2"));
        if (!ok) bad.push_back(e.id);
    }
    r.add("d <= 7: Aut0 solvable, dim <= 5, rank <= 2, reductive only as Gm or Gm^2", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries) {
        const auto& v = val[e.id];
        if (e.degree > 7 || v.num_lines != v.rho) continue;
        bool ok = v.class_group.torsion.empty();
        if (v.rho >= 2)
            for (const auto& l : lines(e.config)) ok = ok && pushforward_self_intersection(e.config, l) <= 0;
        if (!ok) bad.push_back(e.id);
    }
    r.add("lines = rho gives torsion-free Cl and extremal lines", bad.empty(), join(bad));

    bad.clear();
    for (const auto& e : c.entries)
        if (e.degree <= 7 && max_unipotent_dimension(e.aut0) >= 2 && val[e.id].num_lines != val[e.id].rho)
            bad.push_back(e.id);
    r.add("Ga^2 in Aut0 gives lines = rho", bad.empty(), join(bad));

    std::set<std::string> wm1, wm1_expected(c.lists.weakly_minimal_index_one.begin(),
                                            c.lists.weakly_minimal_index_one.end());
    for (const auto& e : c.entries)
        if (e.degree >= 3 && val[e.id].weakly_minimal && val[e.id].index == 1) wm1.insert(e.id);
    r.add("weakly minimal with index 1 and d >= 3 are exactly the listed surfaces", wm1 == wm1_expected,
          join({wm1.begin(), wm1.end()}));
    return r;
}

Report check_index_table(const Catalog& c) {
    Report r;
    r.title = "index table";
    std::set<std::string> rows;
    for (const auto& row : c.index_rows) {
        rows.insert(row.id);
        const TableEntry* e = c.find(row.id);
        if (!e) {
            r.add(row.id, false, "no such entry");
            continue;
        }
        Recomputed v = recompute(e->config);
        bool ok = v.type == row.type && v.rho == row.rho && v.index == row.index && e->degree == row.degree;
        r.add(row.id + " (d, rho, type, ind)", ok,
              std::to_string(e->degree) + ", " + std::to_string(v.rho) + ", " + v.type.str() + ", " +
                  std::to_string(v.index));
        if (row.equation) check_equations(r, row.ambient, {*row.equation}, row.parameters, row.degree, row.id + " ");
    }
    std::vector<std::string> missing;
    for (const auto& e : c.entries) {
        Recomputed v = recompute(e.config);
        if (e.degree >= 3 && v.index > 1 && !v.type.smooth() && !rows.count(e.id)) missing.push_back(e.id);
    }
    r.add("every singular d >= 3 entry with index > 1 is a row", missing.empty(), join(missing));
    return r;
}

Report check_plane_curves(const Catalog& c) {
    Report r;
    r.title = "plane curves";
    Ambient plane{"P2", {"x0", "x1", "x2"}, {{1}, {1}, {1}}};
    std::set<std::string> covered;
    int k = 0;
    for (const auto& p : c.plane_curves) {
        std::string name = "curve " + std::to_string(++k) + " " + p.equation;
        auto ring = make_ring(plane, p.parameters);
        WPoly f = WPoly::parse(p.equation, ring);
        r.add(name + ": homogeneous of degree " + std::to_string(p.degree),
              (p.degree == 3 || p.degree == 4) && is_quasi_homogeneous(f, p.degree));
        r.add(name + ": stabilizer round trip", parse_group(render(p.stabilizer)) == p.stabilizer, render(p.stabilizer));
        for (const auto& a : p.actions) {
            std::string err;
            bool ok = run_action(plane, {{p.equation, {p.degree}}}, p.parameters, a, err);
            r.add(name + ": " + a.description, ok, err);
            r.add(name + ": family dimension matches the stabilizer",
                  static_cast<int>(a.parameters.size()) == dimension(p.stabilizer));
        }
        if (p.cover_id) {
            const TableEntry* e = c.find(*p.cover_id);
            covered.insert(*p.cover_id);
            bool ok = e && e->ambient && e->equations.size() == 1;
            if (ok) {
                auto er = make_ring(*e->ambient, e->parameters);
                WPoly w = WPoly::parse(p.branch_variable, er);
                WPoly branch = w * w - WPoly::parse(e->equations[0].text, er);
                // rename the curve into the entry's coordinates
                auto both = make_ring(*e->ambient, concat(concat(p.parameters, plane.variables), {}));
                std::map<int, WPoly> rename;
                for (const auto& [x, y] : p.cover_variables) rename.emplace(both->index(x), WPoly::parse(y, both));
                WPoly curve = WPoly::parse(p.equation, both).substitute(rename);
                WPoly lifted = WPoly::parse(branch.str(), both);
                ok = curve == lifted;
            }
            r.add(name + ": branch curve of " + *p.cover_id, ok);
            r.add(name + ": Aut0 of " + *p.cover_id + " equals the stabilizer", e && e->aut0 == p.stabilizer,
                  e ? e->aut0_text : "");
        }
    }
    std::vector<std::string> uncovered;
    for (const auto& e : c.entries)
        if (e.degree == 2 && !covered.count(e.id)) uncovered.push_back(e.id);
    r.add("every degree 2 entry is a double cover branched in a listed curve", uncovered.empty(), join(uncovered));
    return r;
}

Report check_cyclic_class_group(const Catalog& c) {
    Report r;
    r.title = "cyclic class group";
    std::map<int, const TableEntry*> by_degree;
    for (const auto& e : c.entries) {
        Recomputed v = recompute(e.config);
        bool cyclic = v.class_group.free_rank == 1 && v.class_group.torsion.empty();
        auto it = c.cyclic.types.find(e.degree);
        bool listed = v.rho == 1 && it != c.cyclic.types.end() && it->second == v.type;
        if (cyclic != listed) r.add(e.id + ": Cl = Z exactly for the listed types", false, torsion_str(v.class_group));
        if (cyclic) {
            by_degree[e.degree] = &e;
            if (e.degree == 7) r.add(e.id + ": no cyclic class group in degree 7", false);
            auto ls = lines(e.config);
            if (!ls.empty()) {
                Rational l2 = pushforward_self_intersection(e.config, ls.front());
                r.add(e.id + ": the unique line has L^2 = 1/d", ls.size() == 1 && l2 == Rational(1, e.degree), str(l2));
            }
        }
    }
    r.add("Cl = Z exactly for rho = 1 with the listed types", r.passed());
    for (const auto& s : c.cyclic.surfaces) {
        std::string name = "degree " + std::to_string(s.degree) + " " + s.equation.text;
        check_equations(r, s.ambient, {s.equation}, {}, s.degree, name + " ");
        if (s.id) {
            auto it = by_degree.find(s.degree);
            r.add(name + ": matches entry " + *s.id, it != by_degree.end() && it->second->id == *s.id);
        }
    }
    for (const auto& [d, g] : c.cyclic.aut0) {
        auto it = by_degree.find(d);
        if (it == by_degree.end()) {
            r.add("Aut0 in degree " + std::to_string(d), false, "no entry with Cl = Z");
            continue;
        }
        bool equal = it->second->aut0 == g;
        auto known = c.cyclic.known_discrepancies.find(d);
        if (known != c.cyclic.known_discrepancies.end())
            r.add("Aut0 in degree " + std::to_string(d) + " (recorded discrepancy)", !equal, known->second);
        else
            r.add("Aut0 in degree " + std::to_string(d), equal, render(g) + " vs " + it->second->aut0_text);
    }
    std::set<std::pair<int, int>> members;
    int degree_one = 0;
    for (const auto& s : c.cyclic.surfaces)
        if (s.degree == 1) {
            ++degree_one;
            if (s.singular_members) members.insert(*s.singular_members);
        }
    r.add("the two degree 1 surfaces have different singular anticanonical members",
          degree_one == 2 && members.size() == 2);
    return r;
}

Report check_pushforwards(const Catalog& c) {
    Report r;
    r.title = "pushforwards";
    int checked = 0;
    std::vector<std::string> bad;
    for (const auto& e : c.entries) {
        const auto& cfg = e.config;
        auto comps = root_components(cfg.lattice, cfg.simple_roots);
        for (const auto& l : lines(cfg)) {
            std::vector<int> met;
            int total = 0;
            for (std::size_t i = 0; i < cfg.simple_roots.size(); ++i) {
                Int p = cfg.lattice.pair(l, cfg.simple_roots[i]);
                total += static_cast<int>(p);
                if (p > 0) met.push_back(static_cast<int>(i));
            }
            if (met.size() != 1 || total != 1) continue;
            const auto& comp = *std::find_if(comps.begin(), comps.end(), [&](const auto& cc) {
                return std::find(cc.begin(), cc.end(), met[0]) != cc.end();
            });
            std::vector<DivisorClass> roots;
            for (int i : comp) roots.push_back(cfg.simple_roots[static_cast<std::size_t>(i)]);
            AdeType t = ade_type(cfg.lattice, roots);
            if (t.components().size() != 1 || t.components()[0].kind != 'A') continue;
            int nbrs = 0;
            for (int i : comp)
                if (i != met[0] && cfg.lattice.pair(cfg.simple_roots[static_cast<std::size_t>(i)],
                                                    cfg.simple_roots[static_cast<std::size_t>(met[0])]) == 1)
                    ++nbrs;
            if (nbrs > 1) continue;  // not a chain end
            int n = t.components()[0].rank + 1;
            ++checked;
            Rational l2 = pushforward_self_intersection(cfg, l);
            if (l2 != Rational(-1, n)) bad.push_back(e.id + " " + to_string(l) + " " + str(l2));
        }
    }
    r.add("lines through one A_{n-1} chain end have L^2 = -1/n (" + std::to_string(checked) + " lines)",
          bad.empty() && checked > 0, join(bad));
    return r;
}

Report enumerate_and_match(const Catalog& c, int degree) {
    Report r;
    r.title = "orbit census d=" + std::to_string(degree);
    if (degree < 5 || degree > 7) {
        r.add("degree", false, "only degrees 5, 6, 7 are matched");
        return r;
    }
    PicLattice lat = PicLattice::blowup_of_p2(9 - degree);
    auto reps = enumerate_configs(lat, lat.rank() - 1);
    std::vector<const TableEntry*> rows;
    for (const auto& e : c.entries)
        if (e.degree == degree && e.config.lattice == lat) rows.push_back(&e);
    std::vector<int> used(rows.size(), 0);
    int smooth_unmatched = 0;
    bool all_exact = true;
    for (const auto& rep : reps) {
        all_exact = all_exact && rep.exact;
        Recomputed v = recompute(rep.config);
        DualGraph g = dual_graph(rep.config);
        int hit = -1, hits = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const TableEntry* e = rows[i];
            if (e->type == v.type && e->num_lines == v.num_lines && e->rho == v.rho && e->index == v.index &&
                graphs_isomorphic(g, e->expected_graph)) {
                hit = static_cast<int>(i);
                ++hits;
            }
        }
        std::string label = v.type.str() + " l=" + std::to_string(v.num_lines);
        if (hits == 1) {
            ++used[static_cast<std::size_t>(hit)];
            r.add("orbit " + label, true, rows[static_cast<std::size_t>(hit)]->id);
        } else if (hits == 0 && degree == 5 && v.type.smooth()) {
            ++smooth_unmatched;
            r.add("orbit " + label, true, "smooth quintic, finite automorphisms, no row");
        } else {
            r.add("orbit " + label, false, std::to_string(hits) + " matching rows");
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        r.add("row " + rows[i]->id + " matched once", used[i] == 1);
    std::size_t expected = degree == 7 ? 2 : degree == 6 ? 6 : 7;
    r.add("orbit count " + std::to_string(expected), reps.size() == expected && all_exact,
          std::to_string(reps.size()) + " orbits");
    if (degree == 5) r.add("smooth orbit has no row", smooth_unmatched == 1);
    return r;
}

}  // namespace dpzoo
