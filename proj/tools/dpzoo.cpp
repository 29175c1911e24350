#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpzoo/catalog.hpp"

using namespace dpzoo;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json class_group_json(const ClassGroup& g) {
    ordered_json t = ordered_json::array();
    for (auto x : g.torsion) t.push_back(static_cast<long long>(x));
    return t;
}

ordered_json values_json(const Recomputed& v) {
    ordered_json j;
    j["type"] = v.type.str();
    j["rho"] = v.rho;
    j["lines"] = v.num_lines;
    j["index"] = v.index;
    j["weakly_minimal"] = v.weakly_minimal;
    j["class_group_rank"] = v.class_group.free_rank;
    j["torsion"] = class_group_json(v.class_group);
    return j;
}

ordered_json report_json(const Report& r) {
    ordered_json j;
    j["title"] = r.title;
    j["pass"] = r.passed();
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j;
}

void print_report(const Report& r, bool verbose) {
    std::cout << r.title << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size() - r.failures() << "/"
              << r.checks.size() << " checks)\n";
    for (const auto& c : r.checks) {
        if (c.pass && !verbose) continue;
        std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
        std::cout << "\n";
    }
}

const TableEntry& lookup(const Catalog& c, const std::string& id) {
    const TableEntry* e = c.find(id);
    if (!e) throw UsageError("unknown entry id '" + id + "'");
    return *e;
}

int cmd_verify(const Catalog& c, const std::string& entry, bool as_json, int jobs) {
    std::vector<EntryReport> reports;
    if (!entry.empty())
        reports.push_back(verify_entry(lookup(c, entry)));
    else
        reports = verify_all(c, jobs);
    int passed = 0;
    for (const auto& r : reports) passed += r.report.passed();
    if (as_json) {
        ordered_json j;
        j["entries"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json e = report_json(r.report);
            e.erase("title");
            e = ordered_json{{"id", r.id}, {"pass", e["pass"]}, {"values", values_json(r.values)}, {"checks", e["checks"]}};
            j["entries"].push_back(e);
        }
        j["passed"] = passed;
        j["total"] = reports.size();
        std::cout << j.dump(1) << "\n";
    } else {
        for (const auto& r : reports) print_report(r.report, !entry.empty());
        std::cout << passed << "/" << reports.size() << " entries pass\n";
    }
    return passed == static_cast<int>(reports.size()) ? 0 : 1;
}

int cmd_info(const Catalog& c, const std::string& id) {
    const TableEntry& e = lookup(c, id);
    EntryReport r = verify_entry(e);
    ordered_json j;
    j["id"] = e.id;
    j["degree"] = e.degree;
    ordered_json values = values_json(r.values);
    for (auto& [k, v] : values.items()) j[k] = v;
    j["aut0"] = render(e.aut0);
    j["aut0_dimension"] = dimension(e.aut0);
    j["aut0_reductive"] = is_reductive(e.aut0);
    j["lattice"] = e.config.lattice.describe();
    ordered_json roots = ordered_json::array(), ls = ordered_json::array();
    for (const auto& x : e.config.simple_roots) roots.push_back(to_string(x));
    for (const auto& l : lines(e.config)) {
        std::ostringstream l2;
        l2 << pushforward_self_intersection(e.config, l);
        ls.push_back({{"class", to_string(l)}, {"self_intersection", l2.str()}});
    }
    j["simple_roots"] = roots;
    j["lines_detail"] = ls;
    j["blowup_of"] = e.blowup_of;
    j["checks_pass"] = r.report.passed();
    std::cout << j.dump(1) << "\n";
    return 0;
}

int cmd_graph(const Catalog& c, const std::string& id, bool as_json) {
    const TableEntry& e = lookup(c, id);
    DualGraph g = dual_graph(e.config);
    if (as_json)
        std::cout << graph_to_json_text(g) << "\n";
    else
        std::cout << g.to_dot(e.id);
    return 0;
}

int cmd_enumerate(const Catalog& c, int degree) {
    if (degree < 1 || degree > 9) throw UsageError("degree must be in 1..9");
    if (degree < 5) std::cerr << "warning: degree " << degree << " enumeration is slow and may be fingerprint-only\n";
    PicLattice lat = PicLattice::blowup_of_p2(9 - degree);
    int orbit = 0;
    for (const auto& rep : enumerate_configs(lat, lat.rank() - 1)) {
        SurfaceConfig cfg = rep.config;
        AdeType t = singularity_type(cfg);
        int rho = picard_rank(cfg), nl = static_cast<int>(lines(cfg).size()), ind = fano_weil_index(cfg);
        DualGraph g = dual_graph(cfg);
        std::string match = "-";
        for (const auto& e : c.entries)
            if (e.config.lattice == lat && e.type == t && e.rho == rho && e.num_lines == nl && e.index == ind &&
                graphs_isomorphic(g, e.expected_graph))
                match = e.id;
        std::cout << "orbit " << ++orbit << ": type=" << t.str() << " rho=" << rho << " lines=" << nl
                  << " index=" << ind << (rep.exact ? "" : " (fingerprint)") << " entry=" << match << "\n";
    }
    if (degree >= 5 && degree <= 7) {
        Report r = enumerate_and_match(c, degree);
        return r.passed() ? 0 : 1;
    }
    return 0;
}

int cmd_reports(const std::vector<Report>& reports, bool as_json) {
    bool ok = true;
    ordered_json j = ordered_json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        if (as_json)
            j.push_back(report_json(r));
        else
            print_report(r, true);
    }
    if (as_json) std::cout << j.dump(1) << "\n";
    return ok ? 0 : 1;
}

std::filesystem::path data_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("DPZOO_DATA")) return env;
    return DPZOO_DEFAULT_DATA_DIR;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of Du Val del Pezzo surfaces with infinite automorphism group"};
    app.require_subcommand(1);
    std::string dir_flag, entry, id;
    bool as_json = false, as_dot = false;
    int jobs = 1, degree = 0;
    app.add_option("--data-dir", dir_flag, "catalog directory (default: $DPZOO_DATA or the source tree)");

    auto* table = app.add_subcommand("table", "table operations");
    table->require_subcommand(1);
    auto* verify = table->add_subcommand("verify", "recompute and check table entries");
    verify->add_option("--entry", entry, "single entry id");
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* info = app.add_subcommand("info", "recomputed invariants of one entry as JSON");
    info->add_option("id", id)->required();

    auto* graph = app.add_subcommand("graph", "dual graph of one entry");
    graph->add_option("id", id)->required();
    auto* dot_flag = graph->add_flag("--dot", as_dot, "Graphviz output (default)");
    graph->add_flag("--json", as_json, "JSON output")->excludes(dot_flag);

    auto* enumerate = app.add_subcommand("enumerate", "Weyl-orbit census of root configurations");
    enumerate->add_option("--degree", degree, "degree 1..9")->required();

    auto* cor = app.add_subcommand("corollaries", "lattice-checkable consequences and auxiliary tables");
    cor->add_flag("--json", as_json, "machine-readable output");

    auto* poly = app.add_subcommand("poly-check", "equations, lines and group actions of one entry");
    poly->add_option("id", id)->required();
    poly->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Catalog c = load_catalog(data_dir(dir_flag));
        if (*verify) return cmd_verify(c, entry, as_json, jobs);
        if (*info) return cmd_info(c, id);
        if (*graph) return cmd_graph(c, id, as_json);
        if (*enumerate) return cmd_enumerate(c, degree);
        if (*cor)
            return cmd_reports({check_corollaries(c), check_index_table(c), check_plane_curves(c),
                                check_cyclic_class_group(c), check_pushforwards(c)},
                               as_json);
        if (*poly) return cmd_reports({poly_check(lookup(c, id))}, as_json);
    } catch (const UsageError& e) {
        std::cerr << "dpzoo: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        std::cerr << "dpzoo: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
