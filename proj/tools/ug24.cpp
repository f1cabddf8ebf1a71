// Command-line front end: group catalog, conjugacy classes, radicals,
// Wedderburn decompositions, unit-group structures, censuses, and the
// verification sweep.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ug24/verify.hpp"

using namespace ug24;

namespace {

std::string component_string(const std::vector<WedderburnComponent>& comps, bool latex = false) {
    std::map<std::pair<int, int>, int> ms;
    for (auto& c : comps) ++ms[{c.n, c.d}];
    std::ostringstream os;
    bool first = true;
    for (auto& [nd, count] : ms) {
        auto [n, d] = nd;
        if (!first) os << (latex ? " \\oplus " : " + ");
        first = false;
        if (n == 1)
            os << (d == 1 ? "F" : (latex ? "F_{" + std::to_string(d) + "}" : "F_" + std::to_string(d)));
        else {
            os << "M(" << n << ",F";
            if (d > 1) os << (latex ? "_{" + std::to_string(d) + "}" : "_" + std::to_string(d));
            os << ")";
        }
        if (count > 1) os << "^" << (latex ? "{" + std::to_string(count) + "}" : std::to_string(count));
    }
    if (first) os << "0";
    return os.str();
}

int cmd_list_groups(bool latex) {
    for (const auto& name : catalog_names()) {
        Group g = build_group(name);
        std::cout << name;
        if (latex) std::cout << "  (" << catalog_latex(name) << ")";
        std::cout << "  order " << g.n;
        if (!g.presentation.empty()) std::cout << "  <" << g.presentation << ">";
        std::cout << "\n";
    }
    return 0;
}

int cmd_classes(const std::string& group, bool as_json) {
    Group g = build_group(group);
    auto cc = conjugacy_classes(g);
    if (as_json) {
        nlohmann::json j;
        j["group"] = group;
        for (size_t i = 0; i < cc.reps.size(); ++i)
            j["classes"].push_back({{"representative", g.elem_names[(size_t)cc.reps[i]]},
                                    {"size", cc.sizes[i]},
                                    {"order", cc.orders[i]}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "conjugacy classes of " << group << " (" << cc.reps.size() << " classes)\n";
    std::cout << "representative      size  order\n";
    for (size_t i = 0; i < cc.reps.size(); ++i) {
        std::string rep = g.elem_names[(size_t)cc.reps[i]];
        std::cout << rep << std::string(rep.size() < 20 ? 20 - rep.size() : 1, ' ')
                  << cc.sizes[i] << "     " << cc.orders[i] << "\n";
    }
    return 0;
}

int cmd_radical(const std::string& group, std::uint32_t p, std::uint32_t k, bool as_json) {
    Group g = build_group(group);
    Field F(p, k);
    GroupAlgebra A(g, F);
    auto rep = jacobson_radical(A);
    if (as_json) {
        nlohmann::json j{{"group", group},
                         {"p", p},
                         {"k", k},
                         {"dim_radical", rep.radical.dim()},
                         {"nilpotency_index", rep.nilindex},
                         {"omega_pcore_shortcut",
                          {{"applicable", rep.omega_core_applicable}, {"agrees", rep.omega_core_agrees}}},
                         {"p_element_sum_annihilator", {{"agrees", rep.ann_psum_agrees}}}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "J(F" << F.q() << "[" << group << "]): dim " << rep.radical.dim()
              << ", nilpotency index " << rep.nilindex << "\n";
    std::cout << "  omega(O_p)FG shortcut: "
              << (rep.omega_core_applicable ? (rep.omega_core_agrees ? "applicable, agrees" : "applicable, DISAGREES")
                                            : "not applicable (p divides [G:O_p])")
              << "\n";
    std::cout << "  Ann(p-element sum) cross-check: " << (rep.ann_psum_agrees ? "agrees" : "differs") << "\n";
    return 0;
}

int cmd_decompose(const std::string& group, std::uint32_t p, std::uint32_t k, bool as_json, bool md) {
    auto C = decompose_case(group, p, k);
    const auto& D = C.decomposition;
    if (as_json) {
        nlohmann::json comps = nlohmann::json::array();
        for (auto& [nd, count] : D.component_multiset())
            comps.push_back({{"n", nd.first}, {"d", nd.second}, {"count", count}});
        nlohmann::json j{{"group", group},
                         {"p", p},
                         {"k", k},
                         {"q", C.field.q()},
                         {"dim_radical", D.radical_dim},
                         {"components", comps},
                         {"cyclotomic",
                          {{"m", D.cyclo.m},
                           {"t_order", D.cyclo.t_order},
                           {"r", D.cyclo.r},
                           {"s", D.cyclo.s},
                           {"orbit_sizes", D.cyclo.orbit_sizes}}}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (md) {
        std::cout << "| algebra | dim J | semisimple quotient |\n|---|---|---|\n";
        std::cout << "| $F_{" << C.field.q() << "}[" << catalog_latex(group) << "]$ | " << D.radical_dim
                  << " | $" << component_string(D.components, true) << "$ |\n";
        return 0;
    }
    std::cout << "F" << C.field.q() << "[" << group << "]  (q = " << C.field.q() << ")\n";
    std::cout << "  dim J(FG) = " << D.radical_dim << "\n";
    std::cout << "  FG/J = " << component_string(D.components) << "\n";
    std::cout << "  cyclotomic classes: m = " << D.cyclo.m << ", |T| = " << D.cyclo.t_order
              << ", r = " << D.cyclo.r << ", s = " << D.cyclo.s << "\n";
    return 0;
}

int cmd_units(const std::string& group, std::uint32_t p, std::uint32_t k, bool census, bool vonly,
              std::uint64_t budget, int order_cap, bool as_json) {
    auto C = decompose_case(group, p, k);
    auto u = unit_structure(C);
    auto desc = describe(u);
    nlohmann::json j{{"group", group}, {"p", p}, {"k", k}, {"q", C.field.q()}};
    j["structure"] = desc;
    j["rendered"] = render_structure(desc, p, k);

    if (!as_json) {
        std::cout << "U(F" << C.field.q() << "[" << group << "]) = " << render_structure(desc, p, k)
                  << "\n  |U| = " << u.total_order.str() << "\n";
    }
    if (census) {
        GroupAlgebra A(C.group, C.field);
        if (vonly) {
            auto res = v_census(A, C.radical.radical.space, budget, order_cap > 0 ? order_cap : 256);
            BigInt total = 0;
            nlohmann::json hist;
            for (auto& [o, cnt] : res.order_histogram) {
                hist[std::to_string(o)] = cnt;
                total += cnt;
            }
            bool ok = (total == u.unipotent.order);
            if (as_json)
                j["census"] = {{"mode", "V"},
                               {"elements", res.domain_size.str()},
                               {"order_histogram", hist},
                               {"all_commute", res.all_commute},
                               {"matches_structure_order", ok}};
            else
                std::cout << "  V census: " << res.domain_size.str() << " elements, commuting basis: "
                          << (res.all_commute ? "yes" : "no") << ", matches |V|: " << (ok ? "yes" : "NO")
                          << "\n";
        } else {
            auto res = full_unit_census(A, budget, order_cap);
            bool ok = (res.unit_count == u.total_order);
            if (as_json)
                j["census"] = {{"mode", "full"},
                               {"vectors", res.domain_size.str()},
                               {"units", res.unit_count.str()},
                               {"matches_structure_order", ok}};
            else
                std::cout << "  full census: " << res.unit_count.str() << " units among "
                          << res.domain_size.str() << " vectors; matches |U|: " << (ok ? "yes" : "NO") << "\n";
            if (!ok) {
                if (as_json) std::cout << j.dump(2) << "\n";
                return 1;
            }
        }
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(bool all, const std::string& group, const std::string& json_path,
               const std::string& md_path, bool no_census, const std::string& q_csv) {
    VerifyOptions opts;
    opts.arbitration_census = !no_census;
    std::vector<std::string> groups = in_scope_groups();
    if (!all && !group.empty()) groups = {group};
    std::vector<std::uint64_t> qs = default_q_sweep();
    if (!q_csv.empty()) {
        qs.clear();
        std::stringstream ss(q_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) qs.push_back(std::stoull(tok));
    }
    Report rep = run_sweep(qs, groups, opts);
    for (auto& c : rep.cases) {
        std::cout << verdict_name(c.verdict) << "  " << c.group << "  q=" << c.q;
        if (c.verdict == Verdict::Skipped)
            std::cout << "  (" << c.reason << ")";
        else if (c.computed)
            std::cout << "  " << render_structure(*c.computed, c.p, c.k);
        if (c.verdict == Verdict::Discrepancy) std::cout << "  [documented discrepancy; see report]";
        if (c.verdict == Verdict::Fail) {
            std::cout << "  !! " << c.reason;
            for (auto& d : c.diff)
                std::cout << "\n      " << d.part << ": expected " << d.expected << ", computed " << d.computed;
        }
        std::cout << "\n";
    }
    std::cout << "summary: " << rep.pass << " pass, " << rep.fail << " fail, " << rep.discrepancy
              << " documented discrepancies, " << rep.skipped << " skipped\n";
    for (auto& c : rep.cases)
        if (c.verdict == Verdict::Discrepancy)
            std::cout << "  discrepancy " << c.group << " q=" << c.q << ": " << c.reason
                      << (c.published_variant.empty() ? "" : " [published: " + c.published_variant + "]")
                      << "\n    arbitration: " << c.arbitration << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        nlohmann::json j = rep;
        out << j.dump(2) << "\n";
        std::cout << "wrote " << json_path << "\n";
    }
    if (!md_path.empty()) {
        std::ofstream out(md_path);
        out << report_markdown(rep);
        std::cout << "wrote " << md_path << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit groups of the group algebras of the groups of order 24"};
    app.require_subcommand(1);

    auto* lg = app.add_subcommand("list-groups", "print the group catalog");
    bool latex = false;
    lg->add_flag("--latex", latex, "include the typeset name aliases");

    std::string group;
    std::uint32_t p = 2, k = 1;
    bool as_json = false, as_md = false;

    auto* cl = app.add_subcommand("classes", "conjugacy classes of a catalog group");
    cl->add_option("--group", group, "catalog group name")->required();
    cl->add_flag("--json", as_json, "JSON output");

    auto* rad = app.add_subcommand("radical", "Jacobson radical of FG");
    rad->add_option("--group", group)->required();
    rad->add_option("--p", p, "field characteristic (prime)")->required();
    rad->add_option("--k", k, "extension degree")->default_val(1);
    rad->add_flag("--json", as_json);

    auto* dec = app.add_subcommand("decompose", "Wedderburn decomposition of FG");
    dec->add_option("--group", group)->required();
    dec->add_option("--p", p)->required();
    dec->add_option("--k", k)->default_val(1);
    dec->add_flag("--json", as_json);
    dec->add_flag("--md", as_md, "markdown output");

    auto* un = app.add_subcommand("units", "unit group structure of FG");
    un->add_option("--group", group)->required();
    un->add_option("--p", p)->required();
    un->add_option("--k", k)->default_val(1);
    bool census = false, vonly = false;
    std::uint64_t budget = 1ull << 24;
    int order_cap = 0;
    un->add_flag("--census", census, "run the exhaustive census oracle");
    un->add_flag("--vonly", vonly, "census V = 1+J instead of the whole algebra");
    un->add_option("--budget", budget, "maximum number of vectors to enumerate");
    un->add_option("--order-cap", order_cap, "track element orders up to this cap");
    un->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("verify", "verify computed structures against the encoded tables");
    bool all = false, no_census = false;
    std::string json_path, md_path, q_csv;
    ver->add_flag("--all", all, "verify every in-scope group (default when no --group)");
    ver->add_option("--group", group, "restrict to one group");
    ver->add_option("--q", q_csv, "comma-separated q values (default: the standard sweep)");
    ver->add_option("--json", json_path, "write the JSON report here");
    ver->add_option("--md", md_path, "write the markdown report here");
    ver->add_flag("--no-census", no_census, "skip the V-enumeration arbitration oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (lg->parsed()) return cmd_list_groups(latex);
        if (cl->parsed()) return cmd_classes(group, as_json);
        if (rad->parsed()) return cmd_radical(group, p, k, as_json);
        if (dec->parsed()) return cmd_decompose(group, p, k, as_json, as_md);
        if (un->parsed()) return cmd_units(group, p, k, census, vonly, budget, order_cap, as_json);
        if (ver->parsed()) return cmd_verify(all, group, json_path, md_path, no_census, q_csv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
