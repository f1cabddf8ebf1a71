// The named group catalog: the fifteen groups of order 24 plus the small
// abelian auxiliaries. Each entry records a presentation, designates the
// generators appearing in it, names every element by its normal form
// x^a y^b z^c w^d over fixed exponent ranges, and verifies the defining
// relations exhaustively on the finished multiplication table.
#pragma once

#include "ug24/groups.hpp"

namespace ug24 {

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "C24", "C12xC2", "C2^3xC3", "C3:C8", "SL(2,3)", "C3:Q8", "S4", "C4xD6",
        "D24", "C6:C4", "C3:D8", "C3xD8", "C3xQ8", "C2xA4", "D12xC2",
        "C3", "C6", "C8", "C2^2", "C2^3", "C2xC4", "C2xC6"};
    return names;
}

inline std::string catalog_latex(const std::string& name) {
    static const std::map<std::string, std::string> tab = {
        {"C24", "C_{24}"},
        {"C12xC2", "C_{12} \\times C_2"},
        {"C2^3xC3", "C_2^3 \\times C_3"},
        {"C3:C8", "C_3 \\rtimes C_8"},
        {"SL(2,3)", "SL(2, \\mathbb{Z}_3)"},
        {"C3:Q8", "C_3 \\rtimes Q_8"},
        {"S4", "S_4"},
        {"C4xD6", "C_4 \\times D_6"},
        {"D24", "D_{24}"},
        {"C6:C4", "C_6 \\rtimes C_4"},
        {"C3:D8", "C_3 \\rtimes D_8"},
        {"C3xD8", "C_3 \\times D_8"},
        {"C3xQ8", "C_3 \\times Q_8"},
        {"C2xA4", "C_2 \\times A_4"},
        {"D12xC2", "D_{12} \\times C_2"},
        {"C3", "C_3"},
        {"C6", "C_6"},
        {"C8", "C_8"},
        {"C2^2", "C_2^2"},
        {"C2^3", "C_2^3"},
        {"C2xC4", "C_2 \\times C_4"},
        {"C2xC6", "C_2 \\times C_6"}};
    auto it = tab.find(name);
    return it == tab.end() ? name : it->second;
}

namespace detail {

// product gen1^e1 * gen2^e2 * ...
inline int eval_word(const Group& G, const std::vector<std::pair<int, long long>>& w) {
    int r = 0;
    for (auto& [g, e] : w) r = G.op(r, G.pw(g, e));
    return r;
}

struct NamedGen {
    std::string name;
    int index;
    int range;  // exponents run over 0..range-1
};

// Assign the normal-form name to every element; the exponent ranges must
// enumerate the group bijectively (checked).
inline void assign_normal_form_names(Group& G, const std::vector<NamedGen>& gens) {
    long long total = 1;
    for (auto& g : gens) total *= g.range;
    ensure(total == G.n, "normal-form ranges must enumerate the group");
    std::vector<std::string> names(static_cast<size_t>(G.n));
    std::vector<bool> hit(static_cast<size_t>(G.n), false);
    std::vector<int> exps(gens.size(), 0);
    for (long long count = 0; count < total; ++count) {
        int e = 0;
        std::string nm;
        for (size_t i = 0; i < gens.size(); ++i) {
            e = G.op(e, G.pw(gens[i].index, exps[i]));
            if (exps[i] == 0) continue;
            if (!nm.empty()) nm += "*";
            nm += gens[i].name;
            if (exps[i] > 1) nm += "^" + std::to_string(exps[i]);
        }
        if (nm.empty()) nm = "1";
        ensure(!hit[static_cast<size_t>(e)], "normal form hits an element twice: " + nm);
        hit[static_cast<size_t>(e)] = true;
        names[static_cast<size_t>(e)] = nm;
        for (size_t i = gens.size(); i-- > 0;) {
            if (++exps[i] < gens[i].range) break;
            exps[i] = 0;
        }
    }
    G.elem_names = std::move(names);
    G.generators.clear();
    for (auto& g : gens) G.generators.emplace_back(g.name, g.index);
}

inline void check_relation(const Group& G, const std::vector<std::pair<int, long long>>& lhs,
                           const std::vector<std::pair<int, long long>>& rhs,
                           const std::string& what) {
    ensure(eval_word(G, lhs) == eval_word(G, rhs), "relation failed: " + what);
}

inline void expect_abelianization(const Group& G, const std::vector<int>& invariants) {
    auto q = quotient_group(G, derived_subgroup(G));
    ensure(abelian_invariants(q.group) == invariants,
           "abelianization of " + G.name + " does not match its recipe");
}

}  // namespace detail

inline Group build_group(const std::string& name) {
    using detail::assign_normal_form_names;
    using detail::check_relation;
    using detail::expect_abelianization;
    using detail::NamedGen;

    if (name == "C24") {
        Group g = cyclic(24, "x");
        g.name = name;
        assign_normal_form_names(g, {NamedGen{"x", 1, 24}});
        expect_abelianization(g, {24});
        return g;
    }
    if (name == "C12xC2") {
        Group g = direct_product(cyclic(12, "x"), cyclic(2, "y"));
        g.name = name;
        g.presentation = "x^12 = y^2 = 1, xy = yx";
        int x = 1 * 2, y = 1;
        assign_normal_form_names(g, {{"x", x, 12}, {"y", y, 2}});
        check_relation(g, {{x, 12}}, {}, "x^12 = 1");
        check_relation(g, {{y, 2}}, {}, "y^2 = 1");
        check_relation(g, {{x, 1}, {y, 1}}, {{y, 1}, {x, 1}}, "xy = yx");
        expect_abelianization(g, {12, 2});
        return g;
    }
    if (name == "C2^3xC3") {
        Group g = direct_product(cyclic(3, "x"), direct_product(cyclic(2, "y"), direct_product(cyclic(2, "z"), cyclic(2, "w"))));
        g.name = name;
        g.presentation = "x^3 = y^2 = z^2 = w^2 = 1, all generators commute";
        int x = 8, y = 4, z = 2, w = 1;
        assign_normal_form_names(g, {{"x", x, 3}, {"y", y, 2}, {"z", z, 2}, {"w", w, 2}});
        ensure(g.is_abelian(), "C2^3xC3 must be abelian");
        expect_abelianization(g, {6, 2, 2});
        return g;
    }
    if (name == "C3:C8") {
        Group g = semidirect_product(cyclic(3, "x"), cyclic(8, "y"), {inversion_action(cyclic(3))});
        g.name = name;
        g.presentation = "x^3 = y^8 = 1, y x y^-1 = x^-1";
        int x = 1 * 8, y = 1;
        assign_normal_form_names(g, {{"x", x, 3}, {"y", y, 8}});
        check_relation(g, {{x, 3}}, {}, "x^3 = 1");
        check_relation(g, {{y, 8}}, {}, "y^8 = 1");
        check_relation(g, {{y, 1}, {x, 1}, {y, -1}}, {{x, -1}}, "y x y^-1 = x^-1");
        expect_abelianization(g, {8});
        return g;
    }
    if (name == "SL(2,3)") {
        Group g = sl2_3();
        expect_abelianization(g, {3});
        return g;
    }
    if (name == "C3:Q8") {
        Group q8 = quaternion8();
        Group g = semidirect_product(cyclic(3, "c"), q8, {trivial_action(cyclic(3)), inversion_action(cyclic(3))});
        g.name = name;
        g.presentation = "x^12 = 1, x^6 = y^2, y x y^-1 = x^-1";
        // x = c*i has order 12 (i acts trivially on c), y = j
        int x = 1 * 8 + q8.generator("i");
        int y = q8.generator("j");
        assign_normal_form_names(g, {{"x", x, 12}, {"y", y, 2}});
        check_relation(g, {{x, 12}}, {}, "x^12 = 1");
        check_relation(g, {{x, 6}}, {{y, 2}}, "x^6 = y^2");
        check_relation(g, {{y, 1}, {x, 1}, {y, -1}}, {{x, -1}}, "y x y^-1 = x^-1");
        expect_abelianization(g, {2, 2});
        return g;
    }
    if (name == "S4") {
        Group g = symmetric4();
        expect_abelianization(g, {2});
        return g;
    }
    if (name == "C4xD6") {
        Group g = direct_product(dihedral(6, "x", "y"), cyclic(4, "z"));
        g.name = name;
        g.presentation = "x^3 = y^2 = z^4 = (xy)^2 = 1, xz = zx, yz = zy";
        int x = 2 * 4, y = 1 * 4, z = 1;
        assign_normal_form_names(g, {{"x", x, 3}, {"y", y, 2}, {"z", z, 4}});
        check_relation(g, {{x, 3}}, {}, "x^3 = 1");
        check_relation(g, {{x, 1}, {y, 1}, {x, 1}, {y, 1}}, {}, "(xy)^2 = 1");
        check_relation(g, {{x, 1}, {z, 1}}, {{z, 1}, {x, 1}}, "xz = zx");
        check_relation(g, {{y, 1}, {z, 1}}, {{z, 1}, {y, 1}}, "yz = zy");
        expect_abelianization(g, {4, 2});
        return g;
    }
    if (name == "D24") {
        Group g = dihedral(24, "x", "y");
        g.name = name;
        int x = 2, y = 1;
        assign_normal_form_names(g, {{"x", x, 12}, {"y", y, 2}});
        expect_abelianization(g, {2, 2});
        return g;
    }
    if (name == "C6:C4") {
        Group g = semidirect_product(cyclic(6, "y"), cyclic(4, "x"), {inversion_action(cyclic(6))});
        g.name = name;
        g.presentation = "x^4 = y^6 = 1, y x y = x";
        int y = 1 * 4, x = 1;
        assign_normal_form_names(g, {{"x", x, 4}, {"y", y, 6}});
        check_relation(g, {{x, 4}}, {}, "x^4 = 1");
        check_relation(g, {{y, 6}}, {}, "y^6 = 1");
        check_relation(g, {{y, 1}, {x, 1}, {y, 1}}, {{x, 1}}, "y x y = x");
        expect_abelianization(g, {4, 2});
        return g;
    }
    if (name == "C3:D8") {
        Group d8 = dihedral(8, "y", "z");
        Group g = semidirect_product(cyclic(3, "x"), d8,
                                     {inversion_action(cyclic(3)), trivial_action(cyclic(3))});
        g.name = name;
        g.presentation = "x^3 = y^4 = z^2 = (yz)^2 = 1, x y x = y, xz = zx";
        int x = 1 * 8, y = d8.generator("y"), z = d8.generator("z");
        assign_normal_form_names(g, {{"x", x, 3}, {"y", y, 4}, {"z", z, 2}});
        check_relation(g, {{x, 1}, {y, 1}, {x, 1}}, {{y, 1}}, "x y x = y");
        check_relation(g, {{x, 1}, {z, 1}}, {{z, 1}, {x, 1}}, "xz = zx");
        check_relation(g, {{y, 1}, {z, 1}, {y, 1}, {z, 1}}, {}, "(yz)^2 = 1");
        expect_abelianization(g, {2, 2});
        return g;
    }
    if (name == "C3xD8") {
        Group d8 = dihedral(8, "y", "z");
        Group g = direct_product(cyclic(3, "x"), d8);
        g.name = name;
        g.presentation = "x^3 = y^4 = z^2 = (yz)^2 = 1, xy = yx, xz = zx";
        int x = 1 * 8, y = d8.generator("y"), z = d8.generator("z");
        assign_normal_form_names(g, {{"x", x, 3}, {"y", y, 4}, {"z", z, 2}});
        check_relation(g, {{x, 1}, {y, 1}}, {{y, 1}, {x, 1}}, "xy = yx");
        check_relation(g, {{y, 1}, {z, 1}, {y, 1}, {z, 1}}, {}, "(yz)^2 = 1");
        expect_abelianization(g, {6, 2});
        return g;
    }
    if (name == "C3xQ8") {
        Group q8 = quaternion8();
        Group g = direct_product(q8, cyclic(3, "z"));
        g.name = name;
        g.presentation = "x^4 = z^3 = 1, x^2 = y^2, y x y^-1 = x^-1, xz = zx, yz = zy";
        int x = q8.generator("i") * 3, y = q8.generator("j") * 3, z = 1;
        assign_normal_form_names(g, {{"x", x, 4}, {"y", y, 2}, {"z", z, 3}});
        check_relation(g, {{x, 2}}, {{y, 2}}, "x^2 = y^2");
        check_relation(g, {{y, 1}, {x, 1}, {y, -1}}, {{x, -1}}, "y x y^-1 = x^-1");
        check_relation(g, {{x, 1}, {z, 1}}, {{z, 1}, {x, 1}}, "xz = zx");
        expect_abelianization(g, {6, 2});
        return g;
    }
    if (name == "C2xA4") {
        Group v4 = direct_product(cyclic(2, "z"), cyclic(2, "w"));
        int zv = 2, wv = 1;
        auto beta = automorphism_from_gen_images(v4, {zv, wv}, {3, zv});  // z -> zw, w -> z
        Group a4 = semidirect_product(v4, cyclic(3, "y"), {beta});
        Group g = direct_product(cyclic(2, "x"), a4);
        g.name = name;
        g.presentation = "x^2 = y^3 = z^2 = w^2 = 1, x central, zw = wz, wy = ywz, zy = yw";
        int x = 1 * 12, y = 1, z = zv * 3, w = wv * 3;
        assign_normal_form_names(g, {{"x", x, 2}, {"y", y, 3}, {"z", z, 2}, {"w", w, 2}});
        check_relation(g, {{x, 1}, {y, 1}}, {{y, 1}, {x, 1}}, "xy = yx");
        check_relation(g, {{z, 1}, {w, 1}}, {{w, 1}, {z, 1}}, "zw = wz");
        check_relation(g, {{w, 1}, {y, 1}}, {{y, 1}, {w, 1}, {z, 1}}, "wy = ywz");
        check_relation(g, {{z, 1}, {y, 1}}, {{y, 1}, {w, 1}}, "zy = yw");
        expect_abelianization(g, {6});
        return g;
    }
    if (name == "D12xC2") {
        Group d12 = dihedral(12, "x", "y");
        Group g = direct_product(d12, cyclic(2, "z"));
        g.name = name;
        g.presentation = "x^6 = y^2 = z^2 = (xy)^2 = 1, xz = zx, yz = zy";
        int x = d12.generator("x") * 2, y = d12.generator("y") * 2, z = 1;
        assign_normal_form_names(g, {{"x", x, 6}, {"y", y, 2}, {"z", z, 2}});
        check_relation(g, {{x, 1}, {y, 1}, {x, 1}, {y, 1}}, {}, "(xy)^2 = 1");
        check_relation(g, {{x, 1}, {z, 1}}, {{z, 1}, {x, 1}}, "xz = zx");
        expect_abelianization(g, {2, 2, 2});
        return g;
    }
    // auxiliaries
    if (name == "C3") {
        Group g = cyclic(3, "x");
        assign_normal_form_names(g, {{"x", 1, 3}});
        return g;
    }
    if (name == "C6") {
        Group g = cyclic(6, "x");
        assign_normal_form_names(g, {{"x", 1, 6}});
        return g;
    }
    if (name == "C8") {
        Group g = cyclic(8, "x");
        assign_normal_form_names(g, {{"x", 1, 8}});
        return g;
    }
    if (name == "C2^2") {
        Group g = direct_product(cyclic(2, "x"), cyclic(2, "y"));
        g.name = name;
        assign_normal_form_names(g, {{"x", 2, 2}, {"y", 1, 2}});
        return g;
    }
    if (name == "C2^3") {
        Group g = direct_product(cyclic(2, "x"), direct_product(cyclic(2, "y"), cyclic(2, "z")));
        g.name = name;
        assign_normal_form_names(g, {{"x", 4, 2}, {"y", 2, 2}, {"z", 1, 2}});
        return g;
    }
    if (name == "C2xC4") {
        Group g = direct_product(cyclic(2, "x"), cyclic(4, "y"));
        g.name = name;
        assign_normal_form_names(g, {{"x", 4, 2}, {"y", 1, 4}});
        return g;
    }
    if (name == "C2xC6") {
        Group g = direct_product(cyclic(2, "x"), cyclic(6, "y"));
        g.name = name;
        assign_normal_form_names(g, {{"x", 6, 2}, {"y", 1, 6}});
        return g;
    }
    require(false, "unknown group '" + name + "'; known groups: C24, C12xC2, C2^3xC3, C3:C8, "
                   "SL(2,3), C3:Q8, S4, C4xD6, D24, C6:C4, C3:D8, C3xD8, C3xQ8, C2xA4, D12xC2, "
                   "C3, C6, C8, C2^2, C2^3, C2xC4, C2xC6");
    return Group{};
}

}  // namespace ug24
