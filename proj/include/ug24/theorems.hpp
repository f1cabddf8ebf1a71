// Residue-dispatched expected unit-group structures for the twelve groups
// with encoded reference tables, evaluated symbolically in q = p^k. Two
// entries carry documented discrepancies where the published statement
// contradicts its own derivation; those branches encode the derived form and
// retain the published variant for reporting, with an enumeration oracle to
// arbitrate (see the verification layer).
#pragma once

#include "ug24/unitgroup.hpp"

namespace ug24 {

// C_{p^j}^(coeff*k) factors and (n, d) x count reductive factors.
struct SymbolicUnit {
    std::vector<std::pair<int, int>> v_factors;          // (j, coeff)
    std::vector<std::tuple<int, int, int>> reductive;    // (n, d, count)
    bool split_semidirect = false;
};

struct TheoremBranch {
    int modulus = 1;
    std::vector<int> residues;  // normalized to 0..modulus-1
    SymbolicUnit expected;
    // residues this branch covers although the published dispatch assigns
    // them to a sibling branch; non-empty only for documented misprints
    std::vector<int> disputed_residues;
    std::string residue_note;
};

enum class PClass { P2, P3, PBig };

struct PClassTheorem {
    PClass pc;
    std::vector<TheoremBranch> branches;
    // set when the published unipotent statement differs from the encoded
    // (derived) one; applies to every branch of this characteristic class
    std::optional<std::vector<std::pair<int, int>>> published_v_variant;
    std::string discrepancy_note;
};

struct GroupTheorem {
    std::string group;
    std::vector<PClassTheorem> pclasses;
};

inline const std::vector<std::string>& in_scope_groups() {
    static const std::vector<std::string> g = {"C24",   "C12xC2", "C2^3xC3", "C3:C8",
                                               "C3:Q8", "C4xD6",  "C6:C4",   "C3:D8",
                                               "C3xD8", "C3xQ8",  "C2xA4",   "D12xC2"};
    return g;
}

inline const std::vector<GroupTheorem>& encoded_theorems() {
    using B = TheoremBranch;
    using S = SymbolicUnit;
    using RV = std::vector<std::tuple<int, int, int>>;
    static const std::vector<GroupTheorem> tab = [] {
        std::vector<GroupTheorem> t;

        // ----- C24 -----
        GroupTheorem c24{"C24", {}};
        {
            PClassTheorem p2{PClass::P2,
                             {B{3, {1}, S{{{1, 6}, {2, 3}, {3, 3}}, RV{{1, 1, 3}}}},
                              B{3, {2}, S{{{1, 6}, {2, 3}, {3, 3}}, RV{{1, 1, 1}, {1, 2, 1}}}}},
                             std::vector<std::pair<int, int>>{{2, 6}, {3, 3}},
                             "the published unipotent type C4^{6k} x C8^{3k} contradicts the "
                             "derivation's own subset counts, which force C2^{6k} x C4^{3k} x "
                             "C8^{3k}; the element-order census over V arbitrates"};
            PClassTheorem p3{PClass::P3,
                             {B{8, {1}, S{{{1, 16}}, RV{{1, 1, 8}}}},
                              B{8, {7, 3}, S{{{1, 16}}, RV{{1, 1, 2}, {1, 2, 3}}}},
                              B{8, {5}, S{{{1, 16}}, RV{{1, 1, 4}, {1, 2, 2}}}}}};
            PClassTheorem pb{PClass::PBig,
                             {B{24, {1}, S{{}, RV{{1, 1, 24}}}},
                              B{24, {23, 11}, S{{}, RV{{1, 1, 2}, {1, 2, 11}}}},
                              B{24, {5}, S{{}, RV{{1, 1, 4}, {1, 2, 10}}}},
                              B{24, {19, 7}, S{{}, RV{{1, 1, 6}, {1, 2, 9}}}},
                              B{24, {17}, S{{}, RV{{1, 1, 8}, {1, 2, 8}}}},
                              B{24, {13}, S{{}, RV{{1, 1, 12}, {1, 2, 6}}}}}};
            c24.pclasses = {p2, p3, pb};
        }
        t.push_back(c24);

        // ----- C12xC2 -----
        GroupTheorem c12{"C12xC2", {}};
        {
            PClassTheorem p2{PClass::P2,
                             {B{3, {1}, S{{{1, 15}, {2, 3}}, RV{{1, 1, 3}}}},
                              B{3, {2}, S{{{1, 15}, {2, 3}}, RV{{1, 1, 1}, {1, 2, 1}}}}},
                             std::vector<std::pair<int, int>>{{1, 9}, {2, 6}},
                             "the published statement C2^{9k} x C4^{6k} disagrees with the "
                             "derivation's conclusion C2^{15k} x C4^{3k} (both of order 2^{21k}); "
                             "the element-order census over V arbitrates"};
            PClassTheorem p3{PClass::P3,
                             {B{4, {1}, S{{{1, 16}}, RV{{1, 1, 8}}}},
                              B{4, {3}, S{{{1, 16}}, RV{{1, 1, 4}, {1, 2, 2}}}}}};
            PClassTheorem pb{PClass::PBig,
                             {B{12, {1}, S{{}, RV{{1, 1, 24}}}},
                              B{12, {11}, S{{}, RV{{1, 1, 4}, {1, 2, 10}}}},
                              B{12, {5}, S{{}, RV{{1, 1, 8}, {1, 2, 8}}}},
                              B{12, {7}, S{{}, RV{{1, 1, 12}, {1, 2, 6}}}}}};
            c12.pclasses = {p2, p3, pb};
        }
        t.push_back(c12);

        // ----- C2^3xC3 -----
        GroupTheorem c23{"C2^3xC3", {}};
        {
            PClassTheorem p2{PClass::P2,
                             {B{3, {1}, S{{{1, 21}}, RV{{1, 1, 3}}}},
                              B{3, {2}, S{{{1, 21}}, RV{{1, 1, 1}, {1, 2, 1}}}}}};
            PClassTheorem p3{PClass::P3, {B{1, {0}, S{{{1, 16}}, RV{{1, 1, 8}}}}}};
            PClassTheorem pb{PClass::PBig,
                             {B{6, {1}, S{{}, RV{{1, 1, 24}}}},
                              B{6, {5}, S{{}, RV{{1, 1, 8}, {1, 2, 8}}}}}};
            c23.pclasses = {p2, p3, pb};
        }
        t.push_back(c23);

        // ----- C2xA4 -----
        GroupTheorem a4{"C2xA4", {}};
        {
            SymbolicUnit s3{{{1, 4}}, RV{{1, 1, 2}, {3, 1, 2}}};
            s3.split_semidirect = true;
            PClassTheorem p3{PClass::P3, {B{1, {0}, s3}}};
            PClassTheorem pb{PClass::PBig,
                             {B{6, {1}, S{{}, RV{{1, 1, 6}, {3, 1, 2}}}},
                              B{6, {5}, S{{}, RV{{1, 1, 2}, {1, 2, 2}, {3, 1, 2}}}}}};
            a4.pclasses = {p3, pb};
        }
        t.push_back(a4);

        // ----- the normal-C3 nonabelian groups: p > 3 only -----
        auto pbig_only = [](std::string name, std::vector<TheoremBranch> branches) {
            return GroupTheorem{std::move(name), {PClassTheorem{PClass::PBig, std::move(branches)}}};
        };
        t.push_back(pbig_only("C3:C8",
                              {B{24, {1, 17}, S{{}, RV{{1, 1, 8}, {2, 1, 4}}}},
                               B{24, {5, 13}, S{{}, RV{{1, 1, 4}, {1, 2, 2}, {2, 1, 4}}}},
                               B{24, {23, 19, 7, 11}, S{{}, RV{{1, 1, 2}, {1, 2, 3}, {2, 1, 2}, {2, 2, 1}}}}}));
        t.push_back(pbig_only("C3:Q8",
                              {B{12, {1, 11}, S{{}, RV{{1, 1, 4}, {2, 1, 5}}}},
                               B{12, {5, 7}, S{{}, RV{{1, 1, 4}, {2, 1, 3}, {2, 2, 1}}}}}));
        t.push_back(pbig_only("C4xD6",
                              {B{12, {1, 5}, S{{}, RV{{1, 1, 8}, {2, 1, 4}}}},
                               B{12, {11, 7}, S{{}, RV{{1, 1, 4}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}}}}}));
        t.push_back(pbig_only("C6:C4",
                              {B{12, {1, 5}, S{{}, RV{{1, 1, 8}, {2, 1, 4}}}},
                               B{12, {11, 7}, S{{}, RV{{1, 1, 4}, {1, 2, 2}, {2, 1, 4}}}}}));
        {
            // The published dispatch pairs the all-singleton structure with
            // q = 1, 5 mod 12 and the fused one with q = -1, -5. The class of
            // xz fuses with that of x^-1 z exactly when q = 2 mod 3, i.e. at
            // q = 5, 11 mod 12, so the correct pairing is {1, 7} / {11, 5}
            // (matching the direct-product analogue). Encoded accordingly;
            // the q-power orbit computation arbitrates at q = 5, 7.
            B b1{12, {1, 7}, S{{}, RV{{1, 1, 4}, {2, 1, 5}}}};
            b1.disputed_residues = {7};
            b1.residue_note =
                "published dispatch assigns q = -5 mod 12 to the fused branch; the class-sum "
                "q-power orbits are all singletons there (r = 9, s = 0)";
            B b2{12, {11, 5}, S{{}, RV{{1, 1, 4}, {2, 1, 3}, {2, 2, 1}}}};
            b2.disputed_residues = {5};
            b2.residue_note =
                "published dispatch assigns q = 5 mod 12 to the all-singleton branch; the "
                "class sums of xz and x^-1 z fuse there (r = 7, s = 1)";
            t.push_back(pbig_only("C3:D8", {b1, b2}));
        }
        t.push_back(pbig_only("C3xD8",
                              {B{12, {1, 7}, S{{}, RV{{1, 1, 12}, {2, 1, 3}}}},
                               B{12, {11, 5}, S{{}, RV{{1, 1, 4}, {1, 2, 4}, {2, 1, 1}, {2, 2, 1}}}}}));
        t.push_back(pbig_only("C3xQ8",
                              {B{12, {1, 7}, S{{}, RV{{1, 1, 12}, {2, 1, 3}}}},
                               B{12, {11, 5}, S{{}, RV{{1, 1, 4}, {1, 2, 4}, {2, 1, 1}, {2, 2, 1}}}}}));
        t.push_back(pbig_only("D12xC2", {B{6, {1, 5}, S{{}, RV{{1, 1, 8}, {2, 1, 4}}}}}));
        return t;
    }();
    return tab;
}

inline PClass pclass_of(std::uint32_t p) {
    return p == 2 ? PClass::P2 : (p == 3 ? PClass::P3 : PClass::PBig);
}

// residues of p, p^2, p^3, ... modulo l
inline std::vector<int> reachable_residues(std::uint32_t p, int modulus) {
    std::vector<int> out;
    int r = static_cast<int>(p % static_cast<std::uint32_t>(modulus));
    while (std::find(out.begin(), out.end(), r) == out.end()) {
        out.push_back(r);
        r = static_cast<int>((static_cast<long long>(r) * p) % modulus);
    }
    return out;
}

// A branch is vacuous for a fixed p when no power of p lands in its residues.
inline bool branch_vacuous(std::uint32_t p, const TheoremBranch& b) {
    auto reach = reachable_residues(p, b.modulus);
    for (int r : b.residues)
        if (std::find(reach.begin(), reach.end(), r) != reach.end()) return false;
    return true;
}

struct ExpectedLookup {
    bool found = false;
    std::string skip_reason;
    SymbolicUnit symbolic;
    std::optional<std::vector<std::pair<int, int>>> published_v_variant;
    std::string discrepancy_note;
    bool residue_disputed = false;
    std::string residue_note;
};

inline ExpectedLookup lookup_expected(const std::string& group, std::uint32_t p, std::uint32_t k) {
    ExpectedLookup out;
    const auto& scope = in_scope_groups();
    if (std::find(scope.begin(), scope.end(), group) == scope.end()) {
        out.skip_reason = "expectation out of scope for this group";
        return out;
    }
    const GroupTheorem* gt = nullptr;
    for (auto& g : encoded_theorems())
        if (g.group == group) gt = &g;
    ensure(gt != nullptr, "missing theorem table for an in-scope group");
    PClass pc = pclass_of(p);
    const PClassTheorem* pct = nullptr;
    for (auto& c : gt->pclasses)
        if (c.pc == pc) pct = &c;
    if (!pct) {
        out.skip_reason = p == 2 ? "no encoded expectation at p=2 for this group"
                                 : "no encoded expectation at p=3 for this group";
        return out;
    }
    for (auto& b : pct->branches) {
        long long r = 1 % b.modulus;
        for (std::uint32_t i = 0; i < k; ++i) r = r * p % b.modulus;
        if (std::find(b.residues.begin(), b.residues.end(), static_cast<int>(r)) != b.residues.end()) {
            out.found = true;
            out.symbolic = b.expected;
            out.published_v_variant = pct->published_v_variant;
            out.discrepancy_note = pct->discrepancy_note;
            if (std::find(b.disputed_residues.begin(), b.disputed_residues.end(), static_cast<int>(r)) !=
                b.disputed_residues.end()) {
                out.residue_disputed = true;
                out.residue_note = b.residue_note;
            }
            return out;
        }
    }
    out.skip_reason = "no residue branch matches q";
    return out;
}

// Evaluate a symbolic structure at q = p^k.
inline UnitStructure evaluate_symbolic(const SymbolicUnit& s, std::uint32_t p, std::uint32_t k) {
    UnitStructure u;
    u.unipotent.p = p;
    std::map<int, long long> fac;
    for (auto& [j, coeff] : s.v_factors) fac[j] += static_cast<long long>(coeff) * k;
    for (auto& [j, mult] : fac)
        if (mult > 0) u.unipotent.abelian_factors.emplace_back(j, mult);
    u.unipotent.order = 1;
    for (auto& [j, mult] : u.unipotent.abelian_factors)
        u.unipotent.order *= big_pow(p, static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(mult));
    u.unipotent.exponent_log = u.unipotent.abelian_factors.empty() ? 0 : u.unipotent.abelian_factors.back().first;
    for (auto& [n, d, count] : s.reductive)
        for (int i = 0; i < count; ++i) u.reductive.push_back({n, d});
    std::sort(u.reductive.begin(), u.reductive.end());
    BigInt q = big_pow(p, k);
    u.total_order = u.unipotent.order;
    for (auto& c : u.reductive) u.total_order *= gl_order(c.n, big_pow(q, static_cast<std::uint64_t>(c.d)));
    if (s.split_semidirect) u.split_asserted = true;
    return u;
}

}  // namespace ug24
