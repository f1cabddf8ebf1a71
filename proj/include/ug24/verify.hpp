// Verification harness: compares computed unit-group structures against the
// encoded expectations over a field sweep, arbitrates the two documented
// statement/derivation discrepancies with enumeration oracles, and emits
// machine-readable (JSON) and human-readable (markdown) reports.
#pragma once

#include <json.hpp>
#include <sstream>

#include "ug24/theorems.hpp"

namespace ug24 {

enum class Verdict { Pass, Fail, Skipped, Discrepancy };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
        case Verdict::Discrepancy: return "DISCREPANCY";
    }
    return "?";
}

// Canonical, serializable view of a unit-group structure.
struct StructureDesc {
    std::vector<std::pair<int, long long>> v_factors;  // (j, mult) -> C_{p^j}^mult
    bool v_nonabelian = false;
    std::vector<std::array<int, 3>> reductive;  // (n, d, count), sorted
    std::string total_order;
    int split_asserted = -1;  // -1 unknown, 1 semidirect asserted
    bool operator==(const StructureDesc&) const = default;
};

inline StructureDesc describe(const UnitStructure& u) {
    StructureDesc d;
    d.v_factors = u.unipotent.abelian_factors;
    d.v_nonabelian = u.unipotent.nonabelian;
    for (auto& [nd, count] : u.reductive_multiset())
        d.reductive.push_back({nd.first, nd.second, count});
    d.total_order = u.total_order.str();
    d.split_asserted = u.split_asserted.has_value() ? (*u.split_asserted ? 1 : 0) : -1;
    return d;
}

inline std::string render_structure(const StructureDesc& d, std::uint32_t p, std::uint32_t k,
                                    bool latex = false) {
    BigInt q = big_pow(p, k);
    std::ostringstream os;
    bool first = true;
    auto sep = [&](bool semidirect = false) {
        if (!first) os << (latex ? (semidirect ? " \\rtimes " : " \\times ") : (semidirect ? " x| " : " x "));
        first = false;
    };
    if (d.v_nonabelian) {
        sep();
        os << "V(nonabelian)";
    }
    for (auto& [j, mult] : d.v_factors) {
        sep();
        os << (latex ? "C_{" : "C") << big_pow(p, static_cast<std::uint64_t>(j)) << (latex ? "}" : "");
        if (mult > 1) os << "^" << (latex ? "{" : "") << mult << (latex ? "}" : "");
    }
    bool semidir = d.split_asserted == 1 && !first;
    bool first_reductive = true;
    for (auto& [n, dd, count] : d.reductive) {
        sep(semidir && first_reductive);
        first_reductive = false;
        BigInt qd = big_pow(q, static_cast<std::uint64_t>(dd));
        if (n == 1) {
            os << (latex ? "C_{" : "C") << (qd - 1) << (latex ? "}" : "");
        } else {
            os << (latex ? "GL(" : "GL(") << n << "," << qd << ")";
        }
        if (count > 1) os << "^" << (latex ? "{" : "") << count << (latex ? "}" : "");
    }
    if (first) os << "1";
    return os.str();
}

struct DiffEntry {
    std::string part;
    std::string expected;
    std::string computed;
    bool operator==(const DiffEntry&) const = default;
};

struct CaseVerdict {
    std::string group;
    std::uint32_t p = 2, k = 1;
    std::uint64_t q = 2;
    Verdict verdict = Verdict::Skipped;
    std::string reason;  // skip reason or failure summary
    std::optional<StructureDesc> expected;
    std::optional<StructureDesc> computed;
    std::vector<DiffEntry> diff;
    std::string published_variant;  // rendering of the published (conflicting) form
    std::string arbitration;        // oracle narrative for documented discrepancies
    bool operator==(const CaseVerdict&) const = default;
};

struct Report {
    std::vector<CaseVerdict> cases;
    int pass = 0, fail = 0, skipped = 0, discrepancy = 0;
    bool ok() const { return fail == 0; }
    bool operator==(const Report&) const = default;

    void tally() {
        pass = fail = skipped = discrepancy = 0;
        for (auto& c : cases) {
            switch (c.verdict) {
                case Verdict::Pass: ++pass; break;
                case Verdict::Fail: ++fail; break;
                case Verdict::Skipped: ++skipped; break;
                case Verdict::Discrepancy: ++discrepancy; break;
            }
        }
    }
};

struct VerifyOptions {
    bool arbitration_census = true;  // run the V enumerations behind the documented discrepancies
    std::uint64_t seed = default_seed();
};

inline std::vector<DiffEntry> diff_structures(const StructureDesc& e, const StructureDesc& c,
                                              std::uint32_t p, std::uint32_t k) {
    std::vector<DiffEntry> out;
    auto rs = [&](const StructureDesc& s) { return render_structure(s, p, k); };
    if (e.v_factors != c.v_factors || e.v_nonabelian != c.v_nonabelian) {
        StructureDesc ev{e.v_factors, e.v_nonabelian, {}, "", -1};
        StructureDesc cv{c.v_factors, c.v_nonabelian, {}, "", -1};
        out.push_back({"unipotent", rs(ev), rs(cv)});
    }
    if (e.reductive != c.reductive) {
        StructureDesc er{{}, false, e.reductive, "", -1};
        StructureDesc cr{{}, false, c.reductive, "", -1};
        out.push_back({"reductive", rs(er), rs(cr)});
    }
    if (e.total_order != c.total_order) out.push_back({"total_order", e.total_order, c.total_order});
    return out;
}

// One (group, q) verification. Compares on the canonical structure alone
// (exact equality, no tolerance); the split flag is recorded but not part of
// the comparison since it is asserted rather than computed. The expectation
// can be overridden for harness self-tests.
inline CaseVerdict verify_case(const std::string& group, std::uint32_t p, std::uint32_t k,
                               const VerifyOptions& opts = {},
                               const SymbolicUnit* expectation_override = nullptr) {
    CaseVerdict out;
    out.group = group;
    out.p = p;
    out.k = k;
    out.q = big_pow(p, k).convert_to<std::uint64_t>();

    auto lookup = lookup_expected(group, p, k);
    if (expectation_override) {
        lookup.found = true;
        lookup.symbolic = *expectation_override;
        lookup.published_v_variant.reset();
        lookup.residue_disputed = false;
    }
    if (!lookup.found) {
        out.verdict = Verdict::Skipped;
        out.reason = lookup.skip_reason;
        return out;
    }
    UnitStructure expected = evaluate_symbolic(lookup.symbolic, p, k);
    out.expected = describe(expected);

    try {
        auto C = decompose_case(group, p, k, opts.seed);
        auto computed = unit_structure(C);
        out.computed = describe(computed);

        bool match = out.expected->v_factors == out.computed->v_factors &&
                     out.expected->v_nonabelian == out.computed->v_nonabelian &&
                     out.expected->reductive == out.computed->reductive &&
                     out.expected->total_order == out.computed->total_order;
        if (!match) {
            out.verdict = Verdict::Fail;
            out.reason = "computed structure differs from the encoded expectation";
            out.diff = diff_structures(*out.expected, *out.computed, p, k);
            return out;
        }

        if (lookup.residue_disputed) {
            // documented misprint in the residue dispatch: the computed and
            // encoded structures agree; the published grouping would select
            // the sibling branch. Arbitrated by the q-power orbit counts.
            out.verdict = Verdict::Discrepancy;
            out.reason = lookup.residue_note;
            std::ostringstream arb;
            arb << "class-sum q-power orbits give r = " << C.decomposition.cyclo.r
                << ", s = " << C.decomposition.cyclo.s << " at q = " << out.q << " (residue "
                << out.q % static_cast<std::uint64_t>(C.decomposition.cyclo.m) << " mod "
                << C.decomposition.cyclo.m
                << "); component degrees must match the orbit sizes, which selects this branch";
            out.arbitration = arb.str();
            return out;
        }

        if (lookup.published_v_variant) {
            // The encoded expectation is the derived form; the published
            // statement differs. Report the discrepancy and arbitrate.
            out.verdict = Verdict::Discrepancy;
            StructureDesc pubv;
            std::map<int, long long> fac;
            for (auto& [j, coeff] : *lookup.published_v_variant) fac[j] += static_cast<long long>(coeff) * k;
            for (auto& [j, mult] : fac) pubv.v_factors.emplace_back(j, mult);
            out.published_variant = render_structure(pubv, p, k);
            out.reason = lookup.discrepancy_note;

            std::ostringstream arb;
            long long selected_log = 0, published_log = 0;
            for (auto& [j, mult] : out.computed->v_factors) selected_log += mult;
            for (auto& [j, mult] : pubv.v_factors) published_log += mult;
            arb << "order-<=" << p << " count predicted by the encoded form: " << p << "^"
                << selected_log << ", by the published form: " << p << "^" << published_log;
            if (opts.arbitration_census && k == 1 && p == 2) {
                GroupAlgebra A(C.group, C.field);
                auto census = v_census(A, C.radical.radical.space, 1ull << 22, 2);
                BigInt low = 0;
                for (auto& [o, cnt] : census.order_histogram)
                    if (o == 1 || o == 2) low += cnt;
                arb << "; exhaustive enumeration of the " << census.domain_size
                    << " elements of V counts " << low << " of order <= 2";
                BigInt sel = big_pow(p, static_cast<std::uint64_t>(selected_log));
                BigInt pub = big_pow(p, static_cast<std::uint64_t>(published_log));
                if (low == sel && low != pub) {
                    arb << "; the census selects " << render_structure(
                        StructureDesc{out.computed->v_factors, false, {}, "", -1}, p, k);
                } else {
                    out.verdict = Verdict::Fail;
                    out.reason = "arbitration census disagrees with the encoded expectation";
                }
            } else {
                arb << "; arbitrated by the q=2 census (see the k=1 case) and the p-power kernel filtration";
            }
            out.arbitration = arb.str();
            return out;
        }

        out.verdict = Verdict::Pass;
    } catch (const std::exception& ex) {
        out.verdict = Verdict::Fail;
        out.reason = std::string("computation error: ") + ex.what();
    }
    return out;
}

inline const std::vector<std::uint64_t>& default_q_sweep() {
    static const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 49};
    return qs;
}

inline std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
    require(q >= 2, "q must be at least 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {static_cast<std::uint32_t>(q), 1};
    std::uint32_t k = 0;
    while (q > 1) {
        require(q % p == 0, "q must be a prime power");
        q /= p;
        ++k;
    }
    return {p, k};
}

inline Report run_sweep(const std::vector<std::uint64_t>& qs = default_q_sweep(),
                        const std::vector<std::string>& groups = in_scope_groups(),
                        const VerifyOptions& opts = {}) {
    Report rep;
    for (const auto& g : groups)
        for (auto q : qs) {
            auto [p, k] = prime_power_split(q);
            rep.cases.push_back(verify_case(g, p, k, opts));
        }
    std::sort(rep.cases.begin(), rep.cases.end(), [](const CaseVerdict& a, const CaseVerdict& b) {
        return std::tie(a.group, a.q) < std::tie(b.group, b.q);
    });
    rep.tally();
    return rep;
}

// Every branch of every encoded theorem is exercised by the sweep or is
// unreachable for its characteristic class (and flagged so).
struct BranchCoverage {
    std::string group;
    PClass pc;
    int modulus;
    std::vector<int> residues;
    bool vacuous = false;
    bool exercised = false;
};

inline std::vector<BranchCoverage> branch_coverage(const std::vector<std::uint64_t>& qs = default_q_sweep()) {
    std::vector<BranchCoverage> out;
    for (auto& gt : encoded_theorems())
        for (auto& pct : gt.pclasses)
            for (auto& b : pct.branches) {
                BranchCoverage cov{gt.group, pct.pc, b.modulus, b.residues, false, false};
                if (pct.pc != PClass::PBig) {
                    std::uint32_t p = pct.pc == PClass::P2 ? 2 : 3;
                    cov.vacuous = branch_vacuous(p, b);
                }
                for (auto q : qs) {
                    auto [p, k] = prime_power_split(q);
                    if (pclass_of(p) != pct.pc) continue;
                    long long r = 1 % b.modulus;
                    for (std::uint32_t i = 0; i < k; ++i) r = r * p % b.modulus;
                    if (std::find(b.residues.begin(), b.residues.end(), static_cast<int>(r)) != b.residues.end())
                        cov.exercised = true;
                }
                out.push_back(cov);
            }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline void to_json(nlohmann::json& j, const StructureDesc& d) {
    j = nlohmann::json{{"v_factors", d.v_factors},
                       {"v_nonabelian", d.v_nonabelian},
                       {"reductive", d.reductive},
                       {"total_order", d.total_order},
                       {"split_asserted", d.split_asserted}};
}
inline void from_json(const nlohmann::json& j, StructureDesc& d) {
    j.at("v_factors").get_to(d.v_factors);
    j.at("v_nonabelian").get_to(d.v_nonabelian);
    j.at("reductive").get_to(d.reductive);
    j.at("total_order").get_to(d.total_order);
    j.at("split_asserted").get_to(d.split_asserted);
}
inline void to_json(nlohmann::json& j, const DiffEntry& d) {
    j = nlohmann::json{{"part", d.part}, {"expected", d.expected}, {"computed", d.computed}};
}
inline void from_json(const nlohmann::json& j, DiffEntry& d) {
    j.at("part").get_to(d.part);
    j.at("expected").get_to(d.expected);
    j.at("computed").get_to(d.computed);
}
inline void to_json(nlohmann::json& j, const CaseVerdict& c) {
    j = nlohmann::json{{"group", c.group}, {"p", c.p},       {"k", c.k},
                       {"q", c.q},         {"verdict", verdict_name(c.verdict)}, {"reason", c.reason},
                       {"diff", c.diff},   {"published_variant", c.published_variant},
                       {"arbitration", c.arbitration}};
    if (c.expected) j["expected"] = *c.expected; else j["expected"] = nullptr;
    if (c.computed) j["computed"] = *c.computed; else j["computed"] = nullptr;
}
inline void from_json(const nlohmann::json& j, CaseVerdict& c) {
    j.at("group").get_to(c.group);
    j.at("p").get_to(c.p);
    j.at("k").get_to(c.k);
    j.at("q").get_to(c.q);
    std::string v = j.at("verdict").get<std::string>();
    c.verdict = v == "PASS" ? Verdict::Pass
                            : v == "FAIL" ? Verdict::Fail : v == "SKIPPED" ? Verdict::Skipped : Verdict::Discrepancy;
    j.at("reason").get_to(c.reason);
    j.at("diff").get_to(c.diff);
    j.at("published_variant").get_to(c.published_variant);
    j.at("arbitration").get_to(c.arbitration);
    if (!j.at("expected").is_null()) c.expected = j.at("expected").get<StructureDesc>();
    if (!j.at("computed").is_null()) c.computed = j.at("computed").get<StructureDesc>();
}
inline void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"cases", r.cases},
                       {"summary",
                        {{"pass", r.pass}, {"fail", r.fail}, {"skipped", r.skipped},
                         {"discrepancy", r.discrepancy}, {"exit_code", r.ok() ? 0 : 1}}}};
}
inline void from_json(const nlohmann::json& j, Report& r) {
    j.at("cases").get_to(r.cases);
    r.tally();
}

inline std::string report_markdown(const Report& r) {
    std::ostringstream os;
    os << "| group | q | verdict | expected | computed | notes |\n";
    os << "|---|---|---|---|---|---|\n";
    for (auto& c : r.cases) {
        os << "| " << catalog_latex(c.group) << " | " << c.q << " | " << verdict_name(c.verdict) << " | ";
        os << (c.expected ? render_structure(*c.expected, c.p, c.k, true) : std::string("-")) << " | ";
        os << (c.computed ? render_structure(*c.computed, c.p, c.k, true) : std::string("-")) << " | ";
        std::string note = c.reason;
        if (!c.published_variant.empty()) note += " [published: " + c.published_variant + "]";
        if (!c.arbitration.empty()) note += " [" + c.arbitration + "]";
        os << note << " |\n";
    }
    os << "\nsummary: " << r.pass << " pass, " << r.fail << " fail, " << r.discrepancy
       << " documented discrepancies, " << r.skipped << " skipped\n";
    return os.str();
}

}  // namespace ug24
