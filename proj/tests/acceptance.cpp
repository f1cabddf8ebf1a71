// Acceptance suite: runs the seven top-level checks end to end and prints one
// PASS/FAIL line per criterion (details indented under each). Exit status is
// the number of failed criteria.
//
// Three documented misprints in the encoded reference tables surface here as
// DISCREPANCY verdicts rather than failures; each one is arbitrated by an
// independent oracle (exhaustive enumeration or the class-sum q-power orbits)
// and the computed value is additionally pinned in these checks. Anything
// outside that documented set fails the run.
#include <chrono>
#include <iostream>
#include <set>

#include "support/class_tables.hpp"
#include "ug24/verify.hpp"

using namespace ug24;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool ok, const std::string& summary,
            const std::vector<std::string>& details = {}) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << summary << "\n";
    for (auto& d : details) std::cout << "        " << d << "\n";
    if (!ok) ++failures;
}

// ---------------------------------------------------------------- criterion 1
void criterion1_theorem_sweep() {
    Timer timer;
    VerifyOptions opts;
    opts.arbitration_census = false;  // censuses are criteria 2 and 3
    Report rep = run_sweep(default_q_sweep(), in_scope_groups(), opts);
    double dt = timer.seconds();

    std::vector<std::string> details;
    bool ok = rep.fail == 0;
    details.push_back(std::to_string(rep.pass) + " pass, " + std::to_string(rep.fail) + " fail, " +
                      std::to_string(rep.discrepancy) + " documented discrepancies, " +
                      std::to_string(rep.skipped) + " skipped (no encoded expectation), " +
                      std::to_string(rep.cases.size()) + " cases in " + std::to_string(dt) + " s");

    // every discrepancy must belong to the three documented misprint families
    std::set<std::string> disc_groups;
    for (auto& c : rep.cases) {
        if (c.verdict != Verdict::Discrepancy) continue;
        bool documented = (c.group == "C24" && c.p == 2) || (c.group == "C12xC2" && c.p == 2) ||
                          (c.group == "C3:D8" && (c.q % 12 == 5 || c.q % 12 == 7));
        if (!documented) {
            ok = false;
            details.push_back("UNDOCUMENTED discrepancy: " + c.group + " q=" + std::to_string(c.q));
        }
        disc_groups.insert(c.group);
    }
    if (disc_groups == std::set<std::string>{"C24", "C12xC2", "C3:D8"}) {
        details.push_back("documented misprints arbitrated: unipotent type of U(F[C24]) at p=2,");
        details.push_back("unipotent type of U(F[C12xC2]) at p=2 (statement vs derivation),");
        details.push_back("residue dispatch of the C3:D8 branches at q = +-5 mod 12");
    } else {
        ok = false;
        details.push_back("expected discrepancies exactly for C24/p2, C12xC2/p2, C3:D8/q=+-5 mod 12");
    }

    // every encoded branch is exercised by the sweep or flagged vacuous
    int vacuous = 0;
    for (auto& b : branch_coverage()) {
        if (b.vacuous) {
            ++vacuous;
            continue;
        }
        if (!b.exercised) {
            ok = false;
            details.push_back("branch not exercised: " + b.group + " mod " + std::to_string(b.modulus));
        }
    }
    details.push_back("branch coverage: all reachable branches exercised; " + std::to_string(vacuous) +
                      " vacuous branch flagged (q = 3^k never hits -3 mod 8)");
    if (dt >= 120.0) {
        ok = false;
        details.push_back("sweep exceeded the 2-minute budget");
    }
    report(1, ok, "theorem sweep over q in {2,...,49}: every reachable branch passes or is a "
                  "documented, oracle-arbitrated discrepancy", details);
}

// ---------------------------------------------------------------- criterion 2
void criterion2_full_census() {
    Timer timer;
    auto C = decompose_case("C24", 2, 1);
    GroupAlgebra A(C.group, C.field);
    auto census = full_unit_census(A, 1ull << 24);
    auto u = unit_structure(C);
    double dt = timer.seconds();
    BigInt expected = BigInt(6291456);  // 2^21 * 3
    bool ok = census.unit_count == expected && u.total_order == expected &&
              census.domain_size == (BigInt(1) << 24) && dt <= 600.0;
    report(2, ok, "exhaustive invertibility census of F2[C24]",
           {"units " + census.unit_count.str() + " of " + census.domain_size.str() +
                " vectors; structure order " + u.total_order.str() + "; " + std::to_string(dt) + " s",
            "both equal 2^21 * 3 = 6291456: " + std::string(ok ? "yes" : "NO")});
}

// ---------------------------------------------------------------- criterion 3
void criterion3_arbitration_census() {
    Timer timer;
    auto C = decompose_case("C12xC2", 2, 1);
    GroupAlgebra A(C.group, C.field);

    // squaring-map kernel prediction, computed through the GF(2)-linear-algebra path
    auto J = C.radical.radical.space;
    auto square = [&](const std::vector<felem>& coords) {
        std::vector<felem> v(24, 0);
        for (int t = 0; t < J.dim(); ++t)
            if (coords[(size_t)t])
                for (int i = 0; i < 24; ++i)
                    v[(size_t)i] = C.field.add(v[(size_t)i],
                                               C.field.mul(coords[(size_t)t], J.basis().row(t)[(size_t)i]));
        return A.mul(v, v);
    };
    int kernel_dim = prime_subfield_kernel(C.field, J.dim(), square).dim;

    // independent oracle: enumerate all 2^21 elements of V and count order <= 2
    auto census = v_census(A, J, 1ull << 22, 2);
    BigInt low = 0, total = 0;
    for (auto& [o, cnt] : census.order_histogram) {
        total += cnt;
        if (o == 1 || o == 2) low += cnt;
    }

    auto u = unipotent_structure(C.algebra, J, C.radical.nilindex);
    long long factor_count = 0;
    for (auto& [j, mult] : u.abelian_factors) factor_count += mult;

    auto verdict = verify_case("C12xC2", 2, 1);  // includes the census arbitration
    double dt = timer.seconds();

    bool selects_derived = (low == (BigInt(1) << 18));
    bool rejects_published = (low != (BigInt(1) << 15));
    bool ok = total == (BigInt(1) << 21) && kernel_dim == 18 && low == big_pow(2, (std::uint64_t)kernel_dim) &&
              selects_derived && rejects_published && factor_count == kernel_dim &&
              verdict.verdict == Verdict::Discrepancy &&
              verdict.arbitration.find("C2^15 x C4^3") != std::string::npos;
    report(3, ok, "V-enumeration arbitration for F2[C12xC2]",
           {"enumerated " + total.str() + " elements of V; " + low.str() + " of order <= 2",
            "squaring-map kernel dimension " + std::to_string(kernel_dim) +
                " predicts 2^" + std::to_string(kernel_dim),
            "selects C2^15 x C4^3 (2^18) over the published C2^9 x C4^6 (2^15)",
            "verify report names the selected form: " +
                std::string(verdict.arbitration.find("C2^15 x C4^3") != std::string::npos ? "yes" : "NO"),
            std::to_string(dt) + " s"});
}

// ---------------------------------------------------------------- criterion 4
void criterion4_c2a4() {
    auto C = decompose_case("C2xA4", 3, 1);
    GroupAlgebra A(C.group, C.field);
    const Group& g = C.group;

    bool ok = C.radical.radical.dim() == 4 && C.radical.nilindex == 3;

    // J equals the annihilator of 1 + (y + y^-1)(1 + z)(1 + w)
    int y = g.generator("y"), z = g.generator("z"), w = g.generator("w");
    auto yy = A.add(A.group_element(y), A.group_element(g.inverse(y)));
    auto zz = A.add(A.one(), A.group_element(z));
    auto ww = A.add(A.one(), A.group_element(w));
    auto t3 = A.add(A.one(), A.mul(yy, A.mul(zz, ww)));
    auto ann = annihilator(A, t3);
    bool ann_ok = (ann.space == C.radical.radical.space);
    ok = ok && ann_ok;

    auto census = v_census(A, C.radical.radical.space, 1u << 12);
    bool census_ok = census.domain_size == 81 && census.all_commute &&
                     census.order_histogram == std::map<long long, long long>{{1, 1}, {3, 80}};
    ok = ok && census_ok;

    auto u = unipotent_structure(C.algebra, C.radical.radical.space, C.radical.nilindex);
    bool type_ok = u.abelian_factors == std::vector<std::pair<int, long long>>{{1, 4}};
    ok = ok && type_ok;

    bool comp_ok = C.decomposition.component_multiset() ==
                   std::map<std::pair<int, int>, int>{{{1, 1}, 2}, {{3, 1}, 2}};
    ok = ok && comp_ok;

    report(4, ok, "F3[C2xA4]: radical, annihilator identity, V, and quotient components",
           {"dim J = " + std::to_string(C.radical.radical.dim()) + ", J^3 = 0 (index " +
                std::to_string(C.radical.nilindex) + ")",
            std::string("J = Ann(1 + (y+y^-1)(1+z)(1+w)): ") + (ann_ok ? "yes" : "NO"),
            "V census: 81 elements, all orders divide 3, commuting: " +
                std::string(census_ok ? "yes" : "NO") + "; type C3^4: " + (type_ok ? "yes" : "NO"),
            std::string("FG/J = F^2 + M(3,F)^2: ") + (comp_ok ? "yes" : "NO")});
}

// ---------------------------------------------------------------- criterion 5
void criterion5_class_tables() {
    bool ok = true;
    std::vector<std::string> details;
    int corrected_entries = 0;
    for (auto& [name, printed] : ug24_testdata::printed_class_tables()) {
        Group g = build_group(name);
        auto cc = conjugacy_classes(g);
        ug24_testdata::ClassData computed;
        for (size_t i = 0; i < cc.reps.size(); ++i) computed.emplace_back(cc.sizes[i], cc.orders[i]);
        computed = ug24_testdata::sorted(computed);
        auto printed_sorted = ug24_testdata::sorted(printed);
        auto corrected = ug24_testdata::sorted(ug24_testdata::corrected_class_table(name));

        if (computed == printed_sorted) {
            if (corrected != printed_sorted) {
                ok = false;
                details.push_back(name + ": computed matches the printed table although a correction is documented");
            }
            continue;
        }
        // a mismatch must be exactly the documented corrections, and each
        // correction is arbitrated by recomputing the representative's order
        if (computed != corrected) {
            ok = false;
            details.push_back(name + ": computed table matches neither the printed nor the corrected data");
            continue;
        }
        for (auto& fix : ug24_testdata::documented_table_corrections()) {
            if (fix.group != name) continue;
            ++corrected_entries;
            int e = -1;
            for (int i = 0; i < g.n; ++i)
                if (g.elem_names[(size_t)i] == fix.representative) e = i;
            if (e < 0 || g.order_of(e) != fix.corrected_order) {
                ok = false;
                details.push_back(name + ": correction for " + fix.representative + " failed arbitration");
            } else {
                details.push_back(name + ": printed order " + std::to_string(fix.printed_order) + " for " +
                                  fix.representative + " is impossible; recomputed order " +
                                  std::to_string(fix.corrected_order) + " (class size " +
                                  std::to_string(fix.size) + ")");
            }
        }
    }
    details.insert(details.begin(),
                   "7 of 9 reference tables match exactly; 2 tables carry " +
                       std::to_string(corrected_entries) + " documented order-column corrections");
    if (corrected_entries != 4) ok = false;
    report(5, ok, "conjugacy class size/order multisets against the nine reference tables", details);
}

// ---------------------------------------------------------------- criterion 6
void criterion6_invariants() {
    Timer timer;
    bool ok = true;
    std::vector<std::string> details;
    int checked = 0;
    for (const auto& gname : in_scope_groups()) {
        for (auto q : default_q_sweep()) {
            auto [p, k] = prime_power_split(q);
            try {
                auto C = decompose_case(gname, p, k);  // hard post-verification runs inside
                auto u = unit_structure(C);
                const auto& D = C.decomposition;

                // component count equals the cyclotomic class count
                if ((int)D.components.size() != D.cyclo.count()) throw std::runtime_error("component count");
                // degree multiset equals the orbit-size multiset
                std::vector<int> degs;
                for (auto& c : D.components) degs.push_back(c.d);
                std::sort(degs.begin(), degs.end());
                if (degs != D.cyclo.orbit_sizes) throw std::runtime_error("degree multiset");
                // dim Z(FG) = class count
                if (C.algebra.center().dim() != (int)C.classes.reps.size())
                    throw std::runtime_error("center dimension");
                // dimension bookkeeping
                int total = D.radical_dim;
                for (auto& c : D.components) total += c.n * c.n * c.d;
                if (total != 24) throw std::runtime_error("dimension sum");
                // r + 2s accounts for the p-regular classes (= all classes in
                // the semisimple case)
                auto pr = p_regular_data(C.group, C.classes, p);
                if (D.cyclo.t_order <= 2 && D.cyclo.r + 2 * D.cyclo.s != (int)pr.class_indices.size())
                    throw std::runtime_error("r + 2s");
                if (24 % p != 0 && D.cyclo.r + 2 * D.cyclo.s != (int)C.classes.reps.size())
                    throw std::runtime_error("r + 2s vs class count");
                // |U| = q^dim J * prod |GL(n, q^d)|
                BigInt expect = big_pow(C.field.q(), (std::uint64_t)D.radical_dim);
                for (auto& c : D.components)
                    expect *= gl_order(c.n, big_pow(C.field.q(), (std::uint64_t)c.d));
                if (u.total_order != expect) throw std::runtime_error("unit order product");
                // center degrees: r ones and s twos whenever |T| <= 2 and FG
                // is semisimple
                if (24 % p != 0 && D.cyclo.t_order <= 2) {
                    int ones = 0, twos = 0;
                    for (auto& c : D.components) {
                        if (c.d == 1) ++ones;
                        if (c.d == 2) ++twos;
                    }
                    if (ones != D.cyclo.r || twos != D.cyclo.s)
                        throw std::runtime_error("center degree multiset vs r/s");
                }
                // V-only census cross-check whenever the domain is small
                if (D.radical_dim > 0 &&
                    big_pow(C.field.q(), (std::uint64_t)D.radical_dim) <= 6561) {
                    GroupAlgebra A(C.group, C.field);
                    auto census = v_census(A, C.radical.radical.space, 6561);
                    if (!census.all_commute) throw std::runtime_error("V census commutativity");
                    if (census.order_histogram != predicted_order_histogram(u.unipotent))
                        throw std::runtime_error("V census histogram");
                }
                ++checked;
            } catch (const std::exception& e) {
                ok = false;
                details.push_back(gname + " q=" + std::to_string(q) + ": " + e.what());
            }
        }
    }
    details.insert(details.begin(), std::to_string(checked) + " cases checked in " +
                                        std::to_string(timer.seconds()) + " s (radical post-verification "
                                        "enforced inside every case)");
    report(6, ok, "structural invariants on every sweep case", details);
}

// ---------------------------------------------------------------- criterion 7
void criterion7_selftest() {
    SymbolicUnit wrong;
    wrong.reductive = {{1, 1, 8}, {2, 1, 3}, {2, 2, 1}};
    auto v = verify_case("D12xC2", 5, 1, {}, &wrong);
    bool ok = v.verdict == Verdict::Fail && !v.diff.empty();
    std::string difftext = v.diff.empty() ? "(none)" : v.diff[0].part + ": expected " + v.diff[0].expected +
                                                           ", computed " + v.diff[0].computed;
    SymbolicUnit wrong2;
    wrong2.v_factors = {{1, 17}, {2, 2}};
    wrong2.reductive = {{1, 1, 3}};
    auto w = verify_case("C2^3xC3", 2, 1, {}, &wrong2);
    ok = ok && w.verdict == Verdict::Fail && !w.diff.empty();
    report(7, ok, "harness self-test: deliberately perturbed expectations fail with structured diffs",
           {"reductive perturbation -> " + verdict_name(v.verdict) + ", diff " + difftext,
            "unipotent perturbation -> " + verdict_name(w.verdict) + ", " +
                std::to_string(w.diff.size()) + " diff entries"});
}

}  // namespace

int main() {
    std::cout << "acceptance suite: unit groups of the order-24 group algebras\n";
    Timer total;
    criterion1_theorem_sweep();
    criterion2_full_census();
    criterion3_arbitration_census();
    criterion4_c2a4();
    criterion5_class_tables();
    criterion6_invariants();
    criterion7_selftest();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria FAILED")
              << " (" << total.seconds() << " s total)\n";
    return failures;
}
