#include <catch2/catch_amalgamated.hpp>

#include "ug24/verify.hpp"

using namespace ug24;

TEST_CASE("expected structures evaluate correctly") {
    // C24 at q = 13 (-11 mod 24): C12^12 x C168^6
    {
        auto lk = lookup_expected("C24", 13, 1);
        REQUIRE(lk.found);
        auto u = evaluate_symbolic(lk.symbolic, 13, 1);
        CHECK(u.unipotent.trivial());
        CHECK(u.reductive_multiset() == std::map<std::pair<int, int>, int>{{{1, 1}, 12}, {{1, 2}, 6}});
        BigInt expect = 1;
        for (int i = 0; i < 12; ++i) expect *= 12;
        for (int i = 0; i < 6; ++i) expect *= 168;
        CHECK(u.total_order == expect);
    }
    // C12xC2 at q = 7 (-5 mod 12): C6^12 x C48^6
    {
        auto lk = lookup_expected("C12xC2", 7, 1);
        REQUIRE(lk.found);
        auto u = evaluate_symbolic(lk.symbolic, 7, 1);
        CHECK(u.reductive_multiset() == std::map<std::pair<int, int>, int>{{{1, 1}, 12}, {{1, 2}, 6}});
    }
    // C2xA4 at p = 3: C3^4k semidirect with C_{3^k-1}^2 x GL(3,F)^2
    {
        auto lk = lookup_expected("C2xA4", 3, 1);
        REQUIRE(lk.found);
        auto u = evaluate_symbolic(lk.symbolic, 3, 1);
        CHECK(u.unipotent.abelian_factors == std::vector<std::pair<int, long long>>{{1, 4}});
        CHECK(u.split_asserted == true);
        CHECK(u.reductive_multiset() == std::map<std::pair<int, int>, int>{{{1, 1}, 2}, {{3, 1}, 2}});
    }
    // out-of-scope and covered-elsewhere cases are skipped with reasons
    CHECK_FALSE(lookup_expected("S4", 5, 1).found);
    CHECK_FALSE(lookup_expected("C3:C8", 3, 1).found);
    CHECK_FALSE(lookup_expected("C3:C8", 2, 1).found);
    CHECK(lookup_expected("C2xA4", 3, 2).found);
}

TEST_CASE("verify_case verdicts") {
    CHECK(verify_case("D12xC2", 5, 1).verdict == Verdict::Pass);
    CHECK(verify_case("S4", 5, 1).verdict == Verdict::Skipped);
    CHECK(verify_case("C3xQ8", 11, 1).verdict == Verdict::Pass);
    CHECK(verify_case("C24", 3, 1).verdict == Verdict::Pass);
    CHECK(verify_case("C2xA4", 3, 1).verdict == Verdict::Pass);
}

TEST_CASE("documented discrepancies are reported and arbitrated") {
    auto v = verify_case("C12xC2", 2, 1);
    CHECK(v.verdict == Verdict::Discrepancy);
    CHECK(v.published_variant.find("C2^9") != std::string::npos);
    CHECK(v.arbitration.find("2097152") != std::string::npos);  // 2^21 elements enumerated
    CHECK(v.arbitration.find("262144") != std::string::npos);   // 2^18 of order <= 2
    CHECK(v.computed->v_factors == std::vector<std::pair<int, long long>>{{1, 15}, {2, 3}});

    auto w = verify_case("C24", 2, 1);
    CHECK(w.verdict == Verdict::Discrepancy);
    CHECK(w.computed->v_factors == std::vector<std::pair<int, long long>>{{1, 6}, {2, 3}, {3, 3}});
    CHECK(w.arbitration.find("4096") != std::string::npos);  // 2^12 of order <= 2

    // without the census the discrepancy is still flagged, with the filtration note
    VerifyOptions nocensus;
    nocensus.arbitration_census = false;
    auto x = verify_case("C12xC2", 2, 1, nocensus);
    CHECK(x.verdict == Verdict::Discrepancy);
    CHECK_FALSE(x.arbitration.empty());
}

TEST_CASE("harness self-test: perturbed expectations fail with a structured diff") {
    // take the true branch for D12xC2 at q=5 and perturb the reductive part
    SymbolicUnit wrong;
    wrong.reductive = {{1, 1, 8}, {2, 1, 3}, {2, 2, 1}};  // truth is (2,1)^4
    auto v = verify_case("D12xC2", 5, 1, {}, &wrong);
    CHECK(v.verdict == Verdict::Fail);
    REQUIRE_FALSE(v.diff.empty());
    bool saw_reductive = false;
    for (auto& d : v.diff) {
        if (d.part == "reductive") {
            saw_reductive = true;
            CHECK(d.expected != d.computed);
        }
    }
    CHECK(saw_reductive);

    // perturbing the unipotent part is also caught
    SymbolicUnit wrong2;
    wrong2.v_factors = {{1, 17}, {2, 2}};
    wrong2.reductive = {{1, 1, 3}};
    auto w = verify_case("C2^3xC3", 2, 1, {}, &wrong2);
    CHECK(w.verdict == Verdict::Fail);
    CHECK_FALSE(w.diff.empty());
    CHECK(w.diff[0].part == "unipotent");
}

TEST_CASE("the C3:D8 residue dispatch misprint is caught and arbitrated") {
    // undisputed residues pass as usual
    CHECK(verify_case("C3:D8", 13, 1).verdict == Verdict::Pass);   // 1 mod 12
    CHECK(verify_case("C3:D8", 11, 1).verdict == Verdict::Pass);   // -1 mod 12
    // at q = 5 and q = 7 the published grouping contradicts the orbits
    auto a = verify_case("C3:D8", 5, 1);
    CHECK(a.verdict == Verdict::Discrepancy);
    CHECK(a.arbitration.find("r = 7, s = 1") != std::string::npos);
    CHECK(a.computed->reductive ==
          std::vector<std::array<int, 3>>{{1, 1, 4}, {2, 1, 3}, {2, 2, 1}});
    auto b = verify_case("C3:D8", 7, 1);
    CHECK(b.verdict == Verdict::Discrepancy);
    CHECK(b.computed->reductive == std::vector<std::array<int, 3>>{{1, 1, 4}, {2, 1, 5}});
    CHECK(b.arbitration.find("r = 9, s = 0") != std::string::npos);
}

TEST_CASE("sweep over a semisimple slice") {
    VerifyOptions opts;
    opts.arbitration_census = false;
    auto rep = run_sweep({5, 7, 49}, in_scope_groups(), opts);
    CHECK(rep.cases.size() == 36);
    CHECK(rep.fail == 0);
    CHECK(rep.discrepancy == 2);  // C3:D8 at q = 5 and q = 7
    CHECK(rep.skipped == 0);      // p > 3 is encoded for every in-scope group
    CHECK(rep.pass == 34);
    CHECK(rep.ok());
}

TEST_CASE("branch coverage of the default sweep") {
    auto cov = branch_coverage();
    int vacuous = 0;
    for (auto& b : cov) {
        INFO(b.group << " modulus " << b.modulus);
        if (b.vacuous) {
            ++vacuous;
            CHECK_FALSE(b.exercised);
        } else {
            CHECK(b.exercised);
        }
    }
    // exactly one unreachable branch: q = 3^k is never -3 mod 8
    CHECK(vacuous == 1);
}

TEST_CASE("prime power split") {
    CHECK(prime_power_split(49) == std::make_pair(7u, 2u));
    CHECK(prime_power_split(27) == std::make_pair(3u, 3u));
    CHECK(prime_power_split(2) == std::make_pair(2u, 1u));
    CHECK(prime_power_split(23) == std::make_pair(23u, 1u));
    CHECK_THROWS_AS(prime_power_split(12), std::invalid_argument);
}

TEST_CASE("report JSON round-trips") {
    VerifyOptions opts;
    opts.arbitration_census = false;
    Report rep = run_sweep({5, 2}, {"C24", "C12xC2", "S4" /* skipped */}, opts);
    // S4 is not in scope; run_sweep accepts explicit group lists anyway
    nlohmann::json j = rep;
    std::string text = j.dump(2);
    Report back = nlohmann::json::parse(text).get<Report>();
    CHECK(back == rep);
    CHECK(back.cases.size() == rep.cases.size());

    // markdown rendering mentions every group once per q
    auto md = report_markdown(rep);
    CHECK(md.find("C_{24}") != std::string::npos);
    CHECK(md.find("summary:") != std::string::npos);
}

TEST_CASE("structure rendering") {
    auto u = evaluate_symbolic(lookup_expected("C2xA4", 3, 1).symbolic, 3, 1);
    auto txt = render_structure(describe(u), 3, 1);
    CHECK(txt == "C3^4 x| C2^2 x GL(3,3)^2");
    auto latex = render_structure(describe(u), 3, 1, true);
    CHECK(latex.find("\\rtimes") != std::string::npos);
}
