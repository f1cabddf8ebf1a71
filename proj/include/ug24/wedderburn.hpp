// Cyclotomic class machinery and the Wedderburn decomposition of FG/J(FG)
// via central idempotent splitting. The component count is pinned against the
// cyclotomic class count and the extension degrees against the orbit sizes;
// a mismatch in either is a hard error.
#pragma once

#include "ug24/algebra.hpp"

namespace ug24 {

struct CycloReport {
    int m = 1;                    // lcm of the p-regular element orders
    int t_order = 1;              // order of q in (Z/m)*
    std::vector<int> orbit_sizes; // per cyclotomic class
    int r = 0;                    // number of size-1 classes
    int s = 0;                    // number of size-2 classes
    int count() const { return static_cast<int>(orbit_sizes.size()); }
};

// Orbits of the q-powering map on the p-regular class sums.
inline CycloReport cyclotomic_classes(const Group& G, const ConjClasses& cc,
                                      std::uint32_t p, std::uint64_t q) {
    require(q >= 2, "q must be a prime power >= 2");
    {
        std::uint64_t t = q;
        while (t % p == 0) t /= p;
        require(t == 1, "q must be a power of p");
    }
    auto pr = p_regular_data(G, cc, p);
    CycloReport rep;
    rep.m = pr.m;
    std::uint64_t qm = q % static_cast<std::uint64_t>(rep.m);
    rep.t_order = 1;
    for (std::uint64_t t = qm; t != 1 % static_cast<std::uint64_t>(rep.m); t = t * qm % static_cast<std::uint64_t>(rep.m))
        ++rep.t_order;

    std::vector<int> pos(cc.reps.size(), -1);  // class -> index among p-regular
    for (size_t i = 0; i < pr.class_indices.size(); ++i)
        pos[static_cast<size_t>(pr.class_indices[i])] = static_cast<int>(i);
    std::vector<int> next(pr.class_indices.size());
    for (size_t i = 0; i < pr.class_indices.size(); ++i) {
        int rep_elem = cc.reps[static_cast<size_t>(pr.class_indices[i])];
        int img = G.pw(rep_elem, static_cast<long long>(q));
        int img_class = cc.class_of[static_cast<size_t>(img)];
        ensure(pos[static_cast<size_t>(img_class)] >= 0, "q-power of a p-regular element must be p-regular");
        next[i] = pos[static_cast<size_t>(img_class)];
    }
    std::vector<bool> seen(next.size(), false);
    for (size_t i = 0; i < next.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(next[j])) {
            seen[j] = true;
            ++len;
        }
        rep.orbit_sizes.push_back(len);
        ensure(rep.t_order % len == 0, "cyclotomic orbit size must divide |T|");
    }
    std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
    int total = 0;
    for (int sz : rep.orbit_sizes) {
        total += sz;
        if (sz == 1) ++rep.r;
        if (sz == 2) ++rep.s;
    }
    ensure(total == static_cast<int>(pr.class_indices.size()),
           "cyclotomic orbits must partition the p-regular classes");
    return rep;
}

// ---------------------------------------------------------------------------
// Central idempotent splitting
// ---------------------------------------------------------------------------

namespace detail {

// coefficients c with sum c_i rows[i] = target, if the system is consistent
inline std::optional<std::vector<felem>> solve_row_combination(
    const Field& F, const std::vector<std::vector<felem>>& rows, const std::vector<felem>& target) {
    int n = static_cast<int>(target.size());
    int r = static_cast<int>(rows.size());
    Mat aug(n, r + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) aug.at(i, j) = rows[static_cast<size_t>(j)][static_cast<size_t>(i)];
        aug.at(i, r) = target[static_cast<size_t>(i)];
    }
    auto rr = rref(F, aug);
    std::vector<felem> sol(static_cast<size_t>(r), 0);
    for (int i = 0; i < rr.rank; ++i) {
        int piv = rr.pivots[static_cast<size_t>(i)];
        if (piv == r) return std::nullopt;  // inconsistent
        sol[static_cast<size_t>(piv)] = rr.m.at(i, r);
    }
    return sol;
}

// monic minimal polynomial of u in the unital subalgebra with identity e
inline Poly minimal_polynomial(const StructAlgebra& A, const std::vector<felem>& u,
                               const std::vector<felem>& e) {
    const Field& F = A.field();
    std::vector<std::vector<felem>> powers{e};
    std::vector<felem> cur = e;
    for (int r = 1; r <= A.dim() + 1; ++r) {
        cur = A.mul(cur, u);
        if (auto c = solve_row_combination(F, powers, cur)) {
            std::vector<felem> coeffs = *c;
            coeffs.push_back(F.neg(1));
            Poly mu(std::move(coeffs));
            mu = poly_scale(F, mu, F.neg(1));  // monic: x^r - sum c_i x^i
            return mu;
        }
        powers.push_back(cur);
    }
    ensure(false, "minimal polynomial not found within the dimension bound");
    return Poly();
}

inline std::vector<felem> eval_poly_in_algebra(const StructAlgebra& A, const Poly& f,
                                               const std::vector<felem>& u, const std::vector<felem>& e) {
    const Field& F = A.field();
    std::vector<felem> acc(static_cast<size_t>(A.dim()), 0);
    std::vector<felem> power = e;
    for (int d = 0; d <= f.deg(); ++d) {
        felem c = f.coeff(d);
        if (c)
            for (int i = 0; i < A.dim(); ++i)
                acc[static_cast<size_t>(i)] = F.add(acc[static_cast<size_t>(i)], F.mul(c, power[static_cast<size_t>(i)]));
        if (d < f.deg()) power = A.mul(power, u);
    }
    return acc;
}

// Split e along the factorization of the minimal polynomial of u = e*z; the
// CRT idempotent for a factor f^m of mu is ((h^-1 mod f^m) * h)(u) with
// h = mu / f^m. Returns an empty list when mu is irreducible (no split).
inline std::vector<std::vector<felem>> split_idempotent(const StructAlgebra& A,
                                                        const std::vector<felem>& e,
                                                        const std::vector<felem>& z,
                                                        std::uint64_t seed) {
    const Field& F = A.field();
    auto u = A.mul(e, z);
    Poly mu = minimal_polynomial(A, u, e);
    if (mu.deg() <= 0) return {};
    auto fac = poly_factor(F, mu, seed);
    if (fac.parts.size() == 1) return {};
    std::vector<std::vector<felem>> out;
    for (auto& [f, mult] : fac.parts) {
        Poly fm = poly_from({1}, F);
        for (int i = 0; i < mult; ++i) fm = poly_mul(F, fm, f);
        Poly h = poly_div(F, mu, fm);
        auto [g, s, t] = poly_egcd(F, h, fm);
        ensure(g.deg() == 0, "cofactor and factor power must be coprime");
        // normalize so s*h == 1 mod fm
        s = poly_scale(F, s, F.inv(g.coeff(0)));
        Poly idem_poly = poly_mod(F, poly_mul(F, s, h), mu);
        out.push_back(eval_poly_in_algebra(A, idem_poly, u, e));
    }
    return out;
}

}  // namespace detail

// Primitive central idempotents of a semisimple algebra, found by repeatedly
// splitting along the center basis (deterministic order), with a seeded
// random-combination fallback for the rare stall. The expected count comes
// from the cyclotomic class count and a mismatch is a hard error.
inline std::vector<std::vector<felem>> central_idempotents(const StructAlgebra& A, int expected_count,
                                                           std::uint64_t seed = default_seed()) {
    const Field& F = A.field();
    Subspace Z = A.center();
    std::vector<std::vector<felem>> idems{A.one()};

    auto try_split_all = [&](const std::vector<felem>& z) {
        bool split_any = false;
        std::vector<std::vector<felem>> next;
        for (auto& e : idems) {
            auto parts = detail::split_idempotent(A, e, z, seed);
            if (parts.empty()) {
                next.push_back(e);
            } else {
                split_any = true;
                for (auto& piece : parts) next.push_back(piece);
            }
        }
        idems = std::move(next);
        return split_any;
    };

    bool progress = true;
    while (progress && static_cast<int>(idems.size()) < expected_count) {
        progress = false;
        for (int t = 0; t < Z.dim(); ++t)
            if (try_split_all(Z.basis().row(t))) progress = true;
    }
    std::mt19937_64 rng(seed ^ 0xa5a5a5a5ull);
    int attempts = 0;
    while (static_cast<int>(idems.size()) < expected_count && attempts < 100) {
        std::vector<felem> z(static_cast<size_t>(A.dim()), 0);
        for (int t = 0; t < Z.dim(); ++t) {
            felem c = static_cast<felem>(rng() % F.q());
            auto row = Z.basis().row(t);
            for (int i = 0; i < A.dim(); ++i) z[static_cast<size_t>(i)] = F.add(z[static_cast<size_t>(i)], F.mul(c, row[static_cast<size_t>(i)]));
        }
        try_split_all(z);
        ++attempts;
    }
    ensure(static_cast<int>(idems.size()) == expected_count,
           "central idempotent count disagrees with the cyclotomic class count");

    // verification: idempotent, pairwise orthogonal, central, summing to one
    std::vector<felem> sum(static_cast<size_t>(A.dim()), 0);
    for (auto& e : idems) {
        ensure(A.mul(e, e) == e, "central idempotent fails e^2 = e");
        ensure(Z.contains(F, e), "central idempotent is not central");
        for (int i = 0; i < A.dim(); ++i) sum[static_cast<size_t>(i)] = F.add(sum[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
    }
    for (size_t a = 0; a < idems.size(); ++a)
        for (size_t b = a + 1; b < idems.size(); ++b) {
            auto prod = A.mul(idems[a], idems[b]);
            for (auto xv : prod) ensure(xv == 0, "central idempotents must be orthogonal");
        }
    ensure(sum == A.one(), "central idempotents must sum to 1");

    std::sort(idems.begin(), idems.end());
    return idems;
}

struct WedderburnComponent {
    int n = 1;  // matrix size
    int d = 1;  // extension degree over F
    auto operator<=>(const WedderburnComponent&) const = default;
};

// (n, d) of the simple component cut out by a primitive central idempotent:
// d is the F-dimension of e*Z and n^2*d the F-dimension of e*A.
inline WedderburnComponent component_params(const StructAlgebra& A, const Subspace& Z,
                                            const std::vector<felem>& e) {
    const Field& F = A.field();
    std::vector<std::vector<felem>> ez, ea;
    for (int t = 0; t < Z.dim(); ++t) ez.push_back(A.mul(e, Z.basis().row(t)));
    for (int b = 0; b < A.dim(); ++b) {
        std::vector<felem> eb(static_cast<size_t>(A.dim()), 0);
        eb[static_cast<size_t>(b)] = 1;
        ea.push_back(A.mul(e, eb));
    }
    int d = Subspace(F, mat_from_rows(ez, A.dim())).dim();
    int full = Subspace(F, mat_from_rows(ea, A.dim())).dim();
    ensure(d >= 1 && full % d == 0, "component dimension must be divisible by its center degree");
    int nsq = full / d;
    int n = 0;
    while ((n + 1) * (n + 1) <= nsq) ++n;
    ensure(n * n == nsq, "component dimension over its center must be a perfect square");
    return {n, d};
}

struct Decomposition {
    int radical_dim = 0;
    std::vector<WedderburnComponent> components;  // sorted
    CycloReport cyclo;

    std::map<std::pair<int, int>, int> component_multiset() const {
        std::map<std::pair<int, int>, int> m;
        for (auto& c : components) ++m[{c.n, c.d}];
        return m;
    }
};

// Everything computed for one (G, F) case; downstream consumers (unit groups,
// verification) reuse the shared pieces.
struct CaseComputation {
    Group group;
    Field field;
    ConjClasses classes;
    RadicalReport radical;
    StructAlgebra algebra;      // FG
    QuotientAlgebra quotient;   // FG / J
    std::vector<std::vector<felem>> idempotents;  // of the quotient
    Decomposition decomposition;
};

inline CaseComputation decompose_case(const std::string& group_name, std::uint32_t p, std::uint32_t k,
                                      std::uint64_t seed = default_seed()) {
    CaseComputation C{build_group(group_name), Field(p, k), {}, {}, {}, {}, {}, {}};
    const Group& G = C.group;
    const Field& F = C.field;
    C.classes = conjugacy_classes(G);
    GroupAlgebra A(G, F);
    C.algebra = StructAlgebra::from_group_algebra(A);
    C.radical = jacobson_radical(A);
    C.quotient = QuotientAlgebra::of(C.algebra, C.radical.radical.space);

    C.decomposition.radical_dim = C.radical.radical.dim();
    C.decomposition.cyclo = cyclotomic_classes(G, C.classes, p, F.q());

    C.idempotents = central_idempotents(C.quotient.algebra, C.decomposition.cyclo.count(), seed);
    Subspace Z = C.quotient.algebra.center();
    for (auto& e : C.idempotents)
        C.decomposition.components.push_back(component_params(C.quotient.algebra, Z, e));
    std::sort(C.decomposition.components.begin(), C.decomposition.components.end());

    // degrees match the cyclotomic orbit sizes as multisets
    std::vector<int> degrees;
    for (auto& c : C.decomposition.components) degrees.push_back(c.d);
    std::sort(degrees.begin(), degrees.end());
    ensure(degrees == C.decomposition.cyclo.orbit_sizes,
           "component degrees must match the cyclotomic orbit sizes");

    // dimension bookkeeping
    int total = C.decomposition.radical_dim;
    for (auto& c : C.decomposition.components) total += c.n * c.n * c.d;
    ensure(total == G.n, "radical dim plus component dims must equal |G|");

    // the center of the quotient has dimension sum of the degrees
    int zsum = 0;
    for (auto& c : C.decomposition.components) zsum += c.d;
    ensure(Z.dim() == zsum, "quotient center dimension must equal the degree sum");

    // linear components (n = 1) agree with the q-power orbits on G/G' when
    // FG is semisimple
    if (G.n % static_cast<int>(p) != 0) {
        auto ab = quotient_group(G, derived_subgroup(G));
        std::vector<int> orbit_sizes;
        std::vector<bool> seen(static_cast<size_t>(ab.group.n), false);
        for (int b = 0; b < ab.group.n; ++b) {
            if (seen[static_cast<size_t>(b)]) continue;
            int len = 0;
            for (int t = b; !seen[static_cast<size_t>(t)]; t = ab.group.pw(t, static_cast<long long>(F.q()))) {
                seen[static_cast<size_t>(t)] = true;
                ++len;
            }
            orbit_sizes.push_back(len);
        }
        std::sort(orbit_sizes.begin(), orbit_sizes.end());
        std::vector<int> linear;
        for (auto& c : C.decomposition.components)
            if (c.n == 1) linear.push_back(c.d);
        std::sort(linear.begin(), linear.end());
        ensure(linear == orbit_sizes,
               "n=1 components must mirror the abelianization's q-power orbits");
    }
    return C;
}

}  // namespace ug24
