// Structure of the unipotent units V = 1 + J(FG), assembly of the full
// unit-group descriptor, and the brute-force census oracles (exhaustive
// invertibility over all coefficient vectors, and exhaustive order counting
// over V). The GF(2) paths are bit-packed; censuses are partitioned into
// disjoint coefficient ranges and merged.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <thread>

#include "ug24/wedderburn.hpp"

namespace ug24 {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// |GL(n, Q)| = prod_{i=0}^{n-1} (Q^n - Q^i)
inline BigInt gl_order(int n, const BigInt& Q) {
    require(n >= 1 && Q >= 2, "gl_order needs n >= 1 and Q >= 2");
    BigInt qn = big_pow(Q, static_cast<std::uint64_t>(n));
    BigInt out = 1;
    BigInt qi = 1;
    for (int i = 0; i < n; ++i) {
        out *= qn - qi;
        qi *= Q;
    }
    return out;
}

// Type of a finite p-group attached to V = 1 + J.
struct PGroupType {
    std::uint32_t p = 2;
    std::vector<std::pair<int, long long>> abelian_factors;  // (j, mult): C_{p^j}^mult, j ascending
    bool nonabelian = false;
    BigInt order = 1;
    int exponent_log = 0;  // exponent = p^exponent_log
    std::vector<std::pair<int, long long>> v_abelianization;  // only for the nonabelian case

    bool trivial() const { return order == 1; }
    bool operator==(const PGroupType& o) const {
        return p == o.p && abelian_factors == o.abelian_factors && nonabelian == o.nonabelian &&
               order == o.order && v_abelianization == o.v_abelianization;
    }
};

struct UnitStructure {
    PGroupType unipotent;
    std::vector<WedderburnComponent> reductive;  // (n,d): GL(n, q^d); n = 1 reads C_{q^d - 1}
    BigInt total_order = 1;
    // set only when an encoded statement asserts how V joins the reductive
    // part (semidirect vs direct); never computed independently
    std::optional<bool> split_asserted;

    std::map<std::pair<int, int>, int> reductive_multiset() const {
        std::map<std::pair<int, int>, int> m;
        for (auto& c : reductive) ++m[{c.n, c.d}];
        return m;
    }
};

// ---------------------------------------------------------------------------
// Unipotent structure via the p-power kernel filtration
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<felem> combine(const Field& F, const Subspace& S, const std::vector<felem>& coords) {
    std::vector<felem> v(static_cast<size_t>(S.ambient()), 0);
    for (int t = 0; t < S.dim(); ++t) {
        felem c = coords[static_cast<size_t>(t)];
        if (!c) continue;
        for (int i = 0; i < S.ambient(); ++i)
            v[static_cast<size_t>(i)] = F.add(v[static_cast<size_t>(i)], F.mul(c, S.basis().row(t)[static_cast<size_t>(i)]));
    }
    return v;
}

}  // namespace detail

// Abelian type of 1 + I for a commutative nilpotent ideal I in characteristic
// p: (1+a)^(p^j) = 1 + a^(p^j), so the count of elements of order dividing
// p^j is the GF(p)-kernel size of the p^j-power map on I, and the kernel
// filtration determines the cyclic multiplicities.
inline std::vector<std::pair<int, long long>> abelian_type_from_filtration(
    const StructAlgebra& A, const Subspace& I) {
    const Field& F = A.field();
    int d = I.dim();
    const long long total = static_cast<long long>(F.k()) * d;
    std::vector<long long> kdim{0};  // kernel GF(p)-dims of the p^j power maps
    for (int j = 1; kdim.back() < total; ++j) {
        auto power_map = [&](const std::vector<felem>& coords) {
            auto v = detail::combine(F, I, coords);
            for (int t = 0; t < j; ++t) {
                auto w = v;
                for (std::uint32_t c = 1; c < F.p(); ++c) v = A.mul(v, w);
                // v = w^p computed as repeated products of the fixed w
            }
            return v;
        };
        auto ker = prime_subfield_kernel(F, d, power_map);
        kdim.push_back(ker.dim);
        ensure(kdim.back() >= kdim[kdim.size() - 2], "p-power kernel filtration must be monotone");
        ensure(static_cast<int>(kdim.size()) <= total + 1, "filtration failed to exhaust the ideal");
    }
    int e = static_cast<int>(kdim.size()) - 1;  // exponent_log
    std::vector<long long> delta(static_cast<size_t>(e) + 2, 0);
    for (int j = 1; j <= e; ++j) delta[static_cast<size_t>(j)] = kdim[static_cast<size_t>(j)] - kdim[static_cast<size_t>(j - 1)];
    std::vector<std::pair<int, long long>> type;
    long long weighted = 0;
    for (int j = 1; j <= e; ++j) {
        long long mult = delta[static_cast<size_t>(j)] - delta[static_cast<size_t>(j + 1)];
        ensure(mult >= 0, "kernel filtration differences must be non-increasing");
        if (mult > 0) type.emplace_back(j, mult);
        weighted += static_cast<long long>(j) * mult;
    }
    ensure(weighted == total, "cyclic multiplicities must account for |V| = q^dim J");
    return type;
}

inline PGroupType unipotent_structure(const StructAlgebra& A, const Subspace& J, int nilindex) {
    const Field& F = A.field();
    PGroupType out;
    out.p = F.p();
    out.order = big_pow(F.p(), static_cast<std::uint64_t>(F.k()) * J.dim());
    if (J.dim() == 0) return out;

    bool commutative = true;
    for (int a = 0; a < J.dim() && commutative; ++a)
        for (int b = a + 1; b < J.dim() && commutative; ++b)
            if (A.mul(J.basis().row(a), J.basis().row(b)) != A.mul(J.basis().row(b), J.basis().row(a)))
                commutative = false;

    if (commutative) {
        out.abelian_factors = abelian_type_from_filtration(A, J);
        out.exponent_log = out.abelian_factors.empty() ? 0 : out.abelian_factors.back().first;
        return out;
    }

    // Nonabelian V (not reached by the in-catalog cases; reported rather than
    // classified). The exponent is bounded above by the nilpotency index and
    // below by direct power computation on the basis span; the bounds meet in
    // every case this code has seen. The abelianization is the abelian type
    // of 1 + J/K for K the ideal closure of the commutator span.
    out.nonabelian = true;
    int upper = 0;
    {
        std::uint64_t pe = 1;
        while (pe < static_cast<std::uint64_t>(nilindex)) {
            pe *= F.p();
            ++upper;
        }
    }
    int lower = 0;
    {
        // p-power order of 1+a by direct multiplication: one p-th power per step
        auto order_log = [&](const std::vector<felem>& a) {
            auto u = A.one();
            for (size_t i = 0; i < u.size(); ++i) u[i] = F.add(u[i], a[i]);
            auto w = u;
            int lg = 0;
            while (w != A.one() && lg <= upper) {
                auto base = w;
                for (std::uint32_t c = 1; c < F.p(); ++c) w = A.mul(w, base);
                ++lg;
            }
            return lg;
        };
        std::mt19937_64 rng(default_seed() ^ 0x1d);
        for (int t = 0; t < J.dim(); ++t) lower = std::max(lower, order_log(J.basis().row(t)));
        for (int iter = 0; iter < 32; ++iter) {
            std::vector<felem> coords(static_cast<size_t>(J.dim()));
            for (auto& c : coords) c = static_cast<felem>(rng() % F.q());
            lower = std::max(lower, order_log(detail::combine(F, J, coords)));
        }
    }
    ensure(lower <= upper, "sampled element order exceeds the nilpotency bound");
    out.exponent_log = upper;  // equals the sampled value in every observed case
    std::vector<std::vector<felem>> comms;
    for (int a = 0; a < J.dim(); ++a)
        for (int b = 0; b < J.dim(); ++b) {
            auto ab = A.mul(J.basis().row(a), J.basis().row(b));
            auto ba = A.mul(J.basis().row(b), J.basis().row(a));
            for (size_t i = 0; i < ab.size(); ++i) ab[i] = F.sub(ab[i], ba[i]);
            comms.push_back(std::move(ab));
        }
    Subspace K(F, mat_from_rows(comms, A.dim()));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<felem>> ext;
        for (int t = 0; t < K.dim(); ++t)
            for (int b = 0; b < A.dim(); ++b) {
                std::vector<felem> eb(static_cast<size_t>(A.dim()), 0);
                eb[static_cast<size_t>(b)] = 1;
                ext.push_back(A.mul(eb, K.basis().row(t)));
                ext.push_back(A.mul(K.basis().row(t), eb));
            }
        for (int t = 0; t < K.dim(); ++t) ext.push_back(K.basis().row(t));
        Subspace K2(F, mat_from_rows(ext, A.dim()));
        if (K2.dim() > K.dim()) {
            K = K2;
            grew = true;
        }
    }
    auto q = QuotientAlgebra::of(A, K);
    std::vector<std::vector<felem>> jbar;
    for (int t = 0; t < J.dim(); ++t) jbar.push_back(q.project(F, J.basis().row(t)));
    Subspace Jq(F, mat_from_rows(jbar, q.algebra.dim()));
    out.v_abelianization = abelian_type_from_filtration(q.algebra, Jq);
    return out;
}

inline UnitStructure unit_structure(const CaseComputation& C) {
    UnitStructure u;
    u.unipotent = unipotent_structure(C.algebra, C.radical.radical.space, C.radical.nilindex);
    u.reductive = C.decomposition.components;
    u.total_order = u.unipotent.order;
    BigInt q = C.field.q();
    for (auto& c : u.reductive) u.total_order *= gl_order(c.n, big_pow(q, static_cast<std::uint64_t>(c.d)));
    return u;
}

// ---------------------------------------------------------------------------
// Brute-force censuses
// ---------------------------------------------------------------------------

struct CensusResult {
    BigInt domain_size = 0;
    BigInt unit_count = 0;                       // full-algebra mode
    std::map<long long, long long> order_histogram;  // order -> count; -1 = "above cap"
    int order_cap = 0;
    bool all_commute = true;                     // V-only mode, checked on the basis
};

namespace detail {

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_range(std::uint64_t total) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned parts = total > 1u << 16 ? hw : 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::uint64_t chunk = total / parts, lo = 0;
    for (unsigned i = 0; i < parts; ++i) {
        std::uint64_t hi = (i + 1 == parts) ? total : lo + chunk;
        out.emplace_back(lo, hi);
        lo = hi;
    }
    return out;
}

// Exhaustive invertibility over GF(2) with bit-packed regular-representation
// rows. The matrix of alpha is updated incrementally between consecutive
// coefficient vectors (an increment flips two bits on average).
inline std::uint64_t gf2_full_census_range(const Group& G, std::uint64_t lo, std::uint64_t hi) {
    const int n = G.n;
    std::vector<std::vector<int>> toggle_row(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int b = 0; b < n; ++b)
        for (int j = 0; j < n; ++j) toggle_row[static_cast<size_t>(b)][static_cast<size_t>(j)] = G.op(b, j);

    std::vector<std::uint32_t> M(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((lo >> G.op(i, G.inverse(j))) & 1) M[static_cast<size_t>(i)] |= (1u << j);

    std::vector<std::uint32_t> W(static_cast<size_t>(n));
    std::uint64_t count = 0;
    for (std::uint64_t alpha = lo; alpha < hi; ++alpha) {
        std::copy(M.begin(), M.end(), W.begin());
        bool invertible = true;
        for (int col = 0, row = 0; col < n; ++col) {
            int piv = -1;
            const std::uint32_t bit = 1u << col;
            for (int r = row; r < n; ++r)
                if (W[static_cast<size_t>(r)] & bit) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                invertible = false;
                break;
            }
            std::swap(W[static_cast<size_t>(piv)], W[static_cast<size_t>(row)]);
            const std::uint32_t prow = W[static_cast<size_t>(row)];
            for (int r = row + 1; r < n; ++r)
                if (W[static_cast<size_t>(r)] & bit) W[static_cast<size_t>(r)] ^= prow;
            ++row;
        }
        if (invertible) ++count;
        std::uint64_t diff = alpha ^ (alpha + 1);
        for (int b = 0; b < n && (diff >> b); ++b)
            if ((diff >> b) & 1) {
                const auto& tr = toggle_row[static_cast<size_t>(b)];
                for (int j = 0; j < n; ++j) M[static_cast<size_t>(tr[static_cast<size_t>(j)])] ^= (1u << j);
            }
    }
    return count;
}

inline std::uint32_t gf2_packed_mul(const Group& G, std::uint32_t a, std::uint32_t b) {
    std::uint32_t c = 0;
    for (int i = 0; i < G.n; ++i)
        if ((a >> i) & 1)
            for (int j = 0; j < G.n; ++j)
                if ((b >> j) & 1) c ^= (1u << G.op(i, j));
    return c;
}

}  // namespace detail

// Full-algebra census: enumerate every coefficient vector of FG and count the
// invertible ones (via the rank of the left-regular matrix). The budget is a
// hard bound on the number of vectors; exceeding it is a refusal, never a
// silent sample. An order histogram is collected when order_cap > 0.
inline CensusResult full_unit_census(const GroupAlgebra& A, std::uint64_t budget, int order_cap = 0) {
    const Field& F = A.field();
    const Group& G = A.group();
    BigInt domain = big_pow(F.q(), static_cast<std::uint64_t>(G.n));
    require(domain <= budget,
            "census budget exceeded: q^|G| vectors needed; refusing rather than sampling");
    CensusResult out;
    out.domain_size = domain;
    out.order_cap = order_cap;
    std::uint64_t total = domain.convert_to<std::uint64_t>();

    if (F.p() == 2 && F.k() == 1 && G.n <= 31 && order_cap == 0) {
        auto ranges = detail::partition_range(total);
        std::vector<std::uint64_t> counts(ranges.size(), 0);
        std::vector<std::thread> pool;
        for (size_t t = 0; t < ranges.size(); ++t)
            pool.emplace_back([&, t] {
                counts[t] = detail::gf2_full_census_range(G, ranges[t].first, ranges[t].second);
            });
        for (auto& th : pool) th.join();
        for (auto c : counts) out.unit_count += c;
        return out;
    }

    // generic path (any q), with optional order histogram
    std::vector<felem> v(static_cast<size_t>(G.n), 0);
    auto one = A.one();
    for (std::uint64_t it = 0; it < total; ++it) {
        if (mat_rank(F, A.left_regular_matrix(v)) == G.n) {
            out.unit_count += 1;
            if (order_cap > 0) {
                auto u = v;
                long long o = 1;
                while (u != one && o <= order_cap) {
                    u = A.mul(u, v);
                    ++o;
                }
                ++out.order_histogram[u == one ? o : -1];
            }
        }
        for (size_t d = 0; d < v.size(); ++d) {  // odometer
            if (++v[d] < F.q()) break;
            v[d] = 0;
        }
    }
    return out;
}

// V-only census: enumerate 1 + J exhaustively and record the multiplicative
// order of every element (orders are p-powers; the cap guards the loop).
inline CensusResult v_census(const GroupAlgebra& A, const Subspace& J, std::uint64_t budget,
                             int order_cap = 256) {
    const Field& F = A.field();
    int d = J.dim();
    BigInt domain = big_pow(F.q(), static_cast<std::uint64_t>(d));
    require(domain <= budget,
            "census budget exceeded: q^dim(J) vectors needed; refusing rather than sampling");
    CensusResult out;
    out.domain_size = domain;
    out.order_cap = order_cap;
    for (int a = 0; a < d && out.all_commute; ++a)
        for (int b = a + 1; b < d && out.all_commute; ++b)
            if (A.mul(J.basis().row(a), J.basis().row(b)) != A.mul(J.basis().row(b), J.basis().row(a)))
                out.all_commute = false;

    std::uint64_t total = domain.convert_to<std::uint64_t>();

    if (F.p() == 2 && F.k() == 1 && A.group().n <= 31) {
        // packed path: elements of J are 24-bit masks
        const Group& G = A.group();
        std::vector<std::uint32_t> basis_mask(static_cast<size_t>(d), 0);
        for (int t = 0; t < d; ++t)
            for (int i = 0; i < G.n; ++i)
                if (J.basis().row(t)[static_cast<size_t>(i)]) basis_mask[static_cast<size_t>(t)] |= (1u << i);
        auto ranges = detail::partition_range(total);
        std::vector<std::map<long long, long long>> hists(ranges.size());
        std::vector<std::thread> pool;
        for (size_t rt = 0; rt < ranges.size(); ++rt)
            pool.emplace_back([&, rt] {
                auto [lo, hi] = ranges[rt];
                std::uint32_t alpha = 0;
                for (int t = 0; t < d; ++t)
                    if ((lo >> t) & 1) alpha ^= basis_mask[static_cast<size_t>(t)];
                auto& hist = hists[rt];
                for (std::uint64_t c = lo; c < hi; ++c) {
                    std::uint32_t u = alpha ^ 1u;  // 1 + alpha
                    std::uint32_t w = u;
                    long long o = 1;
                    while (w != 1u && o <= order_cap) {
                        w = detail::gf2_packed_mul(G, w, u);
                        ++o;
                    }
                    ++hist[w == 1u ? o : -1];
                    std::uint64_t diff = c ^ (c + 1);
                    for (int t = 0; t < d && (diff >> t); ++t)
                        if ((diff >> t) & 1) alpha ^= basis_mask[static_cast<size_t>(t)];
                }
            });
        for (auto& th : pool) th.join();
        for (auto& h : hists)
            for (auto& [o, c] : h) out.order_histogram[o] += c;
        return out;
    }

    std::vector<felem> coords(static_cast<size_t>(d), 0);
    auto one = A.one();
    for (std::uint64_t it = 0; it < total; ++it) {
        auto alpha = detail::combine(F, J, coords);
        auto u = A.add(one, alpha);
        auto w = u;
        long long o = 1;
        while (w != one && o <= order_cap) {
            w = A.mul(w, u);
            ++o;
        }
        ++out.order_histogram[w == one ? o : -1];
        for (size_t dd = 0; dd < coords.size(); ++dd) {
            if (++coords[dd] < F.q()) break;
            coords[dd] = 0;
        }
    }
    return out;
}

// Predicted order histogram of an abelian p-group type: the number of
// elements of order exactly p^j follows from the kernel filtration.
inline std::map<long long, long long> predicted_order_histogram(const PGroupType& t) {
    require(!t.nonabelian, "prediction only for abelian types");
    std::map<long long, long long> out;
    int e = t.exponent_log;
    BigInt prev = 0;
    for (int j = 0; j <= e; ++j) {
        BigInt cum = 1;
        for (auto& [jj, mult] : t.abelian_factors)
            cum *= big_pow(t.p, static_cast<std::uint64_t>(std::min(jj, j)) * static_cast<std::uint64_t>(mult));
        BigInt exact = cum - prev;
        out[big_pow(t.p, static_cast<std::uint64_t>(j)).convert_to<long long>()] =
            exact.convert_to<long long>();
        prev = cum;
    }
    return out;
}

}  // namespace ug24
