// Arithmetic in GF(p^k) with an explicit irreducible modulus, plus univariate
// polynomial arithmetic and factorization over such fields.
//
// Elements are stored in the power basis of the modulus and encoded as a
// single integer in [0, q): the code of sum c_i x^i is sum c_i p^i. The
// encoding is deterministic because the modulus is chosen deterministically
// (smallest monic irreducible of the requested degree, ordered by the integer
// encoding of the non-leading coefficients).
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ug24/common.hpp"

namespace ug24 {

using felem = std::uint32_t;

class Field;

// Dense univariate polynomial, little-endian coefficients, no trailing zeros.
// The zero polynomial is the empty vector.
struct Poly {
    std::vector<felem> c;

    Poly() = default;
    explicit Poly(std::vector<felem> cc) : c(std::move(cc)) { trim(); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    felem lead() const { return c.back(); }
    felem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
    }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const Poly& o) const { return c == o.c; }
};

class Field {
  public:
    // GF(p^k) with the smallest monic irreducible modulus of degree k.
    Field(std::uint32_t p, std::uint32_t k) : Field(p, k, find_modulus(p, k)) {}

    // GF(p^k) with a caller-supplied monic modulus of degree k (checked).
    Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
        : p_(p), k_(k), mod_(std::move(modulus)) {
        require(is_prime_u32(p), "field characteristic must be prime");
        require(k >= 1, "field extension degree must be >= 1");
        q_ = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            require(q_ <= (1u << 30) / p, "field too large for the element encoding");
            q_ *= p;
        }
        require(mod_.size() == k + 1 && mod_[k] == 1, "modulus must be monic of degree k");
        for (auto d : mod_) require(d < p, "modulus digits must be reduced mod p");
        if (k > 1) require(irreducible_over_prime(p, mod_), "modulus is reducible");
        init_reduction();
        if (q_ <= kTableMaxQ) build_tables();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
    }

    felem zero() const { return 0; }
    felem one() const { return 1; }
    // Image of the residue class of v in the prime subfield.
    felem from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<felem>(r);
    }
    // The power-basis generator x (only meaningful for k > 1).
    felem gen() const { return k_ > 1 ? p_ : 1; }

    felem add(felem a, felem b) const {
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_raw(a, b);
    }
    felem neg(felem a) const {
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_raw(a);
    }
    felem sub(felem a, felem b) const { return add(a, neg(b)); }
    felem mul(felem a, felem b) const {
        if (!mul_tab_.empty()) return mul_tab_[a * q_ + b];
        return mul_raw(a, b);
    }
    felem pow(felem a, std::uint64_t e) const {
        felem r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    felem inv(felem a) const {
        require(a != 0, "division by zero in GF(q)");
        if (!inv_tab_.empty()) return inv_tab_[a];
        return pow(a, q_ - 2);
    }
    felem frobenius(felem a) const { return pow(a, p_); }
    // t-fold Frobenius a -> a^(p^t).
    felem frobenius_iter(felem a, std::uint32_t t) const {
        t %= k_;
        for (std::uint32_t i = 0; i < t; ++i) a = frobenius(a);
        return a;
    }
    // The unique b with b^(p^i) = a.
    felem frobenius_root(felem a, std::uint32_t i) const {
        return frobenius_iter(a, (k_ - (i % k_)) % k_);
    }

    // Smallest t >= 1 with a^t = 1; divides q-1.
    std::uint64_t mult_order(felem a) const {
        require(a != 0, "multiplicative order of zero is undefined");
        std::uint64_t ord = q_ - 1;
        std::uint64_t m = ord;
        for (std::uint64_t d = 2; d * d <= m; ++d) {
            while (m % d == 0) {
                m /= d;
                while (ord % d == 0 && pow(a, ord / d) == 1) ord /= d;
            }
        }
        if (m > 1)
            while (ord % m == 0 && pow(a, ord / m) == 1) ord /= m;
        ensure(pow(a, ord) == 1, "mult_order postcondition");
        return ord;
    }

    std::vector<std::uint32_t> decode(felem a) const {
        std::vector<std::uint32_t> d(k_);
        for (std::uint32_t i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    felem encode(const std::vector<std::uint32_t>& d) const {
        felem v = 0;
        for (std::uint32_t i = k_; i-- > 0;) v = v * p_ + d[i] % p_;
        return v;
    }

    std::string to_string(felem a) const {
        if (k_ == 1) return std::to_string(a);
        auto d = decode(a);
        std::string s;
        bool first = true;
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (!d[i]) continue;
            if (!first) s += "+";
            first = false;
            if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
            if (i >= 1) s += (d[i] != 1 ? "*x" : "x");
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return first ? "0" : s;
    }

  private:
    static constexpr std::uint64_t kTableMaxQ = 512;

    std::uint32_t p_, k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> mod_;
    // reduction_[i] = digits of x^(k+i) mod modulus, i = 0..k-2
    std::vector<std::vector<std::uint32_t>> reduction_;
    std::vector<felem> add_tab_, mul_tab_, inv_tab_, neg_tab_;

    felem add_raw(felem a, felem b) const {
        felem r = 0, mult = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += ((a % p_ + b % p_) % p_) * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return r;
    }
    felem neg_raw(felem a) const {
        felem r = 0, mult = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += ((p_ - a % p_) % p_) * mult;
            a /= p_;
            mult *= p_;
        }
        return r;
    }
    felem mul_raw(felem a, felem b) const {
        if (k_ == 1) return static_cast<felem>((std::uint64_t)a * b % p_);
        auto da = decode(a), db = decode(b);
        std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
        for (std::uint32_t i = 0; i < k_; ++i)
            if (da[i])
                for (std::uint32_t j = 0; j < k_; ++j)
                    prod[i + j] += (std::uint64_t)da[i] * db[j];
        // fold x^(k+i) back down using the precomputed reductions
        for (std::uint32_t i = 2 * k_ - 2; i >= k_; --i) {
            std::uint64_t c = prod[i] % p_;
            if (c)
                for (std::uint32_t j = 0; j < k_; ++j)
                    prod[j] += c * reduction_[i - k_][j];
            if (i == k_) break;
        }
        std::vector<std::uint32_t> out(k_);
        for (std::uint32_t i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
        return encode(out);
    }

    void init_reduction() {
        if (k_ < 2) return;
        reduction_.assign(k_ - 1, std::vector<std::uint32_t>(k_, 0));
        // x^k = -(low part of modulus)
        for (std::uint32_t j = 0; j < k_; ++j) reduction_[0][j] = (p_ - mod_[j]) % p_;
        for (std::uint32_t i = 1; i + 1 < k_; ++i) {
            // multiply previous by x
            std::vector<std::uint32_t> t(k_ + 1, 0);
            for (std::uint32_t j = 0; j < k_; ++j) t[j + 1] = reduction_[i - 1][j];
            std::uint32_t carry = t[k_];
            for (std::uint32_t j = 0; j < k_; ++j)
                reduction_[i][j] = (t[j] + carry * reduction_[0][j]) % p_;
        }
    }

    void build_tables() {
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        neg_tab_.resize(q_);
        inv_tab_.assign(q_, 0);
        for (std::uint64_t a = 0; a < q_; ++a) {
            neg_tab_[a] = neg_raw(static_cast<felem>(a));
            for (std::uint64_t b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = add_raw(static_cast<felem>(a), static_cast<felem>(b));
                mul_tab_[a * q_ + b] = mul_raw(static_cast<felem>(a), static_cast<felem>(b));
            }
        }
        for (std::uint64_t a = 1; a < q_; ++a)
            for (std::uint64_t b = 1; b < q_; ++b)
                if (mul_tab_[a * q_ + b] == 1) {
                    inv_tab_[a] = static_cast<felem>(b);
                    break;
                }
    }

    // Irreducibility of a monic polynomial over GF(p), by trial division
    // against every monic polynomial of degree 1..deg/2. Exhaustive and
    // adequate at the degrees used for modulus search.
    static bool irreducible_over_prime(std::uint32_t p, const std::vector<std::uint32_t>& f);
    static std::vector<std::uint32_t> find_modulus(std::uint32_t p, std::uint32_t k);
};

// ---------------------------------------------------------------------------
// Polynomial arithmetic over a Field
// ---------------------------------------------------------------------------

inline Poly poly_from(std::initializer_list<std::int64_t> cs, const Field& F) {
    std::vector<felem> v;
    for (auto c : cs) v.push_back(F.from_int(c));
    return Poly(std::move(v));
}

inline Poly poly_x() { return Poly({0, 1}); }

inline Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<felem> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff((int)i), b.coeff((int)i));
    return Poly(std::move(c));
}

inline Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<felem> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff((int)i), b.coeff((int)i));
    return Poly(std::move(c));
}

inline Poly poly_scale(const Field& F, const Poly& a, felem s) {
    std::vector<felem> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a.c[i], s);
    return Poly(std::move(c));
}

inline Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<felem> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(c));
}

// Returns (quotient, remainder) with deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    Poly q;
    if (a.deg() < b.deg()) return {q, a};
    q.c.assign(static_cast<size_t>(a.deg() - b.deg() + 1), 0);
    felem linv = F.inv(b.lead());
    for (int d = a.deg(); d >= b.deg() && !a.is_zero(); d = a.deg()) {
        felem coef = F.mul(a.lead(), linv);
        int shift = d - b.deg();
        q.c[static_cast<size_t>(shift)] = coef;
        for (int i = 0; i <= b.deg(); ++i)
            a.c[static_cast<size_t>(i + shift)] =
                F.sub(a.c[static_cast<size_t>(i + shift)], F.mul(coef, b.c[static_cast<size_t>(i)]));
        a.trim();
    }
    q.trim();
    return {q, a};
}

inline Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}
inline Poly poly_div(const Field& F, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(F, a, b);
    ensure(r.is_zero(), "poly_div expected exact division");
    return q;
}

inline Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

inline Poly poly_gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

inline Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(F, poly_mul(F, a, b), m);
}

inline Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
    Poly r = poly_from({1}, F);
    base = poly_mod(F, base, m);
    while (e) {
        if (e & 1) r = poly_mulmod(F, r, base, m);
        base = poly_mulmod(F, base, base, m);
        e >>= 1;
    }
    return r;
}

// (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<Poly, Poly, Poly> poly_egcd(const Field& F, Poly a, Poly b) {
    Poly s0 = poly_from({1}, F), s1, t0, t1 = poly_from({1}, F);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
        Poly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.is_zero() && a.lead() != 1) {
        felem u = F.inv(a.lead());
        a = poly_scale(F, a, u);
        s0 = poly_scale(F, s0, u);
        t0 = poly_scale(F, t0, u);
    }
    return {a, s0, t0};
}

inline felem poly_eval(const Field& F, const Poly& f, felem x) {
    felem r = 0;
    for (size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, x), f.c[i]);
    return r;
}

inline Poly poly_derivative(const Field& F, const Poly& f) {
    if (f.deg() < 1) return Poly();
    std::vector<felem> c(static_cast<size_t>(f.deg()), 0);
    for (int i = 1; i <= f.deg(); ++i)
        c[static_cast<size_t>(i - 1)] = F.mul(f.c[static_cast<size_t>(i)], F.from_int(i));
    return Poly(std::move(c));
}

// f with f' = 0 has all exponents divisible by p; return its p-th root.
inline Poly poly_pth_root(const Field& F, const Poly& f) {
    std::vector<felem> c;
    for (size_t i = 0; i < f.c.size(); i += F.p())
        c.push_back(F.frobenius_root(f.c[i], 1));
    return Poly(std::move(c));
}

// x^(q^n) mod f computed by iterated q-power maps (all exponents stay small).
inline Poly poly_frobenius_power(const Field& F, std::uint32_t n, const Poly& f) {
    Poly h = poly_mod(F, poly_x(), f);
    for (std::uint32_t i = 0; i < n; ++i) h = poly_powmod(F, h, F.q(), f);
    return h;
}

inline bool poly_is_irreducible(const Field& F, const Poly& f) {
    require(!f.is_zero(), "irreducibility of the zero polynomial is undefined");
    int n = f.deg();
    if (n == 0) return false;
    if (n == 1) return true;
    Poly fm = poly_monic(F, f);
    // x^(q^n) == x mod f, and x^(q^(n/r)) - x coprime to f for prime r | n
    Poly xn = poly_frobenius_power(F, static_cast<std::uint32_t>(n), fm);
    if (!poly_sub(F, xn, poly_x()).is_zero()) return false;
    int m = n;
    for (int r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        while (m % r == 0) m /= r;
        Poly h = poly_frobenius_power(F, static_cast<std::uint32_t>(n / r), fm);
        if (poly_gcd(F, poly_sub(F, h, poly_x()), fm).deg() != 0) return false;
    }
    if (m > 1) {
        Poly h = poly_frobenius_power(F, static_cast<std::uint32_t>(n / m), fm);
        if (poly_gcd(F, poly_sub(F, h, poly_x()), fm).deg() != 0) return false;
    }
    return true;
}

struct Factorization {
    felem unit = 1;                          // leading coefficient of the input
    std::vector<std::pair<Poly, int>> parts; // monic irreducible factor, multiplicity
};

namespace detail {

inline void squarefree_decompose(const Field& F, Poly f, int power,
                                 std::vector<std::pair<Poly, int>>& out) {
    // Yun-style decomposition adapted to characteristic p.
    if (f.deg() == 0) return;
    Poly df = poly_derivative(F, f);
    if (df.is_zero()) {
        squarefree_decompose(F, poly_pth_root(F, f), power * static_cast<int>(F.p()), out);
        return;
    }
    Poly c = poly_gcd(F, f, df);
    Poly w = poly_div(F, f, c);
    int i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly z = poly_div(F, w, y);
        if (z.deg() > 0) out.emplace_back(z, i * power);
        w = y;
        c = poly_div(F, c, y);
        ++i;
    }
    if (c.deg() > 0)
        squarefree_decompose(F, poly_pth_root(F, c), power * static_cast<int>(F.p()), out);
}

inline Poly random_poly_below(const Field& F, int deg_bound, std::mt19937_64& rng) {
    std::vector<felem> c(static_cast<size_t>(deg_bound), 0);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.q() - 1);
    for (auto& x : c) x = static_cast<felem>(dist(rng));
    return Poly(std::move(c));
}

// Split a monic product of distinct irreducibles, all of degree d.
inline void equal_degree_split(const Field& F, const Poly& f, int d,
                               std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    Poly g;
    while (true) {
        Poly r = random_poly_below(F, f.deg(), rng);
        if (r.deg() < 1) continue;
        if (F.p() == 2) {
            // trace map over GF(2^(k*d))
            Poly t;
            Poly cur = poly_mod(F, r, f);
            std::uint32_t bits = F.k() * static_cast<std::uint32_t>(d);
            for (std::uint32_t i = 0; i < bits; ++i) {
                t = poly_add(F, t, cur);
                cur = poly_mulmod(F, cur, cur, f);
            }
            g = poly_gcd(F, t, f);
        } else {
            // norm to GF(q), then a ((q-1)/2)-th power test
            Poly nrm = poly_mod(F, r, f);
            Poly fr = nrm;
            for (int i = 1; i < d; ++i) {
                fr = poly_powmod(F, fr, F.q(), f);
                nrm = poly_mulmod(F, nrm, fr, f);
            }
            Poly s = poly_powmod(F, nrm, (F.q() - 1) / 2, f);
            g = poly_gcd(F, poly_sub(F, s, poly_from({1}, F)), f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) break;
    }
    equal_degree_split(F, g, d, rng, out);
    equal_degree_split(F, poly_div(F, f, g), d, rng, out);
}

}  // namespace detail

// Full factorization: square-free decomposition, distinct-degree splitting,
// then randomized (seeded, replayable) equal-degree splitting.
inline Factorization poly_factor(const Field& F, const Poly& f,
                                 std::uint64_t seed = default_seed()) {
    require(!f.is_zero(), "cannot factor the zero polynomial");
    Factorization out;
    out.unit = f.lead();
    if (f.deg() == 0) return out;

    std::vector<std::pair<Poly, int>> squarefree;
    detail::squarefree_decompose(F, poly_monic(F, f), 1, squarefree);

    std::mt19937_64 rng(seed);
    for (auto& [g, mult] : squarefree) {
        // distinct-degree phase
        Poly rest = g;
        Poly h = poly_mod(F, poly_x(), rest);
        for (int d = 1; rest.deg() > 0 && 2 * d <= rest.deg(); ++d) {
            h = poly_powmod(F, h, F.q(), rest);
            Poly gd = poly_gcd(F, poly_sub(F, h, poly_x()), rest);
            if (gd.deg() > 0) {
                std::vector<Poly> irr;
                detail::equal_degree_split(F, gd, d, rng, irr);
                for (auto& piece : irr) out.parts.emplace_back(piece, mult);
                rest = poly_div(F, rest, gd);
                h = poly_mod(F, h, rest);
            }
        }
        if (rest.deg() > 0) out.parts.emplace_back(rest, mult);
    }
    std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return std::lexicographical_compare(a.first.c.rbegin(), a.first.c.rend(),
                                            b.first.c.rbegin(), b.first.c.rend());
    });

    Poly check = poly_from({1}, F);
    for (auto& [g, m] : out.parts)
        for (int i = 0; i < m; ++i) check = poly_mul(F, check, g);
    check = poly_scale(F, check, out.unit);
    ensure(check == f, "factorization does not multiply back to the input");
    return out;
}

// ---------------------------------------------------------------------------
// Modulus search (over the prime field, used by the Field constructor)
// ---------------------------------------------------------------------------

inline bool Field::irreducible_over_prime(std::uint32_t p, const std::vector<std::uint32_t>& f) {
    Field prime(p, 1);
    std::vector<felem> c(f.begin(), f.end());
    return poly_is_irreducible(prime, Poly(std::move(c)));
}

inline std::vector<std::uint32_t> Field::find_modulus(std::uint32_t p, std::uint32_t k) {
    require(is_prime_u32(p), "field characteristic must be prime");
    require(k >= 1, "field extension degree must be >= 1");
    if (k == 1) return {0, 1};  // modulus x
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<std::uint32_t> f(k + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[k] = 1;
        if (irreducible_over_prime(p, f)) return f;
    }
    ensure(false, "no irreducible modulus found");
    return {};
}

}  // namespace ug24
