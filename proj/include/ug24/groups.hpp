// Finite groups as fully materialized multiplication tables, plus the
// constructors (cyclic, direct product, semidirect product, quaternion,
// dihedral, permutation/matrix closure) that build the order-24 catalog.
// Every constructor validates the table exhaustively: identity at index 0,
// latin-square rows/columns, associativity, inverses.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "ug24/common.hpp"

namespace ug24 {

class Group {
  public:
    std::string name;
    std::string presentation;
    int n = 0;
    std::vector<std::uint8_t> mul;  // n*n, identity at index 0
    std::vector<std::uint8_t> inv;
    std::vector<std::string> elem_names;
    std::vector<std::pair<std::string, int>> generators;

    int op(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
    int inverse(int a) const { return inv[static_cast<size_t>(a)]; }
    int pw(int a, long long e) const {
        int base = e >= 0 ? a : inverse(a);
        unsigned long long m = e >= 0 ? static_cast<unsigned long long>(e)
                                      : static_cast<unsigned long long>(-e);
        int r = 0;
        while (m) {
            if (m & 1) r = op(r, base);
            base = op(base, base);
            m >>= 1;
        }
        return r;
    }
    int order_of(int a) const {
        int t = a, o = 1;
        while (t != 0) {
            t = op(t, a);
            ++o;
        }
        return o;
    }
    int exponent() const {
        long long e = 1;
        for (int a = 0; a < n; ++a) e = std::lcm(e, static_cast<long long>(order_of(a)));
        return static_cast<int>(e);
    }
    int generator(const std::string& gname) const {
        for (auto& [nm, idx] : generators)
            if (nm == gname) return idx;
        require(false, "unknown generator '" + gname + "' in group " + name);
        return -1;
    }
    bool is_abelian() const {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    void validate() const {
        ensure(n >= 1, "empty group");
        for (int a = 0; a < n; ++a) {
            ensure(op(0, a) == a && op(a, 0) == a, "identity must sit at index 0");
            ensure(op(a, inverse(a)) == 0 && op(inverse(a), a) == 0, "bad inverse table");
            std::vector<bool> seen_r(static_cast<size_t>(n), false), seen_c(seen_r);
            for (int b = 0; b < n; ++b) {
                ensure(!seen_r[static_cast<size_t>(op(a, b))], "row is not a permutation");
                seen_r[static_cast<size_t>(op(a, b))] = true;
                ensure(!seen_c[static_cast<size_t>(op(b, a))], "column is not a permutation");
                seen_c[static_cast<size_t>(op(b, a))] = true;
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    ensure(op(op(a, b), c) == op(a, op(b, c)), "multiplication not associative");
        for (int a = 0; a < n; ++a) ensure(order_of(a) > 0 && n % order_of(a) == 0,
                                           "element order must divide group order");
    }

    void finish_inverses() {
        inv.assign(static_cast<size_t>(n), 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (op(a, b) == 0) {
                    inv[static_cast<size_t>(a)] = static_cast<std::uint8_t>(b);
                    break;
                }
    }
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

inline Group cyclic(int m, const std::string& gen_name = "x") {
    Group g;
    g.name = "C" + std::to_string(m);
    g.presentation = gen_name + "^" + std::to_string(m) + " = 1";
    g.n = m;
    g.mul.resize(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g.mul[static_cast<size_t>(a) * m + b] = static_cast<std::uint8_t>((a + b) % m);
    g.finish_inverses();
    g.elem_names.resize(static_cast<size_t>(m));
    if (m > 1) g.generators = {{gen_name, 1}};
    g.validate();
    return g;
}

inline Group direct_product(const Group& A, const Group& B) {
    Group g;
    g.name = A.name + "x" + B.name;
    g.n = A.n * B.n;
    g.mul.resize(static_cast<size_t>(g.n) * g.n);
    auto idx = [&](int a, int b) { return a * B.n + b; };
    for (int a1 = 0; a1 < A.n; ++a1)
        for (int b1 = 0; b1 < B.n; ++b1)
            for (int a2 = 0; a2 < A.n; ++a2)
                for (int b2 = 0; b2 < B.n; ++b2)
                    g.mul[static_cast<size_t>(idx(a1, b1)) * g.n + idx(a2, b2)] =
                        static_cast<std::uint8_t>(idx(A.op(a1, a2), B.op(b1, b2)));
    g.finish_inverses();
    g.elem_names.resize(static_cast<size_t>(g.n));
    for (auto& [nm, i] : A.generators) g.generators.emplace_back(nm, idx(i, 0));
    for (auto& [nm, i] : B.generators) g.generators.emplace_back(nm, idx(0, i));
    g.validate();
    return g;
}

// Identity-rooted BFS expressing each element as a word in the generators,
// then mapping generators to their images. Verified to be an automorphism.
inline std::vector<int> automorphism_from_gen_images(const Group& G, const std::vector<int>& gens,
                                                     const std::vector<int>& images) {
    require(gens.size() == images.size(), "generator/image count mismatch");
    std::vector<int> img(static_cast<size_t>(G.n), -1);
    img[0] = 0;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int e = bfs.front();
        bfs.pop();
        for (size_t t = 0; t < gens.size(); ++t) {
            int f = G.op(e, gens[t]);
            if (img[static_cast<size_t>(f)] < 0) {
                img[static_cast<size_t>(f)] = G.op(img[static_cast<size_t>(e)], images[t]);
                bfs.push(f);
            }
        }
    }
    for (int e = 0; e < G.n; ++e) ensure(img[static_cast<size_t>(e)] >= 0, "generators do not generate the group");
    std::vector<bool> hit(static_cast<size_t>(G.n), false);
    for (int e = 0; e < G.n; ++e) {
        ensure(!hit[static_cast<size_t>(img[static_cast<size_t>(e)])], "generator images do not define a bijection");
        hit[static_cast<size_t>(img[static_cast<size_t>(e)])] = true;
    }
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            ensure(img[static_cast<size_t>(G.op(a, b))] ==
                       G.op(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]),
                   "generator images do not define a homomorphism");
    return img;
}

// Semidirect product N x| H. The action is given per H-generator as a
// permutation of N (an automorphism); it is extended to all of H along BFS
// words and then checked to be a homomorphism H -> Aut(N) on all pairs.
inline Group semidirect_product(const Group& N, const Group& H,
                                const std::vector<std::vector<int>>& gen_action) {
    require(gen_action.size() == H.generators.size(), "one action per H generator required");
    for (auto& a : gen_action) {
        std::vector<int> gens, imgs;
        for (int i = 0; i < N.n; ++i) gens.push_back(i), imgs.push_back(a[static_cast<size_t>(i)]);
        automorphism_from_gen_images(N, gens, imgs);  // throws if not an automorphism
    }

    std::vector<std::vector<int>> phi(static_cast<size_t>(H.n));
    std::vector<int> ident(static_cast<size_t>(N.n));
    std::iota(ident.begin(), ident.end(), 0);
    phi[0] = ident;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int h = bfs.front();
        bfs.pop();
        for (size_t t = 0; t < H.generators.size(); ++t) {
            int h2 = H.op(h, H.generators[t].second);
            if (!phi[static_cast<size_t>(h2)].empty()) continue;
            auto& ph = phi[static_cast<size_t>(h)];
            auto& pg = gen_action[t];
            std::vector<int> comp(static_cast<size_t>(N.n));
            for (int x = 0; x < N.n; ++x) comp[static_cast<size_t>(x)] = ph[static_cast<size_t>(pg[static_cast<size_t>(x)])];
            phi[static_cast<size_t>(h2)] = std::move(comp);
            bfs.push(h2);
        }
    }
    for (int h = 0; h < H.n; ++h) ensure(!phi[static_cast<size_t>(h)].empty(), "H generators do not generate H");
    for (int h1 = 0; h1 < H.n; ++h1)
        for (int h2 = 0; h2 < H.n; ++h2)
            for (int x = 0; x < N.n; ++x)
                ensure(phi[static_cast<size_t>(H.op(h1, h2))][static_cast<size_t>(x)] ==
                           phi[static_cast<size_t>(h1)][static_cast<size_t>(phi[static_cast<size_t>(h2)][static_cast<size_t>(x)])],
                       "action is not a homomorphism into Aut(N)");

    Group g;
    g.name = N.name + ":" + H.name;
    g.n = N.n * H.n;
    g.mul.resize(static_cast<size_t>(g.n) * g.n);
    auto idx = [&](int a, int h) { return a * H.n + h; };
    for (int a1 = 0; a1 < N.n; ++a1)
        for (int h1 = 0; h1 < H.n; ++h1)
            for (int a2 = 0; a2 < N.n; ++a2)
                for (int h2 = 0; h2 < H.n; ++h2)
                    g.mul[static_cast<size_t>(idx(a1, h1)) * g.n + idx(a2, h2)] = static_cast<std::uint8_t>(
                        idx(N.op(a1, phi[static_cast<size_t>(h1)][static_cast<size_t>(a2)]), H.op(h1, h2)));
    g.finish_inverses();
    g.elem_names.resize(static_cast<size_t>(g.n));
    for (auto& [nm, i] : N.generators) g.generators.emplace_back(nm, idx(i, 0));
    for (auto& [nm, i] : H.generators) g.generators.emplace_back(nm, idx(0, i));
    g.validate();
    return g;
}

inline std::vector<int> inversion_action(const Group& N) {
    require(N.is_abelian(), "inversion is an automorphism only for abelian N");
    std::vector<int> a(static_cast<size_t>(N.n));
    for (int i = 0; i < N.n; ++i) a[static_cast<size_t>(i)] = N.inverse(i);
    return a;
}

inline std::vector<int> trivial_action(const Group& N) {
    std::vector<int> a(static_cast<size_t>(N.n));
    std::iota(a.begin(), a.end(), 0);
    return a;
}

// Quaternion group of order 8 as signed axes {+-1, +-i, +-j, +-k}.
inline Group quaternion8() {
    // axis products: ax[a][b] = (axis, sign flip), axes 0=1, 1=i, 2=j, 3=k
    static const int ax_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int ax_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    Group g;
    g.name = "Q8";
    g.presentation = "i^4 = 1, i^2 = j^2, j i j^-1 = i^-1";
    g.n = 8;
    g.mul.resize(64);
    auto idx = [](int axis, int sign) { return axis * 2 + sign; };
    for (int a1 = 0; a1 < 4; ++a1)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int s2 = 0; s2 < 2; ++s2)
                    g.mul[static_cast<size_t>(idx(a1, s1)) * 8 + idx(a2, s2)] = static_cast<std::uint8_t>(
                        idx(ax_axis[a1][a2], s1 ^ s2 ^ ax_sign[a1][a2]));
    g.finish_inverses();
    g.elem_names.resize(8);
    g.generators = {{"i", idx(1, 0)}, {"j", idx(2, 0)}};
    g.validate();
    return g;
}

// Dihedral group of ORDER m (m even): rotations of order m/2 and reflections.
inline Group dihedral(int m, const std::string& rot = "r", const std::string& refl = "s") {
    require(m >= 4 && m % 2 == 0, "dihedral group needs an even order >= 4");
    Group g = semidirect_product(cyclic(m / 2, rot), cyclic(2, refl),
                                 {inversion_action(cyclic(m / 2))});
    g.name = "D" + std::to_string(m);
    g.presentation = rot + "^" + std::to_string(m / 2) + " = " + refl + "^2 = (" + rot + refl + ")^2 = 1";
    return g;
}

// Closure of a generating set under an opaque multiplication (used for
// permutation and matrix groups). Elements are discovered by BFS from the
// identity, which fixes a deterministic indexing.
inline Group group_from_closure(const std::vector<std::vector<int>>& gens,
                                const std::vector<std::string>& gen_names,
                                const std::vector<int>& id,
                                const std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)>& mulfn,
                                int max_order = 64) {
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    std::vector<std::string> names{"1"};
    index[id] = 0;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int e = bfs.front();
        bfs.pop();
        for (size_t t = 0; t < gens.size(); ++t) {
            auto f = mulfn(elems[static_cast<size_t>(e)], gens[t]);
            if (index.count(f)) continue;
            ensure(static_cast<int>(elems.size()) < max_order, "closure exceeded the expected order");
            index[f] = static_cast<int>(elems.size());
            names.push_back(e == 0 ? gen_names[t] : names[static_cast<size_t>(e)] + gen_names[t]);
            elems.push_back(f);
            bfs.push(index[f]);
        }
    }
    Group g;
    g.n = static_cast<int>(elems.size());
    g.mul.resize(static_cast<size_t>(g.n) * g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            auto f = mulfn(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
            auto it = index.find(f);
            ensure(it != index.end(), "closure is not closed under multiplication");
            g.mul[static_cast<size_t>(a) * g.n + b] = static_cast<std::uint8_t>(it->second);
        }
    g.finish_inverses();
    g.elem_names = std::move(names);
    for (size_t t = 0; t < gens.size(); ++t) g.generators.emplace_back(gen_names[t], index[gens[t]]);
    g.validate();
    return g;
}

inline Group symmetric4() {
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(4);
        for (int i = 0; i < 4; ++i) c[static_cast<size_t>(i)] = b[static_cast<size_t>(a[static_cast<size_t>(i)])];
        return c;
    };
    Group g = group_from_closure({{1, 0, 2, 3}, {1, 2, 3, 0}}, {"a", "b"}, {0, 1, 2, 3}, compose, 24);
    g.name = "S4";
    g.presentation = "a = (1 2), b = (1 2 3 4) acting on four points";
    ensure(g.n == 24, "S4 closure has wrong order");
    return g;
}

inline Group sl2_3() {
    auto matmul3 = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(4);
        c[0] = (a[0] * b[0] + a[1] * b[2]) % 3;
        c[1] = (a[0] * b[1] + a[1] * b[3]) % 3;
        c[2] = (a[2] * b[0] + a[3] * b[2]) % 3;
        c[3] = (a[2] * b[1] + a[3] * b[3]) % 3;
        return c;
    };
    Group g = group_from_closure({{1, 1, 0, 1}, {1, 0, 1, 1}}, {"a", "b"}, {1, 0, 0, 1}, matmul3, 24);
    g.name = "SL(2,3)";
    g.presentation = "a = [[1,1],[0,1]], b = [[1,0],[1,1]] in SL(2, GF(3))";
    ensure(g.n == 24, "SL(2,3) closure has wrong order");
    return g;
}

// ---------------------------------------------------------------------------
// Subgroups, quotients, structure
// ---------------------------------------------------------------------------

inline std::vector<int> generated_subgroup(const Group& G, std::vector<int> gens) {
    std::vector<bool> in(static_cast<size_t>(G.n), false);
    in[0] = true;
    std::vector<int> elems{0};
    std::queue<int> bfs;
    bfs.push(0);
    gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
    for (int g : gens)
        if (!in[static_cast<size_t>(g)]) {
            in[static_cast<size_t>(g)] = true;
            elems.push_back(g);
            bfs.push(g);
        }
    while (!bfs.empty()) {
        int e = bfs.front();
        bfs.pop();
        for (int g : gens) {
            for (int f : {G.op(e, g), G.op(g, e)})
                if (!in[static_cast<size_t>(f)]) {
                    in[static_cast<size_t>(f)] = true;
                    elems.push_back(f);
                    bfs.push(f);
                }
        }
    }
    // close under products of discovered elements (needed when the generated
    // set is not closed by generator multiplication alone)
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = elems.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                int f = G.op(elems[i], elems[j]);
                if (!in[static_cast<size_t>(f)]) {
                    in[static_cast<size_t>(f)] = true;
                    elems.push_back(f);
                    grew = true;
                }
            }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

inline bool is_subgroup(const Group& G, const std::vector<int>& H) {
    if (H.empty() || H[0] != 0) return false;
    std::vector<bool> in(static_cast<size_t>(G.n), false);
    for (int h : H) in[static_cast<size_t>(h)] = true;
    for (int a : H)
        for (int b : H)
            if (!in[static_cast<size_t>(G.op(a, b))]) return false;
    return true;
}

inline bool is_normal(const Group& G, const std::vector<int>& H) {
    std::vector<bool> in(static_cast<size_t>(G.n), false);
    for (int h : H) in[static_cast<size_t>(h)] = true;
    for (int g = 0; g < G.n; ++g)
        for (int h : H)
            if (!in[static_cast<size_t>(G.op(G.op(g, h), G.inverse(g)))]) return false;
    return true;
}

inline std::vector<int> derived_subgroup(const Group& G) {
    std::vector<int> comms;
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            comms.push_back(G.op(G.op(G.inverse(a), G.inverse(b)), G.op(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(G, comms);
}

struct Quotient {
    Group group;
    std::vector<int> projection;  // element of G -> index in quotient
};

inline Quotient quotient_group(const Group& G, const std::vector<int>& N) {
    require(is_subgroup(G, N) && is_normal(G, N), "quotient requires a normal subgroup");
    std::vector<int> coset_rep(static_cast<size_t>(G.n), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.n; ++g) {
        if (coset_rep[static_cast<size_t>(g)] >= 0) continue;
        int rep = g;  // smallest index in the coset, since g runs upward
        for (int h : N) coset_rep[static_cast<size_t>(G.op(g, h))] = rep;
        reps.push_back(rep);
    }
    std::vector<int> rep_index(static_cast<size_t>(G.n), -1);
    for (size_t i = 0; i < reps.size(); ++i) rep_index[static_cast<size_t>(reps[i])] = static_cast<int>(i);
    Quotient q;
    q.group.name = G.name + "/N";
    q.group.n = static_cast<int>(reps.size());
    q.group.mul.resize(reps.size() * reps.size());
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b)
            q.group.mul[a * reps.size() + b] = static_cast<std::uint8_t>(
                rep_index[static_cast<size_t>(coset_rep[static_cast<size_t>(G.op(reps[a], reps[b]))])]);
    q.group.finish_inverses();
    q.group.elem_names.resize(reps.size());
    for (size_t i = 0; i < reps.size(); ++i)
        q.group.elem_names[i] = "[" + (G.elem_names[static_cast<size_t>(reps[i])].empty()
                                           ? std::to_string(reps[i])
                                           : G.elem_names[static_cast<size_t>(reps[i])]) + "]";
    q.group.validate();
    q.projection.resize(static_cast<size_t>(G.n));
    for (int g = 0; g < G.n; ++g) q.projection[static_cast<size_t>(g)] = rep_index[static_cast<size_t>(coset_rep[static_cast<size_t>(g)])];
    return q;
}

// Invariant factors d1 >= d2 >= ... (each dividing the previous) of an
// abelian group, found by repeatedly splitting off a maximal-order cyclic.
inline std::vector<int> abelian_invariants(const Group& A) {
    require(A.is_abelian(), "invariant factors only defined for abelian groups");
    if (A.n == 1) return {};
    int best = 1, besto = 1;
    for (int a = 0; a < A.n; ++a) {
        int o = A.order_of(a);
        if (o > besto) {
            besto = o;
            best = a;
        }
    }
    std::vector<int> gens{best};
    auto sub = generated_subgroup(A, gens);
    auto rest = abelian_invariants(quotient_group(A, sub).group);
    std::vector<int> out{besto};
    out.insert(out.end(), rest.begin(), rest.end());
    for (size_t i = 0; i + 1 < out.size(); ++i) ensure(out[i] % out[i + 1] == 0, "invariant factors must divide");
    long long prod = 1;
    for (int d : out) prod *= d;
    ensure(prod == A.n, "invariant factor product mismatch");
    return out;
}

struct ConjClasses {
    std::vector<int> class_of;                // per element
    std::vector<std::vector<int>> members;    // sorted members per class
    std::vector<int> reps;                    // smallest element index per class
    std::vector<int> sizes;
    std::vector<int> orders;                  // element order of the representative
};

inline ConjClasses conjugacy_classes(const Group& G) {
    ConjClasses c;
    c.class_of.assign(static_cast<size_t>(G.n), -1);
    for (int g = 0; g < G.n; ++g) {
        if (c.class_of[static_cast<size_t>(g)] >= 0) continue;
        int id = static_cast<int>(c.reps.size());
        std::vector<int> orbit;
        for (int t = 0; t < G.n; ++t) {
            int conj = G.op(G.op(t, g), G.inverse(t));
            if (c.class_of[static_cast<size_t>(conj)] < 0) {
                c.class_of[static_cast<size_t>(conj)] = id;
                orbit.push_back(conj);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        c.reps.push_back(orbit.front());
        c.sizes.push_back(static_cast<int>(orbit.size()));
        c.orders.push_back(G.order_of(orbit.front()));
        c.members.push_back(std::move(orbit));
    }
    int total = std::accumulate(c.sizes.begin(), c.sizes.end(), 0);
    ensure(total == G.n, "class sizes must sum to |G|");
    for (int s : c.sizes) ensure(G.n % s == 0, "class size must divide |G|");
    ensure(c.sizes[0] == 1 && c.reps[0] == 0, "class of the identity must be {1}");
    return c;
}

struct PRegularData {
    std::vector<int> class_indices;  // p-regular classes (into ConjClasses)
    int m = 1;                       // lcm of the p-regular element orders
};

inline PRegularData p_regular_data(const Group& G, const ConjClasses& cc, std::uint32_t p) {
    require(is_prime_u32(p), "p must be prime");
    PRegularData out;
    long long m = 1;
    for (size_t i = 0; i < cc.reps.size(); ++i) {
        if (cc.orders[i] % static_cast<int>(p) == 0) continue;
        out.class_indices.push_back(static_cast<int>(i));
        m = std::lcm(m, static_cast<long long>(cc.orders[i]));
    }
    out.m = static_cast<int>(m);
    return out;
}

// Largest normal p-subgroup, computed as the intersection of the conjugates
// of one Sylow p-subgroup.
inline std::vector<int> p_core(const Group& G, std::uint32_t p) {
    int pv = 1;
    int n = G.n;
    while (n % static_cast<int>(p) == 0) {
        pv *= static_cast<int>(p);
        n /= static_cast<int>(p);
    }
    if (pv == 1) return {0};
    std::vector<int> pelems;
    for (int g = 0; g < G.n; ++g) {
        int o = G.order_of(g);
        bool ppow = true;
        while (o > 1) {
            if (o % static_cast<int>(p)) {
                ppow = false;
                break;
            }
            o /= static_cast<int>(p);
        }
        if (ppow && g != 0) pelems.push_back(g);
    }
    // Sylow subgroups at this scale need at most three generators
    std::vector<int> sylow;
    auto try_set = [&](std::vector<int> gens) {
        if (!sylow.empty()) return;
        auto h = generated_subgroup(G, std::move(gens));
        if (static_cast<int>(h.size()) == pv) sylow = h;
    };
    for (size_t i = 0; i < pelems.size() && sylow.empty(); ++i) {
        try_set({pelems[i]});
        for (size_t j = i; j < pelems.size() && sylow.empty(); ++j) {
            try_set({pelems[i], pelems[j]});
            for (size_t l = j; l < pelems.size() && sylow.empty(); ++l)
                try_set({pelems[i], pelems[j], pelems[l]});
        }
    }
    ensure(!sylow.empty(), "no Sylow p-subgroup found");
    std::vector<bool> core(static_cast<size_t>(G.n), false);
    for (int h : sylow) core[static_cast<size_t>(h)] = true;
    for (int g = 0; g < G.n; ++g) {
        std::vector<bool> conj(static_cast<size_t>(G.n), false);
        for (int h : sylow) conj[static_cast<size_t>(G.op(G.op(g, h), G.inverse(g)))] = true;
        for (int e = 0; e < G.n; ++e) core[static_cast<size_t>(e)] = core[static_cast<size_t>(e)] && conj[static_cast<size_t>(e)];
    }
    std::vector<int> out;
    for (int e = 0; e < G.n; ++e)
        if (core[static_cast<size_t>(e)]) out.push_back(e);
    ensure(is_subgroup(G, out) && is_normal(G, out), "p-core must be a normal subgroup");
    return out;
}

}  // namespace ug24
