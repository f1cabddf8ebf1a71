// Group-algebra arithmetic and radical machinery: augmentation ideals,
// annihilators, the Jacobson radical of FG (computed by the characteristic-p
// chain of p-power characteristic-polynomial functionals on the regular
// representation, with mandatory post-verification), powers of ideals, and
// class-sum centers. A generic structure-constant algebra backs both FG and
// its quotients, so the radical routine can re-verify itself on FG/J.
#pragma once

#include <optional>

#include "ug24/catalog.hpp"
#include "ug24/linalg.hpp"

namespace ug24 {

class GroupAlgebra {
  public:
    GroupAlgebra(const Group& G, const Field& F) : G_(&G), F_(&F) {}

    const Group& group() const { return *G_; }
    const Field& field() const { return *F_; }
    int dim() const { return G_->n; }

    std::vector<felem> zero() const { return std::vector<felem>(static_cast<size_t>(G_->n), 0); }
    std::vector<felem> one() const {
        auto v = zero();
        v[0] = 1;
        return v;
    }
    std::vector<felem> group_element(int g) const {
        auto v = zero();
        v[static_cast<size_t>(g)] = 1;
        return v;
    }

    std::vector<felem> add(const std::vector<felem>& a, const std::vector<felem>& b) const {
        auto c = a;
        for (size_t i = 0; i < c.size(); ++i) c[i] = F_->add(c[i], b[i]);
        return c;
    }
    std::vector<felem> sub(const std::vector<felem>& a, const std::vector<felem>& b) const {
        auto c = a;
        for (size_t i = 0; i < c.size(); ++i) c[i] = F_->sub(c[i], b[i]);
        return c;
    }
    std::vector<felem> scale(const std::vector<felem>& a, felem s) const {
        auto c = a;
        for (auto& x : c) x = F_->mul(x, s);
        return c;
    }
    std::vector<felem> mul(const std::vector<felem>& a, const std::vector<felem>& b) const {
        require(a.size() == b.size() && static_cast<int>(a.size()) == G_->n,
                "group algebra operands must live in the same algebra");
        auto c = zero();
        for (int i = 0; i < G_->n; ++i) {
            if (!a[static_cast<size_t>(i)]) continue;
            for (int j = 0; j < G_->n; ++j) {
                if (!b[static_cast<size_t>(j)]) continue;
                int k = G_->op(i, j);
                c[static_cast<size_t>(k)] = F_->add(c[static_cast<size_t>(k)],
                                                    F_->mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]));
            }
        }
        return c;
    }
    std::vector<felem> pw(std::vector<felem> a, std::uint64_t e) const {
        auto r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(const std::vector<felem>& a) const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
    felem augmentation(const std::vector<felem>& a) const {
        felem s = 0;
        for (auto x : a) s = F_->add(s, x);
        return s;
    }

    // M with M * coeffs(b) = coeffs(a*b).
    Mat left_regular_matrix(const std::vector<felem>& a) const {
        Mat m(G_->n, G_->n);
        for (int i = 0; i < G_->n; ++i)
            for (int j = 0; j < G_->n; ++j)
                m.at(i, j) = a[static_cast<size_t>(G_->op(i, G_->inverse(j)))];
        return m;
    }
    // M with M * coeffs(b) = coeffs(b*a).
    Mat right_regular_matrix(const std::vector<felem>& a) const {
        Mat m(G_->n, G_->n);
        for (int i = 0; i < G_->n; ++i)
            for (int j = 0; j < G_->n; ++j)
                m.at(i, j) = a[static_cast<size_t>(G_->op(G_->inverse(j), i))];
        return m;
    }

    // Sum of the elements of a subset of G.
    std::vector<felem> subset_sum(const std::vector<int>& elems) const {
        auto v = zero();
        for (int g : elems) v[static_cast<size_t>(g)] = F_->add(v[static_cast<size_t>(g)], 1);
        return v;
    }
    // Sum of all elements whose order is a power of p.
    std::vector<felem> p_element_sum(std::uint32_t p) const {
        auto v = zero();
        for (int g = 0; g < G_->n; ++g) {
            int o = G_->order_of(g);
            while (o % static_cast<int>(p) == 0) o /= static_cast<int>(p);
            if (o == 1) v[static_cast<size_t>(g)] = 1;
        }
        return v;
    }

  private:
    const Group* G_;
    const Field* F_;
};

// Two-sided ideal (or subspace) of an algebra, with verified closure flags.
struct IdealBasis {
    Subspace space;
    bool is_left_ideal = false;
    bool is_right_ideal = false;
    int dim() const { return space.dim(); }
};

// ---------------------------------------------------------------------------
// Generic finite-dimensional associative algebra with a distinguished basis
// ---------------------------------------------------------------------------

class StructAlgebra {
  public:
    StructAlgebra() = default;

    static StructAlgebra from_group_algebra(const GroupAlgebra& A) {
        StructAlgebra s;
        s.F_ = &A.field();
        s.dim_ = A.dim();
        const Group& G = A.group();
        s.tensor_.assign(static_cast<size_t>(s.dim_) * s.dim_ * s.dim_, 0);
        for (int i = 0; i < s.dim_; ++i)
            for (int j = 0; j < s.dim_; ++j)
                s.tensor_[(static_cast<size_t>(i) * s.dim_ + j) * s.dim_ + G.op(i, j)] = 1;
        s.one_ = A.one();
        s.init_traces();
        return s;
    }

    const Field& field() const { return *F_; }
    int dim() const { return dim_; }
    const std::vector<felem>& one() const { return one_; }

    std::vector<felem> mul(const std::vector<felem>& a, const std::vector<felem>& b) const {
        std::vector<felem> c(static_cast<size_t>(dim_), 0);
        for (int i = 0; i < dim_; ++i) {
            if (!a[static_cast<size_t>(i)]) continue;
            for (int j = 0; j < dim_; ++j) {
                if (!b[static_cast<size_t>(j)]) continue;
                felem f = F_->mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]);
                const felem* t = &tensor_[(static_cast<size_t>(i) * dim_ + j) * dim_];
                for (int k = 0; k < dim_; ++k)
                    if (t[k]) c[static_cast<size_t>(k)] = F_->add(c[static_cast<size_t>(k)], F_->mul(f, t[k]));
            }
        }
        return c;
    }

    Mat left_matrix(const std::vector<felem>& a) const {
        Mat m(dim_, dim_);
        for (int i = 0; i < dim_; ++i) {
            if (!a[static_cast<size_t>(i)]) continue;
            for (int j = 0; j < dim_; ++j) {
                const felem* t = &tensor_[(static_cast<size_t>(i) * dim_ + j) * dim_];
                for (int k = 0; k < dim_; ++k)
                    if (t[k]) m.at(k, j) = F_->add(m.at(k, j), F_->mul(a[static_cast<size_t>(i)], t[k]));
            }
        }
        return m;
    }

    felem trace_left(const std::vector<felem>& a) const {
        felem s = 0;
        for (int i = 0; i < dim_; ++i)
            if (a[static_cast<size_t>(i)]) s = F_->add(s, F_->mul(a[static_cast<size_t>(i)], trace_vec_[static_cast<size_t>(i)]));
        return s;
    }

    // Center {x : xb = bx for every basis element b} as a subspace.
    Subspace center() const {
        Mat m(dim_ * dim_, dim_);
        for (int b = 0; b < dim_; ++b)
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j)
                    m.at(b * dim_ + i, j) = F_->sub(tensor_[(static_cast<size_t>(j) * dim_ + b) * dim_ + i],
                                                    tensor_[(static_cast<size_t>(b) * dim_ + j) * dim_ + i]);
        return Subspace(*F_, right_kernel(*F_, m));
    }

  private:
    friend struct QuotientAlgebra;
    const Field* F_ = nullptr;
    int dim_ = 0;
    std::vector<felem> tensor_;  // e_i e_j = sum_k tensor[(i*dim+j)*dim+k] e_k
    std::vector<felem> one_;
    std::vector<felem> trace_vec_;

    void init_traces() {
        trace_vec_.assign(static_cast<size_t>(dim_), 0);
        for (int b = 0; b < dim_; ++b) {
            felem s = 0;
            for (int j = 0; j < dim_; ++j)
                s = F_->add(s, tensor_[(static_cast<size_t>(b) * dim_ + j) * dim_ + j]);
            trace_vec_[static_cast<size_t>(b)] = s;
        }
    }
};

// Quotient by a two-sided ideal, with structure constants recomputed on a
// complement basis (the non-pivot coordinates of the ideal's RREF basis).
struct QuotientAlgebra {
    StructAlgebra algebra;
    std::vector<int> complement_cols;  // coordinates of A representing A/I
    Subspace ideal;

    // coordinates of the residue of v in the quotient basis
    std::vector<felem> project(const Field& F, const std::vector<felem>& v) const {
        auto r = ideal.reduce(F, v);
        std::vector<felem> out(complement_cols.size());
        for (size_t t = 0; t < complement_cols.size(); ++t) out[t] = r[static_cast<size_t>(complement_cols[t])];
        return out;
    }
    std::vector<felem> lift(const std::vector<felem>& coords) const {
        std::vector<felem> out(static_cast<size_t>(ideal.ambient()), 0);
        for (size_t t = 0; t < complement_cols.size(); ++t) out[static_cast<size_t>(complement_cols[t])] = coords[t];
        return out;
    }

    static QuotientAlgebra of(const StructAlgebra& A, const Subspace& ideal) {
        const Field& F = A.field();
        QuotientAlgebra q;
        q.ideal = ideal;
        auto rr = rref(F, ideal.basis());
        std::vector<bool> pivot(static_cast<size_t>(A.dim()), false);
        for (int c : rr.pivots) pivot[static_cast<size_t>(c)] = true;
        for (int c = 0; c < A.dim(); ++c)
            if (!pivot[static_cast<size_t>(c)]) q.complement_cols.push_back(c);
        int d = static_cast<int>(q.complement_cols.size());

        StructAlgebra s;
        s.F_ = &F;
        s.dim_ = d;
        s.tensor_.assign(static_cast<size_t>(d) * d * d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::vector<felem> ei(static_cast<size_t>(A.dim()), 0), ej(static_cast<size_t>(A.dim()), 0);
                ei[static_cast<size_t>(q.complement_cols[static_cast<size_t>(i)])] = 1;
                ej[static_cast<size_t>(q.complement_cols[static_cast<size_t>(j)])] = 1;
                auto prod = q.project(F, A.mul(ei, ej));
                for (int k = 0; k < d; ++k) s.tensor_[(static_cast<size_t>(i) * d + j) * d + k] = prod[static_cast<size_t>(k)];
            }
        s.one_ = q.project(F, A.one());
        s.init_traces();
        q.algebra = std::move(s);
        return q;
    }
};

// ---------------------------------------------------------------------------
// Characteristic polynomial (Hessenberg reduction, exact field arithmetic)
// ---------------------------------------------------------------------------

// Monic characteristic polynomial of a square matrix; coeffs[d] multiplies x^d.
inline std::vector<felem> charpoly(const Field& F, Mat m) {
    int n = m.rows;
    require(n == m.cols, "characteristic polynomial needs a square matrix");
    // similarity reduction to upper Hessenberg form
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (m.at(i, j)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(j + 1, c));
            for (int r = 0; r < n; ++r) std::swap(m.at(r, piv), m.at(r, j + 1));
        }
        felem inv_p = F.inv(m.at(j + 1, j));
        for (int i = j + 2; i < n; ++i) {
            felem f = F.mul(m.at(i, j), inv_p);
            if (!f) continue;
            for (int c = 0; c < n; ++c) m.at(i, c) = F.sub(m.at(i, c), F.mul(f, m.at(j + 1, c)));
            for (int r = 0; r < n; ++r) m.at(r, j + 1) = F.add(m.at(r, j + 1), F.mul(f, m.at(r, i)));
        }
    }
    // charpoly of the leading principal blocks of a Hessenberg matrix
    std::vector<std::vector<felem>> p(static_cast<size_t>(n) + 1);
    p[0] = {1};
    for (int mm = 1; mm <= n; ++mm) {
        std::vector<felem> cur(static_cast<size_t>(mm) + 1, 0);
        const auto& prev = p[static_cast<size_t>(mm - 1)];
        // (x - H[m-1][m-1]) * prev
        for (size_t t = 0; t < prev.size(); ++t) {
            cur[t + 1] = F.add(cur[t + 1], prev[t]);
            cur[t] = F.sub(cur[t], F.mul(m.at(mm - 1, mm - 1), prev[t]));
        }
        felem chain = 1;
        for (int i = 1; i < mm; ++i) {
            chain = F.mul(chain, m.at(mm - i, mm - i - 1));
            if (!chain) break;
            felem coef = F.mul(m.at(mm - 1 - i, mm - 1), chain);
            if (!coef) continue;
            const auto& pi = p[static_cast<size_t>(mm - 1 - i)];
            for (size_t t = 0; t < pi.size(); ++t) cur[t] = F.sub(cur[t], F.mul(coef, pi[t]));
        }
        p[static_cast<size_t>(mm)] = std::move(cur);
    }
    return p[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------
// Jacobson radical
// ---------------------------------------------------------------------------

// Radical of a finite-dimensional associative algebra over GF(p^k) by the
// standard characteristic-p descending chain: R_0 = A, and R_{i+1} is cut out
// of R_i by the vanishing of the x^(dim - p^i) characteristic-polynomial
// coefficient of L_{xy} over all y in R_i. Each functional is additive and
// p^i-semilinear on R_i, so taking p^i-th roots of its values turns the step
// into ordinary linear algebra over F. The chain reaches J(A) once p^i > dim.
inline Subspace radical_chain(const StructAlgebra& A) {
    const Field& F = A.field();
    int n = A.dim();
    Subspace R(F, mat_identity(n));
    std::uint64_t pi = 1;  // p^i
    for (std::uint32_t i = 0; pi <= static_cast<std::uint64_t>(n); ++i) {
        int m = R.dim();
        if (m == 0) break;
        std::vector<std::vector<felem>> rows(static_cast<size_t>(m));
        for (int t = 0; t < m; ++t) rows[static_cast<size_t>(t)] = R.basis().row(t);
        Mat D(m, m);
        for (int t = 0; t < m; ++t)
            for (int j = 0; j < m; ++j) {
                auto prod = A.mul(rows[static_cast<size_t>(t)], rows[static_cast<size_t>(j)]);
                felem c;
                if (i == 0) {
                    c = A.trace_left(prod);
                } else {
                    auto cp = charpoly(F, A.left_matrix(prod));
                    c = cp[static_cast<size_t>(n) - pi];
                }
                D.at(j, t) = F.frobenius_root(c, i);
            }
        Mat K = right_kernel(F, D);
        R = Subspace(F, mat_mul(F, K, R.basis()));
        pi *= F.p();
    }
    return R;
}

// Smallest m with I^m = 0, or nullopt if the powers stabilize without
// vanishing. Powers are computed as spans of products against the original
// ideal basis.
inline std::optional<int> nilpotency_index(const StructAlgebra& A, const Subspace& I) {
    const Field& F = A.field();
    Subspace cur = I;
    int m = 1;
    while (cur.dim() > 0) {
        if (m > I.dim() + 1) return std::nullopt;
        std::vector<std::vector<felem>> prods;
        for (int a = 0; a < cur.dim(); ++a)
            for (int b = 0; b < I.dim(); ++b)
                prods.push_back(A.mul(cur.basis().row(a), I.basis().row(b)));
        Subspace next = prods.empty() ? Subspace::zero(A.dim())
                                      : Subspace(F, mat_from_rows(prods, A.dim()));
        if (next.dim() >= cur.dim()) return std::nullopt;  // stabilized, not nilpotent
        cur = next;
        ++m;
    }
    return m;
}

struct RadicalReport {
    IdealBasis radical;
    int nilindex = 1;
    bool omega_core_applicable = false;  // p does not divide [G : O_p(G)]
    bool omega_core_agrees = false;
    bool ann_psum_agrees = false;        // J == Ann(sum of p-power-order elements)
};

// Ideal-closure verification over the group basis.
inline void verify_two_sided_ideal(const GroupAlgebra& A, IdealBasis& I) {
    const Group& G = A.group();
    const Field& F = A.field();
    bool left = true, right = true;
    for (int t = 0; t < I.space.dim() && (left || right); ++t) {
        auto v = I.space.basis().row(t);
        for (int g = 0; g < G.n && (left || right); ++g) {
            std::vector<felem> gv(v.size()), vg(v.size());
            for (int i = 0; i < G.n; ++i) {
                gv[static_cast<size_t>(G.op(g, i))] = v[static_cast<size_t>(i)];
                vg[static_cast<size_t>(G.op(i, g))] = v[static_cast<size_t>(i)];
            }
            if (!I.space.contains(F, gv)) left = false;
            if (!I.space.contains(F, vg)) right = false;
        }
    }
    I.is_left_ideal = left;
    I.is_right_ideal = right;
}

// The ideal omega(H)FG spanned by (h-1)g, for H normal in G.
inline IdealBasis relative_augmentation_ideal(const GroupAlgebra& A, const std::vector<int>& H) {
    const Group& G = A.group();
    const Field& F = A.field();
    require(is_subgroup(G, H), "omega(H) requires a subgroup");
    require(is_normal(G, H), "omega(H)FG is two-sided only for normal H; refusing");
    std::vector<std::vector<felem>> rows;
    for (int h : H) {
        if (h == 0) continue;
        for (int g = 0; g < G.n; ++g) {
            std::vector<felem> v(static_cast<size_t>(G.n), 0);
            v[static_cast<size_t>(G.op(h, g))] = 1;
            v[static_cast<size_t>(g)] = F.sub(v[static_cast<size_t>(g)], 1);
            rows.push_back(std::move(v));
        }
    }
    IdealBasis I;
    I.space = rows.empty() ? Subspace::zero(G.n) : Subspace(F, mat_from_rows(rows, G.n));
    ensure(I.space.dim() == G.n - G.n / static_cast<int>(H.size()),
           "omega(H)FG must have dimension |G| - [G:H]");
    verify_two_sided_ideal(A, I);
    ensure(I.is_left_ideal && I.is_right_ideal, "omega(H)FG must be two-sided");
    return I;
}

// Two-sided annihilator {x : xa = 0 and ax = 0}.
inline IdealBasis annihilator(const GroupAlgebra& A, const std::vector<felem>& a) {
    const Field& F = A.field();
    Mat L = A.left_regular_matrix(a);   // a*x
    Mat R = A.right_regular_matrix(a);  // x*a
    Mat stacked(2 * A.dim(), A.dim());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            stacked.at(i, j) = L.at(i, j);
            stacked.at(A.dim() + i, j) = R.at(i, j);
        }
    IdealBasis I;
    I.space = Subspace(F, right_kernel(F, stacked));
    verify_two_sided_ideal(A, I);
    return I;
}

// Jacobson radical of FG with the full post-verification contract:
//  (i) the result is a two-sided ideal,
//  (ii) it is nilpotent with index <= dim+1,
//  (iii) the quotient algebra re-runs to a zero radical,
//  (iv) it vanishes when p does not divide |G|.
// The normal-p-core shortcut is recomputed as a cross-check whenever it
// provably equals the radical; the p-element-sum annihilator is recorded as
// an unasserted cross-check.
inline RadicalReport jacobson_radical(const GroupAlgebra& A) {
    const Group& G = A.group();
    const Field& F = A.field();
    StructAlgebra S = StructAlgebra::from_group_algebra(A);

    RadicalReport rep;
    rep.radical.space = radical_chain(S);
    verify_two_sided_ideal(A, rep.radical);
    ensure(rep.radical.is_left_ideal && rep.radical.is_right_ideal,
           "radical post-verification: not a two-sided ideal");

    auto nil = nilpotency_index(S, rep.radical.space);
    ensure(nil.has_value() && *nil <= rep.radical.dim() + 1,
           "radical post-verification: not nilpotent within the dimension bound");
    rep.nilindex = *nil;

    if (rep.radical.dim() > 0) {
        auto q = QuotientAlgebra::of(S, rep.radical.space);
        ensure(radical_chain(q.algebra).dim() == 0,
               "radical post-verification: quotient still has a radical");
    }
    if (G.n % static_cast<int>(F.p()) != 0)
        ensure(rep.radical.dim() == 0, "radical post-verification: must vanish when p does not divide |G|");

    auto H = p_core(G, F.p());
    int index = G.n / static_cast<int>(H.size());
    rep.omega_core_applicable = (index % static_cast<int>(F.p()) != 0);
    if (rep.omega_core_applicable) {
        auto omega = H.size() == 1 ? IdealBasis{Subspace::zero(G.n), true, true}
                                   : relative_augmentation_ideal(A, H);
        rep.omega_core_agrees = (omega.space == rep.radical.space);
        ensure(rep.omega_core_agrees,
               "radical cross-check failed: omega(O_p)FG must equal J when p does not divide the index");
    }
    auto ann = annihilator(A, A.p_element_sum(F.p()));
    rep.ann_psum_agrees = (ann.space == rep.radical.space);
    return rep;
}

// Class sums; their span is the center of FG and its dimension is the number
// of conjugacy classes.
inline std::vector<std::vector<felem>> class_sums(const GroupAlgebra& A, const ConjClasses& cc) {
    std::vector<std::vector<felem>> sums;
    for (const auto& cls : cc.members) sums.push_back(A.subset_sum(cls));
    Subspace span(A.field(), mat_from_rows(sums, A.dim()));
    ensure(span.dim() == static_cast<int>(cc.reps.size()), "class sums must be independent");
    return sums;
}

}  // namespace ug24
