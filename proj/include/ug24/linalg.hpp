// Dense linear algebra over GF(q): deterministic RREF, rank/kernel, canonical
// subspaces, and prime-subfield kernels of additive (possibly only
// p^j-semilinear) maps.
#pragma once

#include <functional>
#include <random>
#include <vector>

#include "ug24/fields.hpp"

namespace ug24 {

struct Mat {
    int rows = 0, cols = 0;
    std::vector<felem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    felem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    felem at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    std::vector<felem> row(int i) const {
        return std::vector<felem>(a.begin() + static_cast<size_t>(i) * cols,
                                  a.begin() + static_cast<size_t>(i + 1) * cols);
    }
    void set_row(int i, const std::vector<felem>& v) {
        std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(i) * cols);
    }
};

inline Mat mat_identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline Mat mat_from_rows(const std::vector<std::vector<felem>>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

inline Mat mat_transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    require(x.cols == y.rows, "matrix dimension mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int t = 0; t < x.cols; ++t) {
            felem v = x.at(i, t);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(t, j)));
        }
    return r;
}

inline std::vector<felem> mat_apply(const Field& F, const Mat& m, const std::vector<felem>& v) {
    require(static_cast<int>(v.size()) == m.cols, "matrix/vector dimension mismatch");
    std::vector<felem> r(static_cast<size_t>(m.rows), 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j)) r[static_cast<size_t>(i)] = F.add(r[static_cast<size_t>(i)], F.mul(m.at(i, j), v[static_cast<size_t>(j)]));
    return r;
}

struct RrefResult {
    Mat m;
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

// Reduced row echelon form. Pivoting is deterministic: columns scanned left to
// right, pivot = first row (top to bottom) with a nonzero entry, so equal row
// spaces always produce identical matrices.
inline RrefResult rref(const Field& F, Mat m) {
    RrefResult out;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        felem s = F.inv(m.at(r, col));
        if (s != 1)
            for (int j = col; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            felem f = m.at(i, col);
            if (!f) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.rank = r;
    m.rows = r;  // drop the zero rows; data beyond them is unused
    m.a.resize(static_cast<size_t>(r) * m.cols);
    out.m = std::move(m);
    return out;
}

inline int mat_rank(const Field& F, const Mat& m) { return rref(F, m).rank; }

// Basis (as rows) of {x : m x = 0}.
inline Mat right_kernel(const Field& F, const Mat& m) {
    RrefResult rr = rref(F, m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : rr.pivots) is_pivot[static_cast<size_t>(c)] = true;
    Mat k(m.cols - rr.rank, m.cols);
    int row = 0;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        k.at(row, free) = 1;
        for (int pr = 0; pr < rr.rank; ++pr)
            k.at(row, rr.pivots[static_cast<size_t>(pr)]) = F.neg(rr.m.at(pr, free));
        ++row;
    }
    return k;
}

// Row-span of a matrix in canonical (RREF) form.
class Subspace {
  public:
    Subspace() = default;
    Subspace(const Field& F, Mat generators) : ambient_(generators.cols) {
        basis_ = rref(F, std::move(generators)).m;
    }
    static Subspace zero(int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Mat(0, ambient);
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows; }
    const Mat& basis() const { return basis_; }

    // Residual of v after elimination against the basis; zero iff v is a member.
    std::vector<felem> reduce(const Field& F, std::vector<felem> v) const {
        int col = 0;
        for (int i = 0; i < basis_.rows; ++i) {
            while (col < ambient_ && basis_.at(i, col) == 0) ++col;
            if (col >= ambient_) break;
            felem f = v[static_cast<size_t>(col)];
            if (f)
                for (int j = col; j < ambient_; ++j)
                    v[static_cast<size_t>(j)] = F.sub(v[static_cast<size_t>(j)], F.mul(f, basis_.at(i, j)));
            ++col;
        }
        return v;
    }
    bool contains(const Field& F, const std::vector<felem>& v) const {
        auto r = reduce(F, v);
        for (auto x : r)
            if (x) return false;
        return true;
    }
    bool contains(const Field& F, const Subspace& other) const {
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(F, other.basis_.row(i))) return false;
        return true;
    }
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    Subspace sum(const Field& F, const Subspace& o) const {
        require(ambient_ == o.ambient_, "subspace ambient mismatch");
        Mat stacked(dim() + o.dim(), ambient_);
        for (int i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
        for (int i = 0; i < o.dim(); ++i) stacked.set_row(dim() + i, o.basis_.row(i));
        return Subspace(F, std::move(stacked));
    }

    Subspace intersect(const Field& F, const Subspace& o) const {
        require(ambient_ == o.ambient_, "subspace ambient mismatch");
        // a U lies in W iff its residual against W vanishes; that residual is
        // linear in the coordinate vector a.
        Mat resid(dim(), ambient_);
        for (int i = 0; i < dim(); ++i) resid.set_row(i, o.reduce(F, basis_.row(i)));
        Mat coeffs = right_kernel(F, mat_transpose(resid));
        Mat gens = mat_mul(F, coeffs, basis_);
        return Subspace(F, std::move(gens));
    }

  private:
    int ambient_ = 0;
    Mat basis_;
};

// ---------------------------------------------------------------------------
// Prime-subfield kernels
// ---------------------------------------------------------------------------

// Expand an F-vector into GF(p) digits (k per coordinate, low digit first).
inline std::vector<felem> expand_to_prime(const Field& F, const std::vector<felem>& v) {
    std::vector<felem> out;
    out.reserve(v.size() * F.k());
    for (felem x : v)
        for (auto d : F.decode(x)) out.push_back(d);
    return out;
}

inline std::vector<felem> combine_from_prime(const Field& F, const std::vector<felem>& digits) {
    std::vector<felem> out(digits.size() / F.k());
    std::vector<std::uint32_t> d(F.k());
    for (size_t i = 0; i < out.size(); ++i) {
        for (std::uint32_t j = 0; j < F.k(); ++j) d[j] = digits[i * F.k() + j];
        out[i] = F.encode(d);
    }
    return out;
}

struct PrimeKernel {
    int dim = 0;          // GF(p)-dimension of the kernel
    Mat basis;            // rows are GF(p)-digit vectors (length n*k)
};

// Kernel over GF(p) of an additive map f on F^n. The map need only be
// GF(p)-linear (p-power maps are the intended use). Additivity is spot-checked
// on random pairs and failure is a hard error.
inline PrimeKernel prime_subfield_kernel(const Field& F, int n,
                                         const std::function<std::vector<felem>(const std::vector<felem>&)>& f,
                                         std::uint64_t seed = default_seed()) {
    const int N = n * static_cast<int>(F.k());
    Field prime(F.p(), 1);

    // spot-check additivity
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.q() - 1);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<felem> u(static_cast<size_t>(n)), v(static_cast<size_t>(n)), w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            u[static_cast<size_t>(i)] = static_cast<felem>(dist(rng));
            v[static_cast<size_t>(i)] = static_cast<felem>(dist(rng));
            w[static_cast<size_t>(i)] = F.add(u[static_cast<size_t>(i)], v[static_cast<size_t>(i)]);
        }
        auto fu = f(u), fv = f(v), fw = f(w);
        for (size_t i = 0; i < fu.size(); ++i)
            ensure(F.add(fu[i], fv[i]) == fw[i], "map passed to prime_subfield_kernel is not additive");
    }

    // matrix of f in the GF(p) digit basis; the output dimension may differ
    // from the input dimension
    const int M_out = static_cast<int>(f(std::vector<felem>(static_cast<size_t>(n), 0)).size()) *
                      static_cast<int>(F.k());
    Mat M(M_out, N);
    std::vector<felem> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < F.k(); ++j) {
            std::vector<std::uint32_t> digits(F.k(), 0);
            digits[j] = 1;
            e[static_cast<size_t>(i)] = F.encode(digits);
            auto img = expand_to_prime(F, f(e));
            for (int c = 0; c < M_out; ++c) M.at(c, i * static_cast<int>(F.k()) + static_cast<int>(j)) = img[static_cast<size_t>(c)];
            e[static_cast<size_t>(i)] = 0;
        }
    }
    Mat k = right_kernel(prime, M);
    PrimeKernel out;
    out.dim = k.rows;
    out.basis = rref(prime, std::move(k)).m;
    return out;
}

}  // namespace ug24
