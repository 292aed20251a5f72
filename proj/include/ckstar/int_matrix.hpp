#pragma once

/*
 * Integer linear algebra for the K-theoretic invariants of O_A.
 *
 * Entries are arbitrary-precision integers; Smith pivots grow quickly even
 * at dimension 8, so fixed-width integers are not an option here.
 *
 * K_1(O_A) = ker(1 - A^t : Z^n -> Z^n) and K_0(O_A) = coker(1 - A^t),
 * both read off one Smith decomposition.
 */

#include "ckstar/scalar.hpp"
#include "ckstar/zero_one_matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ckstar {

class IntMatrix {
public:
    IntMatrix(int rows, int cols, BigInt fill = 0)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, std::move(fill)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("IntMatrix: empty shape");
    }

    explicit IntMatrix(const std::vector<std::vector<long>>& v)
        : IntMatrix(static_cast<int>(v.size()), static_cast<int>(v.at(0).size())) {
        for (int i = 0; i < rows_; ++i) {
            if (static_cast<int>(v[i].size()) != cols_)
                throw std::invalid_argument("IntMatrix: ragged rows");
            for (int j = 0; j < cols_; ++j) at(i, j) = v[i][j];
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_zero_one(const ZeroOneMatrix& a) {
        IntMatrix m(a.dim(), a.dim());
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                if (a.get(i, j)) m.at(i, j) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
        IntMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const BigInt& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: shape mismatch in difference");
        IntMatrix c(a.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const BigInt& v : e_)
            if (v != 0) return false;
        return true;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("IntMatrix: vector length mismatch");
        std::vector<BigInt> out(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    /* Exact determinant by fraction-free (Bareiss) elimination. */
    BigInt determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
        IntMatrix m = *this;
        const int n = rows_;
        BigInt prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (m.at(k, k) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (m.at(i, k) != 0) {
                        p = i;
                        break;
                    }
                if (p < 0) return 0;
                for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            prev = m.at(k, k);
        }
        return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
    }

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

/* Kronecker product lifted to integer matrices, same index map as the 0-1
   monoid; used for the mixed-product identity and the kernel inclusion. */
inline IntMatrix int_kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int ip = 0; ip < a.cols(); ++ip) {
            if (a.at(i, ip) == 0) continue;
            for (int j = 0; j < b.rows(); ++j)
                for (int jp = 0; jp < b.cols(); ++jp)
                    if (b.at(j, jp) != 0)
                        c.at(b.rows() * i + j, b.cols() * ip + jp) = a.at(i, ip) * b.at(j, jp);
        }
    return c;
}

inline std::vector<BigInt> kron_vector(const std::vector<BigInt>& v, const std::vector<BigInt>& w) {
    std::vector<BigInt> out(v.size() * w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) out[w.size() * i + j] = v[i] * w[j];
    return out;
}

struct SmithDecomposition {
    IntMatrix u;         // unimodular, rows x rows
    IntMatrix d;         // diagonal with d_1 | d_2 | ..., all >= 0
    IntMatrix v;         // unimodular, cols x cols
    IntMatrix original;  // u * original * v = d

    std::vector<BigInt> diagonal() const {
        std::vector<BigInt> out;
        int k = std::min(d.rows(), d.cols());
        for (int i = 0; i < k; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

/* Smith normal form with full transform tracking. Pivot selection is the
   smallest nonzero absolute value, ties broken in row-major position order,
   so the decomposition (and everything derived from it) is deterministic. */
inline SmithDecomposition smith_normal_form(const IntMatrix& m0) {
    const int r = m0.rows(), c = m0.cols();
    IntMatrix m = m0, u = IntMatrix::identity(r), v = IntMatrix::identity(c);

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < c; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (int j = 0; j < r; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < r; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (int i = 0; i < c; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto add_row = [&](int dst, int src, const BigInt& q) {  // row dst += q * row src
        if (q == 0) return;
        for (int j = 0; j < c; ++j) m.at(dst, j) += q * m.at(src, j);
        for (int j = 0; j < r; ++j) u.at(dst, j) += q * u.at(src, j);
    };
    auto add_col = [&](int dst, int src, const BigInt& q) {
        if (q == 0) return;
        for (int i = 0; i < r; ++i) m.at(i, dst) += q * m.at(i, src);
        for (int i = 0; i < c; ++i) v.at(i, dst) += q * v.at(i, src);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < c; ++j) m.at(i, j) = -m.at(i, j);
        for (int j = 0; j < r; ++j) u.at(i, j) = -u.at(i, j);
    };

    const int k = std::min(r, c);
    for (int t = 0; t < k; ++t) {
        for (;;) {
            // pick pivot: smallest |value| over the trailing submatrix
            int pi = -1, pj = -1;
            BigInt best = 0;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (m.at(i, j) == 0) continue;
                    BigInt a = abs(m.at(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // submatrix zero; remaining diagonal stays 0
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool reduced = true;
            for (int i = t + 1; i < r; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                add_row(i, t, -q);
                if (m.at(i, t) != 0) reduced = false;  // remainder became the new smaller entry
            }
            for (int j = t + 1; j < c; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                add_col(j, t, -q);
                if (m.at(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // pivot must divide every entry of the trailing submatrix
            int bi = -1, bj = -1;
            for (int i = t + 1; i < r && bi < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            add_row(t, bi, 1);  // pulls the offending entry into row t
            (void)bj;
        }
        if (m.at(t, t) < 0) negate_row(t);
    }
done:

    return SmithDecomposition{std::move(u), std::move(m), std::move(v), m0};
}

struct AbelianGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // entries >= 2 in divisibility order

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }

    /* "0", "Z", "Z^2 (+) Z/3", ... */
    std::string str() const {
        if (is_trivial()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (const BigInt& t : torsion) {
            if (!s.empty()) s += " (+) ";
            s += "Z/" + t.str();
        }
        return s;
    }
};

struct KGroups {
    AbelianGroup k0;
    AbelianGroup k1;
    std::vector<BigInt> smith_diagonal;  // of 1_n - A^t
};

inline KGroups k_groups(const ZeroOneMatrix& a) {
    const int n = a.dim();
    IntMatrix m = IntMatrix::identity(n) - IntMatrix::from_zero_one(a).transpose();
    SmithDecomposition snf = smith_normal_form(m);
    KGroups out;
    out.smith_diagonal = snf.diagonal();
    for (const BigInt& d : out.smith_diagonal) {
        if (d == 0) {
            ++out.k0.free_rank;  // cokernel free part
            ++out.k1.free_rank;  // kernel is torsion-free of the same rank
        } else if (d > 1) {
            out.k0.torsion.push_back(d);
        }
    }
    return out;
}

/* Basis over Z of {v : Mv = 0}: the columns of V at zero Smith-diagonal
   positions (including columns beyond the diagonal for wide matrices). */
inline std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<std::vector<BigInt>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        bool zero_diag = j >= std::min(m.rows(), m.cols()) || snf.d.at(j, j) == 0;
        if (!zero_diag) continue;
        std::vector<BigInt> col(m.cols());
        for (int i = 0; i < m.cols(); ++i) col[i] = snf.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

/* The kernel inclusion ker(1_n - A) kron ker(1_m - B) c ker(1_nm - A kron B),
   checked on all pairs of kernel-basis vectors. */
inline bool verify_kernel_inclusion(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
    IntMatrix ma = IntMatrix::identity(a.dim()) - IntMatrix::from_zero_one(a);
    IntMatrix mb = IntMatrix::identity(b.dim()) - IntMatrix::from_zero_one(b);
    ZeroOneMatrix ab = kronecker(a, b);
    IntMatrix mab = IntMatrix::identity(ab.dim()) - IntMatrix::from_zero_one(ab);
    for (const auto& v : kernel_basis(ma))
        for (const auto& w : kernel_basis(mb)) {
            std::vector<BigInt> vw = kron_vector(v, w);
            for (const BigInt& x : mab.apply(vw))
                if (x != 0) return false;
        }
    return true;  // vacuously true when either kernel is trivial
}

}  // namespace ckstar
