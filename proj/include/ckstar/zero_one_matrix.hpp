#pragma once

/*
 * The monoid (M_*({0,1}), kron): square 0-1 matrices with no zero row and
 * no zero column, under the Kronecker product
 *
 *     (A kron B)[m(i-1)+j, m(i'-1)+j'] = a[i,i'] * b[j,j']      (m = B.dim)
 *
 * with the 1x1 matrix [1] as unit. Values are immutable after construction;
 * degenerate input is rejected at construction time. Rows are stored as bit
 * masks so products and comparisons over the test dimensions stay cheap.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckstar {

class ZeroOneMatrix {
public:
    /* rows[i] bit j set  <=>  entry (i+1, j+1) = 1 (0-based storage,
       1-based math indices at the API surface). */
    ZeroOneMatrix(int n, std::vector<std::uint64_t> rows, bool validate = true)
        : n_(n), words_(words_for(n)), bits_(std::move(rows)) {
        if (n_ < 1) throw std::invalid_argument("matrix dimension must be >= 1");
        if (bits_.size() != static_cast<std::size_t>(n_) * words_)
            throw std::invalid_argument("row storage does not match dimension");
        if (validate) check_nondegenerate();
    }

    explicit ZeroOneMatrix(const std::vector<std::vector<int>>& entries)
        : n_(static_cast<int>(entries.size())), words_(words_for(n_)) {
        if (n_ < 1) throw std::invalid_argument("matrix dimension must be >= 1");
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int i = 0; i < n_; ++i) {
            if (static_cast<int>(entries[i].size()) != n_)
                throw std::invalid_argument("matrix is not square");
            for (int j = 0; j < n_; ++j) {
                int v = entries[i][j];
                if (v != 0 && v != 1) throw std::invalid_argument("entries must be 0 or 1");
                if (v) set_bit(i, j);
            }
        }
        check_nondegenerate();
    }

    static ZeroOneMatrix full(int n) {
        if (n < 1) throw std::invalid_argument("F_n needs n >= 1");
        int w = words_for(n);
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * w, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rows[static_cast<std::size_t>(i) * w + j / 64] |= std::uint64_t(1) << (j % 64);
        return ZeroOneMatrix(n, std::move(rows), false);
    }

    static ZeroOneMatrix unit() { return full(1); }

    /* Permutation matrix of the n-cycle 1 -> 2 -> ... -> n -> 1. */
    static ZeroOneMatrix cycle(int n) {
        std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) e[i][(i + 1) % n] = 1;
        return ZeroOneMatrix(e);
    }

    int dim() const { return n_; }
    bool is_unit() const { return n_ == 1; }

    bool at(int i, int j) const {  // 1-based
        return get_bit(i - 1, j - 1);
    }
    bool get(int i, int j) const {  // 0-based
        return get_bit(i, j);
    }

    std::uint64_t row_word(int i, int w) const {
        return bits_[static_cast<std::size_t>(i) * words_ + w];
    }
    int row_words() const { return words_; }

    bool row_nonzero(int i) const {
        for (int w = 0; w < words_; ++w)
            if (row_word(i, w)) return true;
        return false;
    }

    int row_popcount(int i) const {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(row_word(i, w));
        return c;
    }

    friend bool operator==(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const ZeroOneMatrix& a, const ZeroOneMatrix& b) { return !(a == b); }

    /* Dimension first, then row-major lexicographic on entries. This is the
       order used for divisor lists, direct-sum components and CLI output. */
    friend bool operator<(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                bool x = a.get_bit(i, j), y = b.get_bit(i, j);
                if (x != y) return x < y;  // 0 sorts before 1
            }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
        for (std::uint64_t w : bits_) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (j) s += ' ';
                s += get_bit(i, j) ? '1' : '0';
            }
            s += '\n';
        }
        return s;
    }

    /* Compact one-line tag, e.g. "F2" for full matrices, else "[11|10]". */
    std::string tag() const {
        bool isfull = true;
        for (int i = 0; i < n_ && isfull; ++i)
            isfull = row_popcount(i) == n_;
        if (isfull) return "F" + std::to_string(n_);
        std::string s = "[";
        for (int i = 0; i < n_; ++i) {
            if (i) s += '|';
            for (int j = 0; j < n_; ++j) s += get_bit(i, j) ? '1' : '0';
        }
        return s + "]";
    }

private:
    static int words_for(int n) { return (n + 63) / 64; }

    void set_bit(int i, int j) {
        bits_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
    }
    bool get_bit(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1;
    }

    void check_nondegenerate() const {
        std::vector<std::uint64_t> colmask(words_, 0);
        for (int i = 0; i < n_; ++i) {
            bool nonzero = false;
            for (int w = 0; w < words_; ++w) {
                std::uint64_t r = row_word(i, w);
                colmask[w] |= r;
                nonzero |= (r != 0);
            }
            if (!nonzero)
                throw std::invalid_argument("degenerate matrix: zero row " + std::to_string(i + 1));
        }
        for (int j = 0; j < n_; ++j)
            if (!((colmask[j / 64] >> (j % 64)) & 1))
                throw std::invalid_argument("degenerate matrix: zero column " + std::to_string(j + 1));
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

struct ZeroOneMatrixHash {
    std::size_t operator()(const ZeroOneMatrix& m) const { return m.hash(); }
};

/* Index map of the vector Kronecker product: e_i^(n) kron e_j^(m) = e_{m(i-1)+j}^(nm).
   All indices 1-based. */
inline int kron_index(int i, int j, int n, int m) {
    if (i < 1 || i > n || j < 1 || j > m)
        throw std::out_of_range("kron_index: index out of range");
    return m * (i - 1) + j;
}

/* Inverse of kron_index: 1-based composite index -> 1-based pair (i, j). */
inline std::pair<int, int> kron_index_split(int idx, int n, int m) {
    if (idx < 1 || idx > n * m) throw std::out_of_range("kron_index_split: index out of range");
    return {(idx - 1) / m + 1, (idx - 1) % m + 1};
}

inline ZeroOneMatrix kronecker(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
    const int n = a.dim(), m = b.dim(), nm = n * m;
    const int words = (nm + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(nm) * words, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            std::uint64_t* out = rows.data() + static_cast<std::size_t>(m * i + j) * words;
            for (int ip = 0; ip < n; ++ip) {
                if (!a.get(i, ip)) continue;
                // copy row j of b into bit offset m*ip of the output row
                const int base = m * ip;
                for (int w = 0; w < b.row_words(); ++w) {
                    std::uint64_t word = b.row_word(j, w);
                    if (!word) continue;
                    int off = base + 64 * w;
                    out[off / 64] |= word << (off % 64);
                    if (off % 64 && (off / 64 + 1) < words)
                        out[off / 64 + 1] |= word >> (64 - off % 64);
                }
            }
        }
    }
    return ZeroOneMatrix(nm, std::move(rows), false);  // closure: nondegenerate by construction
}

struct MatrixClassification {
    bool nondegenerate = true;  // enforced at construction
    bool irreducible = false;
    bool permutation = false;
    bool simple_ck = false;  // irreducible and not a permutation matrix
};

/* Irreducibility in the nonnegative-matrix sense: for every (i, j) some power
   A^k (k >= 1) has a nonzero (i, j) entry. Equivalent to strong connectivity
   of the edge digraph for n >= 2, and to a_11 = 1 for n = 1. */
inline MatrixClassification classify(const ZeroOneMatrix& a) {
    MatrixClassification c;
    const int n = a.dim();

    c.permutation = true;
    std::vector<int> colcount(n, 0);
    for (int i = 0; i < n && c.permutation; ++i) {
        if (a.row_popcount(i) != 1) c.permutation = false;
    }
    if (c.permutation) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a.get(i, j)) ++colcount[j];
        for (int j = 0; j < n; ++j)
            if (colcount[j] != 1) c.permutation = false;
    }

    if (n == 1) {
        c.irreducible = a.get(0, 0);
    } else {
        // strong connectivity by forward and backward reachability from vertex 0
        auto reach = [n](auto&& edge) {
            std::vector<char> seen(n, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u = 0; u < n; ++u)
                    if (!seen[u] && edge(v, u)) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            return seen;
        };
        auto fwd = reach([&](int v, int u) { return a.get(v, u); });
        auto bwd = reach([&](int v, int u) { return a.get(u, v); });
        c.irreducible = true;
        for (int v = 0; v < n; ++v)
            if (!fwd[v] || !bwd[v]) c.irreducible = false;
    }

    c.simple_ck = c.irreducible && !c.permutation;
    return c;
}

struct DivisorPair {
    ZeroOneMatrix left;
    ZeroOneMatrix right;
};

/* The divisor set N_A = {(B, C) : B kron C = A}, ordered by left dimension
   ascending (there is at most one pair per factorization dim(A) = m*l: the
   left factor is forced by the nonzero-block pattern of the m x m grid of
   l x l blocks, the right factor by any nonzero block). Always contains
   (1, A) and (A, 1). */
inline std::vector<DivisorPair> divisors(const ZeroOneMatrix& a) {
    const int n = a.dim();
    std::vector<DivisorPair> out;
    for (int m = 1; m <= n; ++m) {
        if (n % m) continue;
        const int l = n / m;
        // left candidate from the block pattern
        std::vector<std::vector<int>> left(m, std::vector<int>(m, 0));
        int nzi = -1, nzj = -1;
        for (int bi = 0; bi < m; ++bi)
            for (int bj = 0; bj < m; ++bj) {
                bool nonzero = false;
                for (int r = 0; r < l && !nonzero; ++r)
                    for (int c = 0; c < l && !nonzero; ++c)
                        nonzero = a.get(bi * l + r, bj * l + c);
                if (nonzero) {
                    left[bi][bj] = 1;
                    if (nzi < 0) nzi = bi, nzj = bj;
                }
            }
        // right candidate = content of the first nonzero block
        std::vector<std::vector<int>> right(l, std::vector<int>(l, 0));
        for (int r = 0; r < l; ++r)
            for (int c = 0; c < l; ++c)
                right[r][c] = a.get(nzi * l + r, nzj * l + c) ? 1 : 0;
        try {
            ZeroOneMatrix b(left), c(right);
            if (kronecker(b, c) == a) out.push_back({std::move(b), std::move(c)});
        } catch (const std::invalid_argument&) {
            // degenerate candidate: no divisor at this factorization
        }
    }
    return out;
}

/* Cancellation in the monoid: equal-dimension products determine their
   factors. Returns whether the implication holds for this instance (it
   always does; the function exists as a property-test driver). */
inline bool check_cancellation(const ZeroOneMatrix& a, const ZeroOneMatrix& a2,
                               const ZeroOneMatrix& b, const ZeroOneMatrix& b2) {
    if (a.dim() != a2.dim() || b.dim() != b2.dim())
        throw std::invalid_argument("check_cancellation: dimension mismatch");
    if (kronecker(a, b) != kronecker(a2, b2)) return true;  // vacuous
    return a == a2 && b == b2;
}

}  // namespace ckstar
