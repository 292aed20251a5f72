#pragma once

/* Exhaustive and randomized generators shared by the test suites. */

#include "ckstar/star_algebra.hpp"
#include "ckstar/zero_one_matrix.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace ckstar::testsupport {

/* Visit every nondegenerate n x n 0-1 matrix, rows enumerated in ascending
   bitmask order (deterministic). Streaming, so n = 5 (25M matrices) works
   without storing anything. */
inline void visit_all_nondegenerate(int n, const std::function<void(const ZeroOneMatrix&)>& fn) {
    const std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    std::vector<std::uint64_t> rows(n);
    auto rec = [&](auto&& self, int i, std::uint64_t colmask) -> void {
        if (i == n) {
            if (colmask == full) fn(ZeroOneMatrix(n, rows, false));
            return;
        }
        for (std::uint64_t r = 1; r <= full; ++r) {
            rows[i] = r;
            self(self, i + 1, colmask | r);
        }
    };
    rec(rec, 0, 0);
}

inline std::vector<ZeroOneMatrix> all_nondegenerate(int n) {
    std::vector<ZeroOneMatrix> out;
    visit_all_nondegenerate(n, [&](const ZeroOneMatrix& m) { out.push_back(m); });
    return out;
}

/* All nondegenerate matrices of dimension 1..max_dim, concatenated. */
inline std::vector<ZeroOneMatrix> all_nondegenerate_upto(int max_dim) {
    std::vector<ZeroOneMatrix> out;
    for (int n = 1; n <= max_dim; ++n)
        for (auto& m : all_nondegenerate(n)) out.push_back(std::move(m));
    return out;
}

inline ZeroOneMatrix random_nondegenerate(std::mt19937& rng, int n) {
    std::uniform_int_distribution<std::uint64_t> bit(0, 1);
    for (;;) {
        std::vector<std::uint64_t> rows(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (bit(rng)) rows[i] |= 1ull << j;
        try {
            return ZeroOneMatrix(n, std::move(rows));
        } catch (const std::invalid_argument&) {
            // degenerate draw, retry
        }
    }
}

inline Word random_admissible_word(std::mt19937& rng, const ZeroOneMatrix& a, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter(1, a.dim());
    const int len = len_dist(rng);
    Word w;
    for (int t = 0; t < len; ++t) {
        int tries = 0;
        for (;;) {
            int i = letter(rng);
            if (word_extends(a, w, i)) {
                w.push_back(i);
                break;
            }
            if (++tries > 64) return w;  // dead end: keep the shorter word
        }
    }
    return w;
}

/* Random element: up to max_terms monomials with words up to max_len and
   small Gaussian-rational coefficients. */
inline AlgebraElement random_element(std::mt19937& rng, const ZeroOneMatrix& a, int max_terms,
                                     int max_len) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> small(-3, 3);
    RawTerms raw;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m{random_admissible_word(rng, a, max_len),
                   random_admissible_word(rng, a, max_len)};
        GaussianRational c(BigRational(small(rng)), BigRational(small(rng)));
        raw.emplace_back(std::move(m), c);
    }
    return AlgebraElement::from_terms(a, raw);
}

}  // namespace ckstar::testsupport
