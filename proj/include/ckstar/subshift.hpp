#pragma once

/*
 * The one-sided subshift of finite type X_A seen through its cylinder
 * structure: admissible finite words, their counts, and the commutative
 * projection algebra C_A = <s_J s_J^* : J admissible> inside O_A^(0),
 * realizing C(X_A) at the algebraic level. The space X_A itself (infinite
 * sequences) is never materialized; finite words are exactly what C_A sees.
 */

#include "ckstar/bialgebra.hpp"
#include "ckstar/int_matrix.hpp"
#include "ckstar/star_algebra.hpp"
#include "ckstar/zero_one_matrix.hpp"

#include <vector>

namespace ckstar {

/* All admissible words of length l, lexicographic. The count equals the
   entrywise sum of A^(l-1). */
inline std::vector<Word> admissible_words(const ZeroOneMatrix& a, int l) {
    if (l < 1) throw std::invalid_argument("word length must be >= 1");
    std::vector<Word> out, cur;
    for (int i = 1; i <= a.dim(); ++i) cur.push_back(Word{i});
    for (int len = 2; len <= l; ++len) {
        std::vector<Word> next;
        for (const Word& w : cur)
            for (int i = 1; i <= a.dim(); ++i)
                if (a.at(w.back(), i)) {
                    Word ext = w;
                    ext.push_back(i);
                    next.push_back(std::move(ext));
                }
        cur = std::move(next);
    }
    return cur;
}

/* Word count by prefix-count iteration; same value as the entrywise sum of
   A^(l-1) but computed along a different route. */
inline BigInt count_words(const ZeroOneMatrix& a, int l) {
    if (l < 1) throw std::invalid_argument("word length must be >= 1");
    const int n = a.dim();
    std::vector<BigInt> ending(n, 1);  // counts of admissible words ending at each letter
    for (int len = 2; len <= l; ++len) {
        std::vector<BigInt> next(n, 0);
        for (int i = 0; i < n; ++i) {
            if (ending[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (a.get(i, j)) next[j] += ending[i];
        }
        ending = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& c : ending) total += c;
    return total;
}

/* The cylinder projection s_J s_J^* in O_A^(0): J inadmissible is an error
   here (the CLI surfaces it), unlike products which are silently zero. */
inline AlgebraElement cylinder_projection(const ZeroOneMatrix& a, const Word& j) {
    return AlgebraElement::cylinder(a, j);
}

/* Every tensor term of Delta(s_J s_J^*) is a product of cylinder
   projections over the divisor contexts: the SF_* closure condition. */
inline bool sf_delta_closure(const ZeroOneMatrix& a, const Word& j) {
    DirectSumElement x = DirectSumElement::inject(cylinder_projection(a, j));
    return tensor_member(delta(x), Family::SF);
}

}  // namespace ckstar
