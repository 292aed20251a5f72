#pragma once

/*
 * Independent oracle: the depth-truncated path representation.
 *
 * O_A^(0) acts on the span of admissible words of a fixed length D by
 *
 *     s_J s_K^* . e_w = [w = K.w'] [J.w' admissible] e_{J.w'}
 *
 * exactly as on infinite admissible paths, compressed to depth-D cylinders.
 * For D at least the maximal source length involved, equality of these
 * matrices is equivalent to equality in the algebra: the rewriting
 * identities hold entrywise, and leveled monomials of one degree and length
 * act with pairwise disjoint nonzero supports.
 *
 * This file evaluates raw term lists directly and never calls the
 * normal-form machinery it is used to check.
 */

#include "ckstar/scalar.hpp"
#include "ckstar/star_algebra.hpp"
#include "ckstar/zero_one_matrix.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ckstar::testsupport {

struct PathMatrix {
    std::map<std::pair<Word, Word>, GaussianRational> entries;  // (input word, output word)

    friend bool operator==(const PathMatrix& a, const PathMatrix& b) {
        return a.entries == b.entries;
    }
    bool is_zero() const { return entries.empty(); }
};

inline std::vector<Word> oracle_basis(const ZeroOneMatrix& a, int depth) {
    std::vector<Word> basis, cur;
    for (int i = 1; i <= a.dim(); ++i) cur.push_back(Word{i});
    for (int len = 2; len <= depth; ++len) {
        std::vector<Word> next;
        for (const Word& w : cur)
            for (int i = 1; i <= a.dim(); ++i)
                if (a.at(w.back(), i)) {
                    Word e = w;
                    e.push_back(i);
                    next.push_back(std::move(e));
                }
        cur = std::move(next);
    }
    return cur;
}

inline PathMatrix path_evaluate(const ZeroOneMatrix& a, const RawTerms& terms, int depth) {
    PathMatrix out;
    std::vector<Word> basis = oracle_basis(a, depth);
    for (const auto& [m, c] : terms) {
        if (c.is_zero()) continue;
        if (static_cast<int>(m.source.size()) > depth)
            throw std::invalid_argument("path oracle: depth below the source length");
        if (!word_admissible(a, m.target) || !word_admissible(a, m.source)) continue;
        for (const Word& w : basis) {
            bool prefix = true;
            for (std::size_t t = 0; t < m.source.size() && prefix; ++t)
                prefix = w[t] == m.source[t];
            if (!prefix) continue;
            Word tail(w.begin() + m.source.size(), w.end());
            if (!tail.empty() && !word_extends(a, m.target, tail.front())) continue;
            Word image = m.target;
            image.insert(image.end(), tail.begin(), tail.end());
            auto key = std::make_pair(w, std::move(image));
            auto [it, inserted] = out.entries.try_emplace(std::move(key), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.entries.erase(it);
            }
        }
    }
    return out;
}

inline PathMatrix path_evaluate(const AlgebraElement& x, int depth) {
    return path_evaluate(x.context(), x.raw_terms(), depth);
}

/* Rank over Q(i) of the span of the given matrices, by exact Gaussian
   elimination; used to check linear independence of leveled monomials. */
inline int path_rank(const std::vector<PathMatrix>& mats) {
    std::map<std::pair<Word, Word>, int> columns;
    for (const PathMatrix& m : mats)
        for (const auto& [key, c] : m.entries) columns.try_emplace(key, 0);
    int ncols = 0;
    for (auto& [key, idx] : columns) idx = ncols++;

    std::vector<std::vector<GaussianRational>> rows;
    for (const PathMatrix& m : mats) {
        std::vector<GaussianRational> row(ncols);
        for (const auto& [key, c] : m.entries) row[columns[key]] = c;
        rows.push_back(std::move(row));
    }

    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GaussianRational f = rows[r][col] / rows[rank][col];
            for (int c2 = col; c2 < ncols; ++c2) rows[r][c2] -= f * rows[rank][c2];
        }
        ++rank;
    }
    return rank;
}

}  // namespace ckstar::testsupport
