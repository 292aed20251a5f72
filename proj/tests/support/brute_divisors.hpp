#pragma once

/*
 * Brute-force divisor oracle: for each factorization n = m*l, enumerate
 * every nondegenerate candidate on the smaller side and solve for the other
 * factor from the block structure, verifying by multiplication. Independent
 * of the block-pattern reconstruction in divisors().
 */

#include "ckstar/zero_one_matrix.hpp"
#include "enumerate.hpp"

#include <vector>

namespace ckstar::testsupport {

inline std::vector<DivisorPair> brute_force_divisors(const ZeroOneMatrix& a) {
    const int n = a.dim();
    std::vector<DivisorPair> out;
    for (int m = 1; m <= n; ++m) {
        if (n % m) continue;
        const int l = n / m;

        auto block = [&](int bi, int bj) {
            std::vector<std::vector<int>> e(l, std::vector<int>(l, 0));
            for (int r = 0; r < l; ++r)
                for (int c = 0; c < l; ++c) e[r][c] = a.get(bi * l + r, bj * l + c) ? 1 : 0;
            return e;
        };
        auto block_zero = [&](const std::vector<std::vector<int>>& e) {
            for (const auto& row : e)
                for (int v : row)
                    if (v) return false;
            return true;
        };

        if (m <= l) {
            // enumerate the left factor, read the right factor off a block
            visit_all_nondegenerate(m, [&](const ZeroOneMatrix& b) {
                int fi = -1, fj = -1;
                for (int i = 0; i < m && fi < 0; ++i)
                    for (int j = 0; j < m; ++j)
                        if (b.get(i, j)) {
                            fi = i;
                            fj = j;
                            break;
                        }
                auto e = block(fi, fj);
                if (block_zero(e)) return;
                try {
                    ZeroOneMatrix c(e);
                    if (kronecker(b, c) == a) out.push_back({b, c});
                } catch (const std::invalid_argument&) {
                }
            });
        } else {
            // enumerate the right factor, reconstruct the left pattern
            visit_all_nondegenerate(l, [&](const ZeroOneMatrix& c) {
                std::vector<std::vector<int>> bpat(m, std::vector<int>(m, 0));
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        auto e = block(i, j);
                        if (block_zero(e)) continue;
                        bpat[i][j] = 1;
                    }
                try {
                    ZeroOneMatrix b(bpat);
                    if (kronecker(b, c) == a) out.push_back({b, c});
                } catch (const std::invalid_argument&) {
                }
            });
        }
    }
    return out;
}

}  // namespace ckstar::testsupport
