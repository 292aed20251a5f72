#pragma once

/*
 * Permutative representations of O_A as branching systems, the tensor
 * product induced by phi_{A,B}, and the decomposition of tensor products of
 * cyclic representations into cyclic components.
 *
 * A cyclic permutative representation P(J), J = (j_1 ... j_p) cyclically
 * admissible, is modelled on the eventually-periodic address space: a
 * central cycle e_0 ... e_{p-1} with s_{j_t} e_{(t+1) mod p} = e_t, plus the
 * incoming trees obtained by prepending admissible letters, truncated at a
 * configurable depth. Letter maps are partial injections on addresses
 * (pi(s_i) e_l = e_{m_i(l)}); the truncation is the honest finite window
 * onto the infinite-dimensional statement, and inside the window everything
 * is exact.
 *
 * Tensor products of cyclic representations decompose along the orbits of
 * the simultaneous shift on Z_p x Z_q: gcd(p,q) components, each a cycle of
 * period lcm(p,q) whose letters are the Kronecker indices of the paired
 * letters of J and K.
 */

#include "ckstar/zero_one_matrix.hpp"
#include "ckstar/star_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckstar {

inline bool cyclically_admissible(const ZeroOneMatrix& a, const Word& w) {
    if (w.empty()) return false;
    if (!word_admissible(a, w)) return false;
    return a.at(w.back(), w.front());
}

struct CycleWord {
    ZeroOneMatrix context;
    Word letters;  // 1-based, nonempty, cyclically admissible

    CycleWord(ZeroOneMatrix ctx, Word w) : context(std::move(ctx)), letters(std::move(w)) {
        if (!cyclically_admissible(context, letters))
            throw std::invalid_argument("cycle word is not cyclically admissible");
    }

    int period() const { return static_cast<int>(letters.size()); }

    /* A word is primitive when it is not a power of a shorter cyclic word. */
    bool primitive() const {
        const int p = period();
        for (int d = 1; d < p; ++d) {
            if (p % d) continue;
            bool power = true;
            for (int t = d; t < p && power; ++t) power = letters[t] == letters[t % d];
            if (power) return false;
        }
        return true;
    }

    Word least_rotation() const {
        Word best = letters;
        Word rot = letters;
        for (int s = 1; s < period(); ++s) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
        return best;
    }

    CycleWord canonical() const { return CycleWord(context, least_rotation()); }

    friend bool operator==(const CycleWord& x, const CycleWord& y) {
        return x.context == y.context && x.letters == y.letters;
    }
    friend bool operator<(const CycleWord& x, const CycleWord& y) {
        if (x.period() != y.period()) return x.period() < y.period();
        if (x.letters != y.letters) return x.letters < y.letters;
        return x.context < y.context;
    }

    std::string str() const {
        std::string s = "P(";
        for (std::size_t t = 0; t < letters.size(); ++t) {
            if (t) s += ",";
            s += std::to_string(letters[t]);
        }
        s += ")";
        return s;
    }
};

/* True iff the words are cyclic rotations of each other; comparison is only
   decided for primitive words, non-primitive input is flagged (nullopt). */
inline std::optional<bool> equivalent(const CycleWord& j, const CycleWord& k) {
    if (!(j.context == k.context))
        throw std::invalid_argument("equivalent: contexts differ");
    if (!j.primitive() || !k.primitive()) return std::nullopt;
    if (j.period() != k.period()) return false;
    Word doubled = j.letters;
    doubled.insert(doubled.end(), j.letters.begin(), j.letters.end());
    return std::search(doubled.begin(), doubled.end(), k.letters.begin(), k.letters.end()) !=
           doubled.end();
}

/* Partial-injection system on a finite address set: maps[i-1][x] is the
   image of address x under s_i, or -1 when x is outside the domain of s_i.
   Central addresses have depth 0; tree addresses record the letter at the
   head of their prefix. */
class BranchingSystem {
public:
    struct Address {
        int depth = 0;
        int head = 0;   // creating letter for tree addresses, 0 for central
        int cycle = -1; // central only: index of the cycle word
        int pos = -1;   // central only: position in the cycle
    };

    static BranchingSystem from_cycles(const ZeroOneMatrix& ctx,
                                       const std::vector<CycleWord>& cycles, int depth) {
        if (depth < 1) throw std::invalid_argument("branching system depth must be >= 1");
        BranchingSystem r;
        r.letters_ = ctx.dim();
        r.depth_ = depth;
        for (const CycleWord& c : cycles) {
            if (!(c.context == ctx))
                throw std::invalid_argument("cycle word context mismatch");
            r.cycle_words_.push_back(c.letters);
        }

        // central addresses first, positions ascending per cycle
        std::vector<int> base;
        for (std::size_t c = 0; c < r.cycle_words_.size(); ++c) {
            base.push_back(static_cast<int>(r.addr_.size()));
            const int p = static_cast<int>(r.cycle_words_[c].size());
            for (int t = 0; t < p; ++t)
                r.addr_.push_back(Address{0, 0, static_cast<int>(c), t});
        }
        r.maps_.assign(r.letters_, {});

        // grow by prepending letters, breadth-first, deterministic order
        for (int x = 0; x < static_cast<int>(r.addr_.size()); ++x) {
            for (int i = 1; i <= r.letters_; ++i) {
                int target = -1;
                const Address ax = r.addr_[x];  // by value: addr_ may reallocate below
                if (ax.depth == 0) {
                    const Word& w = r.cycle_words_[ax.cycle];
                    const int p = static_cast<int>(w.size());
                    const int prev = (ax.pos + p - 1) % p;
                    if (i == w[prev]) {
                        target = base[ax.cycle] + prev;  // cycle move
                    } else if (ctx.at(i, w[ax.pos])) {
                        target = static_cast<int>(r.addr_.size());
                        r.addr_.push_back(Address{1, i, -1, -1});
                    }
                } else if (ctx.at(i, ax.head) && ax.depth < depth) {
                    target = static_cast<int>(r.addr_.size());
                    r.addr_.push_back(Address{ax.depth + 1, i, -1, -1});
                }
                for (auto& m : r.maps_)
                    if (static_cast<int>(m.size()) < static_cast<int>(r.addr_.size()))
                        m.resize(r.addr_.size(), -1);
                r.maps_[i - 1][x] = target;
            }
        }
        for (auto& m : r.maps_) m.resize(r.addr_.size(), -1);
        return r;
    }

    static BranchingSystem from_cycle(const CycleWord& j, int depth) {
        return from_cycles(j.context, {j}, depth);
    }

    int size() const { return static_cast<int>(addr_.size()); }
    int letters() const { return letters_; }
    int depth() const { return depth_; }
    int map(int letter, int x) const { return maps_[letter - 1][x]; }
    const Address& info(int x) const { return addr_[x]; }
    const std::vector<Word>& cycle_words() const { return cycle_words_; }

    /* Eq.(14) shape: each letter map is injective on its domain and images
       of distinct letters are disjoint. */
    bool well_formed() const {
        std::vector<char> hit(addr_.size(), 0);
        for (const auto& m : maps_) {
            std::vector<char> seen(addr_.size(), 0);
            for (int x = 0; x < size(); ++x) {
                int y = m[x];
                if (y < 0) continue;
                if (seen[y] || hit[y]) return false;
                seen[y] = 1;
                hit[y] = 1;
            }
        }
        return true;
    }

    friend BranchingSystem tensor_rep(const BranchingSystem& r1, const BranchingSystem& r2) {
        if (r1.depth_ != r2.depth_)
            throw std::invalid_argument("tensor_rep: truncation depths differ");
        BranchingSystem r;
        r.letters_ = r1.letters_ * r2.letters_;
        r.depth_ = r1.depth_;
        const int n2 = r2.size();
        r.addr_.resize(static_cast<std::size_t>(r1.size()) * n2);
        // product cycle words are recovered by cycle extraction when needed
        for (int x = 0; x < r1.size(); ++x)
            for (int y = 0; y < n2; ++y) {
                Address& a = r.addr_[static_cast<std::size_t>(x) * n2 + y];
                const Address& a1 = r1.addr_[x];
                const Address& a2 = r2.addr_[y];
                a.depth = std::max(a1.depth, a2.depth);
                bool central = a1.depth == 0 && a2.depth == 0;
                a.cycle = central ? 0 : -1;
                a.pos = central ? 0 : -1;
                a.head = 0;
            }
        r.maps_.assign(r.letters_, std::vector<int>(r.addr_.size(), -1));
        for (int i = 1; i <= r1.letters_; ++i)
            for (int j = 1; j <= r2.letters_; ++j) {
                const int ell = kron_index(i, j, r1.letters_, r2.letters_);
                auto& m = r.maps_[ell - 1];
                for (int x = 0; x < r1.size(); ++x) {
                    int tx = r1.map(i, x);
                    if (tx < 0) continue;
                    for (int y = 0; y < n2; ++y) {
                        int ty = r2.map(j, y);
                        if (ty >= 0)
                            m[static_cast<std::size_t>(x) * n2 + y] =
                                tx * n2 + ty;
                    }
                }
            }
        return r;
    }

    /* Central cycles extracted structurally: from a depth-0 address exactly
       one letter leads to another depth-0 address (the cycle move); orbits
       of that map are the cycles. word[r] is the letter mapping orbit[r] to
       orbit[(r+1) mod L]; both systems under comparison extract with the
       same convention, so rotation matching is consistent. */
    struct ExtractedCycle {
        std::vector<int> orbit;
        Word word;
    };
    std::vector<ExtractedCycle> extract_cycles() const {
        std::vector<ExtractedCycle> out;
        std::vector<char> seen(addr_.size(), 0);
        for (int s = 0; s < size(); ++s) {
            if (addr_[s].depth != 0 || seen[s]) continue;
            ExtractedCycle c;
            int x = s;
            for (;;) {
                seen[x] = 1;
                c.orbit.push_back(x);
                int next = -1, letter = -1;
                for (int i = 1; i <= letters_; ++i) {
                    int y = maps_[i - 1][x];
                    if (y >= 0 && addr_[y].depth == 0) {
                        next = y;
                        letter = i;
                        break;
                    }
                }
                if (next < 0) throw std::logic_error("central address without cycle move");
                c.word.push_back(letter);
                if (next == s) break;
                x = next;
            }
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    int letters_ = 0;
    int depth_ = 0;
    std::vector<Address> addr_;
    std::vector<std::vector<int>> maps_;  // per letter
    std::vector<Word> cycle_words_;
};

struct Decomposition {
    std::vector<CycleWord> components;  // canonical rotations, sorted, with multiplicity

    std::string str() const {
        std::string s;
        for (const CycleWord& c : components) {
            if (!s.empty()) s += "\n";
            s += c.str();
            s += c.primitive() ? " [primitive]" : " [non-primitive]";
        }
        return s.empty() ? "(empty)" : s;
    }
};

/* Tensor decomposition of P(J) (x) P(K): the simultaneous shift on
   Z_p x Z_q has gcd(p,q) orbits of length lcm(p,q); orbit r of anchor
   (0, g) yields the cycle word with letters kron(j_{r mod p}, k_{(g+r) mod q})
   over A kron B. */
inline Decomposition decompose(const CycleWord& j, const CycleWord& k) {
    const int p = j.period(), q = k.period();
    const int g = std::gcd(p, q), l = std::lcm(p, q);
    ZeroOneMatrix product = kronecker(j.context, k.context);
    Decomposition out;
    for (int anchor = 0; anchor < g; ++anchor) {
        Word w(l);
        for (int r = 0; r < l; ++r)
            w[r] = kron_index(j.letters[r % p], k.letters[(anchor + r) % q],
                              j.context.dim(), k.context.dim());
        out.components.push_back(CycleWord(product, w).canonical());
    }
    std::sort(out.components.begin(), out.components.end());
    return out;
}

/* Exact combinatorial isomorphism of the two depth-d systems: the tensor
   product of the standard models of J and K against the disjoint union of
   the standard models of the claimed components. */
inline bool verify_decomposition(const CycleWord& j, const CycleWord& k, const Decomposition& dec,
                                 int depth) {
    ZeroOneMatrix product = kronecker(j.context, k.context);
    for (const CycleWord& c : dec.components)
        if (!(c.context == product)) return false;

    BranchingSystem t = tensor_rep(BranchingSystem::from_cycle(j, depth),
                                   BranchingSystem::from_cycle(k, depth));
    BranchingSystem u = BranchingSystem::from_cycles(product, dec.components, depth);
    if (t.size() != u.size()) return false;

    auto tc = t.extract_cycles();
    auto uc = u.extract_cycles();
    if (tc.size() != uc.size()) return false;

    // initial matching: pair cycles with equal letter sequences up to
    // rotation (one alignment suffices: alignments differ by a symmetry of
    // the word, which extends to a system automorphism)
    std::vector<int> match_t(t.size(), -1), match_u(u.size(), -1);
    std::vector<char> used(uc.size(), 0);
    std::vector<int> queue;
    for (const auto& cyc : tc) {
        const int len = static_cast<int>(cyc.word.size());
        bool placed = false;
        for (std::size_t ui = 0; ui < uc.size() && !placed; ++ui) {
            if (used[ui] || static_cast<int>(uc[ui].word.size()) != len) continue;
            Word doubled = uc[ui].word;
            doubled.insert(doubled.end(), uc[ui].word.begin(), uc[ui].word.end());
            auto it = std::search(doubled.begin(), doubled.end(), cyc.word.begin(), cyc.word.end());
            if (it == doubled.end()) continue;
            int off = static_cast<int>(it - doubled.begin());
            for (int r = 0; r < len; ++r) {
                int a = cyc.orbit[r];
                int b = uc[ui].orbit[(off + r) % len];
                match_t[a] = b;
                match_u[b] = a;
                queue.push_back(a);
            }
            used[ui] = 1;
            placed = true;
        }
        if (!placed) return false;
    }

    // extend over the trees and check every letter map commutes
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        int y = match_t[x];
        for (int i = 1; i <= t.letters(); ++i) {
            int tx = t.map(i, x), ty = u.map(i, y);
            if ((tx < 0) != (ty < 0)) return false;
            if (tx < 0) continue;
            if (match_t[tx] < 0 && match_u[ty] < 0) {
                match_t[tx] = ty;
                match_u[ty] = tx;
                queue.push_back(tx);
            } else if (match_t[tx] != ty || match_u[ty] != tx) {
                return false;
            }
        }
    }
    for (int x = 0; x < t.size(); ++x)
        if (match_t[x] < 0) return false;
    for (int y = 0; y < u.size(); ++y)
        if (match_u[y] < 0) return false;
    return true;
}

}  // namespace ckstar
