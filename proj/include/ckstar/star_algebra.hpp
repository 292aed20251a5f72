#pragma once

/*
 * Exact symbolic arithmetic in the dense *-subalgebra O_A^(0) generated by
 * the partial isometries s_1, ..., s_n of a Cuntz-Krieger algebra:
 *
 *     s_i^* s_i = sum_j a_ij s_j s_j^*        sum_i s_i s_i^* = I
 *
 * Elements are finite linear combinations over Gaussian rationals of
 * monomials s_J s_K^* (J, K admissible words). Two relations drive all
 * rewriting; both are instances of
 *
 *     s_J s_K^* = sum_i chi(J,i) chi(K,i) s_{J.i} s_{K.i}^*
 *
 * where chi(W, i) = a[last(W), i] (and 1 for the empty word). The canonical
 * form per gauge degree |J| - |K| first levels every monomial up to the
 * maximal source length present, merges, then collapses complete families
 * back down. Leveled monomials of fixed degree and length are linearly
 * independent, so normal-form equality decides equality in O_A^(0); the
 * collapse makes the form representative-independent. Partial families
 * (proper subsums of a range projection) never collapse.
 *
 * For the 1x1 context the whole algebra is the scalars: s_1^(1) = I, and
 * every monomial normalizes to the unit.
 */

#include "ckstar/scalar.hpp"
#include "ckstar/zero_one_matrix.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ckstar {

using Word = std::vector<int>;  // letters, 1-based

inline bool word_admissible(const ZeroOneMatrix& a, const Word& w) {
    for (int t : w)
        if (t < 1 || t > a.dim()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!a.at(w[i], w[i + 1])) return false;
    return true;
}

/* chi(W, i): may the word W be extended by letter i. */
inline bool word_extends(const ZeroOneMatrix& a, const Word& w, int i) {
    return w.empty() || a.at(w.back(), i);
}

/* s_J s_K^*. Plain data; admissibility and nonvanishing are enforced when
   terms enter an AlgebraElement. */
struct Monomial {
    Word target;  // J
    Word source;  // K

    int degree() const { return static_cast<int>(target.size()) - static_cast<int>(source.size()); }
    int level() const { return static_cast<int>(source.size()); }
    bool is_unit() const { return target.empty() && source.empty(); }
    bool is_projection() const { return target == source; }

    Monomial adjoint() const { return {source, target}; }

    /* Term order: gauge degree, then source length, then lexicographic
       target, then lexicographic source. Printing follows this order. */
    friend bool operator<(const Monomial& x, const Monomial& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        if (x.source.size() != y.source.size()) return x.source.size() < y.source.size();
        if (x.target != y.target) return x.target < y.target;
        return x.source < y.source;
    }
    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.target == y.target && x.source == y.source;
    }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

    std::string str() const {
        if (is_unit()) return "I";
        std::string s;
        for (int j : target) {
            if (!s.empty()) s += ' ';
            s += "s" + std::to_string(j);
        }
        for (auto it = source.rbegin(); it != source.rend(); ++it) {
            if (!s.empty()) s += ' ';
            s += "s" + std::to_string(*it) + "*";
        }
        return s;
    }
};

using RawTerms = std::vector<std::pair<Monomial, GaussianRational>>;
using TermMap = std::map<Monomial, GaussianRational>;

namespace detail {

/* Does s_J s_K^* vanish: it is nonzero iff the range projections of the
   last letters overlap, i.e. some letter extends both words. */
inline bool monomial_nonvanishing(const ZeroOneMatrix& a, const Monomial& m) {
    for (int i = 1; i <= a.dim(); ++i)
        if (word_extends(a, m.target, i) && word_extends(a, m.source, i)) return true;
    return false;
}

inline void add_term(TermMap& map, Monomial m, const GaussianRational& c) {
    auto [it, inserted] = map.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) map.erase(it);
    }
}

/* Canonical form of a raw term list. See the header comment for the scheme. */
inline TermMap normalize_terms(const ZeroOneMatrix& a, const RawTerms& raw) {
    const int n = a.dim();

    if (n == 1) {
        // O_1 = C: every monomial is the unit
        GaussianRational total;
        for (const auto& [m, c] : raw) total += c;
        TermMap out;
        if (!total.is_zero()) out.emplace(Monomial{}, total);
        return out;
    }

    // bucket valid terms by gauge degree
    std::map<int, RawTerms> by_degree;
    for (const auto& [m, c] : raw) {
        if (c.is_zero()) continue;
        if (!word_admissible(a, m.target) || !word_admissible(a, m.source)) continue;
        if (!monomial_nonvanishing(a, m)) continue;
        by_degree[m.degree()].emplace_back(m, c);
    }

    TermMap out;
    for (auto& [deg, terms] : by_degree) {
        int max_level = 0;
        for (const auto& [m, c] : terms) max_level = std::max(max_level, m.level());

        // level every term up to the common source length
        TermMap leveled;
        std::vector<std::pair<Monomial, GaussianRational>> stack(terms.begin(), terms.end());
        while (!stack.empty()) {
            auto [m, c] = std::move(stack.back());
            stack.pop_back();
            if (m.level() == max_level) {
                add_term(leveled, std::move(m), c);
                continue;
            }
            for (int i = 1; i <= n; ++i) {
                if (!word_extends(a, m.target, i) || !word_extends(a, m.source, i)) continue;
                Monomial ext = m;
                ext.target.push_back(i);
                ext.source.push_back(i);
                stack.emplace_back(std::move(ext), c);
            }
        }

        // collapse complete equal-coefficient families, top level first
        for (int lvl = max_level; lvl >= 1; --lvl) {
            // candidate parents: strip the shared last letter
            std::map<Monomial, std::vector<TermMap::iterator>> families;
            for (auto it = leveled.begin(); it != leveled.end(); ++it) {
                const Monomial& m = it->first;
                if (m.level() != lvl || m.target.empty()) continue;
                if (m.target.back() != m.source.back()) continue;
                Monomial parent{Word(m.target.begin(), m.target.end() - 1),
                                Word(m.source.begin(), m.source.end() - 1)};
                families[std::move(parent)].push_back(it);
            }
            for (auto& [parent, children] : families) {
                int allowed = 0;
                for (int i = 1; i <= n; ++i)
                    if (word_extends(a, parent.target, i) && word_extends(a, parent.source, i))
                        ++allowed;
                if (static_cast<int>(children.size()) != allowed) continue;
                const GaussianRational& c = children.front()->second;
                bool uniform = true;
                for (const auto& it : children)
                    if (!(it->second == c)) uniform = false;
                if (!uniform) continue;
                GaussianRational coeff = c;
                for (const auto& it : children) leveled.erase(it);
                add_term(leveled, parent, coeff);
            }
        }

        for (auto& [m, c] : leveled) out.emplace(m, std::move(c));
    }
    return out;
}

/* Product of two monomials as raw terms. The middle factor s_K^* s_L is a
   word, an adjoint word, the unit, or the projection Q_q = s_q^* s_q when
   K = L exactly; the projection case levels up by one letter. */
inline void monomial_product(const ZeroOneMatrix& a, const Monomial& x, const Monomial& y,
                             const GaussianRational& coeff, RawTerms& out) {
    const Word& k = x.source;
    const Word& l = y.target;
    const std::size_t overlap = std::min(k.size(), l.size());
    for (std::size_t t = 0; t < overlap; ++t)
        if (k[t] != l[t]) return;  // orthogonal ranges: product is zero

    if (l.size() > k.size()) {
        Word tail(l.begin() + k.size(), l.end());
        if (!word_extends(a, x.target, tail.front())) return;
        Monomial m{x.target, y.source};
        m.target.insert(m.target.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(m), coeff);
    } else if (k.size() > l.size()) {
        Word tail(k.begin() + l.size(), k.end());
        if (!word_extends(a, y.source, tail.front())) return;
        Monomial m{x.target, y.source};
        m.source.insert(m.source.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(m), coeff);
    } else if (k.empty()) {
        out.emplace_back(Monomial{x.target, y.source}, coeff);
    } else {
        // s_K^* s_K = Q_{last(K)}, inserted between the outer words
        const int q = k.back();
        for (int i = 1; i <= a.dim(); ++i) {
            if (!a.at(q, i)) continue;
            if (!word_extends(a, x.target, i) || !word_extends(a, y.source, i)) continue;
            Monomial m{x.target, y.source};
            m.target.push_back(i);
            m.source.push_back(i);
            out.emplace_back(std::move(m), coeff);
        }
    }
}

}  // namespace detail

class AlgebraElement {
public:
    explicit AlgebraElement(ZeroOneMatrix context) : context_(std::move(context)) {}

    static AlgebraElement zero(ZeroOneMatrix context) { return AlgebraElement(std::move(context)); }

    static AlgebraElement unit(ZeroOneMatrix context) {
        return from_terms(std::move(context), {{Monomial{}, GaussianRational(1)}});
    }

    static AlgebraElement generator(ZeroOneMatrix context, int i) {
        if (i < 1 || i > context.dim())
            throw std::out_of_range("generator index " + std::to_string(i) + " exceeds dimension " +
                                    std::to_string(context.dim()));
        return from_terms(std::move(context), {{Monomial{Word{i}, Word{}}, GaussianRational(1)}});
    }

    /* Normalizing constructor: accepts any raw term list. Inadmissible words
       and vanishing pairs are silently zero, matching the algebra. */
    static AlgebraElement from_terms(ZeroOneMatrix context, const RawTerms& raw) {
        AlgebraElement e(std::move(context));
        e.terms_ = detail::normalize_terms(e.context_, raw);
        return e;
    }

    /* The projection s_J s_J^* for an admissible word J. */
    static AlgebraElement cylinder(ZeroOneMatrix context, const Word& j) {
        if (!word_admissible(context, j))
            throw std::invalid_argument("cylinder: word is not admissible");
        return from_terms(std::move(context), {{Monomial{j, j}, GaussianRational(1)}});
    }

    /* s_J for an admissible word J (zero element when J is inadmissible). */
    static AlgebraElement word(ZeroOneMatrix context, const Word& j) {
        return from_terms(std::move(context), {{Monomial{j, Word{}}, GaussianRational(1)}});
    }

    const ZeroOneMatrix& context() const { return context_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /* Coefficient of the unit monomial; for the 1x1 context this is the
       scalar value of the element. */
    GaussianRational unit_coefficient() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        require_same_context(o);
        RawTerms raw = raw_terms();
        for (const auto& [m, c] : o.terms_) raw.emplace_back(m, c);
        return from_terms(context_, raw);
    }

    AlgebraElement operator-(const AlgebraElement& o) const {
        require_same_context(o);
        RawTerms raw = raw_terms();
        for (const auto& [m, c] : o.terms_) raw.emplace_back(m, -c);
        return from_terms(context_, raw);
    }

    AlgebraElement operator*(const AlgebraElement& o) const {
        require_same_context(o);
        RawTerms raw;
        for (const auto& [mx, cx] : terms_)
            for (const auto& [my, cy] : o.terms_)
                detail::monomial_product(context_, mx, my, cx * cy, raw);
        return from_terms(context_, raw);
    }

    AlgebraElement scaled(const GaussianRational& s) const {
        RawTerms raw;
        for (const auto& [m, c] : terms_) raw.emplace_back(m, c * s);
        return from_terms(context_, raw);
    }

    AlgebraElement adjoint() const {
        RawTerms raw;
        for (const auto& [m, c] : terms_) raw.emplace_back(m.adjoint(), c.conj());
        return from_terms(context_, raw);
    }

    /* Split by gauge degree |J| - |K|; the components sum back to *this. */
    std::map<int, AlgebraElement> gauge_components() const {
        std::map<int, RawTerms> split;
        for (const auto& [m, c] : terms_) split[m.degree()].emplace_back(m, c);
        std::map<int, AlgebraElement> out;
        for (auto& [d, raw] : split) out.emplace(d, from_terms(context_, raw));
        return out;
    }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.context_ == y.context_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            GaussianRational cc = c;
            bool negative = false;
            // pull a leading minus out of purely real or purely imaginary coefficients
            if ((cc.is_real() && cc.real() < 0) || (cc.real() == 0 && cc.imag() < 0)) {
                negative = true;
                cc = -cc;
            }
            std::string coeff;
            if (cc == GaussianRational(1)) coeff = "";          // bare monomial
            else if (cc.is_real() || cc.real() == 0) coeff = cc.str();  // "2/3", "2i", "i"
            else coeff = "(" + cc.str() + ")";
            if (s.empty()) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            if (!coeff.empty()) s += coeff + " ";
            s += m.str();
        }
        return s;
    }

    RawTerms raw_terms() const { return RawTerms(terms_.begin(), terms_.end()); }

private:
    void require_same_context(const AlgebraElement& o) const {
        if (!(context_ == o.context_))
            throw std::invalid_argument("AlgebraElement: context matrices differ");
    }

    ZeroOneMatrix context_;
    TermMap terms_;
};

}  // namespace ckstar
