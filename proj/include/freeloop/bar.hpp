#pragma once

#include <vector>

#include "freeloop/algebra.hpp"

namespace freeloop {

/// Word sx_1|...|sx_n in the bar construction: the letters are positive
/// generator ids of the underlying algebra.  The empty word is the counit 1.
using BarWord = std::vector<int>;
using BarElement = LinComb<BarWord>;

/// Degree of the suspended letter: |sx| = |x| - 1 (upper indices).
inline int bar_letter_degree(const PresentedAlgebra& a, int g)
{
    if (g <= 0 || g >= a.generator_count())
        throw validation_error("bar letter is not a positive generator of " + a.name());
    return a.degree(g) - 1;
}

inline int bar_degree(const PresentedAlgebra& a, const BarWord& w)
{
    int d = 0;
    for (int g : w)
        d += bar_letter_degree(a, g);
    return d;
}

/// All n+1 splittings (prefix, suffix), including the trivial ones, in order.
inline std::vector<std::pair<BarWord, BarWord>> deconcatenate(const BarWord& w)
{
    std::vector<std::pair<BarWord, BarWord>> out;
    for (size_t i = 0; i <= w.size(); ++i)
        out.emplace_back(BarWord(w.begin(), w.begin() + i), BarWord(w.begin() + i, w.end()));
    return out;
}

namespace detail {

inline void shuffle_rec(const PresentedAlgebra& a, const BarWord& w1, size_t i1, int rest1_deg,
                        const BarWord& w2, size_t i2, BarWord& acc, const Int& sign,
                        BarElement& out)
{
    if (i1 == w1.size() && i2 == w2.size()) {
        add_term(out, acc, sign);
        return;
    }
    if (i1 < w1.size()) {
        acc.push_back(w1[i1]);
        shuffle_rec(a, w1, i1 + 1, rest1_deg - bar_letter_degree(a, w1[i1]), w2, i2, acc, sign,
                    out);
        acc.pop_back();
    }
    if (i2 < w2.size()) {
        // a letter of w2 moves past everything left in w1
        Int s = sign * parity_sign(static_cast<long long>(bar_letter_degree(a, w2[i2])) *
                                   rest1_deg);
        acc.push_back(w2[i2]);
        shuffle_rec(a, w1, i1, rest1_deg, w2, i2 + 1, acc, s, out);
        acc.pop_back();
    }
}

} // namespace detail

/// Shuffle product: sum over (n1, n2)-shuffles with Koszul signs computed
/// from the bar degrees of the letters.
inline BarElement shuffle_product(const PresentedAlgebra& a, const BarWord& w1, const BarWord& w2)
{
    BarElement out;
    BarWord acc;
    acc.reserve(w1.size() + w2.size());
    detail::shuffle_rec(a, w1, 0, bar_degree(a, w1), w2, 0, acc, Int(1), out);
    return out;
}

inline BarElement shuffle_product(const PresentedAlgebra& a, const BarElement& x,
                                  const BarElement& y)
{
    BarElement out;
    for (const auto& [w1, c1] : x)
        for (const auto& [w2, c2] : y)
            add_scaled(out, c1 * c2, shuffle_product(a, w1, w2));
    return out;
}

/// Bar differential: the coderivation of the deconcatenation coproduct whose
/// linear part sends sx to -s(dx) and sx|sy to (-1)^{|x|+1} s(x*y).  A local
/// term acting at position i picks up the Koszul sign of the bar degrees of
/// the letters it passes.
inline BarElement bar_differential(const PresentedAlgebra& a, const BarWord& w)
{
    BarElement out;
    int passed = 0; // bar degree of letters before position i
    for (size_t i = 0; i < w.size(); ++i) {
        Int prefix = parity_sign(passed);
        // internal term: replace x_i by the generators of d(x_i)
        for (const auto& [h, c] : a.d_generator(w[i])) {
            BarWord v = w;
            v[i] = h;
            add_term(out, v, prefix * Int(-1) * c);
        }
        // merge term: replace x_i, x_{i+1} by the generators of x_i * x_{i+1}
        if (i + 1 < w.size()) {
            Int local = parity_sign(a.degree(w[i]) + 1);
            for (const auto& [h, c] : a.mul_generators(w[i], w[i + 1])) {
                BarWord v;
                v.reserve(w.size() - 1);
                v.insert(v.end(), w.begin(), w.begin() + i);
                v.push_back(h);
                v.insert(v.end(), w.begin() + i + 2, w.end());
                add_term(out, v, prefix * local * c);
            }
        }
        passed += bar_letter_degree(a, w[i]);
    }
    return out;
}

inline BarElement bar_differential(const PresentedAlgebra& a, const BarElement& x)
{
    return map_terms<BarWord>(x, [&](const BarWord& w) { return bar_differential(a, w); });
}

/// All bar words of the given exact bar degree, lexicographic DFS order.
inline std::vector<BarWord> bar_words_of_degree(const PresentedAlgebra& a, int target)
{
    std::vector<BarWord> out;
    BarWord acc;
    auto gens = a.positive_generators();
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (int g : gens) {
            int d = bar_letter_degree(a, g);
            if (d <= remaining) {
                acc.push_back(g);
                self(self, remaining - d);
                acc.pop_back();
            }
        }
    };
    rec(rec, target);
    return out;
}

inline std::vector<BarWord> bar_words_up_to_degree(const PresentedAlgebra& a, int max)
{
    std::vector<BarWord> out;
    for (int b = 0; b <= max; ++b) {
        auto words = bar_words_of_degree(a, b);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

inline std::string describe_word(const PresentedAlgebra& a, const BarWord& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += "|";
        s += "s" + a.label(w[i]);
    }
    return s;
}

} // namespace freeloop
