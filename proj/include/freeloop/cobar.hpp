#pragma once

#include <vector>

#include "freeloop/coalgebra.hpp"

namespace freeloop {

/// Word in the cobar construction Omega(C): concatenation of desuspended
/// positive basis elements of C.  The empty word is the algebra unit.
using OmegaWord = std::vector<int>;
using OmegaElement = LinComb<OmegaWord>;

/// |s^{-1}c| = |c| + 1 (upper indices).
inline int omega_letter_degree(const FiniteCoalgebra& c, int i)
{
    if (i <= 0 || i >= c.size())
        throw validation_error("cobar letter must be a positive basis element of " + c.name());
    return c.degree(i) + 1;
}

inline int omega_degree(const FiniteCoalgebra& c, const OmegaWord& w)
{
    int d = 0;
    for (int i : w)
        d += omega_letter_degree(c, i);
    return d;
}

/// d on the generator s^{-1}c: -s^{-1}(dc) plus the desuspended reduced
/// coproduct, with the Koszul sign (-1)^{|a|} on each a (x) b term.
inline OmegaElement cobar_differential_generator(const FiniteCoalgebra& c, int i)
{
    OmegaElement out;
    for (const auto& [j, v] : c.d(i))
        add_term(out, OmegaWord{j}, -v);
    for (const auto& [ab, v] : c.reduced_coproduct(i))
        add_term(out, OmegaWord{ab.first, ab.second}, v * parity_sign(c.degree(ab.first)));
    return out;
}

/// Derivation extension over the concatenation product.
inline OmegaElement cobar_differential(const FiniteCoalgebra& c, const OmegaWord& w)
{
    OmegaElement out;
    int passed = 0;
    for (size_t pos = 0; pos < w.size(); ++pos) {
        Int sign = parity_sign(passed);
        for (const auto& [piece, v] : cobar_differential_generator(c, w[pos])) {
            OmegaWord u;
            u.reserve(w.size() + 1);
            u.insert(u.end(), w.begin(), w.begin() + pos);
            u.insert(u.end(), piece.begin(), piece.end());
            u.insert(u.end(), w.begin() + pos + 1, w.end());
            add_term(out, u, sign * v);
        }
        passed += omega_letter_degree(c, w[pos]);
    }
    return out;
}

inline OmegaElement cobar_differential(const FiniteCoalgebra& c, const OmegaElement& x)
{
    return map_terms<OmegaWord>(x, [&](const OmegaWord& w) { return cobar_differential(c, w); });
}

inline OmegaElement omega_concat(const OmegaWord& a, const OmegaWord& b)
{
    OmegaWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return OmegaElement{{w, 1}};
}

/// All cobar words of the exact given degree.
inline std::vector<OmegaWord> omega_words_of_degree(const FiniteCoalgebra& c, int target)
{
    std::vector<OmegaWord> out;
    OmegaWord acc;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (int i : c.positive_elements()) {
            int d = omega_letter_degree(c, i);
            if (d <= remaining) {
                acc.push_back(i);
                self(self, remaining - d);
                acc.pop_back();
            }
        }
    };
    rec(rec, target);
    return out;
}

inline std::string describe_omega_word(const FiniteCoalgebra& c, const OmegaWord& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ".";
        s += "<" + c.label(w[i]) + ">";
    }
    return s;
}

} // namespace freeloop
