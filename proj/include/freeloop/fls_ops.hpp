#pragma once

#include "freeloop/bar.hpp"

namespace freeloop {

/// Basis element y (x) sx_1|...|sx_n of the thin free loop model: a
/// generator (possibly the unit) tensor a bar word.
using FlsBasis = std::pair<int, BarWord>;
using FlsElement = LinComb<FlsBasis>;

inline int fls_degree(const PresentedAlgebra& a, const FlsBasis& b)
{
    return a.degree(b.first) + bar_degree(a, b.second);
}

inline std::string describe_fls(const PresentedAlgebra& a, const FlsBasis& b)
{
    return a.label(b.first) + "(x)" + describe_word(a, b.second);
}

/// Hochschild differential of the commutative algebra:
///   dy (x) c + (-1)^y y (x) d_B c
///   + (-1)^y [ y x_1 (x) sx_2|...|sx_n - (-1)^N y x_n (x) sx_1|...|sx_{n-1} ]
/// with N = (1 + |x_n|)(n - 1 + sum_{j<n} |x_j|).
inline FlsElement hochschild_differential(const PresentedAlgebra& a, const FlsBasis& b)
{
    const auto& [y, w] = b;
    FlsElement out;
    for (const auto& [h, c] : a.d_generator(y))
        add_term(out, FlsBasis{h, w}, c);
    Int ysign = parity_sign(a.degree(y));
    for (const auto& [v, c] : bar_differential(a, w))
        add_term(out, FlsBasis{y, v}, ysign * c);
    size_t n = w.size();
    if (n >= 1) {
        BarWord tail(w.begin() + 1, w.end());
        for (const auto& [h, c] : a.mul_generators(y, w.front()))
            add_term(out, FlsBasis{h, tail}, ysign * c);
        BarWord head(w.begin(), w.end() - 1);
        long long inner = static_cast<long long>(n) - 1;
        for (size_t j = 0; j + 1 < n; ++j)
            inner += a.degree(w[j]);
        Int rot = parity_sign((1 + static_cast<long long>(a.degree(w.back()))) * inner);
        for (const auto& [h, c] : a.mul_generators(y, w.back()))
            add_term(out, FlsBasis{h, head}, Int(-1) * rot * ysign * c);
    }
    return out;
}

inline FlsElement hochschild_differential(const PresentedAlgebra& a, const FlsElement& x)
{
    return map_terms<FlsBasis>(x,
                               [&](const FlsBasis& b) { return hochschild_differential(a, b); });
}

/// Degree -1 cyclic rotation operator S:
///   S(y (x) 1) = 1 (x) sy,   S(1 (x) c) = 0,
///   S(y (x) sx_1|...|sx_n) = sum_j +- 1 (x) sx_j|...|sx_n|sy|sx_1|...|sx_{j-1}.
/// Term j carries the Koszul sign of rotating the block sy|sx_1|...|sx_{j-1}
/// past sx_j|...|sx_n (bar degrees); the j = n+1 term sy|sx_1|...|sx_n is
/// positive, matching S(x (x) sy) = 1 (x) sx * sy.
inline FlsElement cyclic_S(const PresentedAlgebra& a, const FlsBasis& b)
{
    const auto& [y, w] = b;
    if (y == PresentedAlgebra::unit_id)
        return {};
    FlsElement out;
    size_t n = w.size();
    int sy = a.degree(y) - 1;
    std::vector<int> beta(n + 1, 0); // bar degree of the first k letters
    for (size_t k = 0; k < n; ++k)
        beta[k + 1] = beta[k] + bar_letter_degree(a, w[k]);
    for (size_t j = 1; j <= n + 1; ++j) {
        BarWord v;
        v.reserve(n + 1);
        v.insert(v.end(), w.begin() + (j - 1), w.end());
        v.push_back(y);
        v.insert(v.end(), w.begin(), w.begin() + (j - 1));
        Int sign = parity_sign(static_cast<long long>(sy + beta[j - 1]) * (beta[n] - beta[j - 1]));
        add_term(out, FlsBasis{PresentedAlgebra::unit_id, v}, sign);
    }
    return out;
}

inline FlsElement cyclic_S(const PresentedAlgebra& a, const FlsElement& x)
{
    return map_terms<FlsBasis>(x, [&](const FlsBasis& b) { return cyclic_S(a, b); });
}

/// The squaring model Id (x) (shuffle o deconcatenate): every splitting of
/// the word is shuffled back together; the two extreme splittings give the
/// 2 a (x) c term.
inline FlsElement power_map(const PresentedAlgebra& a, const FlsBasis& b)
{
    const auto& [y, w] = b;
    FlsElement out;
    for (const auto& [prefix, suffix] : deconcatenate(w))
        for (const auto& [v, c] : shuffle_product(a, prefix, suffix))
            add_term(out, FlsBasis{y, v}, c);
    return out;
}

inline FlsElement power_map(const PresentedAlgebra& a, const FlsElement& x)
{
    return map_terms<FlsBasis>(x, [&](const FlsBasis& b) { return power_map(a, b); });
}

/// All fls basis elements of the exact given degree, grouped by coefficient
/// generator then word order.
inline std::vector<FlsBasis> fls_basis_of_degree(const PresentedAlgebra& a, int degree)
{
    std::vector<FlsBasis> out;
    for (int y = 0; y < a.generator_count(); ++y) {
        int rest = degree - a.degree(y);
        if (rest < 0)
            continue;
        for (const auto& w : bar_words_of_degree(a, rest))
            out.push_back({y, w});
    }
    return out;
}

} // namespace freeloop
