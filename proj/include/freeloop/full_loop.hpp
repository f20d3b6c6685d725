#pragma once

#include <map>
#include <vector>

#include "freeloop/fls_ops.hpp"

namespace freeloop {

/// Monomial in the cobar construction on the bar coalgebra: a product of
/// generators s^{-1}(word), each word a nonempty bar word.
using OmegaBarMonomial = std::vector<BarWord>;

/// Basis element (monomial) (x) (bar word) of the twisted algebra extension.
using LoopBasis = std::pair<OmegaBarMonomial, BarWord>;
using LoopElement = LinComb<LoopBasis>;

/// The full free-loop model in the strictly commutative case.  The
/// differential restricted to 1 (x) BarWord follows the split-and-act
/// recursion; on a general monomial it extends so that it commutes with the
/// free right action of the cobar factor.  Values on 1 (x) w are memoized.
class FullLoopModel {
  public:
    FullLoopModel(const PresentedAlgebra& a, int max_bar_degree)
        : a_(&a), bound_(max_bar_degree)
    {
        a.require_restricted();
    }

    const PresentedAlgebra& algebra() const { return *a_; }

    int generator_degree(const BarWord& w) const { return bar_degree(*a_, w) + 1; }

    int monomial_degree(const OmegaBarMonomial& m) const
    {
        int d = 0;
        for (const auto& w : m)
            d += generator_degree(w);
        return d;
    }

    int degree(const LoopBasis& b) const
    {
        return monomial_degree(b.first) + bar_degree(*a_, b.second);
    }

    /// Cobar differential on the generator s^{-1}w:
    ///   -s^{-1}(d_B w) + sum over proper splittings with sign (-1)^{|w'|}.
    LinComb<OmegaBarMonomial> omega_differential_generator(const BarWord& w) const
    {
        LinComb<OmegaBarMonomial> out;
        for (const auto& [v, c] : bar_differential(*a_, w))
            add_term(out, OmegaBarMonomial{v}, -c);
        for (size_t i = 1; i < w.size(); ++i) {
            BarWord left(w.begin(), w.begin() + i);
            BarWord right(w.begin() + i, w.end());
            add_term(out, OmegaBarMonomial{left, right}, parity_sign(bar_degree(*a_, left)));
        }
        return out;
    }

    LinComb<OmegaBarMonomial> omega_differential(const OmegaBarMonomial& m) const
    {
        LinComb<OmegaBarMonomial> out;
        int passed = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            Int sign = parity_sign(passed);
            for (const auto& [piece, c] : omega_differential_generator(m[i])) {
                OmegaBarMonomial u;
                u.reserve(m.size() + 1);
                u.insert(u.end(), m.begin(), m.begin() + i);
                u.insert(u.end(), piece.begin(), piece.end());
                u.insert(u.end(), m.begin() + i + 1, m.end());
                add_term(out, u, sign * c);
            }
            passed += generator_degree(m[i]);
        }
        return out;
    }

    /// Left action of the generator s^{-1}(a) on 1 (x) sx_1|...|sx_n:
    ///   s^{-1}a (x) w
    ///   - sum_j [ s^{-1}(a * w_{<=j}) . (1 (x) w_{>j})
    ///             + (-1)^{theta_j (theta_n - theta_j)} s^{-1}(a * w_{>j}) (x) w_{<=j} ]
    /// with theta_j = j + |x_1| + ... + |x_j|.
    LoopElement left_action_generator(const BarWord& a, const BarWord& w)
    {
        guard(a);
        guard(w);
        LoopElement out;
        add_term(out, LoopBasis{OmegaBarMonomial{a}, w}, 1);
        size_t n = w.size();
        if (n < 2)
            return out;
        long long theta_n = theta(w, n);
        for (size_t j = 1; j <= n - 1; ++j) {
            BarWord prefix(w.begin(), w.begin() + j);
            BarWord suffix(w.begin() + j, w.end());
            for (const auto& [u, c] : shuffle_product(*a_, a, prefix))
                for (const auto& [key, c2] : left_action_generator(u, suffix))
                    add_term(out, key, Int(-1) * c * c2);
            long long theta_j = theta(w, j);
            Int sign = parity_sign(theta_j * (theta_n - theta_j));
            for (const auto& [u, c] : shuffle_product(*a_, a, suffix))
                add_term(out, LoopBasis{OmegaBarMonomial{u}, prefix}, Int(-1) * sign * c);
        }
        return out;
    }

    /// Differential on 1 (x) w.
    const LoopElement& differential_of_word(const BarWord& w)
    {
        auto it = cache_.find(w);
        if (it != cache_.end())
            return it->second;
        guard(w);
        LoopElement out;
        for (const auto& [v, c] : bar_differential(*a_, w))
            add_term(out, LoopBasis{OmegaBarMonomial{}, v}, c);
        size_t n = w.size();
        if (n >= 2) {
            long long theta_n = theta(w, n);
            for (size_t j = 1; j <= n - 1; ++j) {
                BarWord prefix(w.begin(), w.begin() + j);
                BarWord suffix(w.begin() + j, w.end());
                for (const auto& [key, c] : left_action_generator(prefix, suffix))
                    add_term(out, key, c);
                long long theta_j = theta(w, j);
                Int sign = parity_sign(theta_j * (theta_n - theta_j));
                add_term(out, LoopBasis{OmegaBarMonomial{suffix}, prefix}, Int(-1) * sign);
            }
        }
        return cache_.emplace(w, std::move(out)).first->second;
    }

    /// Differential on a general basis element, extended so that it commutes
    /// with the free right action of the cobar factor:
    ///   D(m (x) b) = d_Omega(m) (x) b
    ///                + sum_i (-1)^{|m| (|m_i| + 1)} (m . m_i) (x) b_i
    /// where D(1 (x) b) = sum_i m_i (x) b_i.
    LoopElement differential(const LoopBasis& b)
    {
        LoopElement out;
        for (const auto& [m, c] : omega_differential(b.first))
            add_term(out, LoopBasis{m, b.second}, c);
        long long mdeg = monomial_degree(b.first);
        for (const auto& [key, c] : differential_of_word(b.second)) {
            OmegaBarMonomial prod = b.first;
            prod.insert(prod.end(), key.first.begin(), key.first.end());
            Int sign = parity_sign(mdeg * (monomial_degree(key.first) + 1));
            add_term(out, LoopBasis{std::move(prod), key.second}, sign * c);
        }
        return out;
    }

    LoopElement differential(const LoopElement& x)
    {
        LoopElement out;
        for (const auto& [b, c] : x)
            add_scaled(out, c, differential(b));
        return out;
    }

    /// Counit of the cobar-bar adjunction: s^{-1}(sx) -> x, longer words to
    /// zero, extended as an algebra map over monomials.
    AlgElem counit(const OmegaBarMonomial& m) const
    {
        AlgElem acc{{PresentedAlgebra::unit_id, 1}};
        for (const auto& w : m) {
            if (w.size() != 1)
                return {};
            acc = a_->mul(acc, AlgElem{{w[0], 1}});
            if (acc.empty())
                return {};
        }
        return acc;
    }

    /// Linearization (counit (x) Id) onto the thin model.
    FlsElement linearize(const LoopElement& x) const
    {
        FlsElement out;
        for (const auto& [b, c] : x)
            for (const auto& [g, v] : counit(b.first))
                add_term(out, FlsBasis{g, b.second}, c * v);
        return out;
    }

  private:
    long long theta(const BarWord& w, size_t j) const
    {
        long long t = static_cast<long long>(j);
        for (size_t i = 0; i < j; ++i)
            t += a_->degree(w[i]);
        return t;
    }

    void guard(const BarWord& w) const
    {
        if (bar_degree(*a_, w) > bound_)
            throw validation_error("free-loop recursion left the truncation (bar degree " +
                                   std::to_string(bar_degree(*a_, w)) + " > bound " +
                                   std::to_string(bound_) + ")");
    }

    const PresentedAlgebra* a_;
    int bound_;
    std::map<BarWord, LoopElement> cache_;
};

} // namespace freeloop
