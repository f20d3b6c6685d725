#pragma once

#include <map>
#include <vector>

#include "freeloop/cobar.hpp"
#include "freeloop/complex.hpp"

namespace freeloop {

/// Twisting cochain t : C -> Omega(C'), given on the basis of C.  In upper
/// indices t raises degree by one.  The defining identity
///     dt + td = mu (t (x) t) Delta
/// is verified on every basis element, never assumed.
class TwistingCochain {
  public:
    TwistingCochain(const FiniteCoalgebra& source, const FiniteCoalgebra& target_coalgebra,
                    std::map<int, OmegaElement> values)
        : source_(&source), target_(&target_coalgebra), values_(std::move(values))
    {
        validate();
    }

    /// The universal example: t(c) = s^{-1}c into Omega(C).
    static TwistingCochain universal(const FiniteCoalgebra& c)
    {
        std::map<int, OmegaElement> vals;
        for (int i : c.positive_elements())
            vals[i] = OmegaElement{{OmegaWord{i}, 1}};
        return TwistingCochain(c, c, std::move(vals));
    }

    static TwistingCochain zero(const FiniteCoalgebra& c) { return TwistingCochain(c, c, {}); }

    const FiniteCoalgebra& source() const { return *source_; }
    const FiniteCoalgebra& target() const { return *target_; }

    OmegaElement apply(int basis_element) const
    {
        auto it = values_.find(basis_element);
        return it == values_.end() ? OmegaElement{} : it->second;
    }

  private:
    void validate()
    {
        for (int i = 0; i < source_->size(); ++i) {
            const OmegaElement t_i = apply(i);
            for (const auto& [w, v] : t_i)
                if (omega_degree(*target_, w) != source_->degree(i) + 1)
                    throw validation_error("twisting cochain is not homogeneous at '" +
                                           source_->label(i) + "'");
            // dt + td
            OmegaElement lhs = cobar_differential(*target_, t_i);
            for (const auto& [j, v] : source_->d(i))
                add_scaled(lhs, v, apply(j));
            // mu (t (x) t) Delta; counit terms die since t(1) = 0
            OmegaElement rhs;
            for (const auto& [ab, v] : source_->reduced_coproduct(i)) {
                Int sign = parity_sign(source_->degree(ab.first));
                for (const auto& [wa, va] : apply(ab.first))
                    for (const auto& [wb, vb] : apply(ab.second))
                        add_scaled(rhs, v * sign * va * vb, omega_concat(wa, wb));
            }
            if (lhs != rhs)
                throw validation_error("twisting cochain condition dt+td = mu(t(x)t)Delta fails "
                                       "on basis element '" +
                                       source_->label(i) + "'");
        }
    }

    const FiniteCoalgebra* source_;
    const FiniteCoalgebra* target_;
    std::map<int, OmegaElement> values_;
};

/// Twisted tensor product Omega(C') (x)_t C as a truncated complex on
/// degrees 0..N.  The differential is
///     D_t(w (x) c) = dw (x) c + (-1)^{|w|} w (x) dc + (-1)^{|w|} w t(c_(1)) (x) c_(2)
/// summed over the full coproduct; the sign of the twisting term is the one
/// that makes the acyclic cobar construction acyclic.
inline TruncatedComplex twisted_tensor(const TwistingCochain& t, int max_degree)
{
    const FiniteCoalgebra& src = t.source();
    const FiniteCoalgebra& tgt = t.target();

    using Key = std::pair<OmegaWord, int>;
    std::vector<std::vector<Key>> basis(max_degree + 1);
    std::vector<std::map<Key, int>> ordinal(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        for (int cdeg = 0; cdeg <= n; ++cdeg) {
            std::vector<int> cs;
            for (int i = 0; i < src.size(); ++i)
                if (src.degree(i) == cdeg)
                    cs.push_back(i);
            if (cs.empty())
                continue;
            for (const OmegaWord& w : omega_words_of_degree(tgt, n - cdeg))
                for (int ci : cs) {
                    ordinal[n][{w, ci}] = static_cast<int>(basis[n].size());
                    basis[n].push_back({w, ci});
                }
        }
    }

    auto apply_Dt = [&](const Key& k) {
        LinComb<Key> out;
        const auto& [w, ci] = k;
        long long wdeg = omega_degree(tgt, w);
        for (const auto& [dw, v] : cobar_differential(tgt, w))
            add_term(out, Key{dw, ci}, v);
        Int sign = parity_sign(wdeg);
        for (const auto& [dc, v] : src.d(ci))
            add_term(out, Key{w, dc}, sign * v);
        // twisting: full coproduct = c (x) 1 + 1 (x) c + reduced part
        auto push_twist = [&](int left, int right, const Int& v) {
            for (const auto& [tw, tv] : t.apply(left)) {
                OmegaWord u = w;
                u.insert(u.end(), tw.begin(), tw.end());
                add_term(out, Key{u, right}, sign * v * tv);
            }
        };
        if (ci != 0)
            push_twist(ci, 0, 1);
        for (const auto& [ab, v] : src.reduced_coproduct(ci))
            push_twist(ab.first, ab.second, v);
        return out;
    };

    std::vector<SparseIntMatrix> diffs;
    std::vector<std::vector<std::string>> labels(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& [w, ci] : basis[n])
            labels[n].push_back(describe_omega_word(tgt, w) + "(x)" + src.label(ci));
    for (int n = 0; n < max_degree; ++n) {
        SparseIntMatrix m(static_cast<int>(basis[n + 1].size()),
                          static_cast<int>(basis[n].size()));
        for (int col = 0; col < static_cast<int>(basis[n].size()); ++col)
            for (const auto& [key, v] : apply_Dt(basis[n][col])) {
                auto it = ordinal[n + 1].find(key);
                if (it == ordinal[n + 1].end())
                    throw internal_invariant_error("twisted differential left the truncation");
                m.add(it->second, col, v);
            }
        diffs.push_back(std::move(m));
    }

    TruncatedComplex complex(max_degree, std::move(labels), std::move(diffs));
    complex.verify_d_squared();
    return complex;
}

} // namespace freeloop
