#pragma once

#include <string>
#include <vector>

#include "freeloop/errors.hpp"
#include "freeloop/linear.hpp"

namespace freeloop {

/// Finite simply-connected cochain coalgebra presentation.  Basis element 0
/// is the counit element in degree 0; the reduced coproduct of a positive
/// element lands in (positive) x (positive).
class FiniteCoalgebra {
  public:
    struct BasisElement {
        std::string label;
        int degree = 0;
    };

    using Tensor2 = LinComb<std::pair<int, int>>;

    FiniteCoalgebra(std::string name, std::vector<BasisElement> basis,
                    std::vector<LinComb<int>> differential, std::vector<Tensor2> reduced_coproduct)
        : name_(std::move(name)), basis_(std::move(basis)), diff_(std::move(differential)),
          coprod_(std::move(reduced_coproduct))
    {
        validate();
    }

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(basis_.size()); }
    int degree(int i) const { return basis_.at(i).degree; }
    const std::string& label(int i) const { return basis_.at(i).label; }
    const LinComb<int>& d(int i) const { return diff_.at(i); }
    const Tensor2& reduced_coproduct(int i) const { return coprod_.at(i); }

    std::vector<int> positive_elements() const
    {
        std::vector<int> out;
        for (int i = 1; i < size(); ++i)
            out.push_back(i);
        return out;
    }

  private:
    void validate()
    {
        if (basis_.empty() || basis_[0].degree != 0)
            throw validation_error("coalgebra basis must start with the degree-0 counit element");
        for (int i = 1; i < size(); ++i) {
            if (basis_[i].degree == 1)
                throw validation_error("coalgebra element '" + basis_[i].label +
                                       "' has degree 1; simple connectivity requires degree >= 2");
            if (basis_[i].degree < 2)
                throw validation_error("only basis element 0 may sit in degree 0");
        }
        if (static_cast<int>(diff_.size()) != size() ||
            static_cast<int>(coprod_.size()) != size())
            throw validation_error("differential/coproduct tables must cover the whole basis");
        if (!diff_[0].empty() || !coprod_[0].empty())
            throw validation_error("the counit element must be primitive with zero differential");

        for (int i = 1; i < size(); ++i) {
            for (const auto& [j, c] : diff_[i])
                if (degree(j) != degree(i) + 1)
                    throw validation_error("d is not homogeneous of degree +1 on '" + label(i) +
                                           "'");
            for (const auto& [ab, c] : coprod_[i]) {
                auto [x, y] = ab;
                if (x < 1 || y < 1 || x >= size() || y >= size())
                    throw validation_error("reduced coproduct must land in positive x positive");
                if (degree(x) + degree(y) != degree(i))
                    throw validation_error("coproduct of '" + label(i) + "' is not degree-additive");
            }
        }

        // d^2 = 0
        for (int i = 1; i < size(); ++i) {
            LinComb<int> dd;
            for (const auto& [j, c] : diff_[i])
                add_scaled(dd, c, diff_[j]);
            if (!dd.empty())
                throw validation_error("d^2 != 0 on coalgebra element '" + label(i) + "'");
        }

        // coassociativity of the reduced coproduct
        using Tensor3 = LinComb<std::tuple<int, int, int>>;
        for (int i = 1; i < size(); ++i) {
            Tensor3 left, right;
            for (const auto& [ab, c] : coprod_[i]) {
                auto [x, y] = ab;
                for (const auto& [uv, c2] : coprod_[x])
                    add_term(left, std::make_tuple(uv.first, uv.second, y), c * c2);
                for (const auto& [uv, c2] : coprod_[y])
                    add_term(right, std::make_tuple(x, uv.first, uv.second), c * c2);
            }
            if (left != right)
                throw validation_error("reduced coproduct is not coassociative at '" + label(i) +
                                       "'");
        }

        // d is a coderivation of the reduced coproduct
        for (int i = 1; i < size(); ++i) {
            Tensor2 lhs;
            for (const auto& [j, c] : diff_[i])
                add_scaled(lhs, c, coprod_[j]);
            Tensor2 rhs;
            for (const auto& [ab, c] : coprod_[i]) {
                auto [x, y] = ab;
                for (const auto& [u, c2] : diff_[x])
                    add_term(rhs, std::make_pair(u, y), c * c2);
                for (const auto& [v, c2] : diff_[y])
                    add_term(rhs, std::make_pair(x, v), c * c2 * parity_sign(degree(x)));
            }
            if (lhs != rhs)
                throw validation_error("d is not a coderivation at '" + label(i) + "'");
        }
    }

    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<LinComb<int>> diff_;
    std::vector<Tensor2> coprod_;
};

} // namespace freeloop
