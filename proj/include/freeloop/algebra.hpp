#pragma once

#include <string>
#include <vector>

#include "freeloop/errors.hpp"
#include "freeloop/linear.hpp"

namespace freeloop {

/// Element of a presented algebra: integer combination of generator ids.
using AlgElem = LinComb<int>;

/// Finite-type graded-commutative cochain algebra given additively: labelled
/// generators with degrees, a differential table and a symmetric product
/// table.  Generator 0 is the unit, all other generators have degree >= 2
/// (simply connected).  The product table stores one orientation per pair;
/// the graded-commutative sign is applied on lookup.
class PresentedAlgebra {
  public:
    struct Generator {
        std::string label;
        int degree = 0;
    };

    PresentedAlgebra(std::string name, std::vector<Generator> generators,
                     std::vector<AlgElem> differential,
                     std::map<std::pair<int, int>, AlgElem> products)
        : name_(std::move(name)), gens_(std::move(generators)), diff_(std::move(differential)),
          products_(std::move(products))
    {
        validate();
    }

    const std::string& name() const { return name_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    static constexpr int unit_id = 0;

    int degree(int g) const { return gens_.at(g).degree; }
    const std::string& label(int g) const { return gens_.at(g).label; }

    int generator_by_label(const std::string& label) const
    {
        for (int g = 0; g < generator_count(); ++g)
            if (gens_[g].label == label)
                return g;
        throw validation_error("unknown generator '" + label + "'");
    }

    std::vector<int> positive_generators() const
    {
        std::vector<int> out;
        for (int g = 1; g < generator_count(); ++g)
            out.push_back(g);
        return out;
    }

    const AlgElem& d_generator(int g) const { return diff_.at(g); }

    AlgElem d(const AlgElem& x) const
    {
        return map_terms<int>(x, [&](int g) { return d_generator(g); });
    }

    AlgElem mul_generators(int g, int h) const
    {
        if (g == unit_id)
            return AlgElem{{h, 1}};
        if (h == unit_id)
            return AlgElem{{g, 1}};
        if (g <= h) {
            auto it = products_.find({g, h});
            return it == products_.end() ? AlgElem{} : it->second;
        }
        auto it = products_.find({h, g});
        if (it == products_.end())
            return AlgElem{};
        return scaled(parity_sign(static_cast<long long>(degree(g)) * degree(h)), it->second);
    }

    AlgElem mul(const AlgElem& x, const AlgElem& y) const
    {
        AlgElem out;
        for (const auto& [g, a] : x)
            for (const auto& [h, b] : y)
                add_scaled(out, a * b, mul_generators(g, h));
        return out;
    }

    int element_degree(const AlgElem& x) const
    {
        if (x.empty())
            throw validation_error("degree of zero element is undefined");
        int deg = degree(x.begin()->first);
        for (const auto& [g, c] : x)
            if (degree(g) != deg)
                throw validation_error("inhomogeneous element");
        return deg;
    }

    /// Restricted-case gate used by the loop models: every product of two
    /// positive generators must be zero or a single presented generator
    /// (coefficient +-1).  Wedges of spheres and small truncated polynomial
    /// algebras all qualify.
    void require_restricted() const
    {
        for (const auto& [pair, value] : products_) {
            if (value.empty())
                continue;
            if (value.size() > 1 || int_abs(value.begin()->second) != 1)
                throw validation_error(
                    "product " + label(pair.first) + "*" + label(pair.second) +
                    " is not a single generator; outside the supported restricted case");
        }
    }

    std::string describe(const AlgElem& x) const
    {
        if (x.empty())
            return "0";
        std::string out;
        for (const auto& [g, c] : x) {
            if (!out.empty())
                out += " + ";
            out += c.str() + "*" + label(g);
        }
        return out;
    }

  private:
    void validate()
    {
        if (gens_.empty())
            throw validation_error("algebra needs at least the unit generator");
        if (gens_[0].degree != 0)
            throw validation_error("generator 0 must be the degree-0 unit");
        for (int g = 0; g < generator_count(); ++g) {
            if (gens_[g].label.empty())
                throw validation_error("generator labels must be nonempty");
            for (int h = g + 1; h < generator_count(); ++h)
                if (gens_[g].label == gens_[h].label)
                    throw validation_error("duplicate generator label '" + gens_[g].label + "'");
            if (g > 0 && gens_[g].degree == 1)
                throw validation_error("generator '" + gens_[g].label +
                                       "' has degree 1; presentations must be simply connected");
            if (g > 0 && gens_[g].degree < 2)
                throw validation_error("generator '" + gens_[g].label + "' must have degree >= 2");
        }
        if (static_cast<int>(diff_.size()) != generator_count())
            throw validation_error("differential table must cover every generator");
        if (!diff_[unit_id].empty())
            throw validation_error("the unit must be a cycle");

        for (int g = 1; g < generator_count(); ++g)
            for (const auto& [h, c] : diff_[g])
                if (degree(h) != degree(g) + 1)
                    throw validation_error("d(" + label(g) + ") is not homogeneous of degree +1");

        for (const auto& [pair, value] : products_) {
            auto [g, h] = pair;
            if (g < 1 || h < 1 || g > h || g >= generator_count() || h >= generator_count())
                throw validation_error("product table keys must be ordered positive pairs");
            for (const auto& [k, c] : value)
                if (degree(k) != degree(g) + degree(h))
                    throw validation_error("product " + label(g) + "*" + label(h) +
                                           " is not degree-additive");
            // odd square: graded commutativity over Z forces g^2 = 0
            if (g == h && degree(g) % 2 != 0 && !value.empty())
                throw validation_error("odd-degree generator '" + label(g) +
                                       "' must square to zero over Z");
        }

        // d^2 = 0 on generators
        for (int g = 1; g < generator_count(); ++g)
            if (!d(d_generator(g)).empty())
                throw validation_error("d^2 != 0 on generator '" + label(g) + "'");

        // Leibniz: d(gh) = dg*h + (-1)^{|g|} g*dh on all positive pairs
        for (int g = 1; g < generator_count(); ++g)
            for (int h = 1; h < generator_count(); ++h) {
                AlgElem lhs = d(mul_generators(g, h));
                AlgElem rhs = mul(d_generator(g), AlgElem{{h, 1}});
                add_scaled(rhs, parity_sign(degree(g)), mul(AlgElem{{g, 1}}, d_generator(h)));
                if (lhs != rhs)
                    throw validation_error("Leibniz rule fails on pair (" + label(g) + ", " +
                                           label(h) + ")");
            }

        // associativity on generator triples
        for (int g = 1; g < generator_count(); ++g)
            for (int h = 1; h < generator_count(); ++h)
                for (int k = 1; k < generator_count(); ++k) {
                    AlgElem lhs = mul(mul_generators(g, h), AlgElem{{k, 1}});
                    AlgElem rhs = mul(AlgElem{{g, 1}}, mul_generators(h, k));
                    if (lhs != rhs)
                        throw validation_error("associativity fails on (" + label(g) + ", " +
                                               label(h) + ", " + label(k) + ")");
                }
    }

    std::string name_;
    std::vector<Generator> gens_;
    std::vector<AlgElem> diff_;
    std::map<std::pair<int, int>, AlgElem> products_;
};

/// Exterior algebra on one generator z of odd degree n: the cochain algebra
/// of an odd sphere.
inline PresentedAlgebra make_sphere_algebra(int n)
{
    if (n < 3 || n % 2 == 0)
        throw validation_error("sphere preset needs an odd degree >= 3");
    return PresentedAlgebra("sphere:" + std::to_string(n),
                            {{"1", 0}, {"z", n}}, {AlgElem{}, AlgElem{}}, {});
}

/// Wedge of spheres: one generator per degree, all positive products zero.
inline PresentedAlgebra make_wedge_algebra(const std::vector<int>& degrees)
{
    if (degrees.empty())
        throw validation_error("wedge preset needs at least one degree");
    std::vector<PresentedAlgebra::Generator> gens{{"1", 0}};
    std::vector<AlgElem> diff{AlgElem{}};
    std::string name = "wedge:";
    for (size_t i = 0; i < degrees.size(); ++i) {
        gens.push_back({"z" + std::to_string(i + 1), degrees[i]});
        diff.push_back(AlgElem{});
        name += (i ? "," : "") + std::to_string(degrees[i]);
    }
    return PresentedAlgebra(name, std::move(gens), std::move(diff), {});
}

/// Z[w]/w^3 with |w| even: generators w and u = w^2, w*u = 0.
inline PresentedAlgebra make_truncated_poly3(int w_degree)
{
    if (w_degree < 2 || w_degree % 2 != 0)
        throw validation_error("truncated polynomial generator degree must be even and >= 2");
    std::map<std::pair<int, int>, AlgElem> products;
    products[{1, 1}] = AlgElem{{2, 1}};
    return PresentedAlgebra("truncpoly3:" + std::to_string(w_degree),
                            {{"1", 0}, {"w", w_degree}, {"u", 2 * w_degree}},
                            {AlgElem{}, AlgElem{}, AlgElem{}}, std::move(products));
}

} // namespace freeloop
