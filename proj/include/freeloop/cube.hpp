#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freeloop/errors.hpp"
#include "freeloop/linear.hpp"

namespace freeloop {

/// Nondegenerate-or-not cube I^n -> S^1, encoded by the multilinear integer
/// exponent polynomial f with T = e^{2 pi i f}.  Monomials are variable
/// subsets (bitmask over positions 0..n-1); the constant term is never
/// stored, since cubes agree exactly when their exponents differ by an
/// integer constant.
class CircleCube {
  public:
    CircleCube() = default;
    CircleCube(int dim, std::map<std::uint32_t, Int> exponent)
        : dim_(dim), exponent_(std::move(exponent))
    {
        if (dim_ < 0 || dim_ > 30)
            throw validation_error("cube dimension out of supported range");
        for (auto it = exponent_.begin(); it != exponent_.end();) {
            if (it->first >= (1u << dim_))
                throw validation_error("exponent monomial uses a variable outside the cube");
            if (it->first == 0 || it->second == 0)
                it = exponent_.erase(it);
            else
                ++it;
        }
    }

    static CircleCube basepoint() { return CircleCube(0, {}); }

    /// The fundamental 1-cube t -> e^{2 pi i t}.
    static CircleCube loop()
    {
        return CircleCube(1, {{1u, Int(1)}});
    }

    int dim() const { return dim_; }
    const std::map<std::uint32_t, Int>& exponent() const { return exponent_; }

    /// A cube is degenerate iff its exponent omits one of its variables.
    bool is_degenerate() const
    {
        std::uint32_t used = 0;
        for (const auto& [mask, c] : exponent_)
            used |= mask;
        return dim_ > 0 && used != (1u << dim_) - 1;
    }

    bool operator==(const CircleCube& o) const
    {
        return dim_ == o.dim_ && exponent_ == o.exponent_;
    }
    bool operator<(const CircleCube& o) const
    {
        if (dim_ != o.dim_)
            return dim_ < o.dim_;
        return exponent_ < o.exponent_;
    }

    std::string to_string() const
    {
        if (exponent_.empty())
            return "0";
        std::string s;
        for (const auto& [mask, c] : exponent_) {
            if (!s.empty())
                s += " + ";
            if (c != 1)
                s += c.str() + "*";
            for (int v = 0; v < dim_; ++v)
                if (mask & (1u << v))
                    s += "t" + std::to_string(v);
        }
        return s;
    }

  private:
    int dim_ = 0;
    std::map<std::uint32_t, Int> exponent_;
};

using CircleChain = LinComb<CircleCube>;
using CubeTensor = LinComb<std::pair<CircleCube, CircleCube>>;

/// Keep only nondegenerate cubes (normalized chains).
inline void add_cube(CircleChain& chain, const CircleCube& cube, const Int& c)
{
    if (!cube.is_degenerate())
        add_term(chain, cube, c);
}

/// sigma(T): one dimension up, exponent t_0 * f with the old variables
/// shifted.  Degenerate in, degenerate out.
inline CircleCube sigma(const CircleCube& t)
{
    std::map<std::uint32_t, Int> e;
    for (const auto& [mask, c] : t.exponent())
        e[(mask << 1) | 1u] = c;
    return CircleCube(t.dim() + 1, std::move(e));
}

inline CircleChain sigma(const CircleChain& chain)
{
    CircleChain out;
    for (const auto& [cube, c] : chain)
        add_cube(out, sigma(cube), c);
    return out;
}

/// Substitute variable `pos` := end (0 or 1) and renumber the rest.
inline CircleCube cube_face(const CircleCube& t, int pos, int end)
{
    std::map<std::uint32_t, Int> e;
    std::uint32_t low = (1u << pos) - 1;
    for (const auto& [mask, c] : t.exponent()) {
        std::uint32_t m = mask;
        if (m & (1u << pos)) {
            if (end == 0)
                continue; // the monomial vanishes
            m &= ~(1u << pos);
        }
        std::uint32_t packed = (m & low) | ((m >> 1) & ~low);
        auto it = e.find(packed);
        if (it == e.end())
            e.emplace(packed, c);
        else {
            it->second += c;
            if (it->second == 0)
                e.erase(it);
        }
    }
    return CircleCube(t.dim() - 1, std::move(e));
}

/// Boundary d = sum_i (-1)^i (A_i - B_i) where A_i sets t_{i-1} = 0 and B_i
/// sets t_{i-1} = 1 (1-based i).  This is the face-sign convention under
/// which d sigma = Id - sigma d holds in dimensions >= 2.
inline CircleChain cube_boundary(const CircleCube& t)
{
    CircleChain out;
    for (int pos = 0; pos < t.dim(); ++pos) {
        Int sign = parity_sign(pos + 1);
        add_cube(out, cube_face(t, pos, 0), sign);
        add_cube(out, cube_face(t, pos, 1), -sign);
    }
    return out;
}

inline CircleChain cube_boundary(const CircleChain& chain)
{
    CircleChain out;
    for (const auto& [cube, c] : chain)
        add_scaled(out, c, cube_boundary(cube));
    return out;
}

/// Product induced by the group structure of S^1: juxtapose the variables
/// and add the exponents.
inline CircleCube cube_product(const CircleCube& a, const CircleCube& b)
{
    std::map<std::uint32_t, Int> e = a.exponent();
    for (const auto& [mask, c] : b.exponent()) {
        std::uint32_t m = mask << a.dim();
        auto it = e.find(m);
        if (it == e.end())
            e.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0)
                e.erase(it);
        }
    }
    return CircleCube(a.dim() + b.dim(), std::move(e));
}

inline CircleChain cube_product(const CircleChain& a, const CircleChain& b)
{
    CircleChain out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            add_cube(out, cube_product(x, y), cx * cy);
    return out;
}

namespace detail {

/// Extract the sub-cube on the variables of `keep`, in increasing order.
inline CircleCube restrict_to(const CircleCube& t, std::uint32_t keep,
                              const std::map<std::uint32_t, Int>& exponent)
{
    std::vector<int> order;
    for (int v = 0; v < t.dim(); ++v)
        if (keep & (1u << v))
            order.push_back(v);
    std::map<std::uint32_t, Int> e;
    for (const auto& [mask, c] : exponent) {
        std::uint32_t packed = 0;
        for (size_t i = 0; i < order.size(); ++i)
            if (mask & (1u << order[i]))
                packed |= (1u << i);
        if (packed == 0)
            continue;
        auto it = e.find(packed);
        if (it == e.end())
            e.emplace(packed, c);
        else {
            it->second += c;
            if (it->second == 0)
                e.erase(it);
        }
    }
    return CircleCube(static_cast<int>(order.size()), std::move(e));
}

} // namespace detail

/// Full Serre diagonal: sum over partitions A | B of the variables of
/// (front face: B -> 0, keep A) (x) (back face: A -> 1, keep B), signed by
/// the parity of {(a, b) in A x B : b < a}.  Degenerate factors are dropped.
inline CubeTensor serre_diagonal(const CircleCube& t)
{
    CubeTensor out;
    int n = t.dim();
    std::uint32_t full = (n == 0) ? 0u : (1u << n) - 1;
    for (std::uint32_t a = 0;; ++a) {
        std::uint32_t b = full & ~a;
        // front: variables in b set to 0 -> monomials meeting b vanish
        std::map<std::uint32_t, Int> front_exp;
        // back: variables in a set to 1 -> drop the a-bits and merge
        std::map<std::uint32_t, Int> back_exp;
        for (const auto& [mask, c] : t.exponent()) {
            if ((mask & b) == 0)
                front_exp[mask] = c;
            std::uint32_t m = mask & ~a;
            auto it = back_exp.find(m);
            if (it == back_exp.end())
                back_exp.emplace(m, c);
            else
                it->second += c;
        }
        CircleCube front = detail::restrict_to(t, a, front_exp);
        CircleCube back = detail::restrict_to(t, b, back_exp);
        if (!front.is_degenerate() && !back.is_degenerate()) {
            long long inversions = 0;
            for (int x = 0; x < n; ++x)
                if (a & (1u << x))
                    inversions += __builtin_popcount(b & ((1u << x) - 1));
            add_term(out, std::make_pair(front, back), parity_sign(inversions));
        }
        if (a == full)
            break;
    }
    return out;
}

/// Reduced coproduct: the full diagonal minus the two counit terms.
inline CubeTensor reduced_diagonal(const CircleCube& t)
{
    CubeTensor out = serre_diagonal(t);
    if (t.dim() > 0 && !t.is_degenerate()) {
        add_term(out, std::make_pair(t, CircleCube::basepoint()), -1);
        add_term(out, std::make_pair(CircleCube::basepoint(), t), -1);
    }
    return out;
}

inline CubeTensor reduced_diagonal(const CircleChain& chain)
{
    CubeTensor out;
    for (const auto& [cube, c] : chain)
        add_scaled(out, c, reduced_diagonal(cube));
    return out;
}

} // namespace freeloop
