#pragma once

#include <map>
#include <utility>

#include "freeloop/intmath.hpp"

namespace freeloop {

/// Integer linear combination of basis keys.  Ordered map keeps every
/// traversal deterministic; zero coefficients are never stored.
template <typename K>
using LinComb = std::map<K, Int>;

template <typename K>
void add_term(LinComb<K>& dst, const K& key, const Int& c)
{
    if (c == 0)
        return;
    auto it = dst.find(key);
    if (it == dst.end()) {
        dst.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        dst.erase(it);
}

/// dst += c * src
template <typename K>
void add_scaled(LinComb<K>& dst, const Int& c, const LinComb<K>& src)
{
    if (c == 0)
        return;
    for (const auto& [k, v] : src)
        add_term(dst, k, c * v);
}

template <typename K>
LinComb<K> scaled(const Int& c, const LinComb<K>& src)
{
    LinComb<K> out;
    add_scaled(out, c, src);
    return out;
}

/// Apply a key-wise linear map f : K -> LinComb<L> to a combination.
template <typename L, typename K, typename F>
LinComb<L> map_terms(const LinComb<K>& src, F&& f)
{
    LinComb<L> out;
    for (const auto& [k, v] : src)
        add_scaled(out, v, f(k));
    return out;
}

} // namespace freeloop
