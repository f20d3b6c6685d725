#pragma once

#include <functional>
#include <string>
#include <vector>

#include "freeloop/complex.hpp"
#include "freeloop/fls_ops.hpp"

namespace freeloop {

enum class ModelKind { fls, hos, tc };

inline ModelKind model_kind_from_string(const std::string& s)
{
    if (s == "fls")
        return ModelKind::fls;
    if (s == "hos")
        return ModelKind::hos;
    if (s == "tc")
        return ModelKind::tc;
    throw validation_error("unknown model '" + s + "' (expected fls, hos or tc)");
}

/// v^k (x) (y (x) c) in the homotopy-orbit model; v has degree 2.
using HosBasis = std::pair<int, FlsBasis>;
using HosElement = LinComb<HosBasis>;

/// Mapping-cone basis: tag -1 is the unshifted fls part, tag k >= 0 is the
/// shifted element s(v^k (x) y (x) c), which sits one degree lower.
using TcBasis = std::pair<int, FlsBasis>;
using TcElement = LinComb<TcBasis>;

inline int hos_degree(const PresentedAlgebra& a, const HosBasis& b)
{
    return 2 * b.first + fls_degree(a, b.second);
}

inline int tc_degree(const PresentedAlgebra& a, const TcBasis& b)
{
    if (b.first < 0)
        return fls_degree(a, b.second);
    return 2 * b.first + fls_degree(a, b.second) - 1;
}

/// D~ = Id (x) hochschild + v . (-) (x) S; v is even so no signs appear.
inline HosElement hos_differential(const PresentedAlgebra& a, const HosBasis& b)
{
    HosElement out;
    for (const auto& [f, c] : hochschild_differential(a, b.second))
        add_term(out, HosBasis{b.first, f}, c);
    for (const auto& [f, c] : cyclic_S(a, b.second))
        add_term(out, HosBasis{b.first + 1, f}, c);
    return out;
}

inline HosElement hos_differential(const PresentedAlgebra& a, const HosElement& x)
{
    return map_terms<HosBasis>(x, [&](const HosBasis& b) { return hos_differential(a, b); });
}

/// Mapping-cone differential of (Id - squaring model) o projection:
///   D(x (x) c)           = hochschild(x (x) c)
///   D(s(1  (x) x (x) c)) = (Id - power)(x (x) c) - s(D~(x (x) c))
///   D(s(v^k (x) x (x) c)) = -s(v^k (x) hochschild + v^{k+1} (x) S), k > 0.
inline TcElement tc_differential(const PresentedAlgebra& a, const TcBasis& b)
{
    TcElement out;
    if (b.first < 0) {
        for (const auto& [f, c] : hochschild_differential(a, b.second))
            add_term(out, TcBasis{-1, f}, c);
        return out;
    }
    if (b.first == 0) {
        add_term(out, TcBasis{-1, b.second}, 1);
        for (const auto& [f, c] : power_map(a, b.second))
            add_term(out, TcBasis{-1, f}, -c);
    }
    for (const auto& [f, c] : hochschild_differential(a, b.second))
        add_term(out, TcBasis{b.first, f}, -c);
    for (const auto& [f, c] : cyclic_S(a, b.second))
        add_term(out, TcBasis{b.first + 1, f}, -c);
    return out;
}

inline TcElement tc_differential(const PresentedAlgebra& a, const TcElement& x)
{
    return map_terms<TcBasis>(x, [&](const TcBasis& b) { return tc_differential(a, b); });
}

inline std::vector<HosBasis> hos_basis_of_degree(const PresentedAlgebra& a, int degree)
{
    std::vector<HosBasis> out;
    for (int k = 0; 2 * k <= degree; ++k)
        for (const auto& f : fls_basis_of_degree(a, degree - 2 * k))
            out.push_back({k, f});
    return out;
}

inline std::vector<TcBasis> tc_basis_of_degree(const PresentedAlgebra& a, int degree)
{
    std::vector<TcBasis> out;
    for (const auto& f : fls_basis_of_degree(a, degree))
        out.push_back({-1, f});
    for (int k = 0; 2 * k <= degree + 1; ++k)
        for (const auto& f : fls_basis_of_degree(a, degree + 1 - 2 * k))
            out.push_back({k, f});
    return out;
}

inline std::string describe_hos(const PresentedAlgebra& a, const HosBasis& b)
{
    return "v^" + std::to_string(b.first) + "(x)" + describe_fls(a, b.second);
}

inline std::string describe_tc(const PresentedAlgebra& a, const TcBasis& b)
{
    if (b.first < 0)
        return describe_fls(a, b.second);
    return "s(" + describe_hos(a, {b.first, b.second}) + ")";
}

namespace detail {

template <typename Key>
TruncatedComplex assemble_complex(
    int max_degree, const std::function<std::vector<Key>(int)>& basis_of_degree,
    const std::function<std::string(const Key&)>& label_of,
    const std::function<LinComb<Key>(const Key&)>& differential)
{
    std::vector<std::vector<Key>> basis(max_degree + 1);
    std::vector<std::map<Key, int>> ordinal(max_degree + 1);
    std::vector<std::vector<std::string>> labels(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        basis[n] = basis_of_degree(n);
        for (int i = 0; i < static_cast<int>(basis[n].size()); ++i) {
            ordinal[n][basis[n][i]] = i;
            labels[n].push_back(label_of(basis[n][i]));
        }
    }
    std::vector<SparseIntMatrix> diffs;
    for (int n = 0; n < max_degree; ++n) {
        SparseIntMatrix m(static_cast<int>(basis[n + 1].size()),
                          static_cast<int>(basis[n].size()));
        for (int col = 0; col < static_cast<int>(basis[n].size()); ++col)
            for (const auto& [key, v] : differential(basis[n][col])) {
                auto it = ordinal[n + 1].find(key);
                if (it == ordinal[n + 1].end())
                    throw internal_invariant_error("differential left the enumerated basis at "
                                                   "degree " +
                                                   std::to_string(n));
                m.add(it->second, col, v);
            }
        diffs.push_back(std::move(m));
    }
    TruncatedComplex complex(max_degree, std::move(labels), std::move(diffs));
    complex.verify_d_squared();
    return complex;
}

} // namespace detail

/// Assemble one of the three models as a truncated complex with d^2 = 0
/// verified at build time.  The presentation must be in the restricted case.
inline TruncatedComplex build_model(const PresentedAlgebra& a, ModelKind kind, int max_degree)
{
    if (max_degree < 2)
        throw validation_error("model truncation degree must be at least 2");
    a.require_restricted();
    switch (kind) {
    case ModelKind::fls:
        return detail::assemble_complex<FlsBasis>(
            max_degree, [&](int n) { return fls_basis_of_degree(a, n); },
            [&](const FlsBasis& b) { return describe_fls(a, b); },
            [&](const FlsBasis& b) { return hochschild_differential(a, b); });
    case ModelKind::hos:
        return detail::assemble_complex<HosBasis>(
            max_degree, [&](int n) { return hos_basis_of_degree(a, n); },
            [&](const HosBasis& b) { return describe_hos(a, b); },
            [&](const HosBasis& b) { return hos_differential(a, b); });
    case ModelKind::tc:
        return detail::assemble_complex<TcBasis>(
            max_degree, [&](int n) { return tc_basis_of_degree(a, n); },
            [&](const TcBasis& b) { return describe_tc(a, b); },
            [&](const TcBasis& b) { return tc_differential(a, b); });
    }
    throw validation_error("unreachable model kind");
}

/// Matrix of a degree-preserving operation on the fls basis of one degree.
inline SparseIntMatrix
fls_operation_matrix(const PresentedAlgebra& a,
                     const std::function<FlsElement(const FlsBasis&)>& op, int degree)
{
    auto basis = fls_basis_of_degree(a, degree);
    std::map<FlsBasis, int> ordinal;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        ordinal[basis[i]] = i;
    SparseIntMatrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col)
        for (const auto& [key, v] : op(basis[col])) {
            auto it = ordinal.find(key);
            if (it == ordinal.end())
                throw internal_invariant_error("operation is not degree-preserving");
            m.add(it->second, col, v);
        }
    return m;
}

} // namespace freeloop
