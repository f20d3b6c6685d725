#pragma once

#include <string>
#include <vector>

#include "freeloop/errors.hpp"
#include "freeloop/smith.hpp"
#include "freeloop/sparse_matrix.hpp"

namespace freeloop {

/// H^n as free rank plus invariant factors; factors equal to 1 suppressed.
struct HomologyGroup {
    int free_rank = 0;
    std::vector<Int> torsion; // d_1 | d_2 | ..., each >= 2

    bool operator==(const HomologyGroup& o) const
    {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

/// Cochain complex truthful on degrees 0..N.  basis[n] holds printable labels
/// (degree, ordinal) -> label; differentials[n] is d : C^n -> C^{n+1} for
/// 0 <= n < N.  Every differential raises degree by exactly one, so H^n is
/// reliable for n <= N-1 only; H^N is refused.
class TruncatedComplex {
  public:
    TruncatedComplex(int max_degree, std::vector<std::vector<std::string>> basis,
                     std::vector<SparseIntMatrix> differentials)
        : max_degree_(max_degree), basis_(std::move(basis)), diff_(std::move(differentials))
    {
        if (max_degree_ < 0)
            throw validation_error("truncation degree must be nonnegative");
        if (static_cast<int>(basis_.size()) != max_degree_ + 1)
            throw validation_error("basis table must cover degrees 0..N");
        if (static_cast<int>(diff_.size()) != max_degree_)
            throw validation_error("need one differential per degree 0..N-1");
        for (int n = 0; n < max_degree_; ++n) {
            if (diff_[n].cols() != dim(n) || diff_[n].rows() != dim(n + 1))
                throw validation_error("differential dimensions do not match bases at degree " +
                                       std::to_string(n));
        }
    }

    int max_degree() const { return max_degree_; }
    int dim(int n) const
    {
        check_degree(n);
        return static_cast<int>(basis_[n].size());
    }
    const std::vector<std::string>& labels(int n) const
    {
        check_degree(n);
        return basis_[n];
    }
    const SparseIntMatrix& differential(int n) const
    {
        if (n < 0 || n >= max_degree_)
            throw validation_error("no differential stored at degree " + std::to_string(n));
        return diff_[n];
    }

    /// d_{n+1} d_n = 0 for every n with n+2 <= N; names the offending degree.
    void verify_d_squared() const
    {
        for (int n = 0; n + 2 <= max_degree_; ++n) {
            SparseIntMatrix prod = diff_[n + 1].multiply(diff_[n]);
            if (!prod.is_zero()) {
                auto rc = prod.entries().begin()->first;
                throw internal_invariant_error(
                    "d^2 != 0 at degree " + std::to_string(n) + ": basis element '" +
                    basis_[n][rc.second] + "' maps to '" + basis_[n + 2][rc.first] +
                    "' with coefficient " + prod.entries().begin()->second.str());
            }
        }
    }

  private:
    void check_degree(int n) const
    {
        if (n < 0 || n > max_degree_)
            throw validation_error("degree " + std::to_string(n) + " outside truncation 0.." +
                                   std::to_string(max_degree_));
    }

    int max_degree_;
    std::vector<std::vector<std::string>> basis_;
    std::vector<SparseIntMatrix> diff_;
};

/// H^n = ker(d_n)/im(d_{n-1}) over Z via Smith normal form.  Valid for
/// 0 <= n <= N-1; the incoming differential at n = 0 is zero.  Out-of-range
/// degrees raise, never report a silent zero.
inline HomologyGroup homology(const TruncatedComplex& c, int n)
{
    if (n < 0 || n > c.max_degree() - 1)
        throw validation_error("homology degree " + std::to_string(n) +
                               " outside reliable range 0.." + std::to_string(c.max_degree() - 1));
    int dim_n = c.dim(n);
    int rank_out = smith_normal_form(c.differential(n)).rank;
    HomologyGroup h;
    if (n == 0) {
        h.free_rank = dim_n - rank_out;
        return h;
    }
    SmithResult in = smith_normal_form(c.differential(n - 1));
    h.free_rank = dim_n - rank_out - in.rank;
    if (h.free_rank < 0)
        throw internal_invariant_error("negative free rank; complex is inconsistent");
    for (const Int& d : in.invariant_factors)
        if (d >= 2)
            h.torsion.push_back(d);
    return h;
}

/// The same complex with coefficients reduced into F_p.
class ModpComplex {
  public:
    ModpComplex(const TruncatedComplex& c, const Int& p) : p_(p), max_degree_(c.max_degree())
    {
        if (!is_prime(p))
            throw validation_error("coefficient modulus " + p.str() + " is not prime");
        dims_.reserve(max_degree_ + 1);
        for (int n = 0; n <= max_degree_; ++n)
            dims_.push_back(c.dim(n));
        diff_.reserve(max_degree_);
        for (int n = 0; n < max_degree_; ++n)
            diff_.push_back(c.differential(n).mod(p));
    }

    const Int& p() const { return p_; }
    int max_degree() const { return max_degree_; }
    int dim(int n) const { return dims_.at(n); }
    const SparseIntMatrix& differential(int n) const { return diff_.at(n); }

    /// dim_{F_p} H^n = dim ker(d_n) - rank(d_{n-1}), field ranks only.
    int homology_dimension(int n) const
    {
        if (n < 0 || n > max_degree_ - 1)
            throw validation_error("homology degree " + std::to_string(n) +
                                   " outside reliable range 0.." + std::to_string(max_degree_ - 1));
        int h = dims_[n] - rank_mod_p(diff_[n], p_);
        if (n > 0)
            h -= rank_mod_p(diff_[n - 1], p_);
        return h;
    }

  private:
    Int p_;
    int max_degree_;
    std::vector<int> dims_;
    std::vector<SparseIntMatrix> diff_;
};

inline ModpComplex reduce_mod_p(const TruncatedComplex& c, const Int& p)
{
    return ModpComplex(c, p);
}

/// Universal-coefficients prediction of dim_{F_p} H^n from the integral
/// answers of degrees n and n+1: rank + p-torsion here + p-torsion above.
inline int mod_p_dimension_from_integral(const HomologyGroup& hn, const HomologyGroup& hn1,
                                         const Int& p)
{
    int d = hn.free_rank;
    for (const Int& t : hn.torsion)
        if (t % p == 0)
            ++d;
    for (const Int& t : hn1.torsion)
        if (t % p == 0)
            ++d;
    return d;
}

} // namespace freeloop
