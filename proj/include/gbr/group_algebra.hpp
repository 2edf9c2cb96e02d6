#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gbr/modp.hpp"

namespace gbr {

/// Element g^exp of the cyclic group of order m, with exp always reduced
/// into [0, m).
struct GroupElt {
    std::uint32_t exp = 0;
    friend bool operator==(GroupElt, GroupElt) = default;
};

/// Element of the group algebra A = K[Z_m]: c[i] is the coefficient of g^i.
struct AlgElt {
    std::vector<Fp> c;
    friend bool operator==(const AlgElt&, const AlgElt&) = default;
};

/// Shared context for a cyclic group of order m over F_p with p | m.
///
/// Group exponents are reduced mod m and field scalars mod p; the two moduli
/// never mix inside one value. Membership y ∈ Q(x) (i.e. xy < y in the total
/// order 1 < g < ... < g^{m-1}) is precomputed into an m×m table. All
/// operations are pure; the context is read-only after construction and safe
/// to share across threads.
class GroupCtx {
public:
    GroupCtx(std::uint32_t order, std::uint32_t characteristic);

    std::uint32_t order() const noexcept { return m_; }
    const PrimeField& field() const noexcept { return fp_; }

    /// Upper bound on the number of scalars a single dense cochain may
    /// allocate (default 10^7). Exceeding it raises alloc_guard_error.
    std::size_t alloc_budget() const noexcept { return budget_; }
    void set_alloc_budget(std::size_t b) noexcept { budget_ = b; }

    GroupElt g(long long e) const noexcept;
    GroupElt group_mul(GroupElt x, GroupElt y) const;
    GroupElt group_inv(GroupElt x) const;

    /// x ∈ Q(y), i.e. xy < y. For exponents this is i + j >= m.
    bool in_q(GroupElt x, GroupElt y) const;

    AlgElt alg_zero() const;
    AlgElt alg_unit() const;
    AlgElt alg_basis(GroupElt x, Fp coeff) const;

    /// [x]_g = 1 + g + ... + g^{i-1} for x = g^i (zero for x = 1).
    AlgElt bracket_int(GroupElt x) const;

    /// The norm element T = 1 + g + ... + g^{m-1}.
    AlgElt norm_t() const;

    AlgElt add(const AlgElt& a, const AlgElt& b) const;
    AlgElt sub(const AlgElt& a, const AlgElt& b) const;
    AlgElt scale(Fp s, const AlgElt& a) const;
    /// Cyclic convolution product of A.
    AlgElt mul(const AlgElt& a, const AlgElt& b) const;
    /// Multiplication by g - 1 (one of the two minimal-resolution maps).
    AlgElt mul_g_minus_1(const AlgElt& a) const;
    /// dst += s · src, in place.
    void axpy(AlgElt& dst, Fp s, const AlgElt& src) const;
    bool is_zero(const AlgElt& a) const;

    /// Augmentation: sum of coefficients.
    Fp epsilon(const AlgElt& a) const;

    /// The degree-one basis cocycle: beta1(g^i) = i mod p.
    Fp beta1(GroupElt x) const;

    /// The group element a(i_1,...,i_k) given by a(i) = g^{m-1-i} and
    /// a(i_1,...,i_{k+1}) = a(i_1,...,i_k) · g^{m-(i_{k+1}+k+1)}.
    GroupElt a_coeff(std::span<const std::uint32_t> tuple) const;

private:
    void check_elt(GroupElt x) const;
    void check_alg(const AlgElt& a) const;

    std::uint32_t m_;
    PrimeField fp_;
    std::vector<std::uint8_t> q_;  // q_[x*m + y] = 1 iff x ∈ Q(g^y)
    std::size_t budget_ = 10'000'000;
};

}  // namespace gbr
