#include "gbr/group_algebra.hpp"

#include <stdexcept>

namespace gbr {

GroupCtx::GroupCtx(std::uint32_t order, std::uint32_t characteristic)
    : m_(order), fp_(characteristic) {
    if (order == 0) throw std::invalid_argument("GroupCtx: order must be positive");
    if (order % characteristic != 0)
        throw std::invalid_argument("GroupCtx: characteristic must divide the group order");
    q_.assign(static_cast<std::size_t>(m_) * m_, 0);
    for (std::uint32_t x = 0; x < m_; ++x)
        for (std::uint32_t y = 0; y < m_; ++y)
            q_[static_cast<std::size_t>(x) * m_ + y] = ((x + y) % m_ < y) ? 1 : 0;
}

GroupElt GroupCtx::g(long long e) const noexcept {
    long long r = e % static_cast<long long>(m_);
    if (r < 0) r += m_;
    return GroupElt{static_cast<std::uint32_t>(r)};
}

void GroupCtx::check_elt(GroupElt x) const {
    if (x.exp >= m_)
        throw std::invalid_argument("GroupCtx: group element from a different context");
}

void GroupCtx::check_alg(const AlgElt& a) const {
    if (a.c.size() != m_)
        throw std::invalid_argument("GroupCtx: algebra element from a different context");
}

GroupElt GroupCtx::group_mul(GroupElt x, GroupElt y) const {
    check_elt(x);
    check_elt(y);
    std::uint32_t e = x.exp + y.exp;
    if (e >= m_) e -= m_;
    return GroupElt{e};
}

GroupElt GroupCtx::group_inv(GroupElt x) const {
    check_elt(x);
    return GroupElt{x.exp == 0 ? 0 : m_ - x.exp};
}

bool GroupCtx::in_q(GroupElt x, GroupElt y) const {
    check_elt(x);
    check_elt(y);
    return q_[static_cast<std::size_t>(x.exp) * m_ + y.exp] != 0;
}

AlgElt GroupCtx::alg_zero() const { return AlgElt{std::vector<Fp>(m_, Fp{0})}; }

AlgElt GroupCtx::alg_unit() const { return alg_basis(GroupElt{0}, fp_.one()); }

AlgElt GroupCtx::alg_basis(GroupElt x, Fp coeff) const {
    check_elt(x);
    AlgElt a = alg_zero();
    a.c[x.exp] = coeff;
    return a;
}

AlgElt GroupCtx::bracket_int(GroupElt x) const {
    check_elt(x);
    AlgElt a = alg_zero();
    for (std::uint32_t i = 0; i < x.exp; ++i) a.c[i] = fp_.one();
    return a;
}

AlgElt GroupCtx::norm_t() const {
    return AlgElt{std::vector<Fp>(m_, fp_.one())};
}

AlgElt GroupCtx::add(const AlgElt& a, const AlgElt& b) const {
    check_alg(a);
    check_alg(b);
    AlgElt r = a;
    for (std::uint32_t i = 0; i < m_; ++i) r.c[i] = fp_.add(r.c[i], b.c[i]);
    return r;
}

AlgElt GroupCtx::sub(const AlgElt& a, const AlgElt& b) const {
    check_alg(a);
    check_alg(b);
    AlgElt r = a;
    for (std::uint32_t i = 0; i < m_; ++i) r.c[i] = fp_.sub(r.c[i], b.c[i]);
    return r;
}

AlgElt GroupCtx::scale(Fp s, const AlgElt& a) const {
    check_alg(a);
    AlgElt r = a;
    for (std::uint32_t i = 0; i < m_; ++i) r.c[i] = fp_.mul(s, r.c[i]);
    return r;
}

AlgElt GroupCtx::mul(const AlgElt& a, const AlgElt& b) const {
    check_alg(a);
    check_alg(b);
    AlgElt r = alg_zero();
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (a.c[i].v == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) {
            if (b.c[j].v == 0) continue;
            std::uint32_t k = i + j;
            if (k >= m_) k -= m_;
            r.c[k] = fp_.add(r.c[k], fp_.mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

AlgElt GroupCtx::mul_g_minus_1(const AlgElt& a) const {
    check_alg(a);
    AlgElt r = alg_zero();
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t k = i + 1 == m_ ? 0 : i + 1;
        r.c[k] = fp_.add(r.c[k], a.c[i]);
        r.c[i] = fp_.sub(r.c[i], a.c[i]);
    }
    return r;
}

void GroupCtx::axpy(AlgElt& dst, Fp s, const AlgElt& src) const {
    if (s.v == 0) return;
    for (std::uint32_t i = 0; i < m_; ++i)
        dst.c[i] = fp_.add(dst.c[i], fp_.mul(s, src.c[i]));
}

bool GroupCtx::is_zero(const AlgElt& a) const {
    check_alg(a);
    for (Fp x : a.c)
        if (x.v != 0) return false;
    return true;
}

Fp GroupCtx::epsilon(const AlgElt& a) const {
    check_alg(a);
    Fp s = fp_.zero();
    for (Fp x : a.c) s = fp_.add(s, x);
    return s;
}

Fp GroupCtx::beta1(GroupElt x) const {
    check_elt(x);
    return fp_.from_int(x.exp);
}

GroupElt GroupCtx::a_coeff(std::span<const std::uint32_t> tuple) const {
    if (tuple.empty()) throw std::invalid_argument("a_coeff: empty tuple");
    for (std::uint32_t i : tuple)
        if (i >= m_) throw std::invalid_argument("a_coeff: entry out of range");
    long long e = static_cast<long long>(m_) - 1 - tuple[0];
    for (std::size_t r = 1; r < tuple.size(); ++r)
        e += static_cast<long long>(m_) - (static_cast<long long>(tuple[r]) + static_cast<long long>(r) + 1);
    return g(e);
}

}  // namespace gbr
