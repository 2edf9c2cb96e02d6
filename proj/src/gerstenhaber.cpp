#include "gbr/gerstenhaber.hpp"

#include <string>

namespace gbr {

namespace {

bool product_is_odd(long long a, long long b) {
    return (a % 2 != 0) && (b % 2 != 0);
}

std::vector<std::size_t> m_powers(const GroupCtx& ctx, int up_to) {
    std::vector<std::size_t> p(static_cast<std::size_t>(up_to) + 1, 1);
    for (int i = 1; i <= up_to; ++i) p[i] = p[i - 1] * ctx.order();
    return p;
}

std::uint32_t digit_sum(const GroupCtx& ctx, std::size_t index, int degree) {
    std::uint64_t s = 0;
    const std::uint32_t m = ctx.order();
    for (int t = 0; t < degree; ++t) {
        s += index % m;
        index /= m;
    }
    return static_cast<std::uint32_t>(s % m);
}

}  // namespace

void GradedElt::add_term(const PrimeField& K, int degree, std::uint32_t exp, Fp coeff) {
    if (coeff.v == 0) return;
    Key key{degree, exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second = K.add(it->second, coeff);
    if (it->second.v == 0) terms_.erase(it);
}

GradedElt graded_add(const PrimeField& K, const GradedElt& a, const GradedElt& b) {
    GradedElt r = a;
    for (const auto& [key, c] : b.terms()) r.add_term(K, key.first, key.second, c);
    return r;
}

GradedElt graded_scale(const PrimeField& K, Fp s, const GradedElt& a) {
    GradedElt r;
    for (const auto& [key, c] : a.terms()) r.add_term(K, key.first, key.second, K.mul(s, c));
    return r;
}

GroupCochain gamma_i(const GroupCtx& ctx, const GroupCochain& alpha,
                     const GroupCochain& beta, GroupElt y, int slot) {
    const int n = alpha.degree;
    const int md = beta.degree;
    if (n < 1 || md < 1)
        throw std::invalid_argument("gamma_i: both degrees must be >= 1");
    if (slot < 1 || slot > n) throw std::invalid_argument("gamma_i: slot out of range");
    const int N = n + md - 1;
    GroupCochain out = zero_group_cochain(ctx, N);
    const std::uint32_t m = ctx.order();
    const auto pw = m_powers(ctx, N + 1);
    const std::size_t below = pw[slot - 1];
    const std::size_t span = pw[md];
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        const std::size_t low = idx % below;
        const std::size_t mid = (idx / below) % span;
        const std::size_t high = idx / (below * span);
        Fp bval = beta.values[mid];
        if (bval.v == 0) continue;
        const std::uint32_t merged = (digit_sum(ctx, mid, md) + y.exp) % m;
        const std::size_t aidx = low + merged * below + high * pw[slot];
        out.values[idx] = ctx.field().mul(alpha.values[aidx], bval);
    }
    return out;
}

GroupCochain gamma(const GroupCtx& ctx, const GroupCochain& alpha,
                   const GroupCochain& beta, GroupElt y) {
    const int n = alpha.degree;
    if (n < 1) throw std::invalid_argument("gamma: outer degree must be >= 1");
    GroupCochain acc = zero_group_cochain(ctx, n + beta.degree - 1);
    for (int i = 1; i <= n; ++i) {
        GroupCochain term = gamma_i(ctx, alpha, beta, y, i);
        if (product_is_odd(beta.degree - 1, i - 1))
            acc = cochain_sub(ctx, acc, term);
        else
            acc = cochain_add(ctx, acc, term);
    }
    return acc;
}

TensorCochain transferred_bracket(const GroupCtx& ctx, const BasisClass& a,
                                  const BasisClass& b) {
    if (a.degree < 1 || b.degree < 1)
        throw std::invalid_argument(
            "transferred_bracket: degree-0 operand (use oracle_bracket)");
    const PrimeField& K = ctx.field();
    const GroupCochain alpha = beta_n(ctx, a.degree);
    const GroupCochain beta = beta_n(ctx, b.degree);
    GroupCochain comb = gamma(ctx, alpha, beta, GroupElt{b.exp});
    GroupCochain swapped = gamma(ctx, beta, alpha, GroupElt{a.exp});
    if (product_is_odd(a.degree - 1, b.degree - 1))
        comb = cochain_add(ctx, comb, swapped);
    else
        comb = cochain_sub(ctx, comb, swapped);
    comb = cochain_scale(ctx, K.mul(a.coeff, b.coeff), comb);
    const GroupElt xy = ctx.group_mul(GroupElt{a.exp}, GroupElt{b.exp});
    TensorCochain out = zero_tensor_cochain(ctx, comb.degree);
    for (std::size_t idx = 0; idx < comb.values.size(); ++idx)
        out.values[idx].c[xy.exp] = comb.values[idx];
    return out;
}

Fp varphi(const GroupCtx& ctx, int n, GroupElt x) {
    if (n < 0) throw std::invalid_argument("varphi: negative degree");
    return n % 2 != 0 ? ctx.beta1(x) : ctx.field().zero();
}

GradedElt closed_bracket(const GroupCtx& ctx, const BasisClass& a, const BasisClass& b) {
    const PrimeField& K = ctx.field();
    Fp c = K.sub(varphi(ctx, a.degree, GroupElt{b.exp}),
                 varphi(ctx, b.degree, GroupElt{a.exp}));
    c = K.mul(c, K.mul(a.coeff, b.coeff));
    GradedElt out;
    if (c.v == 0) return out;  // covers n = m = 0, where the coefficient vanishes
    out.add_term(K, a.degree + b.degree - 1,
                 ctx.group_mul(GroupElt{a.exp}, GroupElt{b.exp}).exp, c);
    return out;
}

GradedElt closed_bracket(const GroupCtx& ctx, const GradedElt& a, const GradedElt& b) {
    GradedElt out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            GradedElt term = closed_bracket(ctx, BasisClass{ka.first, ka.second, ca},
                                            BasisClass{kb.first, kb.second, cb});
            out = graded_add(ctx.field(), out, term);
        }
    return out;
}

GradedElt class_of_tensor(const GroupCtx& ctx, int degree, const TensorCochain& c) {
    AlgElt w = s_tensor(ctx, c);
    GradedElt out;
    for (std::uint32_t x = 0; x < ctx.order(); ++x)
        out.add_term(ctx.field(), degree, x, w.c[x]);
    return out;
}

GradedElt oracle_bracket(const GroupCtx& ctx, const BasisClass& a, const BasisClass& b) {
    TensorCochain ca = zero_tensor_cochain(ctx, a.degree);
    TensorCochain cb = zero_tensor_cochain(ctx, b.degree);
    for (std::size_t idx = 0; idx < ca.values.size(); ++idx) {
        auto t = decode_tuple(ctx, idx, a.degree);
        ca.values[idx].c[a.exp] = ctx.field().mul(a.coeff, beta_eval(ctx, a.degree, t));
    }
    for (std::size_t idx = 0; idx < cb.values.size(); ++idx) {
        auto t = decode_tuple(ctx, idx, b.degree);
        cb.values[idx].c[b.exp] = ctx.field().mul(b.coeff, beta_eval(ctx, b.degree, t));
    }
    HochCochain br = hoch_bracket(ctx, psi_map(ctx, ca), psi_map(ctx, cb));
    return class_of_tensor(ctx, a.degree + b.degree - 1, phi_map(ctx, br));
}

std::pair<Fp, std::uint32_t> witt_bracket(const GroupCtx& ctx, long long i, long long j) {
    return {ctx.field().from_int(j - i), ctx.g(i + j).exp};
}

Report verify_module_structure(const GroupCtx& ctx, int n) {
    if (n < 1) throw std::invalid_argument("verify_module_structure: degree must be >= 1");
    Report rep;
    rep.name = "module_structure_deg" + std::to_string(n);
    const PrimeField& K = ctx.field();
    for (std::uint32_t i = 0; i < ctx.order(); ++i)
        for (std::uint32_t j = 0; j < ctx.order(); ++j) {
            GradedElt got = closed_bracket(ctx, BasisClass{1, i, K.one()},
                                           BasisClass{n, j, K.one()});
            Fp c = n % 2 != 0 ? K.from_int(static_cast<long long>(j) - i)
                              : K.from_int(j);
            GradedElt want;
            want.add_term(K, n, ctx.g(static_cast<long long>(i) + j).exp, c);
            ++rep.checks;
            if (!(got == want))
                rep.record_failure("(i,j) = (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") at degree " + std::to_string(n));
        }
    return rep;
}

Report verify_odd_iso(const GroupCtx& ctx, int max_r) {
    Report rep;
    rep.name = "odd_iso";
    const PrimeField& K = ctx.field();
    for (int r = 0; r <= max_r; ++r)
        for (int s = 0; s <= max_r; ++s)
            for (std::uint32_t i = 0; i < ctx.order(); ++i)
                for (std::uint32_t j = 0; j < ctx.order(); ++j) {
                    GradedElt got = closed_bracket(ctx, BasisClass{2 * r + 1, i, K.one()},
                                                   BasisClass{2 * s + 1, j, K.one()});
                    GradedElt want;
                    want.add_term(K, 2 * (r + s) + 1,
                                  ctx.g(static_cast<long long>(i) + j).exp,
                                  K.from_int(static_cast<long long>(j) - i));
                    ++rep.checks;
                    if (!(got == want))
                        rep.record_failure("(r,s,i,j) = (" + std::to_string(r) + "," +
                                           std::to_string(s) + "," + std::to_string(i) +
                                           "," + std::to_string(j) + ")");
                }
    return rep;
}

std::pair<BasisClass, bool> wittype_data(const GroupCtx& ctx, const BasisClass& a,
                                         const BasisClass& b) {
    if (a.degree % 2 == 0 || b.degree % 2 == 0)
        throw std::invalid_argument("wittype_data: operands must have odd degree");
    const PrimeField& K = ctx.field();
    BasisClass prod{a.degree + b.degree - 1,
                    ctx.group_mul(GroupElt{a.exp}, GroupElt{b.exp}).exp,
                    K.mul(a.coeff, b.coeff)};
    Fp lhs = varphi(ctx, prod.degree, GroupElt{prod.exp});
    Fp rhs = K.add(varphi(ctx, a.degree, GroupElt{a.exp}),
                   varphi(ctx, b.degree, GroupElt{b.exp}));
    return {prod, lhs == rhs};
}

}  // namespace gbr
