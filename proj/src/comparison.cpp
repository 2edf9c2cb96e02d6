#include "gbr/comparison.hpp"

#include <random>
#include <sstream>

namespace gbr {

namespace {

// Enumerates the alternating tuples [g|g^{i_1}|g|...] of the given degree and
// accumulates eval() over them. k = degree/2 free indices; odd degrees carry
// a trailing g.
template <class Eval>
Fp alternating_sum(const GroupCtx& ctx, int degree, Eval&& eval) {
    const PrimeField& K = ctx.field();
    const std::uint32_t m = ctx.order();
    const int k = degree / 2;
    std::vector<GroupElt> tuple(static_cast<std::size_t>(degree), GroupElt{1});
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(k), 0);
    Fp acc = K.zero();
    while (true) {
        for (int r = 0; r < k; ++r) tuple[2 * r + 1] = GroupElt{idx[r]};
        acc = K.add(acc, eval(std::span<const GroupElt>(tuple)));
        int pos = 0;
        while (pos < k) {
            if (++idx[pos] < m) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return acc;
}

}  // namespace

std::string tuple_repr(std::span<const GroupElt> tuple) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << '|';
        os << 'g' << '^' << tuple[i].exp;
    }
    os << ']';
    return os.str();
}

std::string alg_repr(const GroupCtx& ctx, const AlgElt& a) {
    std::ostringstream os;
    os << '(';
    for (std::uint32_t i = 0; i < ctx.order(); ++i) {
        if (i) os << ',';
        os << a.c[i].v;
    }
    os << ')';
    return os.str();
}

bool satisfies_c(const GroupCtx& ctx, std::span<const GroupElt> tuple) {
    const int n = static_cast<int>(tuple.size());
    if (n < 2) throw std::invalid_argument("satisfies_c: degree must be >= 2");
    // paper index i runs over odd values for even n, even values for odd n;
    // tuple is 0-based, so the first checked pair starts at 0 resp. 1.
    for (int i = n % 2 == 0 ? 0 : 1; i + 1 < n; i += 2)
        if (!ctx.in_q(tuple[i], tuple[i + 1])) return false;
    return true;
}

AlgElt q_apply(const GroupCtx& ctx, std::span<const GroupElt> tuple) {
    const int n = static_cast<int>(tuple.size());
    if (n == 0) return ctx.alg_unit();
    if (n == 1) return ctx.bracket_int(tuple[0]);
    if (!satisfies_c(ctx, tuple)) return ctx.alg_zero();
    return n % 2 == 0 ? ctx.alg_unit() : ctx.bracket_int(tuple[0]);
}

BarElt s_chain(const GroupCtx& ctx, int n) {
    if (n < 0) throw std::invalid_argument("s_chain: negative degree");
    const std::uint32_t m = ctx.order();
    const int k = n / 2;
    tuple_space_size(ctx, k);  // resource guard on the m^k terms
    BarElt out;
    out.degree = n;
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(k), 0);
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(n), 1);
    while (true) {
        for (int r = 0; r < k; ++r) tuple[2 * r + 1] = idx[r];
        GroupElt a = k > 0 ? ctx.a_coeff(idx) : GroupElt{0};
        bar_add_term(ctx, out, tuple, ctx.alg_basis(a, ctx.field().one()));
        int pos = 0;
        while (pos < k) {
            if (++idx[pos] < m) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return out;
}

Fp s_value(const GroupCtx& ctx, const GroupCochain& c) {
    if (c.degree == 0) return c.values[0];
    return alternating_sum(ctx, c.degree, [&](std::span<const GroupElt> t) {
        return c.values[encode_tuple(ctx, t)];
    });
}

Fp s_value(const GroupCtx& ctx, int degree,
           const std::function<Fp(std::span<const GroupElt>)>& eval) {
    if (degree == 0) return eval({});
    return alternating_sum(ctx, degree, eval);
}

AlgElt s_tensor(const GroupCtx& ctx, const TensorCochain& c) {
    if (c.degree == 0) return c.values[0];
    AlgElt acc = ctx.alg_zero();
    alternating_sum(ctx, c.degree, [&](std::span<const GroupElt> t) {
        acc = ctx.add(acc, c.values[encode_tuple(ctx, t)]);
        return ctx.field().zero();
    });
    return acc;
}

Fp beta_eval(const GroupCtx& ctx, int n, std::span<const GroupElt> tuple) {
    if (n < 0) throw std::invalid_argument("beta_eval: negative degree");
    if (static_cast<int>(tuple.size()) != n)
        throw std::invalid_argument("beta_eval: tuple length != degree");
    if (n == 0) return ctx.field().one();
    if (n == 1) return ctx.beta1(tuple[0]);
    if (!satisfies_c(ctx, tuple)) return ctx.field().zero();
    return n % 2 == 0 ? ctx.field().one() : ctx.beta1(tuple[0]);
}

GroupCochain beta_n(const GroupCtx& ctx, int n) {
    GroupCochain out = zero_group_cochain(ctx, n);
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        auto t = decode_tuple(ctx, idx, n);
        out.values[idx] = beta_eval(ctx, n, t);
    }
    return out;
}

GroupCochain q_cochain(const GroupCtx& ctx, int n, Fp lambda) {
    return cochain_scale(ctx, lambda, beta_n(ctx, n));
}

Report verify_q_chainmap(const GroupCtx& ctx, int max_n) {
    Report rep;
    rep.name = "q_chain_map";
    const std::uint32_t m = ctx.order();
    for (int n = 1; n <= max_n + 1; ++n) {
        const std::size_t count = tuple_space_size(ctx, n);
        std::vector<GroupElt> t(static_cast<std::size_t>(n));
        std::vector<GroupElt> sub(static_cast<std::size_t>(n) - 1);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rest = idx;
            for (int i = 0; i < n; ++i) {
                t[i] = GroupElt{static_cast<std::uint32_t>(rest % m)};
                rest /= m;
            }
            // q_{n-1}(d_n[t])
            sub.assign(t.begin() + 1, t.end());
            AlgElt lhs = ctx.mul(ctx.alg_basis(t[0], ctx.field().one()),
                                 q_apply(ctx, sub));
            bool negative = true;
            for (int i = 1; i <= n - 1; ++i) {
                sub.assign(t.begin(), t.end());
                sub.erase(sub.begin() + i);
                sub[i - 1] = ctx.group_mul(t[i - 1], t[i]);
                AlgElt term = q_apply(ctx, sub);
                lhs = negative ? ctx.sub(lhs, term) : ctx.add(lhs, term);
                negative = !negative;
            }
            sub.assign(t.begin(), t.end() - 1);
            AlgElt last = q_apply(ctx, sub);
            lhs = n % 2 != 0 ? ctx.sub(lhs, last) : ctx.add(lhs, last);
            // δ_n(q_n[t])
            AlgElt rhs = minimal_diff(ctx, n, q_apply(ctx, t));
            ++rep.checks;
            if (!(lhs == rhs))
                rep.record_failure("degree " + std::to_string(n) + " at " + tuple_repr(t) +
                                   ": q(d x) = " + alg_repr(ctx, lhs) +
                                   " but delta(q x) = " + alg_repr(ctx, rhs));
        }
    }
    return rep;
}

Report verify_s_chainmap(const GroupCtx& ctx, int max_n) {
    Report rep;
    rep.name = "s_chain_map";
    for (int n = 1; n <= max_n; ++n) {
        BarElt lhs = bar_diff(ctx, s_chain(ctx, n));
        AlgElt mult = n % 2 != 0 ? ctx.mul_g_minus_1(ctx.alg_unit()) : ctx.norm_t();
        BarElt rhs = bar_scale(ctx, mult, s_chain(ctx, n - 1));
        ++rep.checks;
        if (!(lhs == rhs))
            rep.record_failure("degree " + std::to_string(n) +
                               ": d(s v_n) != s(delta v_n), term counts " +
                               std::to_string(lhs.terms.size()) + " vs " +
                               std::to_string(rhs.terms.size()));
    }
    return rep;
}

Report verify_homotopy(const GroupCtx& ctx, int degree, int trials, std::uint64_t seed) {
    Report rep;
    rep.name = "homotopy_witness_deg" + std::to_string(degree);
    if (degree < 1) throw std::invalid_argument("verify_homotopy: degree must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.field().modulus() - 1);
    const GroupCochain beta = beta_n(ctx, degree);
    for (int trial = 0; trial < trials; ++trial) {
        GroupCochain b = zero_group_cochain(ctx, degree - 1);
        for (auto& v : b.values) v = Fp{coeff(rng)};
        Fp lambda = Fp{coeff(rng)};
        GroupCochain alpha = cochain_add(ctx, cochain_scale(ctx, lambda, beta),
                                         cochain_diff(ctx, b));
        Fp cls = s_value(ctx, alpha);
        GroupCochain diff = cochain_sub(ctx, alpha, q_cochain(ctx, degree, cls));
        auto w = coboundary_witness(ctx, diff);
        ++rep.checks;
        if (!w) {
            rep.record_failure("trial " + std::to_string(trial) + ": no witness found");
            continue;
        }
        if (!(cochain_diff(ctx, *w) == diff))
            rep.record_failure("trial " + std::to_string(trial) +
                               ": witness does not re-verify");
    }
    return rep;
}

}  // namespace gbr
