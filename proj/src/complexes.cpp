#include "gbr/complexes.hpp"

#include <string>

namespace gbr {

namespace {

// parity of a*b for possibly negative small integers
bool product_is_odd(long long a, long long b) {
    return (a % 2 != 0) && (b % 2 != 0);
}

Fp sign_of(const PrimeField& K, long long a, long long b) {
    return product_is_odd(a, b) ? K.neg(K.one()) : K.one();
}

std::vector<std::size_t> m_powers(const GroupCtx& ctx, int up_to) {
    std::vector<std::size_t> p(static_cast<std::size_t>(up_to) + 1, 1);
    for (int i = 1; i <= up_to; ++i) p[i] = p[i - 1] * ctx.order();
    return p;
}

// sum of the tuple's exponents mod m
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

std::size_t tuple_space_size(const GroupCtx& ctx, int degree,
                             std::size_t scalars_per_value) {
    if (degree < 0) throw std::invalid_argument("tuple_space_size: negative degree");
    std::size_t n = 1;
    const std::size_t limit = ctx.alloc_budget();
    for (int i = 0; i < degree; ++i) {
        if (n > limit / ctx.order())
            throw alloc_guard_error("tuple space of degree " + std::to_string(degree) +
                                    " exceeds the allocation budget");
        n *= ctx.order();
    }
    if (scalars_per_value != 0 && n > limit / scalars_per_value)
        throw alloc_guard_error("cochain of degree " + std::to_string(degree) +
                                " exceeds the allocation budget");
    return n;
}

std::vector<GroupElt> decode_tuple(const GroupCtx& ctx, std::size_t index, int degree) {
    std::vector<GroupElt> t(static_cast<std::size_t>(degree));
    const std::uint32_t m = ctx.order();
    for (int i = 0; i < degree; ++i) {
        t[i] = GroupElt{static_cast<std::uint32_t>(index % m)};
        index /= m;
    }
    return t;
}

std::size_t encode_tuple(const GroupCtx& ctx, std::span<const GroupElt> tuple) {
    std::size_t idx = 0;
    std::size_t w = 1;
    for (GroupElt x : tuple) {
        idx += x.exp * w;
        w *= ctx.order();
    }
    return idx;
}

GroupCochain zero_group_cochain(const GroupCtx& ctx, int degree) {
    return GroupCochain{degree, std::vector<Fp>(tuple_space_size(ctx, degree), Fp{0})};
}

TensorCochain zero_tensor_cochain(const GroupCtx& ctx, int degree) {
    return TensorCochain{degree, std::vector<AlgElt>(
        tuple_space_size(ctx, degree, ctx.order()), ctx.alg_zero())};
}

HochCochain zero_hoch_cochain(const GroupCtx& ctx, int degree) {
    return HochCochain{degree, std::vector<AlgElt>(
        tuple_space_size(ctx, degree, ctx.order()), ctx.alg_zero())};
}

GroupCochain cochain_add(const GroupCtx& ctx, const GroupCochain& a, const GroupCochain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("cochain_add: degree mismatch");
    GroupCochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] = ctx.field().add(r.values[i], b.values[i]);
    return r;
}

GroupCochain cochain_sub(const GroupCtx& ctx, const GroupCochain& a, const GroupCochain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("cochain_sub: degree mismatch");
    GroupCochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] = ctx.field().sub(r.values[i], b.values[i]);
    return r;
}

GroupCochain cochain_scale(const GroupCtx& ctx, Fp s, const GroupCochain& a) {
    GroupCochain r = a;
    for (auto& v : r.values) v = ctx.field().mul(s, v);
    return r;
}

bool cochain_is_zero(const GroupCochain& c) {
    for (Fp v : c.values)
        if (v.v != 0) return false;
    return true;
}

TensorCochain tensor_sub(const GroupCtx& ctx, const TensorCochain& a, const TensorCochain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("tensor_sub: degree mismatch");
    TensorCochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] = ctx.sub(r.values[i], b.values[i]);
    return r;
}

bool tensor_is_zero(const GroupCtx& ctx, const TensorCochain& c) {
    for (const AlgElt& v : c.values)
        if (!ctx.is_zero(v)) return false;
    return true;
}

HochCochain hoch_add(const GroupCtx& ctx, const HochCochain& a, const HochCochain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("hoch_add: degree mismatch");
    HochCochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] = ctx.add(r.values[i], b.values[i]);
    return r;
}

HochCochain hoch_sub(const GroupCtx& ctx, const HochCochain& a, const HochCochain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("hoch_sub: degree mismatch");
    HochCochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] = ctx.sub(r.values[i], b.values[i]);
    return r;
}

HochCochain hoch_scale(const GroupCtx& ctx, Fp s, const HochCochain& a) {
    HochCochain r = a;
    for (auto& v : r.values) v = ctx.scale(s, v);
    return r;
}

bool hoch_is_zero(const GroupCtx& ctx, const HochCochain& c) {
    for (const AlgElt& v : c.values)
        if (!ctx.is_zero(v)) return false;
    return true;
}

GroupCochain cochain_diff(const GroupCtx& ctx, const GroupCochain& c) {
    const int n = c.degree;
    GroupCochain out = zero_group_cochain(ctx, n + 1);
    if (n == 0) return out;  // d_0 = 0
    const PrimeField& K = ctx.field();
    const std::uint32_t m = ctx.order();
    const auto pw = m_powers(ctx, n + 1);
    std::vector<std::uint32_t> x(static_cast<std::size_t>(n) + 1);
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        std::size_t rest = idx;
        for (int t = 0; t <= n; ++t) {
            x[t] = static_cast<std::uint32_t>(rest % m);
            rest /= m;
        }
        // drop x_1
        Fp acc = c.values[idx / m];
        // merge x_i x_{i+1}
        bool negative = true;
        for (int i = 1; i <= n; ++i) {
            std::size_t low = idx % pw[i - 1];
            std::size_t high = idx / pw[i + 1];
            std::uint32_t merged = (x[i - 1] + x[i]) % m;
            std::size_t sub = low + merged * pw[i - 1] + high * pw[i];
            acc = negative ? K.sub(acc, c.values[sub]) : K.add(acc, c.values[sub]);
            negative = !negative;
        }
        // drop x_{n+1}; sign (-1)^{n+1}
        Fp last = c.values[idx % pw[n]];
        acc = (n + 1) % 2 != 0 ? K.sub(acc, last) : K.add(acc, last);
        out.values[idx] = acc;
    }
    return out;
}

TensorCochain tensor_diff(const GroupCtx& ctx, const TensorCochain& c) {
    const int n = c.degree;
    TensorCochain out = zero_tensor_cochain(ctx, n + 1);
    if (n == 0) return out;
    const std::uint32_t m = ctx.order();
    const auto pw = m_powers(ctx, n + 1);
    std::vector<std::uint32_t> x(static_cast<std::size_t>(n) + 1);
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        std::size_t rest = idx;
        for (int t = 0; t <= n; ++t) {
            x[t] = static_cast<std::uint32_t>(rest % m);
            rest /= m;
        }
        AlgElt acc = c.values[idx / m];
        bool negative = true;
        for (int i = 1; i <= n; ++i) {
            std::size_t low = idx % pw[i - 1];
            std::size_t high = idx / pw[i + 1];
            std::uint32_t merged = (x[i - 1] + x[i]) % m;
            std::size_t sub = low + merged * pw[i - 1] + high * pw[i];
            acc = negative ? ctx.sub(acc, c.values[sub]) : ctx.add(acc, c.values[sub]);
            negative = !negative;
        }
        const AlgElt& last = c.values[idx % pw[n]];
        acc = (n + 1) % 2 != 0 ? ctx.sub(acc, last) : ctx.add(acc, last);
        out.values[idx] = acc;
    }
    return out;
}

BarElt bar_basis(const GroupCtx& ctx, std::span<const GroupElt> tuple) {
    BarElt b;
    b.degree = static_cast<int>(tuple.size());
    std::vector<std::uint32_t> key;
    key.reserve(tuple.size());
    for (GroupElt x : tuple) key.push_back(x.exp);
    b.terms.emplace(std::move(key), ctx.alg_unit());
    return b;
}

void bar_add_term(const GroupCtx& ctx, BarElt& b, std::vector<std::uint32_t> tuple,
                  const AlgElt& coeff) {
    if (static_cast<int>(tuple.size()) != b.degree)
        throw std::invalid_argument("bar_add_term: tuple length != degree");
    auto it = b.terms.find(tuple);
    if (it == b.terms.end()) {
        if (!ctx.is_zero(coeff)) b.terms.emplace(std::move(tuple), coeff);
        return;
    }
    it->second = ctx.add(it->second, coeff);
    if (ctx.is_zero(it->second)) b.terms.erase(it);
}

BarElt bar_scale(const GroupCtx& ctx, const AlgElt& s, const BarElt& b) {
    BarElt r;
    r.degree = b.degree;
    for (const auto& [tuple, coeff] : b.terms) {
        AlgElt c = ctx.mul(s, coeff);
        if (!ctx.is_zero(c)) r.terms.emplace(tuple, std::move(c));
    }
    return r;
}

BarElt bar_diff(const GroupCtx& ctx, const BarElt& b) {
    if (b.degree < 1) throw std::invalid_argument("bar_diff: degree must be >= 1");
    const std::uint32_t m = ctx.order();
    BarElt out;
    out.degree = b.degree - 1;
    const int n = b.degree;
    for (const auto& [t, a] : b.terms) {
        // x_1 [x_2|...|x_n]
        std::vector<std::uint32_t> head(t.begin() + 1, t.end());
        bar_add_term(ctx, out, std::move(head), ctx.mul(ctx.alg_basis(GroupElt{t[0]}, ctx.field().one()), a));
        // interior merges, sign (-1)^i
        AlgElt neg_a = ctx.scale(ctx.field().neg(ctx.field().one()), a);
        bool negative = true;
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<std::uint32_t> merged;
            merged.reserve(static_cast<std::size_t>(n) - 1);
            for (int k = 0; k < i - 1; ++k) merged.push_back(t[k]);
            merged.push_back((t[i - 1] + t[i]) % m);
            for (int k = i + 1; k < n; ++k) merged.push_back(t[k]);
            bar_add_term(ctx, out, std::move(merged), negative ? neg_a : a);
            negative = !negative;
        }
        // (-1)^n [x_1|...|x_{n-1}]
        std::vector<std::uint32_t> tail(t.begin(), t.end() - 1);
        bar_add_term(ctx, out, std::move(tail), n % 2 != 0 ? neg_a : a);
    }
    return out;
}

AlgElt minimal_diff(const GroupCtx& ctx, int n, const AlgElt& a) {
    if (n < 1) throw std::invalid_argument("minimal_diff: degree must be >= 1");
    return n % 2 != 0 ? ctx.mul_g_minus_1(a) : ctx.mul(ctx.norm_t(), a);
}

HochCochain hoch_circle_i(const GroupCtx& ctx, const HochCochain& f,
                          const HochCochain& h, int slot) {
    const int n = f.degree;
    const int md = h.degree;
    if (n < 1) throw std::invalid_argument("hoch_circle_i: outer degree must be >= 1");
    if (slot < 1 || slot > n) throw std::invalid_argument("hoch_circle_i: slot out of range");
    const int N = n + md - 1;
    HochCochain out = zero_hoch_cochain(ctx, N);
    const std::uint32_t m = ctx.order();
    const auto pw = m_powers(ctx, N + 1);
    const std::size_t below = pw[slot - 1];
    const std::size_t span = pw[md];
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        const std::size_t low = idx % below;
        const std::size_t mid = (idx / below) % span;
        const std::size_t high = idx / (below * span);
        const AlgElt& inserted = h.values[mid];
        AlgElt& dst = out.values[idx];
        for (std::uint32_t z = 0; z < m; ++z) {
            Fp lam = inserted.c[z];
            if (lam.v == 0) continue;
            std::size_t fidx = low + z * below + high * pw[slot];
            ctx.axpy(dst, lam, f.values[fidx]);
        }
    }
    return out;
}

HochCochain hoch_circle(const GroupCtx& ctx, const HochCochain& f, const HochCochain& h) {
    const int n = f.degree;
    const int md = h.degree;
    if (n == 0) {
        if (md == 0) throw std::invalid_argument("hoch_circle: both degrees zero");
        return zero_hoch_cochain(ctx, md - 1);  // a ∘ h := 0
    }
    HochCochain acc = zero_hoch_cochain(ctx, n + md - 1);
    for (int i = 1; i <= n; ++i) {
        HochCochain term = hoch_circle_i(ctx, f, h, i);
        Fp s = sign_of(ctx.field(), i - 1, md - 1);
        for (std::size_t idx = 0; idx < acc.values.size(); ++idx)
            ctx.axpy(acc.values[idx], s, term.values[idx]);
    }
    return acc;
}

HochCochain hoch_bracket(const GroupCtx& ctx, const HochCochain& f, const HochCochain& h) {
    const int n = f.degree;
    const int md = h.degree;
    if (n == 0 && md == 0) return zero_hoch_cochain(ctx, 0);
    HochCochain left = hoch_circle(ctx, f, h);
    HochCochain right = hoch_circle(ctx, h, f);
    Fp s = sign_of(ctx.field(), n - 1, md - 1);
    HochCochain out = left;
    Fp ms = ctx.field().neg(s);
    for (std::size_t idx = 0; idx < out.values.size(); ++idx)
        ctx.axpy(out.values[idx], ms, right.values[idx]);
    return out;
}

HochCochain mult_cochain(const GroupCtx& ctx) {
    HochCochain mu = zero_hoch_cochain(ctx, 2);
    const std::uint32_t m = ctx.order();
    for (std::uint32_t x = 0; x < m; ++x)
        for (std::uint32_t y = 0; y < m; ++y)
            mu.values[x + static_cast<std::size_t>(y) * m].c[(x + y) % m] = ctx.field().one();
    return mu;
}

HochCochain hoch_diff(const GroupCtx& ctx, const HochCochain& f) {
    HochCochain br = hoch_bracket(ctx, mult_cochain(ctx), f);
    // (-1)^{n-1}
    if ((f.degree - 1) % 2 != 0) return hoch_scale(ctx, ctx.field().neg(ctx.field().one()), br);
    return br;
}

TensorCochain phi_map(const GroupCtx& ctx, const HochCochain& f) {
    TensorCochain out = zero_tensor_cochain(ctx, f.degree);
    const std::uint32_t m = ctx.order();
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        const std::uint32_t shift = digit_sum(ctx, idx, f.degree);
        const AlgElt& fv = f.values[idx];
        AlgElt& cv = out.values[idx];
        for (std::uint32_t x = 0; x < m; ++x) cv.c[x] = fv.c[(shift + x) % m];
    }
    return out;
}

HochCochain psi_map(const GroupCtx& ctx, const TensorCochain& c) {
    HochCochain out = zero_hoch_cochain(ctx, c.degree);
    const std::uint32_t m = ctx.order();
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        const std::uint32_t shift = digit_sum(ctx, idx, c.degree);
        const AlgElt& cv = c.values[idx];
        AlgElt& fv = out.values[idx];
        for (std::uint32_t x = 0; x < m; ++x) fv.c[(shift + x) % m] = cv.c[x];
    }
    return out;
}

std::optional<GroupCochain> coboundary_witness(const GroupCtx& ctx, const GroupCochain& c) {
    const int n = c.degree;
    if (n < 1) throw std::invalid_argument("coboundary_witness: degree must be >= 1");
    if (!cochain_is_zero(cochain_diff(ctx, c)))
        throw std::invalid_argument("coboundary_witness: input is not a cocycle");
    const std::size_t rows = c.values.size();
    const std::size_t cols = tuple_space_size(ctx, n - 1);
    MatrixFp A(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        GroupCochain e = zero_group_cochain(ctx, n - 1);
        e.values[j] = ctx.field().one();
        GroupCochain de = cochain_diff(ctx, e);
        for (std::size_t r = 0; r < rows; ++r) A.at(r, j) = de.values[r];
    }
    auto x = solve_linear(ctx.field(), std::move(A), c.values);
    if (!x) return std::nullopt;
    return GroupCochain{n - 1, std::move(*x)};
}

std::optional<TensorCochain> coboundary_witness(const GroupCtx& ctx, const TensorCochain& c) {
    const int n = c.degree;
    if (n < 1) throw std::invalid_argument("coboundary_witness: degree must be >= 1");
    TensorCochain out = zero_tensor_cochain(ctx, n - 1);
    const std::uint32_t m = ctx.order();
    for (std::uint32_t x = 0; x < m; ++x) {
        GroupCochain coord{n, std::vector<Fp>(c.values.size())};
        for (std::size_t idx = 0; idx < c.values.size(); ++idx)
            coord.values[idx] = c.values[idx].c[x];
        auto w = coboundary_witness(ctx, coord);
        if (!w) return std::nullopt;
        for (std::size_t idx = 0; idx < out.values.size(); ++idx)
            out.values[idx].c[x] = w->values[idx];
    }
    return out;
}

}  // namespace gbr
