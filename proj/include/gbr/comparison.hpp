#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "gbr/complexes.hpp"
#include "gbr/report.hpp"

namespace gbr {

/// The parity-indexed condition C(n) for n >= 2: x_i ∈ Q(x_{i+1}) at every
/// odd i when n is even, at every even i when n is odd.
bool satisfies_c(const GroupCtx& ctx, std::span<const GroupElt> tuple);

/// Coefficient of v_n under the comparison map q from the bar resolution to
/// the minimal one: 1 in degree 0, [x_1]_g in degree 1, and for n >= 2 the
/// C(n)-gated value (1 for even n, [x_1]_g for odd n).
AlgElt q_apply(const GroupCtx& ctx, std::span<const GroupElt> tuple);

/// Image of v_n under the comparison map s from the minimal resolution to
/// the bar resolution: the a(i_1,...,i_k)-weighted sum over the alternating
/// tuples [g|g^{i_1}|g|...], with a trailing g in odd degrees.
BarElt s_chain(const GroupCtx& ctx, int n);

/// Induced isomorphism H^n(G,K) -> K: sums the cochain over the tuples
/// [g|g^{i_1}|g|...|g^{i_k}] (even n) or [g|g^{i_1}|...|g^{i_k}|g] (odd n).
Fp s_value(const GroupCtx& ctx, const GroupCochain& c);

/// Same sum but evaluating the cochain pointwise; avoids materializing m^n
/// values for large degrees.
Fp s_value(const GroupCtx& ctx, int degree,
           const std::function<Fp(std::span<const GroupElt>)>& eval);

/// s ⊗ id: extracts the class of a cocycle in H^n ⊗ A as an element of A.
AlgElt s_tensor(const GroupCtx& ctx, const TensorCochain& c);

/// Pointwise value of the basis cocycle β^n.
Fp beta_eval(const GroupCtx& ctx, int n, std::span<const GroupElt> tuple);

/// β^n as a dense cochain.
GroupCochain beta_n(const GroupCtx& ctx, int n);

/// Induced map K -> H^n(G,K): λ · β^n.
GroupCochain q_cochain(const GroupCtx& ctx, int n, Fp lambda);

/// Checks q_{n-1} ∘ d_n = δ_n ∘ q_n on every basis tuple for all degrees
/// n = 1 .. max_n+1 (δ_n is g-1 in odd degrees, T in even degrees).
Report verify_q_chainmap(const GroupCtx& ctx, int max_n);

/// Checks d_n ∘ s_n = s_{n-1} ∘ δ_n for n = 1 .. max_n.
Report verify_s_chainmap(const GroupCtx& ctx, int max_n);

/// Draws random cocycles α of the given degree and confirms that
/// α - q_cochain(degree, s_value(α)) is a coboundary, re-verifying each
/// witness by applying the differential.
Report verify_homotopy(const GroupCtx& ctx, int degree, int trials, std::uint64_t seed);

std::string tuple_repr(std::span<const GroupElt> tuple);
std::string alg_repr(const GroupCtx& ctx, const AlgElt& a);

}  // namespace gbr
