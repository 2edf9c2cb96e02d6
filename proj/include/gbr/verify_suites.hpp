#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gbr/gerstenhaber.hpp"

namespace gbr {

GroupCochain random_group_cochain(const GroupCtx& ctx, int degree, std::mt19937_64& rng);
TensorCochain random_tensor_cochain(const GroupCtx& ctx, int degree, std::mt19937_64& rng);
HochCochain random_hoch_cochain(const GroupCtx& ctx, int degree, std::mt19937_64& rng);

/// Compares the closed-form bracket, the fully independent Hochschild-level
/// route, and the class of the transferred representative. With samples == 0
/// the sweep is exhaustive over all degree pairs in [1, max_deg]^2 and all
/// exponent pairs; otherwise `samples` random triples are drawn.
Report verify_oracle_equivalence(const GroupCtx& ctx, int max_deg, int samples,
                                 std::uint64_t seed);

/// s ∘ γ against the four-entry parity table: odd/odd -> β(gy),
/// odd/even -> β(y), even/* -> 0, for all degrees up to max_nm and all y.
Report verify_gamma_table(const GroupCtx& ctx, int max_nm);

/// Degree-(1,1) brackets against the commutator structure constants
/// (j-i) β^1 ⊗ g^{i+j}.
Report verify_witt_relations(const GroupCtx& ctx);

/// Graded antisymmetry of the closed-form bracket over all basis pairs with
/// degrees <= max_deg.
Report verify_closed_antisymmetry(const GroupCtx& ctx, int max_deg);

/// Graded Jacobi identity over all basis triples of total degree <= max_total.
Report verify_closed_jacobi(const GroupCtx& ctx, int max_total);

/// Graded Leibniz rule δ[f,h] = [f,δh] + (-1)^{deg h - 1}[δf,h] on random
/// Hochschild cochains of degree <= 2.
Report verify_leibniz(const GroupCtx& ctx, int trials, std::uint64_t seed);

/// Graded Jacobi identity for the Hochschild-level bracket on random cochain
/// triples of total degree <= 5.
Report verify_hoch_jacobi(const GroupCtx& ctx, int trials, std::uint64_t seed);

/// φψ = id and ψφ = id on random cochains for every degree <= max_deg, and
/// δ(ψ c) = ψ(d' c) on random tensor cochains.
Report verify_transfer_iso(const GroupCtx& ctx, int max_deg, int roundtrips,
                           int intertwine_trials, std::uint64_t seed);

/// s(β^n) = 1 for n <= max_beta and d(β^n) = 0 for n <= cocycle_max.
Report verify_basis_iso(const GroupCtx& ctx, int max_beta, int cocycle_max);

/// The order-theoretic identities behind the comparison maps: the Q-set
/// rules, the telescope identity for [x]_g, and the a(i_1,...,i_k) shift
/// identities (exhaustive for tuple lengths <= 3).
Report verify_group_identities(const GroupCtx& ctx);

/// Everything the `verify` command runs, in a fixed order.
std::vector<Report> run_verification(const GroupCtx& ctx, int max_degree,
                                     std::uint64_t seed);

}  // namespace gbr
