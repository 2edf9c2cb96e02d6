#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gbr/group_algebra.hpp"

namespace gbr {

/// Raised when a dense cochain would exceed the context's allocation budget.
struct alloc_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense cochains are indexed by the little-endian mixed-radix encoding
// (x_1,...,x_n) -> sum_t x_t.exp * m^(t-1); a degree-0 cochain stores a
// single value at index 0.

/// Map G^n -> K; computes group cohomology through the complex C.
struct GroupCochain {
    int degree = 0;
    std::vector<Fp> values;
    friend bool operator==(const GroupCochain&, const GroupCochain&) = default;
};

/// Map G^n -> A, i.e. an element of C' = C ⊗ A.
struct TensorCochain {
    int degree = 0;
    std::vector<AlgElt> values;
    friend bool operator==(const TensorCochain&, const TensorCochain&) = default;
};

/// Hochschild n-cochain Hom_K(A^⊗n, A), stored by its values on group-basis
/// tuples and extended multilinearly where an inserted algebra element is
/// expanded over the group basis.
struct HochCochain {
    int degree = 0;
    std::vector<AlgElt> values;
    friend bool operator==(const HochCochain&, const HochCochain&) = default;
};

/// Element of the bar resolution A[G^×n]: a sparse A-linear combination of
/// basis tuples. Zero coefficients are never stored.
struct BarElt {
    int degree = 0;
    std::map<std::vector<std::uint32_t>, AlgElt> terms;
    friend bool operator==(const BarElt&, const BarElt&) = default;
};

// -- tuple space ------------------------------------------------------------

/// m^degree, guarded against overflow and the context's allocation budget
/// (scaled by scalars_per_value).
std::size_t tuple_space_size(const GroupCtx& ctx, int degree,
                             std::size_t scalars_per_value = 1);

std::vector<GroupElt> decode_tuple(const GroupCtx& ctx, std::size_t index, int degree);
std::size_t encode_tuple(const GroupCtx& ctx, std::span<const GroupElt> tuple);

GroupCochain zero_group_cochain(const GroupCtx& ctx, int degree);
TensorCochain zero_tensor_cochain(const GroupCtx& ctx, int degree);
HochCochain zero_hoch_cochain(const GroupCtx& ctx, int degree);

// -- small cochain arithmetic (used throughout the verification suites) -----

GroupCochain cochain_add(const GroupCtx&, const GroupCochain&, const GroupCochain&);
GroupCochain cochain_sub(const GroupCtx&, const GroupCochain&, const GroupCochain&);
GroupCochain cochain_scale(const GroupCtx&, Fp, const GroupCochain&);
bool cochain_is_zero(const GroupCochain&);

TensorCochain tensor_sub(const GroupCtx&, const TensorCochain&, const TensorCochain&);
bool tensor_is_zero(const GroupCtx&, const TensorCochain&);

HochCochain hoch_add(const GroupCtx&, const HochCochain&, const HochCochain&);
HochCochain hoch_sub(const GroupCtx&, const HochCochain&, const HochCochain&);
HochCochain hoch_scale(const GroupCtx&, Fp, const HochCochain&);
bool hoch_is_zero(const GroupCtx&, const HochCochain&);

// -- differentials -----------------------------------------------------------

/// d_n(f)(x_1|...|x_{n+1}) = f(x_2|...) + Σ (-1)^i f(...|x_i x_{i+1}|...)
///                           + (-1)^{n+1} f(x_1|...|x_n), with d_0 = 0.
GroupCochain cochain_diff(const GroupCtx& ctx, const GroupCochain& c);

/// d' = d ⊗ id, applied coefficient-wise in A.
TensorCochain tensor_diff(const GroupCtx& ctx, const TensorCochain& c);

/// Bar differential d_n[x_1|...|x_n] = x_1[x_2|...] + Σ (-1)^i [...|x_i x_{i+1}|...]
/// + (-1)^n [x_1|...|x_{n-1}], extended A-linearly. Degree must be >= 1.
BarElt bar_diff(const GroupCtx& ctx, const BarElt& b);

/// Minimal-resolution differential: multiplication by g-1 in odd degrees and
/// by the norm T in even degrees. Degree must be >= 1.
AlgElt minimal_diff(const GroupCtx& ctx, int n, const AlgElt& a);

BarElt bar_basis(const GroupCtx& ctx, std::span<const GroupElt> tuple);
void bar_add_term(const GroupCtx& ctx, BarElt& b, std::vector<std::uint32_t> tuple,
                  const AlgElt& coeff);
BarElt bar_scale(const GroupCtx& ctx, const AlgElt& s, const BarElt& b);

// -- the pre-Lie system and the Gerstenhaber bracket -------------------------

/// Insertion f ∘_i h: substitutes h(x_i ⊗ ... ⊗ x_{i+m-1}) into slot i of f,
/// expanding the inserted algebra element over the group basis. A degree-0 h
/// inserts its constant value. Requires deg f >= 1 and 1 <= slot <= deg f.
HochCochain hoch_circle_i(const GroupCtx& ctx, const HochCochain& f,
                          const HochCochain& h, int slot);

/// f ∘ h = Σ_i (-1)^{(i-1)(m-1)} f ∘_i h; zero when deg f = 0.
HochCochain hoch_circle(const GroupCtx& ctx, const HochCochain& f, const HochCochain& h);

/// [f, h] = f ∘ h - (-1)^{(n-1)(m-1)} h ∘ f. For two degree-0 cochains the
/// result is the zero degree-0 cochain.
HochCochain hoch_bracket(const GroupCtx& ctx, const HochCochain& f, const HochCochain& h);

/// The multiplication 2-cochain μ(x ⊗ y) = xy.
HochCochain mult_cochain(const GroupCtx& ctx);

/// Hochschild differential δf = (-1)^{n-1} [μ, f].
HochCochain hoch_diff(const GroupCtx& ctx, const HochCochain& f);

// -- transfer between the Hochschild complex and C' ---------------------------

/// φ_n: re-indexes f(t) by dividing out x_1 ··· x_n, giving an element of C'.
TensorCochain phi_map(const GroupCtx& ctx, const HochCochain& f);

/// ψ_n: inverse of φ_n; ψ(α ⊗ x)(x_1 ⊗ ... ⊗ x_n) = α(x̲) · x_1···x_n·x.
HochCochain psi_map(const GroupCtx& ctx, const TensorCochain& c);

// -- exactness witnesses ------------------------------------------------------

/// For a cocycle c of degree n >= 1, returns b with d(b) = c or nothing when
/// no such b exists. Throws std::invalid_argument if c is not a cocycle.
std::optional<GroupCochain> coboundary_witness(const GroupCtx& ctx, const GroupCochain& c);

/// Coefficient-wise witness for C' (d' = d ⊗ id acts per A-coordinate).
std::optional<TensorCochain> coboundary_witness(const GroupCtx& ctx, const TensorCochain& c);

}  // namespace gbr
