#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "gbr/comparison.hpp"

namespace gbr {

/// coeff · β^degree ⊗ g^exp.
struct BasisClass {
    int degree = 0;
    std::uint32_t exp = 0;
    Fp coeff = Fp{1};
    friend bool operator==(const BasisClass&, const BasisClass&) = default;
};

/// Finite sum of basis classes in H*(G,K) ⊗ A, kept in canonical form
/// (sorted keys, no zero coefficients) so equality is structural.
class GradedElt {
public:
    using Key = std::pair<int, std::uint32_t>;  // (degree, exponent)

    void add_term(const PrimeField& K, int degree, std::uint32_t exp, Fp coeff);
    const std::map<Key, Fp>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    friend bool operator==(const GradedElt&, const GradedElt&) = default;

private:
    std::map<Key, Fp> terms_;
};

GradedElt graded_add(const PrimeField& K, const GradedElt& a, const GradedElt& b);
GradedElt graded_scale(const PrimeField& K, Fp s, const GradedElt& a);

/// γ_i(x_1|...|x_{n+m-1}) = α(x_1|...|x_i x_{i+1}···x_{i+m-1} y|...) ·
/// β(x_i|...|x_{i+m-1}). Requires deg α >= 1, deg β >= 1, 1 <= slot <= deg α.
GroupCochain gamma_i(const GroupCtx& ctx, const GroupCochain& alpha,
                     const GroupCochain& beta, GroupElt y, int slot);

/// γ^{(β,y)}_α = Σ_i (-1)^{(m-1)(i-1)} γ_i.
GroupCochain gamma(const GroupCtx& ctx, const GroupCochain& alpha,
                   const GroupCochain& beta, GroupElt y);

/// Cochain-level representative of the transferred bracket,
/// (γ^{(β^m,y)}_{β^n} - (-1)^{(n-1)(m-1)} γ^{(β^n,x)}_{β^m}) ⊗ xy.
/// Refuses degree-0 operands (route those through oracle_bracket).
TensorCochain transferred_bracket(const GroupCtx& ctx, const BasisClass& a,
                                  const BasisClass& b);

/// φ(β^n, x): β^1(x) for odd n, zero for even n.
Fp varphi(const GroupCtx& ctx, int n, GroupElt x);

/// Closed-form bracket: [β^n⊗x, β^m⊗y] = (φ(β^n,y) - φ(β^m,x)) β^{n+m-1}⊗xy.
GradedElt closed_bracket(const GroupCtx& ctx, const BasisClass& a, const BasisClass& b);

/// Bilinear extension of the closed-form bracket.
GradedElt closed_bracket(const GroupCtx& ctx, const GradedElt& a, const GradedElt& b);

/// Extracts the class of a cocycle in H^degree ⊗ A via s ⊗ id.
GradedElt class_of_tensor(const GroupCtx& ctx, int degree, const TensorCochain& c);

/// Fully independent route: ψ into the Hochschild complex, the Gerstenhaber
/// bracket there, φ back, then class extraction.
GradedElt oracle_bracket(const GroupCtx& ctx, const BasisClass& a, const BasisClass& b);

/// Structure constants of the degree-one commutator: ((j-i) mod p, (i+j) mod m).
std::pair<Fp, std::uint32_t> witt_bracket(const GroupCtx& ctx, long long i, long long j);

/// Checks [β^1⊗g^i, β^n⊗g^j] = (j-i)·β^n⊗g^{i+j} for odd n and
/// j·β^n⊗g^{i+j} for even n, over all exponent pairs.
Report verify_module_structure(const GroupCtx& ctx, int n);

/// Checks [β^{2r+1}⊗g^i, β^{2s+1}⊗g^j] = (j-i)·β^{2(r+s)+1}⊗g^{i+j} for all
/// r,s <= max_r and all exponents (the structure constants of W ⊗ K[t]).
Report verify_odd_iso(const GroupCtx& ctx, int max_r);

/// The odd-degree product (β^n⊗x) ⊞ (β^m⊗y) = β^{n+m-1}⊗xy together with the
/// additivity check φ(product) = φ(a) + φ(b). Throws on even-degree operands.
std::pair<BasisClass, bool> wittype_data(const GroupCtx& ctx, const BasisClass& a,
                                         const BasisClass& b);

}  // namespace gbr
