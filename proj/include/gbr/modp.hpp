#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gbr {

/// Element of the prime field F_p. Plain value type; all arithmetic goes
/// through a PrimeField so the modulus stays explicit.
struct Fp {
    std::uint32_t v = 0;
    friend bool operator==(Fp, Fp) = default;
};

bool is_odd_prime(std::uint32_t n) noexcept;

/// Arithmetic context for F_p. The modulus must be an odd prime; this is
/// validated at construction.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Fp zero() const noexcept { return Fp{0}; }
    Fp one() const noexcept { return Fp{1}; }

    /// Reduces an arbitrary signed integer into [0, p).
    Fp from_int(long long n) const noexcept;

    Fp add(Fp a, Fp b) const noexcept;
    Fp sub(Fp a, Fp b) const noexcept;
    Fp mul(Fp a, Fp b) const noexcept;
    Fp neg(Fp a) const noexcept;
    Fp pow(Fp a, unsigned long long e) const noexcept;

    /// Multiplicative inverse; throws std::domain_error on zero.
    Fp inv(Fp a) const;

private:
    std::uint32_t p_;
};

/// Dense row-major matrix over F_p.
struct MatrixFp {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Fp> entries;

    MatrixFp() = default;
    MatrixFp(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Fp& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    Fp at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static MatrixFp identity(std::size_t n);
};

/// Solves A·x = b over F_p by Gauss-Jordan elimination, pivoting on the first
/// nonzero entry in column order; free variables are set to zero. Returns
/// nothing if the system is inconsistent. Throws std::invalid_argument on a
/// row/length mismatch.
std::optional<std::vector<Fp>> solve_linear(const PrimeField& K, MatrixFp A,
                                            std::vector<Fp> b);

}  // namespace gbr
