#include "gbr/modp.hpp"

#include <stdexcept>

namespace gbr {

bool is_odd_prime(std::uint32_t n) noexcept {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("PrimeField: modulus must be an odd prime");
}

Fp PrimeField::from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fp{static_cast<std::uint32_t>(r)};
}

Fp PrimeField::add(Fp a, Fp b) const noexcept {
    std::uint32_t s = a.v + b.v;
    if (s >= p_) s -= p_;
    return Fp{s};
}

Fp PrimeField::sub(Fp a, Fp b) const noexcept {
    return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
}

Fp PrimeField::mul(Fp a, Fp b) const noexcept {
    return Fp{static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.v) * b.v) % p_)};
}

Fp PrimeField::neg(Fp a) const noexcept {
    return Fp{a.v == 0 ? 0 : p_ - a.v};
}

Fp PrimeField::pow(Fp a, unsigned long long e) const noexcept {
    Fp r = one();
    Fp base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fp PrimeField::inv(Fp a) const {
    if (a.v == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

MatrixFp MatrixFp::identity(std::size_t n) {
    MatrixFp I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = Fp{1};
    return I;
}

std::optional<std::vector<Fp>> solve_linear(const PrimeField& K, MatrixFp A,
                                            std::vector<Fp> b) {
    if (A.rows != b.size())
        throw std::invalid_argument("solve_linear: rows(A) != len(b)");

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    pivot_col.reserve(A.cols);

    for (std::size_t col = 0; col < A.cols && rank < A.rows; ++col) {
        std::size_t pr = rank;
        while (pr < A.rows && A.at(pr, col).v == 0) ++pr;
        if (pr == A.rows) continue;
        if (pr != rank) {
            for (std::size_t c = col; c < A.cols; ++c)
                std::swap(A.at(pr, c), A.at(rank, c));
            std::swap(b[pr], b[rank]);
        }
        Fp piv_inv = K.inv(A.at(rank, col));
        for (std::size_t c = col; c < A.cols; ++c)
            A.at(rank, c) = K.mul(A.at(rank, c), piv_inv);
        b[rank] = K.mul(b[rank], piv_inv);
        for (std::size_t r = 0; r < A.rows; ++r) {
            if (r == rank || A.at(r, col).v == 0) continue;
            Fp f = A.at(r, col);
            for (std::size_t c = col; c < A.cols; ++c)
                A.at(r, c) = K.sub(A.at(r, c), K.mul(f, A.at(rank, c)));
            b[r] = K.sub(b[r], K.mul(f, b[rank]));
        }
        pivot_col.push_back(col);
        ++rank;
    }

    for (std::size_t r = rank; r < A.rows; ++r)
        if (b[r].v != 0) return std::nullopt;

    std::vector<Fp> x(A.cols, Fp{0});
    for (std::size_t k = 0; k < rank; ++k) x[pivot_col[k]] = b[k];
    return x;
}

}  // namespace gbr
