#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homds {

/// The Mersenne prime 2^61 - 1, the default large field for randomized checks.
__extension__ using uint128 = unsigned __int128;

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for a prime p < 2^62. Elements are plain residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t modulus) : p_(modulus) {
        if (modulus >= (std::uint64_t{1} << 62))
            throw std::invalid_argument("field modulus must be below 2^62");
        if (!is_prime(modulus))
            throw std::invalid_argument("field modulus " + std::to_string(modulus) + " is not prime");
    }

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t reduce(std::uint64_t a) const noexcept { return a % p_; }
    std::uint64_t reduce_signed(std::int64_t a) const noexcept {
        const auto m = static_cast<std::int64_t>(p_);
        std::int64_t r = a % m;
        return static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;  // no overflow: both < 2^62
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept;
    /// Multiplicative inverse; throws std::domain_error on zero.
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

}  // namespace homds
