#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace essq {

// GF(16) = F2[X]/(X^4 + X^3 + 1).  Bit i of the stored value is the
// coefficient of X^i, so elements are the integers 0..15 and addition is XOR.
// The modulus is primitive: the class of X, written zeta, has order 15.
class Gf16 {
public:
    static constexpr unsigned kModulusBits = 0x19;  // X^4 + X^3 + 1

    constexpr Gf16() = default;
    constexpr explicit Gf16(unsigned bits) : v_(static_cast<uint8_t>(bits & 0xF)) {}

    static constexpr Gf16 zero() { return Gf16(0); }
    static constexpr Gf16 one() { return Gf16(1); }
    static constexpr Gf16 zeta() { return Gf16(2); }
    static Gf16 zeta_pow(long k);  // zeta^(k mod 15)

    constexpr uint8_t bits() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Gf16 operator+(Gf16 a, Gf16 b) { return Gf16(a.v_ ^ b.v_); }
    Gf16& operator+=(Gf16 b) { v_ ^= b.v_; return *this; }

    friend Gf16 operator*(Gf16 a, Gf16 b);
    Gf16& operator*=(Gf16 b) { *this = *this * b; return *this; }

    friend constexpr bool operator==(Gf16 a, Gf16 b) = default;

    Gf16 inverse() const;   // throws std::domain_error on zero
    Gf16 pow(long e) const;
    Gf16 frobenius() const { return *this * *this; }
    int trace2() const;     // a + a^2 + a^4 + a^8, lands in {0,1}

    // discrete log base zeta; nullopt for zero
    std::optional<int> log() const;

    char hex() const;           // '0'..'9','a'..'f' of the bit pattern
    std::string sym() const;    // "0", "1", "z", "z^2", ...

    // accepts both renderings: a single hex digit, or "z"/"z^k"
    static Gf16 parse(const std::string& text);

private:
    uint8_t v_ = 0;
};

// All sixteen field elements, in bit-pattern order.
std::array<Gf16, 16> gf16_all();

// Zeros in GF(16) of the polynomial sum_i coeffs[i] X^i, by evaluation at all
// sixteen points.  Throws std::domain_error on the zero polynomial.
std::vector<Gf16> poly_roots(std::span<const Gf16> coeffs);

// Smallest mu (by bit pattern) with mu^2 + mu = lambda; nullopt when
// trace2(lambda) = 1, in which case no solution exists.
std::optional<Gf16> solve_artin_schreier(Gf16 lambda);

}  // namespace essq
