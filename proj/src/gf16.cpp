#include "essq/gf16.hpp"

#include <stdexcept>

namespace essq {

namespace {

constexpr uint8_t clmul_reduce(uint8_t a, uint8_t b) {
    unsigned r = 0;
    unsigned x = a;
    for (int i = 0; i < 4; ++i) {
        if (b & (1u << i)) r ^= x;
        x <<= 1;
        if (x & 0x10) x ^= Gf16::kModulusBits;
    }
    return static_cast<uint8_t>(r & 0xF);
}

struct Tables {
    std::array<std::array<uint8_t, 16>, 16> mul{};
    std::array<uint8_t, 16> inv{};
    std::array<uint8_t, 15> exp{};   // zeta^k
    std::array<int8_t, 16> log{};    // log[0] = -1

    constexpr Tables() {
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 16; ++b)
                mul[a][b] = clmul_reduce(static_cast<uint8_t>(a), static_cast<uint8_t>(b));
        uint8_t z = 1;
        for (int k = 0; k < 15; ++k) {
            exp[k] = z;
            z = mul[z][2];
        }
        log[0] = -1;
        for (int k = 0; k < 15; ++k) log[exp[k]] = static_cast<int8_t>(k);
        inv[0] = 0;
        for (int a = 1; a < 16; ++a) inv[a] = exp[(15 - log[a]) % 15];
    }
};

constexpr Tables kT{};

}  // namespace

Gf16 operator*(Gf16 a, Gf16 b) { return Gf16(kT.mul[a.bits()][b.bits()]); }

Gf16 Gf16::zeta_pow(long k) {
    long m = k % 15;
    if (m < 0) m += 15;
    return Gf16(kT.exp[m]);
}

Gf16 Gf16::inverse() const {
    if (is_zero()) throw std::domain_error("Gf16: inverse of zero");
    return Gf16(kT.inv[v_]);
}

Gf16 Gf16::pow(long e) const {
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Gf16: negative power of zero");
        return e == 0 ? one() : zero();
    }
    long m = (kT.log[v_] * (e % 15)) % 15;
    if (m < 0) m += 15;
    return Gf16(kT.exp[m]);
}

int Gf16::trace2() const {
    Gf16 a = *this;
    Gf16 t = a;
    for (int i = 0; i < 3; ++i) {
        a = a.frobenius();
        t += a;
    }
    return t.bits();  // always 0 or 1
}

std::optional<int> Gf16::log() const {
    if (is_zero()) return std::nullopt;
    return kT.log[v_];
}

char Gf16::hex() const { return "0123456789abcdef"[v_]; }

std::string Gf16::sym() const {
    if (is_zero()) return "0";
    int k = kT.log[v_];
    if (k == 0) return "1";
    if (k == 1) return "z";
    return "z^" + std::to_string(k);
}

Gf16 Gf16::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Gf16: empty scalar");
    if (text[0] == 'z') {
        if (text == "z") return zeta();
        if (text.size() > 2 && text[1] == '^') return zeta_pow(std::stol(text.substr(2)));
        throw std::invalid_argument("Gf16: bad scalar '" + text + "'");
    }
    if (text.size() == 1) {
        char c = text[0];
        if (c >= '0' && c <= '9') return Gf16(static_cast<unsigned>(c - '0'));
        if (c >= 'a' && c <= 'f') return Gf16(static_cast<unsigned>(c - 'a' + 10));
    }
    throw std::invalid_argument("Gf16: bad scalar '" + text + "'");
}

std::array<Gf16, 16> gf16_all() {
    std::array<Gf16, 16> r;
    for (unsigned i = 0; i < 16; ++i) r[i] = Gf16(i);
    return r;
}

std::vector<Gf16> poly_roots(std::span<const Gf16> coeffs) {
    bool all_zero = true;
    for (Gf16 c : coeffs)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) throw std::domain_error("poly_roots: zero polynomial");
    std::vector<Gf16> roots;
    for (Gf16 x : gf16_all()) {
        Gf16 acc = Gf16::zero();
        // Horner, high coefficient first
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        if (acc.is_zero()) roots.push_back(x);
    }
    return roots;
}

std::optional<Gf16> solve_artin_schreier(Gf16 lambda) {
    for (Gf16 mu : gf16_all())
        if (mu * mu + mu == lambda) return mu;
    return std::nullopt;
}

}  // namespace essq
