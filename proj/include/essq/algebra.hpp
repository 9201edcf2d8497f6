#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "essq/gf16.hpp"

namespace essq {

struct Bidegree {
    int p = 0;
    int q = 0;
    friend constexpr bool operator==(Bidegree, Bidegree) = default;
    friend constexpr auto operator<=>(Bidegree, Bidegree) = default;
    friend constexpr Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.q + b.q}; }
    friend constexpr Bidegree operator-(Bidegree a, Bidegree b) { return {a.p - b.p, a.q - b.q}; }
    constexpr int total() const { return p + q; }
    constexpr bool first_quadrant() const { return p >= 0 && q >= 0; }
    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

struct GeneratorInfo {
    std::string name;
    Bidegree deg;
    int weight;     // T-eigenvalue exponent, mod 15
    int frob_next;  // index of the Frobenius image
};

// Named generators with bidegree, torus weight and Frobenius successor.
// Construction validates that frob_next is a permutation whose orbit sizes
// divide 4, that Frobenius doubles weights mod 15 and preserves bidegrees,
// and that name subscripts match weights (names like "a4", "b13"; power
// names like "u5_4" are checked against weight(u5) * 4 instead).
class GeneratorTable {
public:
    explicit GeneratorTable(std::vector<GeneratorInfo> gens);

    size_t size() const { return gens_.size(); }
    const GeneratorInfo& operator[](size_t i) const { return gens_[i]; }
    std::optional<size_t> index_of(std::string_view name) const;
    bool same_table(const GeneratorTable& other) const { return this == &other; }

private:
    std::vector<GeneratorInfo> gens_;
};

// Exponent vector over a generator table.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t ngens) : e_(ngens, 0) {}

    static Monomial one(const GeneratorTable& t) { return Monomial(t.size()); }

    uint8_t operator[](size_t i) const { return e_[i]; }
    void set(size_t i, uint8_t v) { e_[i] = v; }
    size_t size() const { return e_.size(); }

    int total_exponent() const;
    Bidegree bidegree(const GeneratorTable& t) const;
    int weight(const GeneratorTable& t) const;  // mod 15

    Monomial times(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const;
    Monomial frobenius(const GeneratorTable& t) const;

    std::string str(const GeneratorTable& t) const;  // "a4^2*b7", "1" for the unit

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // graded-lexicographic: by total exponent, then lexicographically on the
    // exponent vector (later = smaller)
    static bool graded_lex_less(const Monomial& a, const Monomial& b);

private:
    std::vector<uint8_t> e_;
};

// Sparse bigraded polynomial over GF(16): monomial -> coefficient, stored in
// decreasing graded-lex order with no zero coefficients.
class Element {
public:
    explicit Element(const GeneratorTable& t) : table_(&t) {}

    static Element zero(const GeneratorTable& t) { return Element(t); }
    static Element term(const GeneratorTable& t, Monomial m, Gf16 c);
    static Element generator(const GeneratorTable& t, std::string_view name, int power = 1);

    const GeneratorTable& table() const { return *table_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Monomial, Gf16>>& terms() const { return terms_; }

    friend Element operator+(const Element& x, const Element& y);
    friend Element operator*(const Element& x, const Element& y);
    Element& operator+=(const Element& y) { *this = *this + y; return *this; }
    Element& operator*=(const Element& y) { *this = *this * y; return *this; }
    Element scaled(Gf16 c) const;

    friend bool operator==(const Element& x, const Element& y);

    // coefficient-squaring, generator-permuting ring endomorphism; order 4
    Element frobenius() const;
    // x + F(x) + F^2(x) + F^3(x); always Frobenius-stable
    Element norm() const;

    // common bidegree of all monomials; nullopt if inhomogeneous or zero
    std::optional<Bidegree> bidegree() const;
    bool is_bihomogeneous() const { return is_zero() || bidegree().has_value(); }

    // common weight mod 15; nullopt if mixed.  Zero reports "any weight"
    // through has_any_weight().
    std::optional<int> weight() const;
    bool has_any_weight() const { return is_zero(); }

    std::string str() const;
    static Element parse(const GeneratorTable& t, std::string_view text);

private:
    const GeneratorTable* table_;
    std::vector<std::pair<Monomial, Gf16>> terms_;
    void normalize();
    friend class ElementBuilder;
};

// Accumulates terms without keeping the representation normalized until the
// end; cheaper for products.
class ElementBuilder {
public:
    explicit ElementBuilder(const GeneratorTable& t) : table_(&t) {}
    void add(Monomial m, Gf16 c) { if (!c.is_zero()) terms_.emplace_back(std::move(m), c); }
    Element build();

private:
    const GeneratorTable* table_;
    std::vector<std::pair<Monomial, Gf16>> terms_;
};

// All monomials over t of the given bidegree, in decreasing graded-lex order.
std::vector<Monomial> monomials_of_bidegree(const GeneratorTable& t, Bidegree bd);

}  // namespace essq
