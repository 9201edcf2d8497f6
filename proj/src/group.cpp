#include "essq/group.hpp"

#include <stdexcept>

#include "essq/linalg.hpp"

namespace essq {

bool satisfies_membership(const GroupElement& g) {
    return g.b + g.b.pow(4) == g.a.pow(5);
}

std::vector<GroupElement> enumerate_group() {
    std::vector<GroupElement> out;
    for (Gf16 a : gf16_all())
        for (Gf16 b : gf16_all())
            if (satisfies_membership({a, b})) out.push_back({a, b});
    return out;
}

GroupElement group_identity() { return {Gf16::zero(), Gf16::zero()}; }

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    if (!satisfies_membership(g) || !satisfies_membership(h))
        throw std::domain_error("compose: operand not in the group");
    return {g.a + h.a, g.b + h.b + g.a * h.a.pow(4)};
}

GroupElement group_inverse(const GroupElement& g) {
    // (a, b)^-1 = (a, b + a^5): check (a+a, b + b+a^5 + a*a^4) = (0, 0).
    return {g.a, g.b + g.a.pow(5)};
}

int element_order(const GroupElement& g) {
    GroupElement x = g;
    for (int n = 1; n <= 4; ++n) {
        if (x == group_identity()) return n;
        x = compose(x, g);
    }
    throw std::logic_error("element_order: exponent exceeds 4");
}

std::vector<GroupElement> center() {
    auto all = enumerate_group();
    std::vector<GroupElement> out;
    for (const auto& z : all) {
        bool central = true;
        for (const auto& g : all) {
            if (!(compose(z, g) == compose(g, z))) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(z);
    }
    return out;
}

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = Gf16::one();
    return r;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Gf16 s;
            for (int k = 0; k < 3; ++k) s += x.m[i][k] * y.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Gf16 Mat3::det() const {
    Gf16 s;
    s += m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1]);
    s += m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0]);
    s += m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0]);
    return s;
}

Mat3 to_matrix(const GroupElement& g) {
    Mat3 r = Mat3::identity();
    r.m[0][1] = g.a;
    r.m[0][2] = g.b;
    r.m[1][2] = g.a.pow(4);
    return r;
}

Mat3 torus_matrix(int k) {
    Mat3 r;
    r.m[0][0] = Gf16::zeta_pow(-k);
    r.m[1][1] = Gf16::zeta_pow(-3 * k);
    r.m[2][2] = Gf16::zeta_pow(4 * k);
    return r;
}

GroupElement torus_conjugate(const GroupElement& g, int k) {
    return {Gf16::zeta_pow(2 * k) * g.a, Gf16::zeta_pow(10 * k) * g.b};
}

GroupElement torus_conjugate_by_matrix(const GroupElement& g, int k) {
    Mat3 conj = torus_matrix(k) * to_matrix(g) * torus_matrix(-k);
    GroupElement out{conj.m[0][1], conj.m[0][2]};
    if (!(to_matrix(out) == conj))
        throw std::logic_error("torus_conjugate_by_matrix: conjugate not unitriangular of group shape");
    return out;
}

std::vector<Gf16> mult_map_eigenvalues(Gf16 c, const std::vector<Gf16>& basis) {
    const int n = static_cast<int>(basis.size());
    // Coordinates of x in the F2-basis, by exhausting subset sums.
    auto coords = [&](Gf16 x) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Gf16 s;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s += basis[i];
            if (s == x) return mask;
        }
        throw std::domain_error("mult_map_eigenvalues: element outside span");
    };
    std::vector<Gf16> eigs;
    for (Gf16 e : gf16_all()) {
        // rank of (M - e I) over GF(16), M the matrix of x -> c x.
        std::vector<SparseRow> rows;
        for (int j = 0; j < n; ++j) {
            unsigned col_bits = coords(c * basis[j]);
            std::vector<std::pair<int, Gf16>> entries;
            for (int i = 0; i < n; ++i) {
                Gf16 v = (col_bits & (1u << i)) ? Gf16::one() : Gf16::zero();
                if (i == j) v += e;
                if (!v.is_zero()) entries.emplace_back(i, v);
            }
            rows.push_back(make_row(std::move(entries)));
        }
        if (rank_of(rows) < n) eigs.push_back(e);
    }
    return eigs;
}

std::vector<Gf16> torus_eigenvalues_on_quotient() {
    // G/Z(G) is the additive group of F16 via (a, b) -> a; T acts by zeta^2.
    std::vector<Gf16> basis = {Gf16::one(), Gf16::zeta(), Gf16::zeta_pow(2), Gf16::zeta_pow(3)};
    return mult_map_eigenvalues(Gf16::zeta_pow(2), basis);
}

std::vector<Gf16> torus_eigenvalues_on_center() {
    // Z(G) = {(0, b) : b in F4}; T acts by zeta^10 on b.
    std::vector<Gf16> basis = {Gf16::one(), Gf16::zeta_pow(5)};
    return mult_map_eigenvalues(Gf16::zeta_pow(10), basis);
}

}  // namespace essq
