#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "essq/gf16.hpp"

namespace essq {

// The Sylow 2-subgroup of SU3(4): pairs (a, b) over GF(16) with b + b^4 = a^5,
// realized as upper unitriangular matrices
//   [ 1  a  b   ]
//   [ 0  1  a^4 ]
//   [ 0  0  1   ].
struct GroupElement {
    Gf16 a, b;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

bool satisfies_membership(const GroupElement& g);

// All 64 elements, lexicographic on (a.bits, b.bits).
std::vector<GroupElement> enumerate_group();

GroupElement group_identity();
GroupElement compose(const GroupElement& g, const GroupElement& h);  // checks membership
GroupElement group_inverse(const GroupElement& g);
int element_order(const GroupElement& g);

std::vector<GroupElement> center();

struct Mat3 {
    std::array<std::array<Gf16, 3>, 3> m{};
    static Mat3 identity();
    friend Mat3 operator*(const Mat3& x, const Mat3& y);
    friend bool operator==(const Mat3&, const Mat3&) = default;
    Gf16 det() const;
};

Mat3 to_matrix(const GroupElement& g);

// T = diag(zeta^-1, zeta^-3, zeta^4), the order-15 torus element normalizing G.
Mat3 torus_matrix(int k = 1);  // T^k

// T^k g T^-k, closed form (a, b) -> (zeta^(2k) a, zeta^(10k) b).
GroupElement torus_conjugate(const GroupElement& g, int k);

// Same conjugation computed literally on 3x3 matrices.
GroupElement torus_conjugate_by_matrix(const GroupElement& g, int k);

// Eigenvalues over GF(16) of multiplication by c on the F2-span of `basis`
// (the span must be c-stable).
std::vector<Gf16> mult_map_eigenvalues(Gf16 c, const std::vector<Gf16>& basis);

// {zeta, zeta^2, zeta^4, zeta^8}: T acting on G/Z(G) ~ F16 by zeta^2.
std::vector<Gf16> torus_eigenvalues_on_quotient();
// {zeta^5, zeta^10}: T acting on Z(G) ~ F4 by zeta^10.
std::vector<Gf16> torus_eigenvalues_on_center();

}  // namespace essq
