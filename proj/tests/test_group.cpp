#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "essq/group.hpp"

using namespace essq;

TEST_CASE("enumeration matches the brute-force count over all 256 pairs") {
    // oracle: test the membership equation directly for every pair
    int count = 0;
    int per_a[16] = {0};
    for (Gf16 a : gf16_all())
        for (Gf16 b : gf16_all())
            if (b + b * b * b * b == a * a * a * a * a) {
                ++count;
                ++per_a[a.bits()];
            }
    CHECK(count == 64);

    auto all = enumerate_group();
    CHECK(all.size() == 64);
    for (int i = 0; i < 16; ++i) CHECK(per_a[i] == 4);

    // the kernel of b -> b + b^4 has size 4 (it is F4)
    int kernel = 0;
    for (Gf16 b : gf16_all())
        if (b + b.pow(4) == Gf16::zero()) ++kernel;
    CHECK(kernel == 4);

    // deterministic lexicographic order on (a bits, b bits)
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& x, const auto& y) {
        return std::make_pair(x.a.bits(), x.b.bits()) < std::make_pair(y.a.bits(), y.b.bits());
    }));
    CHECK(std::find(all.begin(), all.end(), group_identity()) != all.end());
}

TEST_CASE("composition law") {
    auto all = enumerate_group();
    for (const auto& g : all) {
        CHECK(compose(g, group_identity()) == g);
        CHECK(compose(group_identity(), g) == g);
        // g^2 = (0, a^5), cross-checked through literal matrix multiplication
        GroupElement sq = compose(g, g);
        CHECK(sq.a == Gf16::zero());
        CHECK(sq.b == g.a.pow(5));
        CHECK(to_matrix(sq) == to_matrix(g) * to_matrix(g));
    }
    CHECK_THROWS_AS((void)compose({Gf16(1), Gf16(0)}, group_identity()), std::domain_error);
}

TEST_CASE("element orders") {
    CHECK(element_order(group_identity()) == 1);
    for (const auto& g : enumerate_group()) {
        int n = element_order(g);
        if (g.a.is_zero())
            CHECK(n == (g.b.is_zero() ? 1 : 2));
        else
            CHECK(n == 4);
    }
}

TEST_CASE("centre") {
    auto z = center();
    CHECK(z.size() == 4);
    for (const auto& c : z) {
        CHECK(c.a.is_zero());
        CHECK(c.b.pow(4) == c.b);  // b in F4
    }
}

TEST_CASE("torus conjugation: closed form vs matrices, orders") {
    auto all = enumerate_group();
    for (const auto& g : all) {
        CHECK(torus_conjugate(g, 0) == g);
        CHECK(torus_conjugate(g, 15) == g);
        for (int k = 0; k <= 15; ++k) {
            GroupElement c = torus_conjugate(g, k);
            CHECK(satisfies_membership(c));
            CHECK(c == torus_conjugate_by_matrix(g, k));
        }
    }
    CHECK(torus_matrix(1).det() == Gf16::one());
    CHECK(torus_matrix(15) == Mat3::identity());
    for (int k = 1; k < 15; ++k) CHECK(!(torus_matrix(k) == Mat3::identity()));
}

TEST_CASE("torus eigenvalue sets") {
    auto eq = torus_eigenvalues_on_quotient();
    auto ez = torus_eigenvalues_on_center();
    auto bits = [](std::vector<Gf16> v) {
        std::vector<uint8_t> b;
        for (Gf16 x : v) b.push_back(x.bits());
        std::sort(b.begin(), b.end());
        return b;
    };
    CHECK(bits(eq) == bits({Gf16::zeta(), Gf16::zeta_pow(2), Gf16::zeta_pow(4),
                            Gf16::zeta_pow(8)}));
    CHECK(bits(ez) == bits({Gf16::zeta_pow(5), Gf16::zeta_pow(10)}));
}
