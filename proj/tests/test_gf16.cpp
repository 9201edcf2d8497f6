#include <doctest.h>

#include <stdexcept>

#include <set>

#include "essq/gf16.hpp"

using namespace essq;

TEST_CASE("field axioms, exhaustively") {
    for (Gf16 a : gf16_all()) {
        CHECK(a + Gf16::zero() == a);
        CHECK(a * Gf16::one() == a);
        CHECK(a * Gf16::zero() == Gf16::zero());
        CHECK(a + a == Gf16::zero());  // characteristic 2
        for (Gf16 b : gf16_all()) {
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            for (Gf16 c : gf16_all()) {
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
}

TEST_CASE("zeta has order 15 and the hand-computed power table holds") {
    // powers of the class of X modulo X^4 + X^3 + 1, computed by hand:
    // z^4 = z^3 + 1 and multiply up from there
    const unsigned table[15] = {1, 2, 4, 8, 9, 11, 15, 7, 14, 5, 10, 13, 3, 6, 12};
    Gf16 z = Gf16::zeta();
    Gf16 acc = Gf16::one();
    std::set<uint8_t> seen;
    for (int k = 0; k < 15; ++k) {
        CHECK(acc.bits() == table[k]);
        CHECK(Gf16::zeta_pow(k) == acc);
        seen.insert(acc.bits());
        acc *= z;
    }
    CHECK(acc == Gf16::one());   // z^15 = 1
    CHECK(seen.size() == 15);    // primitive: the powers exhaust GF(16)*
    CHECK(Gf16::zeta_pow(4) == Gf16::zeta_pow(3) + Gf16::one());  // reduction rule
}

TEST_CASE("multiplication examples") {
    CHECK(Gf16::zeta() * Gf16::zeta_pow(3) == Gf16::zeta_pow(3) + Gf16::one());
    CHECK(Gf16::zeta_pow(7) * Gf16::zeta_pow(8) == Gf16::one());
}

TEST_CASE("inverse") {
    CHECK(Gf16::one().inverse() == Gf16::one());
    CHECK(Gf16::zeta().inverse() == Gf16::zeta_pow(14));
    CHECK_THROWS_AS((void)Gf16::zero().inverse(), std::domain_error);
    for (Gf16 a : gf16_all())
        if (!a.is_zero()) CHECK(a * a.inverse() == Gf16::one());
}

TEST_CASE("frobenius is the order-4 squaring automorphism fixing exactly F2") {
    CHECK(Gf16::one().frobenius() == Gf16::one());
    CHECK(Gf16::zeta_pow(5).frobenius() == Gf16::zeta_pow(10));
    int fixed = 0, fixed_sq = 0;
    for (Gf16 a : gf16_all()) {
        Gf16 f = a.frobenius();
        CHECK(f.frobenius().frobenius().frobenius() == a);  // F^4 = id
        if (f == a) ++fixed;
        if (f.frobenius() == a) ++fixed_sq;
        for (Gf16 b : gf16_all()) {
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        }
    }
    CHECK(fixed == 2);     // F2
    CHECK(fixed_sq == 4);  // F4
}

TEST_CASE("trace to F2") {
    CHECK(Gf16::zeta().trace2() == 1);  // z^8 + z^4 + z^2 + z = 1
    CHECK(Gf16::zero().trace2() == 0);
    CHECK(Gf16::one().trace2() == 0);
    int zeros = 0;
    for (Gf16 a : gf16_all()) {
        int t = a.trace2();
        CHECK((t == 0 || t == 1));
        if (t == 0) ++zeros;
        // oracle: recompute a + a^2 + a^4 + a^8 from scratch
        Gf16 expect = a + a * a + a.pow(4) + a.pow(8);
        CHECK(static_cast<int>(expect.bits()) == t);
        for (Gf16 b : gf16_all()) CHECK((a + b).trace2() == (a.trace2() ^ b.trace2()));
    }
    CHECK(zeros == 8);
}

TEST_CASE("root finding by exhaustion") {
    // X^8 + X^4 + X^2 + X: roots are exactly the trace-zero elements
    std::vector<Gf16> p8(9, Gf16::zero());
    p8[1] = p8[2] = p8[4] = p8[8] = Gf16::one();
    auto roots = poly_roots(p8);
    CHECK(roots.size() == 8);
    std::set<uint8_t> root_set;
    for (Gf16 r : roots) {
        root_set.insert(r.bits());
        CHECK(r.trace2() == 0);
    }
    for (Gf16 a : gf16_all()) CHECK((a.trace2() == 0) == (root_set.count(a.bits()) > 0));
    // the roots form an F2-subspace
    CHECK(root_set.count(0) == 1);
    for (Gf16 a : roots)
        for (Gf16 b : roots) CHECK(root_set.count((a + b).bits()) == 1);

    // X^7 + X^3 + X + 1: the seven nonzero trace-zero elements
    std::vector<Gf16> p7(8, Gf16::zero());
    p7[0] = p7[1] = p7[3] = p7[7] = Gf16::one();
    auto roots7 = poly_roots(p7);
    CHECK(roots7.size() == 7);
    for (Gf16 r : roots7) {
        CHECK(!r.is_zero());
        CHECK(r.trace2() == 0);
    }

    // X * (X^7+X^3+X+1) = X^8+X^4+X^2+X, and the complementary factor gives
    // X^16 + X; checked by evaluation at all 16 points
    for (Gf16 x : gf16_all()) {
        auto eval = [&](const std::vector<Gf16>& cs) {
            Gf16 acc;
            for (size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
            return acc;
        };
        CHECK(x * eval(p7) == eval(p8));
        CHECK(eval(p8) * (eval(p8) + Gf16::one()) == x.pow(16) + x);
    }

    CHECK(poly_roots(std::vector<Gf16>{Gf16::one(), Gf16::one()}) ==
          std::vector<Gf16>{Gf16::one()});  // X + 1
    CHECK_THROWS_AS((void)poly_roots(std::vector<Gf16>(3, Gf16::zero())), std::domain_error);
}

TEST_CASE("artin-schreier solving") {
    CHECK(solve_artin_schreier(Gf16::zero()) == Gf16::zero());
    for (Gf16 lam : gf16_all()) {
        auto mu = solve_artin_schreier(lam);
        // oracle: exhaust the 16 candidates
        std::vector<Gf16> sols;
        for (Gf16 m : gf16_all())
            if (m * m + m == lam) sols.push_back(m);
        if (lam.trace2() == 1) {
            CHECK(!mu);
            CHECK(sols.empty());
        } else {
            REQUIRE(mu);
            CHECK(sols.size() == 2);
            CHECK(*mu * *mu + *mu == lam);
            CHECK(mu->bits() == std::min(sols[0].bits(), sols[1].bits()));
            CHECK(sols[0] + sols[1] == Gf16::one());
        }
    }
}

TEST_CASE("text renderings round-trip") {
    for (Gf16 a : gf16_all()) {
        CHECK(Gf16::parse(std::string(1, a.hex())) == a);
        CHECK(Gf16::parse(a.sym()) == a);
    }
    CHECK(Gf16::parse("z^14") == Gf16::zeta().inverse());
    CHECK_THROWS_AS((void)Gf16::parse("q"), std::invalid_argument);
}
