#include <doctest.h>

#include <stdexcept>

#include <random>

#include "essq/algebra.hpp"

using namespace essq;

namespace {

GeneratorTable test_table() {
    return GeneratorTable({
        {"a1", {1, 0}, 1, 1},
        {"a2", {1, 0}, 2, 2},
        {"a4", {1, 0}, 4, 3},
        {"a8", {1, 0}, 8, 0},
        {"u5", {0, 1}, 5, 5},
        {"u10", {0, 1}, 10, 4},
    });
}

}  // namespace

TEST_CASE("generator table validation") {
    CHECK_THROWS_AS(GeneratorTable({{"a1", {1, 0}, 1, 0}}), std::invalid_argument);  // weight not doubled
    CHECK_THROWS_AS(GeneratorTable({{"a3", {1, 0}, 4, 0}}), std::invalid_argument);  // name/weight mismatch
    CHECK_NOTHROW(GeneratorTable({{"x", {1, 0}, 0, 0}}));  // no subscript, weight 0 fixed by F
}

TEST_CASE("element arithmetic and canonical form") {
    GeneratorTable t = test_table();
    Element a1 = Element::generator(t, "a1");
    Element a4 = Element::generator(t, "a4");
    Element u5 = Element::generator(t, "u5");

    Element p = a1 * a4;
    CHECK(p.term_count() == 1);
    CHECK(p.str() == "a1*a4");
    CHECK((p + p).is_zero());
    CHECK((a1 + a4) * (a1 + a4) == a1 * a1 + a4 * a4);  // char 2 squaring

    Element x = a1.scaled(Gf16::zeta()) + u5;
    CHECK(x * Element::zero(t) == Element::zero(t));
    CHECK(!x.bidegree());                  // inhomogeneous
    CHECK(p.bidegree() == Bidegree{2, 0});
    CHECK(p.weight() == 5);                // 1 + 4
}

TEST_CASE("weights add and match subscripts") {
    GeneratorTable t = test_table();
    // a4 a8 u5^2 has weight 4 + 8 + 10 = 22 = 7 mod 15
    Element b7rep = Element::parse(t, "a4*a8*u5^2");
    CHECK(b7rep.weight() == 7);
    CHECK(b7rep.bidegree() == Bidegree{2, 2});
    // a1 + a2 mixes weights
    CHECK(!Element::parse(t, "a1 + a2").weight());
    // the survivor's full expansion has weight 0
    CHECK(Element::parse(t, "a2^6*a4^2*u5^4*u10^2").weight() == 0);
}

TEST_CASE("frobenius is a ring map permuting generators, of order 4") {
    GeneratorTable t = test_table();
    Element a1 = Element::generator(t, "a1");
    Element u10 = Element::generator(t, "u10");
    CHECK(a1.frobenius() == Element::generator(t, "a2"));
    CHECK(u10.frobenius() == Element::generator(t, "u5"));
    CHECK(a1.scaled(Gf16::zeta()).frobenius() ==
          Element::generator(t, "a2").scaled(Gf16::zeta_pow(2)));

    std::mt19937 rng(3);
    auto random_element = [&]() {
        ElementBuilder b(t);
        for (int i = 0; i < 3; ++i) {
            Monomial m(t.size());
            for (int j = 0; j < 3; ++j) m.set(rng() % t.size(), rng() % 4);
            b.add(m, Gf16(rng() % 16));
        }
        return b.build();
    };
    for (int i = 0; i < 200; ++i) {
        Element x = random_element(), y = random_element();
        CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
        CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
        CHECK(x.frobenius().frobenius().frobenius().frobenius() == x);
    }
}

TEST_CASE("norm operator") {
    GeneratorTable t = test_table();
    Element a1 = Element::generator(t, "a1");
    // N(a1) = a1 + a2 + a4 + a8
    CHECK(a1.norm() == Element::parse(t, "a1 + a2 + a4 + a8"));
    // N(alpha a1) = alpha a1 + alpha^2 a2 + alpha^4 a4 + alpha^8 a8
    Gf16 al = Gf16::zeta_pow(3);
    CHECK(a1.scaled(al).norm() ==
          Element::generator(t, "a1").scaled(al) +
              Element::generator(t, "a2").scaled(al.pow(2)) +
              Element::generator(t, "a4").scaled(al.pow(4)) +
              Element::generator(t, "a8").scaled(al.pow(8)));
    // F-stable input: N(x) = 0, and N(zeta x) = x since trace(zeta) = 1
    Element stable = Element::parse(t, "a1*a2*a4*a8");
    CHECK(stable.norm().is_zero());
    CHECK(stable.scaled(Gf16::zeta()).norm() == stable);
    // the norm of anything is F-stable
    Element x = Element::parse(t, "z^3*a1^2*u5 + a4*u10");
    CHECK(x.norm().frobenius() == x.norm());
}

TEST_CASE("parser and printer round-trip") {
    GeneratorTable t = test_table();
    const char* cases[] = {
        "0", "1", "a1", "a4^2*u5", "z^3*a1*u10 + a2", "a1*a2 + a1*a4 + z^14*u5^3",
    };
    for (const char* text : cases) {
        Element x = Element::parse(t, text);
        CHECK(Element::parse(t, x.str()) == x);
    }
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        ElementBuilder b(t);
        for (int j = 0; j < 4; ++j) {
            Monomial m(t.size());
            for (int k = 0; k < 2; ++k) m.set(rng() % t.size(), rng() % 5);
            b.add(m, Gf16(rng() % 16));
        }
        Element x = b.build();
        CHECK(Element::parse(t, x.str()) == x);
    }
    CHECK_THROWS_AS((void)Element::parse(t, "b7"), std::invalid_argument);
}

TEST_CASE("mixed tables are rejected") {
    GeneratorTable t1 = test_table(), t2 = test_table();
    Element x = Element::generator(t1, "a1");
    Element y = Element::generator(t2, "a1");
    CHECK_THROWS_AS((void)(x * y), std::domain_error);
    CHECK_THROWS_AS((void)(x + y), std::domain_error);
}

TEST_CASE("monomial enumeration counts") {
    GeneratorTable t = test_table();
    // degree (2,0): the 10 quadratic monomials in four variables
    CHECK(monomials_of_bidegree(t, {2, 0}).size() == 10);
    // (2,1): 10 x 2
    CHECK(monomials_of_bidegree(t, {2, 1}).size() == 20);
    CHECK(monomials_of_bidegree(t, {0, 0}).size() == 1);
    CHECK(monomials_of_bidegree(t, {-1, 0}).empty());
    // oracle for (3,0): stars and bars, C(6,3) = 20
    CHECK(monomials_of_bidegree(t, {3, 0}).size() == 20);
}
