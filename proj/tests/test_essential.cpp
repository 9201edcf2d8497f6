#include <doctest.h>

#include "essq/essential.hpp"

using namespace essq;

namespace {
const SpectralSequence& S() {
    static SpectralSequence s{};
    return s;
}
const EssentialScan& Scan() {
    static EssentialScan scan = run_essential_scan(S());
    return scan;
}
}  // namespace

TEST_CASE("the fifteen rational degree-one classes") {
    auto classes = h1_rational_classes(S());
    CHECK(classes.size() == 15);
    // pairwise distinct, F-stable, F2-linear in alpha
    for (size_t i = 0; i < classes.size(); ++i) {
        CHECK(classes[i].elt.frobenius() == classes[i].elt);
        for (size_t j = i + 1; j < classes.size(); ++j)
            CHECK(!(classes[i].elt == classes[j].elt));
    }
    Element a1 = Element::generator(S().e4_table(), "a1");
    for (const auto& x : classes)
        for (const auto& y : classes) {
            Element sum = x.elt + y.elt;
            CHECK(sum == a1.scaled(x.alpha + y.alpha).norm());
        }
    // alpha = 1 gives a1 + a2 + a4 + a8
    bool found = false;
    for (const auto& c : classes)
        if (c.alpha == Gf16::one())
            found = c.elt == Element::parse(S().e4_table(), "a1 + a2 + a4 + a8");
    CHECK(found);
}

TEST_CASE("divisibility: positive and negative cases") {
    const GeneratorTable& t = S().e4_table();
    // a1^4 is essential; the published witness al^-1 (a1^3 + al a1^2 a2) works
    Element x = Element::parse(t, "a1^4");
    auto ws = einf_essential(S(), x, {4, 0});
    REQUIRE(ws);
    CHECK(ws->witnesses.size() == 15);
    for (Gf16 al : gf16_all()) {
        if (al.is_zero()) continue;
        Element z = Element::generator(t, "a1").scaled(al).norm();
        Element w = (Element::parse(t, "a1^3") +
                     Element::parse(t, "a1^2*a2").scaled(al)).scaled(al.inverse());
        Element residue = z * w + x;
        bool zero = residue.is_zero();
        if (!zero) {
            zero = true;
            for (Gf16 c : S().einf().class_coords(residue, {4, 0}))
                if (!c.is_zero()) zero = false;
        }
        CHECK(zero);
    }
    // a1 at (1,0) is not essential
    Gf16 failing;
    CHECK(!einf_essential(S(), Element::generator(t, "a1"), {1, 0}, &failing));
    // zero is essential with zero witnesses
    auto wz = einf_essential(S(), Element::zero(t), {4, 0});
    REQUIRE(wz);
    for (const auto& [al, w] : wz->witnesses) CHECK(w.is_zero());
}

TEST_CASE("lemma reports all pass") {
    CHECK(verify_lemma_h4(S()).all_passed());
    CHECK(verify_lemma_e64(S()).all_passed());
    CHECK(verify_lemma_h8(S()).all_passed());
    CHECK(verify_lemma_h10(S()).all_passed());
    CHECK(verify_lemma_h6(S()).all_passed());
    CHECK(essential_invariants(S()).all_passed());
}

TEST_CASE("essential products give the last survivor") {
    Report r = verify_products(S());
    CHECK(r.all_passed());
    bool saw_10_4 = false, saw_8_6 = false;
    for (const auto& c : r.checks()) {
        if (c.id == "products.prop-ess10-4") saw_10_4 = c.status == CheckStatus::Pass;
        if (c.id == "products.prop-ess8-6") saw_8_6 = c.status == CheckStatus::Pass;
    }
    CHECK(saw_10_4);
    CHECK(saw_8_6);
}

TEST_CASE("essential scan: lower bounds in the six reported degrees") {
    const auto& scan = Scan();
    CHECK(scan.dims[4] >= 8);
    CHECK(scan.dims[5] >= 6);
    CHECK(scan.dims[6] >= 3);
    CHECK(scan.dims[8] >= 16);
    CHECK(scan.dims[10] >= 6);
    CHECK(scan.dims[14] >= 1);
    CHECK(scan.dims[1] == 0);
    CHECK(scan.dims[2] == 0);
    CHECK(scan.dims[3] == 0);
    CHECK(essential_scan_report(S(), scan).all_passed());
}

TEST_CASE("pairwise and triple product scans") {
    CHECK(pairwise_product_scan(S(), Scan()).all_passed());
}
