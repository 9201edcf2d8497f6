#include "essq/essential.hpp"

#include <algorithm>
#include <random>

namespace essq {

namespace {

nlohmann::json bd_json(Bidegree bd) { return {{"p", bd.p}, {"q", bd.q}}; }

bool coords_zero(const std::vector<Gf16>& v) {
    for (Gf16 c : v)
        if (!c.is_zero()) return false;
    return true;
}

bool class_equal(const SpectralSequence& s, const Element& x, const Element& y, Bidegree bd) {
    Element diff = x + y;
    return diff.is_zero() || coords_zero(s.einf().class_coords(diff, bd));
}

}  // namespace

std::vector<RationalClass> h1_rational_classes(const SpectralSequence& s) {
    std::vector<RationalClass> out;
    Element a1 = Element::generator(s.e4_table(), "a1");
    for (Gf16 alpha : gf16_all()) {
        if (alpha.is_zero()) continue;
        out.push_back({alpha, a1.scaled(alpha).norm()});
    }
    return out;
}

std::optional<EssentialWitnessSet> einf_essential(const SpectralSequence& s, const Element& x,
                                                  Bidegree bd, Gf16* first_failure) {
    EssentialWitnessSet ws;
    for (const auto& rc : h1_rational_classes(s)) {
        auto w = s.einf().divide(rc.elt, x, bd);
        if (!w) {
            if (first_failure) *first_failure = rc.alpha;
            return std::nullopt;
        }
        // witness self-check: it must re-multiply to x
        if (!class_equal(s, rc.elt * *w, x, bd))
            throw std::logic_error("einf_essential: witness does not re-multiply");
        ws.witnesses.emplace_back(rc.alpha, std::move(*w));
    }
    return ws;
}

Report verify_lemma_h4(const SpectralSequence& s) {
    Report r;
    const Subquotient& einf = s.einf();
    const Bidegree bd{4, 0};

    bool all_essential = true;
    for (const Element& h : einf.at(bd).lifts)
        if (!einf_essential(s, h, bd)) all_essential = false;
    r.check(all_essential && einf.dim(bd) == 8, "essential.h4.basis",
            "all 8 basis classes of Einf^{4,0} (the inflation classes in H^4) are Einf-essential",
            "an inflation class is not essential", {{"dim", einf.dim(bd)}});

    // the two witness identities behind the proof
    bool id1 = true, id2 = true;
    for (const auto& rc : h1_rational_classes(s)) {
        Gf16 al = rc.alpha;
        Element lhs1 = s.einf_rep("a1^2*a2") * rc.elt;
        Element rhs1 = s.einf_rep("a1^3*a2").scaled(al);
        if (!class_equal(s, lhs1, rhs1, bd)) id1 = false;
        Element lhs2 = s.einf_rep("a1^3") * rc.elt;
        Element rhs2 = s.einf_rep("a1^4").scaled(al) + s.einf_rep("a1^3*a2").scaled(al * al);
        if (!class_equal(s, lhs2, rhs2, bd)) id2 = false;
    }
    r.check(id1, "essential.h4.identity-1",
            "a1^2 a2 N(al a1) = al a1^3 a2 for all 15 al", "identity fails");
    r.check(id2, "essential.h4.identity-2",
            "a1^3 N(al a1) = al a1^4 + al^2 a1^3 a2 for all 15 al", "identity fails");
    r.info("essential.h4.basis-note",
           "the computed basis of Einf^{4,0} is a1^4, a2^4, a4^4, a8^4, a1^3 a2, a2^3 a4, "
           "a4^3 a8, a8^3 a1; one published listing of it writes a3^4 where the computation "
           "gives a8^4 (a3 is not a generator)");
    return r;
}

Report verify_lemma_e64(const SpectralSequence& s) {
    Report r;
    const Subquotient& einf = s.einf();

    // surjectivity of the two multiplication maps
    struct MapSpec {
        Bidegree from_a, from_b, to;
        const char* id;
    };
    const MapSpec maps[] = {
        {{2, 2}, {4, 0}, {6, 2}, "essential.e64.surjective-62"},
        {{2, 4}, {4, 0}, {6, 4}, "essential.e64.surjective-64"},
    };
    for (const auto& m : maps) {
        Echelon span(einf.dim(m.to));
        for (const Element& x : einf.at(m.from_a).lifts)
            for (const Element& y : einf.at(m.from_b).lifts)
                span.add(einf.class_row(x * y, m.to));
        bool ok = span.rank() == einf.dim(m.to);
        r.check(ok, m.id,
                "multiplication onto Einf^" + m.to.str() + " is surjective (rank " +
                    std::to_string(span.rank()) + ")",
                "multiplication map not surjective", {{"rank", span.rank()}});
    }

    for (Bidegree bd : {Bidegree{6, 2}, Bidegree{6, 4}}) {
        bool ok = true;
        for (const Element& h : einf.at(bd).lifts)
            if (!einf_essential(s, h, bd)) ok = false;
        r.check(ok, std::string("essential.e64.classes-") + std::to_string(bd.p) +
                        std::to_string(bd.q),
                "every class in Einf^" + bd.str() + " is Einf-essential",
                "a class fails the divisibility test", {{"dim", einf.dim(bd)}});
    }
    return r;
}

Report verify_lemma_h8(const SpectralSequence& s) {
    Report r;
    const Subquotient& einf = s.einf();
    const Bidegree bd{4, 4};

    bool all_essential = true;
    for (const Element& h : einf.at(bd).lifts)
        if (!einf_essential(s, h, bd)) all_essential = false;
    r.check(all_essential && einf.dim(bd) == 8, "essential.h8.basis",
            "every element of Einf^{4,4} is Einf-essential (8-dimensional space)",
            "an Einf^{4,4} class is not essential");

    bool id1 = true, id2 = true;
    for (const auto& rc : h1_rational_classes(s)) {
        Gf16 al = rc.alpha;
        Gf16 al4 = al.pow(4), al8 = al.pow(8);
        Element lhs1 = s.einf_rep("a4*d3") * rc.elt;
        Element rhs1 = s.einf_rep("a4^2*d3").scaled(al4) + s.einf_rep("a4^2*d7").scaled(al8);
        if (!class_equal(s, lhs1, rhs1, bd)) id1 = false;
        Element lhs2 = s.einf_rep("a4*d7") * rc.elt;
        Element rhs2 = s.einf_rep("a4^2*d7").scaled(al4);
        if (!class_equal(s, lhs2, rhs2, bd)) id2 = false;
    }
    r.check(id1, "essential.h8.identity-1",
            "a4 d3 N(al a1) = al^4 a4^2 d3 + al^8 a4^2 d7 for all 15 al", "identity fails");
    r.check(id2, "essential.h8.identity-2", "a4 d7 N(al a1) = al^4 a4^2 d7 for all 15 al",
            "identity fails");
    return r;
}

Report verify_lemma_h10(const SpectralSequence& s) {
    Report r;
    const Bidegree bd{4, 6};
    const std::array<Gf16, 3> omegas = {Gf16::one(), Gf16::zeta_pow(5), Gf16::zeta_pow(10)};

    Element a4t6 = s.einf_rep("a4*t6");
    Element a8t6 = s.einf_rep("a8*t6");
    Element t5 = s.einf_rep("t5");
    Element t10 = s.einf_rep("t10");
    Element t6 = s.einf_rep("t6");

    for (Gf16 omega : omegas) {
        Element x = a4t6.scaled(omega).norm();
        bool essential = einf_essential(s, x, bd).has_value();

        bool ids = true;
        for (const auto& rc : h1_rational_classes(s)) {
            Gf16 al = rc.alpha;
            Element lhs1 = t6.scaled(omega * al.pow(11)).norm() * rc.elt;
            Element rhs1 = x + a8t6.scaled(omega * al.pow(4)).norm();
            if (!class_equal(s, lhs1, rhs1, bd)) ids = false;
            Element lhs2 = (t10.scaled(omega) + t5.scaled(omega * omega)) * rc.elt;
            Element rhs2 = a8t6.scaled(omega * al.pow(4)).norm();
            if (!class_equal(s, lhs2, rhs2, bd)) ids = false;
        }
        std::string tag = omega.sym();
        r.check(essential, "essential.h10.class." + tag,
                "N(" + omega.sym() + " a4 t6) is Einf-essential at (4,6)",
                "class is not essential");
        r.check(ids, "essential.h10.identities." + tag,
                "both witness identities hold for all 15 al", "an identity fails");
    }
    return r;
}

Report verify_lemma_h6(const SpectralSequence& s) {
    Report r;
    const Bidegree bd{4, 2};

    // the seven nonzero lambda with trace zero = zeros of X^7 + X^3 + X + 1
    std::vector<Gf16> coeffs(8, Gf16::zero());
    coeffs[0] = coeffs[1] = coeffs[3] = coeffs[7] = Gf16::one();
    std::vector<Gf16> lambdas = poly_roots(coeffs);
    r.check(lambdas.size() == 7, "essential.h6.lambda-count",
            "X^7 + X^3 + X + 1 has exactly 7 zeros, all of trace 0",
            "unexpected zero count", {{"count", lambdas.size()}});

    Element a4b7 = s.einf_rep("a4*b7");
    Element a8b7 = s.einf_rep("a8*b7");
    Element a42b7 = s.einf_rep("a4^2*b7");

    bool all_essential = true, corrected_ids = true, printed_fails_somewhere = false;
    for (Gf16 lambda : lambdas) {
        if (lambda.trace2() != 0) corrected_ids = false;
        Gf16 mu = *solve_artin_schreier(lambda);
        Element x = a42b7.scaled(lambda).norm();
        if (!einf_essential(s, x, bd)) all_essential = false;
        for (const auto& rc : h1_rational_classes(s)) {
            Gf16 al = rc.alpha;
            // witness with the Frobenius-twisted coefficient mu^2
            Element w = (a4b7.scaled(lambda * al.pow(11)) + a8b7.scaled(mu * mu)).norm();
            if (!class_equal(s, rc.elt * w, x, bd)) corrected_ids = false;
            // the untwisted coefficient only works for lambda in F2
            Element w0 = (a4b7.scaled(lambda * al.pow(11)) + a8b7.scaled(mu)).norm();
            if (!class_equal(s, rc.elt * w0, x, bd) && !(lambda == Gf16::one()))
                printed_fails_somewhere = true;
        }
    }
    r.check(all_essential, "essential.h6.classes",
            "N(lambda a4^2 b7) is Einf-essential at (4,2) for each of the 7 admissible lambda",
            "a class fails the divisibility test");
    r.check(corrected_ids, "essential.h6.identity",
            "N(al a1) N(lambda al^11 a4 b7 + mu^2 a8 b7) = N(lambda a4^2 b7) for all 15 al and "
            "all 7 lambda, with mu^2 + mu = lambda",
            "the witness identity fails");
    r.info("essential.h6.identity-untwisted",
           std::string("with coefficient mu instead of mu^2 the identity ") +
               (printed_fails_somewhere ? "fails for every lambda outside F2"
                                        : "holds for all lambda") +
               "; the mu^2 form is the one verified here");
    return r;
}

Report verify_products(const SpectralSequence& s) {
    Report r;
    const Subquotient& einf = s.einf();
    const Bidegree bd{8, 6};
    Element xi = s.xi_rep();
    Element zeta_xi = xi.scaled(Gf16::zeta());
    const std::array<Gf16, 3> omegas = {Gf16::one(), Gf16::zeta_pow(5), Gf16::zeta_pow(10)};

    r.check(Gf16::zeta().trace2() == 1, "products.norm-zeta",
            "N(zeta) = zeta + zeta^2 + zeta^4 + zeta^8 = 1", "trace of zeta is not 1");
    {
        Element nz = zeta_xi.norm();
        bool ok = class_equal(s, nz, xi, bd);
        r.check(ok, "products.norm-xi", "N(zeta xi) = xi as classes", "N(zeta xi) != xi");
    }

    // eta theta = xi for all omega in F4*
    {
        bool raw = true, full = true;
        for (Gf16 omega : omegas) {
            Element eta_rep = s.einf_rep("a4*t6").scaled(omega);
            Element theta_arg = s.einf_rep("a4^3*a8").scaled(omega.inverse() * Gf16::zeta());
            Element prod = eta_rep * theta_arg.norm();
            if (!class_equal(s, prod, zeta_xi, bd)) raw = false;
            // the H^14 product of the two rational classes
            Element eta = eta_rep.norm();
            Element theta = theta_arg.norm();
            if (!class_equal(s, eta * theta, xi, bd)) full = false;
        }
        r.check(raw, "products.prop-ess10-4.raw",
                "omega a4 t6 * N(omega^-1 zeta a4^3 a8) = zeta xi for all omega in F4*",
                "representative product is not zeta xi");
        r.check(full, "products.prop-ess10-4",
                "eta theta = xi: the degree 10 x 4 essential product is the last survivor, "
                "for all 3 omega",
                "eta theta differs from xi");
    }

    // phi psi = xi for the seven admissible lambda
    {
        std::vector<Gf16> coeffs(8, Gf16::zero());
        coeffs[0] = coeffs[1] = coeffs[3] = coeffs[7] = Gf16::one();
        std::vector<Gf16> lambdas = poly_roots(coeffs);
        bool raw = true, full = true;
        for (Gf16 lambda : lambdas) {
            Element phi_rep = s.einf_rep("a4^2*b7").scaled(lambda);
            Element psi_arg = s.einf_rep("a4^3*a8*u10_4").scaled(lambda.inverse() * Gf16::zeta());
            Element prod = phi_rep * psi_arg.norm();
            if (!class_equal(s, prod, zeta_xi, bd)) raw = false;
            Element phi = phi_rep.norm();
            Element psi = psi_arg.norm();
            if (!class_equal(s, phi * psi, xi, bd)) full = false;
        }
        r.check(raw, "products.prop-ess8-6.raw",
                "lambda a4^2 b7 * N(lambda^-1 zeta a4^3 a8 u10^4) = zeta xi for all 7 lambda",
                "representative product is not zeta xi");
        r.check(full, "products.prop-ess8-6",
                "phi psi = xi: the degree 6 x 8 essential product is the last survivor, "
                "for all 7 lambda",
                "phi psi differs from xi");
    }

    r.check(!coords_zero(einf.class_coords(xi, bd)), "products.ess-squared",
            "two essential classes multiply to xi != 0: the essential ideal does not square "
            "to zero at the graded level",
            "xi vanished");
    return r;
}

namespace {

// components (p, q) of the parameter quotient in total degree n, with offsets
struct DegreeLayout {
    std::vector<Bidegree> comps;
    std::vector<int> offset;
    int total = 0;
};

DegreeLayout layout_for_degree(const SpectralSequence& s, int n) {
    DegreeLayout L;
    for (int q = 0; q <= n; q += 2) {
        int p = n - q;
        if (p < 0) continue;
        Bidegree bd{p, q};
        int d = s.quotient_dim(bd);
        if (d > 0) {
            L.comps.push_back(bd);
            L.offset.push_back(L.total);
            L.total += d;
        }
    }
    return L;
}

SparseRow embed(const SparseRow& row, int offset) {
    SparseRow out;
    for (const auto& [col, c] : row.entries) out.entries.emplace_back(col + offset, c);
    return out;
}

}  // namespace

EssentialScan run_essential_scan(const SpectralSequence& s) {
    EssentialScan scan;
    auto rationals = h1_rational_classes(s);

    for (int n = 1; n <= 14; ++n) {
        DegreeLayout Ln = layout_for_degree(s, n);
        DegreeLayout Lw = layout_for_degree(s, n - 1);
        if (Ln.total == 0) {
            scan.dims[static_cast<size_t>(n)] = 0;
            continue;
        }

        std::vector<SparseRow> meet;
        bool first = true;
        for (const auto& rc : rationals) {
            std::vector<SparseRow> image;
            for (size_t ci = 0; ci < Lw.comps.size(); ++ci) {
                Bidegree src = Lw.comps[ci];
                Bidegree dst{src.p + 1, src.q};
                // locate destination component
                int dst_off = -1;
                for (size_t cj = 0; cj < Ln.comps.size(); ++cj)
                    if (Ln.comps[cj] == dst) dst_off = Ln.offset[cj];
                for (const Element& h : s.quotient_basis(src)) {
                    if (dst_off < 0) continue;  // quotient vanishes there
                    SparseRow row = s.quotient_coords(rc.elt * h, dst);
                    if (!row.empty()) image.push_back(embed(row, dst_off));
                }
            }
            if (first) {
                Echelon basis;
                std::vector<SparseRow> reduced;
                for (auto& row : image) {
                    SparseRow red = basis.add(std::move(row));
                    if (!red.empty()) reduced.push_back(std::move(red));
                }
                meet = std::move(reduced);
                first = false;
            } else {
                meet = intersect_row_spaces(meet, image, Ln.total);
            }
            if (meet.empty()) break;
        }

        scan.dims[static_cast<size_t>(n)] = static_cast<int>(meet.size());
        std::vector<GradedClass> basis_classes;
        for (const auto& vec : meet) {
            GradedClass gc;
            gc.degree = n;
            std::map<int, Element> parts;  // by component index
            for (const auto& [col, c] : vec.entries) {
                // find component containing col
                size_t cj = 0;
                while (cj + 1 < Ln.comps.size() && Ln.offset[cj + 1] <= col) ++cj;
                int local = col - Ln.offset[cj];
                const Element& lift = s.quotient_basis(Ln.comps[cj])[static_cast<size_t>(local)];
                auto [it, fresh] =
                    parts.emplace(static_cast<int>(cj), Element::zero(s.e4_table()));
                it->second += lift.scaled(c);
            }
            for (auto& [cj, elt] : parts)
                gc.parts.emplace_back(Ln.comps[static_cast<size_t>(cj)], std::move(elt));
            basis_classes.push_back(std::move(gc));
        }
        scan.basis[n] = std::move(basis_classes);
    }
    return scan;
}

Report essential_scan_report(const SpectralSequence& s, const EssentialScan& scan) {
    Report r;
    (void)s;
    const std::map<int, int> lower_bounds = {{4, 8}, {5, 6}, {6, 3}, {8, 16}, {10, 6}, {14, 1}};
    // the published computer count of essential module generators, by degree
    const std::array<int, 15> reported = {0, 0, 0, 0, 8, 6, 3, 8, 16, 7, 6, 8, 8, 4, 1};

    nlohmann::json dims = nlohmann::json::array();
    for (int n = 0; n <= 14; ++n) dims.push_back(scan.dims[static_cast<size_t>(n)]);

    for (const auto& [deg, bound] : lower_bounds) {
        int got = scan.dims[static_cast<size_t>(deg)];
        r.check(got >= bound, "essential.scan.deg" + std::to_string(deg),
                "essential dimension in degree " + std::to_string(deg) + " is " +
                    std::to_string(got) + " >= " + std::to_string(bound),
                "essential dimension " + std::to_string(got) + " below the bound " +
                    std::to_string(bound),
                {{"dim", got}, {"bound", bound}});
    }
    bool matches = true;
    for (int n = 0; n <= 14; ++n)
        if (scan.dims[static_cast<size_t>(n)] != reported[static_cast<size_t>(n)]) matches = false;
    r.info("essential.scan.table",
           std::string("graded essential dimensions per degree; ") +
               (matches ? "they equal the published computer counts in every degree"
                        : "they differ from the published computer counts in some degrees "
                          "(only the six bounded degrees are asserted)"),
           {{"dims", dims}});
    return r;
}

Report pairwise_product_scan(const SpectralSequence& s, const EssentialScan& scan) {
    Report r;

    // classes of one graded piece multiply into the quotient of the sum degree
    auto product_nonzero = [&](const GradedClass& x, const GradedClass& y,
                               bool* out_is_xi) -> bool {
        bool nonzero = false;
        bool xi_only = true;
        for (const auto& [bdx, ex] : x.parts)
            for (const auto& [bdy, ey] : y.parts) {
                Bidegree bd = bdx + bdy;
                if (s.quotient_dim(bd) == 0) continue;
                SparseRow row = s.quotient_coords(ex * ey, bd);
                if (!row.empty()) {
                    nonzero = true;
                    if (!(bd == Bidegree{8, 6})) xi_only = false;
                }
            }
        if (out_is_xi) *out_is_xi = xi_only;
        return nonzero;
    };

    int nonzero_pairs = 0, checked_pairs = 0;
    bool pairs_ok = true;
    for (const auto& [n1, basis1] : scan.basis) {
        for (const auto& [n2, basis2] : scan.basis) {
            if (n2 < n1 || n1 + n2 > 14) continue;
            for (size_t i = 0; i < basis1.size(); ++i) {
                size_t j0 = (n1 == n2) ? i : 0;
                for (size_t j = j0; j < basis2.size(); ++j) {
                    ++checked_pairs;
                    bool is_xi = true;
                    bool nz = product_nonzero(basis1[i], basis2[j], &is_xi);
                    if (nz) {
                        ++nonzero_pairs;
                        if (n1 + n2 != 14 || !is_xi) pairs_ok = false;
                    }
                }
            }
        }
    }
    r.check(pairs_ok, "products.pairwise",
            "every nonzero product of two essential classes lands in degree 14 as a multiple "
            "of xi (" + std::to_string(nonzero_pairs) + " of " + std::to_string(checked_pairs) +
                " pairs in degree <= 14 are nonzero)",
            "a product violates the degree constraint",
            {{"nonzero", nonzero_pairs}, {"checked", checked_pairs}});

    // beyond degree 14 the quotient vanishes on every component sum, so all
    // higher products die modulo parameters; verified per component
    {
        bool ok = true;
        for (const auto& [n1, basis1] : scan.basis)
            for (const auto& [n2, basis2] : scan.basis) {
                if (n2 < n1 || n1 + n2 <= 14) continue;
                for (const auto& x : basis1)
                    for (const auto& y : basis2)
                        for (const auto& [bdx, ex] : x.parts)
                            for (const auto& [bdy, ey] : y.parts)
                                if (s.quotient_dim(bdx + bdy) != 0) ok = false;
            }
        r.check(ok, "products.pairwise-high",
                "products of essential classes in degree > 14 vanish modulo the parameters "
                "(all target quotients are zero)",
                "a degree > 14 target quotient is nonzero");
    }

    // triple products vanish
    {
        bool ok = true;
        int checked = 0;
        for (const auto& [n1, b1] : scan.basis)
            for (const auto& [n2, b2] : scan.basis)
                for (const auto& [n3, b3] : scan.basis) {
                    if (!(n1 <= n2 && n2 <= n3) || n1 + n2 + n3 > 14) continue;
                    for (const auto& x : b1)
                        for (const auto& y : b2)
                            for (const auto& z : b3) {
                                ++checked;
                                for (const auto& [bdx, ex] : x.parts)
                                    for (const auto& [bdy, ey] : y.parts)
                                        for (const auto& [bdz, ez] : z.parts) {
                                            Bidegree bd = bdx + bdy + bdz;
                                            if (s.quotient_dim(bd) == 0) continue;
                                            if (!s.quotient_coords(ex * ey * ez, bd).empty())
                                                ok = false;
                                        }
                            }
                }
        r.check(ok, "products.triple",
                "all " + std::to_string(checked) +
                    " triple products of essential basis classes in degree <= 14 vanish modulo "
                    "the parameters",
                "a nonzero triple product exists", {{"checked", checked}});
    }
    return r;
}

Report essential_invariants(const SpectralSequence& s) {
    Report r;
    const Subquotient& einf = s.einf();
    std::mt19937 rng(19421015u);

    // ideal property: essential times anything is essential (witnesses transport)
    {
        bool ok = true;
        const Bidegree bd{4, 0};
        std::vector<Element> multipliers = {
            Element::generator(s.e4_table(), "a1"), Element::generator(s.e4_table(), "a2"),
            s.einf_rep("b7"), s.einf_rep("a4")};
        for (const Element& h : einf.at(bd).lifts) {
            if (!einf_essential(s, h, bd)) ok = false;
            for (const Element& y : multipliers) {
                Element xy = h * y;
                Bidegree bdy = bd + *y.bidegree();
                if (xy.is_zero() || coords_zero(einf.class_coords(xy, bdy))) continue;
                if (!einf_essential(s, xy, bdy)) ok = false;
            }
        }
        r.check(ok, "essential.invariants.ideal",
                "products of Einf^{4,0} essentials with degree-one and beta classes stay "
                "essential",
                "ideal property fails");
    }

    // Frobenius invariance: x essential iff F(x) essential
    {
        bool ok = true;
        const Bidegree bd{4, 2};
        Element x = s.einf_rep("a4^2*b7").scaled(Gf16::one()).norm();  // essential
        Element y = s.einf_rep("a4^2*b7");                             // not essential
        bool ex = einf_essential(s, x, bd).has_value();
        bool efx = einf_essential(s, x.frobenius(), bd).has_value();
        bool ey = einf_essential(s, y, bd).has_value();
        bool efy = einf_essential(s, y.frobenius(), bd).has_value();
        ok = (ex == efx) && (ey == efy);
        r.check(ok, "essential.invariants.frobenius",
                "x is essential iff F(x) is essential (checked on both kinds)",
                "Frobenius invariance fails");
    }

    // scalar invariance
    {
        bool ok = true;
        const Bidegree bd{4, 0};
        const Element& h = einf.at(bd).lifts.front();
        for (int i = 0; i < 5; ++i) {
            Gf16 c = Gf16(1 + rng() % 15);
            if (einf_essential(s, h.scaled(c), bd).has_value() !=
                einf_essential(s, h, bd).has_value())
                ok = false;
        }
        r.check(ok, "essential.invariants.scalar",
                "essentiality is invariant under nonzero scalar multiples",
                "scalar invariance fails");
    }
    return r;
}

}  // namespace essq
