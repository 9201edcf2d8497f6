// Acceptance suite: one check per headline claim, each printed as a
// pass/fail line.  Exit status 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <numeric>

#include "essq/essential.hpp"
#include "essq/series.hpp"

using namespace essq;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
    std::printf("criterion %d: %s — %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

bool section_passes(const Report& r) { return r.fail_count() == 0; }

bool ids_pass(const Report& r, const std::string& prefix) {
    bool any = false, ok = true;
    for (const auto& c : r.checks()) {
        if (c.id.rfind(prefix, 0) != 0) continue;
        any = true;
        if (c.status == CheckStatus::Fail) ok = false;
    }
    return any && ok;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();

    // criterion 6 first: the group model, with its own timing bound
    {
        auto g0 = clock::now();
        Report g = group_report();
        double secs = std::chrono::duration<double>(clock::now() - g0).count();
        line(6, section_passes(g) && secs <= 1.0,
             "group model: 64 elements, centre of size 4 and exponent 2, quotient elementary "
             "abelian of rank 4, noncentral orders 4, torus of order 15 with eigenvalue sets "
             "{z,z^2,z^4,z^8} and {z^5,z^10} (" + std::to_string(secs) + " s, bound 1 s)");
    }

    SpectralSequence s{};

    // criterion 1: the Einf/(u5^8,u10^8) dimension table
    {
        Report einf = verify_einf(s);
        bool table_ok = ids_pass(einf, "einf.figure") && s.quotient_dim({3, 4}) == 12 &&
                        s.quotient_dim({4, 6}) == 8 && s.quotient_dim({8, 6}) == 1;
        line(1, table_ok && section_passes(einf),
             "computed dim Einf^{p,q}/(u5^8,u10^8) reproduces the published table exactly, "
             "including (3,4) = 12, (4,6) = 8, (8,6) = 1");
    }

    // criterion 2: Poincare numerator and functional equation
    {
        std::vector<int> num = poincare_numerator(s);
        std::vector<int> want = {1, 4, 8, 10, 12, 13, 16, 20, 16, 13, 12, 10, 8, 4, 1};
        Report fe = functional_equation_report(s);
        line(2, num == want && num[7] == 20 && section_passes(fe),
             "Poincare numerator equals [1,4,8,10,12,13,16,20,16,13,12,10,8,4,1] with the "
             "corrected t^7 = 20, and P(1/t) = t^2 P(t) via palindromicity");
    }

    // criterion 3: products of essential classes hit the last survivor
    {
        Report pr = verify_products(s);
        line(3, ids_pass(pr, "products.prop-ess10-4") && ids_pass(pr, "products.prop-ess8-6") &&
                    section_passes(pr),
             "for all 3 omega in F4* and all 7 admissible lambda the essential products reduce "
             "to the class xi != 0 at (8,6): Ess(G)^2 is nonzero at the graded level");
    }

    // criterion 4: relation lists reduce to zero
    {
        Report rel = verify_corrected_relations(s);
        Report e4 = verify_e4(s);
        bool own = ids_pass(rel, "einf.relations34.") && ids_pass(rel, "einf.relations46.");
        bool e4rels = ids_pass(e4, "e4.relations.") && ids_pass(e4, "e4.extra-relations.");
        line(4, own && e4rels && section_passes(rel),
             "all 20 corrected expressions at (3,4) and all 16 at (4,6) reduce to zero in Einf; "
             "both E4 relation blocks reduce to zero in the homology of (E3, d3)");
    }

    // criterion 5: essential lower bounds
    {
        EssentialScan scan = run_essential_scan(s);
        const std::pair<int, int> bounds[] = {{4, 8}, {5, 6}, {6, 3}, {8, 16}, {10, 6}, {14, 1}};
        bool ok = true;
        std::string dims;
        for (auto [deg, bound] : bounds) {
            if (scan.dims[static_cast<size_t>(deg)] < bound) ok = false;
            dims += (dims.empty() ? "" : ", ") + std::to_string(deg) + ":" +
                    std::to_string(scan.dims[static_cast<size_t>(deg)]) + ">=" +
                    std::to_string(bound);
        }
        line(5, ok, "graded essential dimensions meet the reported counts (" + dims + ")");

        // criterion 7: structural property suites
        Report props = property_suite(s);
        Report pairs = pairwise_product_scan(s, scan);
        Report inv = essential_invariants(s);
        Report e3 = verify_e3(s);
        line(7, section_passes(props) && section_passes(pairs) && section_passes(inv) &&
                    section_passes(e3),
             "d.d = 0 across the window for d2, d3, d5; F-equivariance and weight preservation "
             "on 500 random elements per page; norm product rule on 1000 random pairs; all "
             "division witnesses re-multiply exactly; triple products of essential classes "
             "vanish modulo the parameters");
    }

    double total = std::chrono::duration<double>(clock::now() - t0).count();
    bool in_time = total <= 60.0;
    std::printf("pipeline time: %.1f s (bound 60 s) — %s\n", total, in_time ? "PASS" : "FAIL");
    if (!in_time) ++failures;

    if (failures) {
        std::printf("%d acceptance failure(s)\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria pass\n");
    return 0;
}
