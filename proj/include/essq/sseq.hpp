#pragma once

#include <map>
#include <memory>
#include <string>

#include "essq/pages.hpp"
#include "essq/report.hpp"

namespace essq {

struct Window {
    int pmax = 16;
    int qmax = 12;
    // the full suite reaches E5^{*,10} and degree-14 products
    static constexpr int kMinP = 14;
    static constexpr int kMinQ = 10;
    bool valid() const { return pmax >= kMinP && qmax >= kMinQ; }
};

// The Lyndon-Hochschild-Serre spectral sequence of 1 -> Z(G) -> G -> G/Z -> 1
// over GF(16), presented page by page:
//   E2 = GF16[a1,a2,a4,a8,u5,u10],            d2(u5) = a1 a4
//   E3 = GF16[a]/(a1 a4, a2 a8) (x) GF16[u5^2, u10^2],  d3(u5^2) = a1^2 a8 + a2 a4^2
//   E4 = E5: generators a_i, b_i (2,2), u5^4, u10^4 with the quadratic
//   relation block; d5(u5^4) = a1^5 + a4^5
//   Einf = E6: homology of (E5, d5), handled as a subquotient.
class SpectralSequence {
public:
    explicit SpectralSequence(Window w = {});

    SpectralSequence(const SpectralSequence&) = delete;
    SpectralSequence& operator=(const SpectralSequence&) = delete;

    const Window& window() const { return w_; }

    const GeneratorTable& e2_table() const { return *e2t_; }
    const GeneratorTable& e3_table() const { return *e3t_; }
    const GeneratorTable& e4_table() const { return *e4t_; }

    const PageSpace& e2() const { return *e2s_; }
    const PageSpace& e3() const { return *e3s_; }
    const PageSpace& e4() const { return *e4s_; }

    const Derivation& d2() const { return *d2_; }
    const Derivation& d3() const { return *d3_; }
    const Derivation& d5() const { return *d5_; }

    const Subquotient& e3_homology() const { return *h3_; }  // H(E3, d3) = E4
    const Subquotient& einf() const { return *einf_; }       // H(E5, d5) = E6 = Einf

    // substitution of page generators by their representatives one page down
    Element e3_to_e2(const Element& x) const;
    Element e4_to_e3(const Element& x) const;

    // parse an expression over the E4/E5 generators extended by the
    // Einf symbols d3..d14, t3..t12, x5, x10, u5_8, u10_8, xi
    Element einf_rep(std::string_view expr) const;
    const std::map<std::string, Element>& einf_symbols() const { return einf_symbols_; }

    // dim Einf^{p,q} / (u5^8, u10^8)
    int quotient_dim(Bidegree bd) const;
    // Einf classes spanning a complement of the parameter multiples at bd
    const std::vector<Element>& quotient_basis(Bidegree bd) const;
    // coordinates of an Einf cycle in that complement basis (parameter
    // multiples reduce to zero)
    SparseRow quotient_coords(const Element& cycle, Bidegree bd) const;

    // The published Einf/(u5^8,u10^8) dimension table, p,q in [0,8].
    static int figure1(int p, int q);
    // claimed basis expressions of the table part at (p,q); empty when none
    static std::vector<std::string> claimed_einf_basis(int p, int q);
    // claimed basis expressions for the E4 page at (p,q) within the window
    std::vector<std::string> claimed_e4_basis(Bidegree bd) const;

    Element xi_rep() const;  // a2^5 a4 b11 u5^4, the (8,6) survivor

private:
    Window w_;
    std::unique_ptr<GeneratorTable> e2t_, e3t_, e4t_;
    std::unique_ptr<Presentation> e2p_, e3p_, e4p_;
    std::unique_ptr<Derivation> d2_, d3_, d5_;
    std::unique_ptr<PageSpace> e2s_, e3s_, e4s_;
    std::unique_ptr<Subquotient> h3_, einf_;
    std::vector<Element> e3_images_, e4_images_;
    std::map<std::string, Element> einf_symbols_;

    struct QuotientAt {
        int dim = 0;
        Echelon param_span;  // spans the classes of u5^8 h, u10^8 h
        Echelon solver;      // complement basis rows, tagged
        std::vector<Element> lifts;
        int ncols = 0;
    };
    mutable std::map<std::pair<int, int>, std::unique_ptr<QuotientAt>> qcache_;
    const QuotientAt& quotient_at(Bidegree bd) const;
};

// report sections
Report group_report();
Report verify_e3(const SpectralSequence& s);
Report verify_e4(const SpectralSequence& s);
Report verify_e4_equals_e5(const SpectralSequence& s);
Report verify_einf(const SpectralSequence& s);
Report verify_corrected_relations(const SpectralSequence& s);
Report last_survivor_report(const SpectralSequence& s);
// d.d = 0, Frobenius equivariance, weight preservation, norm product rule
Report property_suite(const SpectralSequence& s);

}  // namespace essq
