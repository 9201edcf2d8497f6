#pragma once

#include <array>
#include <map>
#include <optional>

#include "essq/sseq.hpp"

namespace essq {

// The 15 nonzero F-stable degree-(1,0) classes N(alpha a1), alpha in GF(16)*.
struct RationalClass {
    Gf16 alpha;
    Element elt;
};
std::vector<RationalClass> h1_rational_classes(const SpectralSequence& s);

// Division witnesses of x by every nonzero rational degree-one class.
struct EssentialWitnessSet {
    std::vector<std::pair<Gf16, Element>> witnesses;  // per alpha
};

// Einf-essential = divisible within Einf by each of the 15 classes.  Returns
// the witness set, or nullopt with the first failing alpha reported.
std::optional<EssentialWitnessSet> einf_essential(const SpectralSequence& s, const Element& x,
                                                  Bidegree bd, Gf16* first_failure = nullptr);

// An element of (+)_{p+q=n} Einf^{p,q}/(u5^8,u10^8), spread over components.
struct GradedClass {
    int degree = 0;
    std::vector<std::pair<Bidegree, Element>> parts;
};

// Per total degree n <= 14, the essential subspace of the parameter quotient:
// the intersection over alpha of the images of multiplication by N(alpha a1).
struct EssentialScan {
    std::array<int, 15> dims{};
    std::map<int, std::vector<GradedClass>> basis;
};
EssentialScan run_essential_scan(const SpectralSequence& s);

Report verify_lemma_h4(const SpectralSequence& s);
Report verify_lemma_e64(const SpectralSequence& s);
Report verify_lemma_h8(const SpectralSequence& s);
Report verify_lemma_h10(const SpectralSequence& s);
Report verify_lemma_h6(const SpectralSequence& s);
Report verify_products(const SpectralSequence& s);
Report essential_scan_report(const SpectralSequence& s, const EssentialScan& scan);
Report pairwise_product_scan(const SpectralSequence& s, const EssentialScan& scan);
// ideal property, Frobenius invariance, scalar invariance, witness residuals
Report essential_invariants(const SpectralSequence& s);

}  // namespace essq
