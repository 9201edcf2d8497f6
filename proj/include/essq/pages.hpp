#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "essq/algebra.hpp"
#include "essq/linalg.hpp"

namespace essq {

// Finitely presented bigraded algebra: a generator table plus homogeneous
// relations.  Every relation must be bihomogeneous and weight-homogeneous and
// the relation set must be Frobenius-closed modulo the relation span per
// bidegree; both are checked at construction.
struct Presentation {
    const GeneratorTable* table;
    std::vector<Element> relations;

    Presentation(const GeneratorTable& t, std::vector<Element> rels);
};

// Per-bidegree linear algebra for a Presentation, within window bounds.
// A slice at (p,q) is the span of all monomials of that bidegree modulo the
// bidegree-(p,q) part of the relation ideal, spanned by relation multiples.
// Monomial relations are handled by column exclusion, the rest by row
// reduction with graded-lex pivoting.
class PageSpace {
public:
    struct Slice {
        std::vector<Monomial> alive;          // monomials not killed by monomial relations,
                                              // decreasing graded-lex; column i = alive[i]
        Echelon ideal;                        // span of non-monomial relation multiples
        std::vector<int> basis_cols;          // non-pivot columns: the quotient basis
        int dim() const { return static_cast<int>(basis_cols.size()); }
    };

    PageSpace(const Presentation& pres, Bidegree bounds);

    const Presentation& presentation() const { return *pres_; }
    Bidegree bounds() const { return bounds_; }
    bool in_bounds(Bidegree bd) const {
        return bd.first_quadrant() && bd.p <= bounds_.p && bd.q <= bounds_.q;
    }

    const Slice& slice(Bidegree bd) const;  // throws std::domain_error out of bounds
    int dim(Bidegree bd) const { return slice(bd).dim(); }

    // Monomials of the quotient basis at bd, as Elements.
    std::vector<Element> basis_elements(Bidegree bd) const;

    // Coordinates of the class of x in the quotient basis at bd.  x must be
    // bihomogeneous of bidegree bd (or zero).
    std::vector<Gf16> coords(const Element& x, Bidegree bd) const;
    SparseRow coords_row(const Element& x, Bidegree bd) const;

    Element from_coords_row(const SparseRow& row, Bidegree bd) const;

private:
    const Presentation* pres_;
    Bidegree bounds_;
    std::vector<Monomial> monomial_rels_;
    std::vector<const Element*> poly_rels_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Slice>> cache_;

    bool killed(const Monomial& m) const;
    SparseRow project(const Element& x, const Slice& s, Bidegree bd) const;
};

// Degree-shift (r, 1-r) derivation given by generator images; extended by
// the Leibniz rule (characteristic 2, no signs).  Generators without an
// assigned image map to zero.
class Derivation {
public:
    Derivation(const GeneratorTable& t, Bidegree shift,
               std::vector<std::pair<std::string, Element>> images);

    Bidegree shift() const { return shift_; }
    const GeneratorTable& table() const { return *table_; }
    Element apply(const Element& x) const;

private:
    const GeneratorTable* table_;
    Bidegree shift_;
    std::vector<Element> gen_images_;
};

// Homology of (PageSpace, Derivation) bidegree by bidegree, with chosen cycle
// representatives, plus class arithmetic in the resulting subquotient.
class Subquotient {
public:
    struct HomologyAt {
        int dim = 0;
        std::vector<Element> lifts;        // cycle representatives of a homology basis
        int cycle_dim = 0;
        int boundary_dim = 0;
        // rows: boundaries (no tags), then reduced lifts tagged e_i; used to
        // express a cycle as boundary + combination of lifts
        Echelon solver;
        int ncols = 0;
    };

    Subquotient(const PageSpace& page, const Derivation& d);

    const PageSpace& page() const { return *page_; }
    const Derivation& differential() const { return *d_; }

    // Requires bd and first-quadrant differential neighbours within bounds.
    const HomologyAt& at(Bidegree bd) const;
    int dim(Bidegree bd) const { return at(bd).dim; }

    bool is_cycle(const Element& x, Bidegree bd) const;
    bool is_boundary(const Element& x, Bidegree bd) const;

    // Coordinates of the homology class of the cycle x in the basis at bd;
    // throws std::domain_error if x is not a cycle.
    std::vector<Gf16> class_coords(const Element& x, Bidegree bd) const;
    SparseRow class_row(const Element& x, Bidegree bd) const;

    // Witness w at (bd.p - 1, bd.q) with [z*w] = [x], if one exists.  z must
    // be a bihomogeneous cycle of bidegree (1,0).
    std::optional<Element> divide(const Element& z, const Element& x, Bidegree bd) const;

    // d(d(x)) reduces to zero for every quotient basis element at bd.
    bool dd_vanishes(Bidegree bd) const;

private:
    const PageSpace* page_;
    const Derivation* d_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<HomologyAt>> cache_;
};

}  // namespace essq
