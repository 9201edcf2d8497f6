#include "essq/pages.hpp"

#include <algorithm>
#include <stdexcept>

namespace essq {

namespace {

// Validate Frobenius closure of the relation set: F(r) must land back in the
// span of relation multiples at its own bidegree.
void check_frobenius_closed(const Presentation& pres) {
    if (pres.relations.empty()) return;
    Bidegree maxbd{0, 0};
    for (const auto& r : pres.relations) {
        Bidegree bd = *r.bidegree();
        maxbd.p = std::max(maxbd.p, bd.p);
        maxbd.q = std::max(maxbd.q, bd.q);
    }
    PageSpace space(pres, maxbd);
    for (const auto& r : pres.relations) {
        Element fr = r.frobenius();
        for (Gf16 c : space.coords(fr, *r.bidegree()))
            if (!c.is_zero())
                throw std::invalid_argument(
                    "Presentation: relations not Frobenius-closed, offender " + r.str());
    }
}

}  // namespace

Presentation::Presentation(const GeneratorTable& t, std::vector<Element> rels)
    : table(&t), relations(std::move(rels)) {
    for (const auto& r : relations) {
        if (r.is_zero()) throw std::invalid_argument("Presentation: zero relation");
        if (!r.table().same_table(t))
            throw std::invalid_argument("Presentation: relation over a different table");
        if (!r.bidegree())
            throw std::invalid_argument("Presentation: inhomogeneous relation " + r.str());
        if (!r.weight())
            throw std::invalid_argument("Presentation: weight-mixed relation " + r.str());
    }
    check_frobenius_closed(*this);
}

PageSpace::PageSpace(const Presentation& pres, Bidegree bounds)
    : pres_(&pres), bounds_(bounds) {
    for (const auto& r : pres.relations) {
        if (r.term_count() == 1)
            monomial_rels_.push_back(r.terms().front().first);
        else
            poly_rels_.push_back(&r);
    }
}

bool PageSpace::killed(const Monomial& m) const {
    for (const auto& rel : monomial_rels_)
        if (m.divisible_by(rel)) return true;
    return false;
}

const PageSpace::Slice& PageSpace::slice(Bidegree bd) const {
    if (!in_bounds(bd))
        throw std::domain_error("PageSpace: bidegree " + bd.str() + " outside window " +
                                bounds_.str());
    auto key = std::make_pair(bd.p, bd.q);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;

    auto s = std::make_unique<Slice>();
    const GeneratorTable& t = *pres_->table;
    for (auto& m : monomials_of_bidegree(t, bd))
        if (!killed(m)) s->alive.push_back(std::move(m));

    auto col_of = [&](const Monomial& m) -> int {
        auto pos = std::lower_bound(
            s->alive.begin(), s->alive.end(), m,
            [](const Monomial& a, const Monomial& b) { return Monomial::graded_lex_less(b, a); });
        if (pos == s->alive.end() || !(*pos == m)) return -1;
        return static_cast<int>(pos - s->alive.begin());
    };

    for (const Element* rel : poly_rels_) {
        Bidegree rb = *rel->bidegree();
        Bidegree comp = bd - rb;
        if (!comp.first_quadrant()) continue;
        for (const auto& m : monomials_of_bidegree(t, comp)) {
            if (killed(m)) continue;
            std::vector<std::pair<int, Gf16>> entries;
            for (const auto& [rm, rc] : rel->terms()) {
                Monomial prod = rm.times(m);
                if (killed(prod)) continue;
                int col = col_of(prod);
                if (col < 0) throw std::logic_error("PageSpace: product column missing");
                entries.emplace_back(col, rc);
            }
            s->ideal.add(make_row(std::move(entries)));
        }
    }

    std::vector<int> piv = s->ideal.pivots();
    size_t pi = 0;
    for (int col = 0; col < static_cast<int>(s->alive.size()); ++col) {
        if (pi < piv.size() && piv[pi] == col)
            ++pi;
        else
            s->basis_cols.push_back(col);
    }

    auto [pos, inserted] = cache_.emplace(key, std::move(s));
    return *pos->second;
}

std::vector<Element> PageSpace::basis_elements(Bidegree bd) const {
    const Slice& s = slice(bd);
    std::vector<Element> out;
    out.reserve(s.basis_cols.size());
    for (int col : s.basis_cols)
        out.push_back(Element::term(*pres_->table, s.alive[col], Gf16::one()));
    return out;
}

SparseRow PageSpace::project(const Element& x, const Slice& s, Bidegree bd) const {
    std::vector<std::pair<int, Gf16>> entries;
    for (const auto& [m, c] : x.terms()) {
        if (m.bidegree(*pres_->table) != bd)
            throw std::domain_error("PageSpace: element not homogeneous of bidegree " + bd.str());
        if (killed(m)) continue;
        auto pos = std::lower_bound(
            s.alive.begin(), s.alive.end(), m,
            [](const Monomial& a, const Monomial& b) { return Monomial::graded_lex_less(b, a); });
        if (pos == s.alive.end() || !(*pos == m))
            throw std::logic_error("PageSpace: monomial missing from slice");
        entries.emplace_back(static_cast<int>(pos - s.alive.begin()), c);
    }
    return s.ideal.reduce(make_row(std::move(entries)));
}

SparseRow PageSpace::coords_row(const Element& x, Bidegree bd) const {
    const Slice& s = slice(bd);
    SparseRow normal = project(x, s, bd);
    // re-index from alive columns to basis positions
    std::vector<std::pair<int, Gf16>> entries;
    for (const auto& [col, c] : normal.entries) {
        auto pos = std::lower_bound(s.basis_cols.begin(), s.basis_cols.end(), col);
        if (pos == s.basis_cols.end() || *pos != col)
            throw std::logic_error("PageSpace: reduced form not supported on the basis");
        entries.emplace_back(static_cast<int>(pos - s.basis_cols.begin()), c);
    }
    return make_row(std::move(entries));
}

std::vector<Gf16> PageSpace::coords(const Element& x, Bidegree bd) const {
    const Slice& s = slice(bd);
    SparseRow row = coords_row(x, bd);
    std::vector<Gf16> v(s.basis_cols.size(), Gf16::zero());
    for (const auto& [col, c] : row.entries) v[static_cast<size_t>(col)] = c;
    return v;
}

Element PageSpace::from_coords_row(const SparseRow& row, Bidegree bd) const {
    const Slice& s = slice(bd);
    ElementBuilder b(*pres_->table);
    for (const auto& [col, c] : row.entries)
        b.add(s.alive[s.basis_cols[static_cast<size_t>(col)]], c);
    return b.build();
}

Derivation::Derivation(const GeneratorTable& t, Bidegree shift,
                       std::vector<std::pair<std::string, Element>> images)
    : table_(&t), shift_(shift), gen_images_(t.size(), Element::zero(t)) {
    for (auto& [name, img] : images) {
        auto idx = t.index_of(name);
        if (!idx) throw std::invalid_argument("Derivation: unknown generator " + name);
        if (!img.is_zero()) {
            Bidegree expect = t[*idx].deg + shift;
            if (img.bidegree() != expect)
                throw std::invalid_argument("Derivation: image of " + name +
                                            " has wrong bidegree");
            if (img.weight() != std::optional<int>(t[*idx].weight))
                throw std::invalid_argument("Derivation: image of " + name + " changes weight");
        }
        gen_images_[*idx] = std::move(img);
    }
}

Element Derivation::apply(const Element& x) const {
    ElementBuilder out(*table_);
    for (const auto& [m, c] : x.terms()) {
        for (size_t i = 0; i < table_->size(); ++i) {
            if (m[i] % 2 == 0) continue;  // Leibniz coefficient vanishes in char 2
            const Element& img = gen_images_[i];
            if (img.is_zero()) continue;
            Monomial rest = m;
            rest.set(i, static_cast<uint8_t>(m[i] - 1));
            for (const auto& [im, ic] : img.terms()) out.add(im.times(rest), c * ic);
        }
    }
    return out.build();
}

Subquotient::Subquotient(const PageSpace& page, const Derivation& d) : page_(&page), d_(&d) {
    // the differential must descend to the quotient
    for (const auto& r : page.presentation().relations) {
        Element dr = d.apply(r);
        if (dr.is_zero()) continue;
        Bidegree bd = *r.bidegree() + d.shift();
        if (!bd.first_quadrant()) continue;
        for (Gf16 c : page.coords(dr, bd))
            if (!c.is_zero())
                throw std::invalid_argument(
                    "Subquotient: differential does not preserve the relation ideal at " +
                    r.str());
    }
}

const Subquotient::HomologyAt& Subquotient::at(Bidegree bd) const {
    auto key = std::make_pair(bd.p, bd.q);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;

    const Bidegree out_bd = bd + d_->shift();
    const Bidegree in_bd = bd - d_->shift();

    auto h = std::make_unique<HomologyAt>();
    std::vector<Element> basis = page_->basis_elements(bd);
    const int n = static_cast<int>(basis.size());
    h->ncols = n;

    // kernel of the outgoing map
    std::vector<SparseRow> out_rows(basis.size());
    if (out_bd.first_quadrant()) {
        for (size_t j = 0; j < basis.size(); ++j)
            out_rows[j] = page_->coords_row(d_->apply(basis[j]), out_bd);
    }
    std::vector<SparseRow> kernel = kernel_of(out_rows, out_bd.first_quadrant()
                                                            ? page_->dim(out_bd)
                                                            : 0);
    h->cycle_dim = static_cast<int>(kernel.size());

    // image of the incoming map, with the d(d(x)) = 0 safety check
    Echelon boundaries(n);
    if (in_bd.first_quadrant()) {
        for (const Element& b : page_->basis_elements(in_bd)) {
            Element db = d_->apply(b);
            Element ddb = d_->apply(db);
            if (!ddb.is_zero() && out_bd.first_quadrant()) {
                for (Gf16 c : page_->coords(ddb, out_bd))
                    if (!c.is_zero())
                        throw std::logic_error("Subquotient: d(d(x)) nonzero at " + bd.str());
            }
            boundaries.add(page_->coords_row(db, bd));
        }
    }
    h->boundary_dim = boundaries.rank();

    // homology basis: kernel vectors independent of the boundaries
    h->solver = Echelon(n);
    for (const auto& [piv, row] : boundaries.rows()) h->solver.add(row);
    Echelon indep = boundaries;
    for (const auto& k : kernel) {
        int before = indep.rank();
        indep.add(k);
        if (indep.rank() > before) {
            Element lift = Element::zero(*page_->presentation().table);
            for (const auto& [j, c] : k.entries)
                lift += basis[static_cast<size_t>(j)].scaled(c);
            h->lifts.push_back(std::move(lift));
            SparseRow tagged = k;
            tagged.entries.emplace_back(n + h->dim, Gf16::one());
            h->solver.add(std::move(tagged));
            ++h->dim;
        }
    }
    if (h->dim != h->cycle_dim - h->boundary_dim)
        throw std::logic_error("Subquotient: homology dimension bookkeeping failed at " +
                               bd.str());

    auto [pos, inserted] = cache_.emplace(key, std::move(h));
    return *pos->second;
}

bool Subquotient::is_cycle(const Element& x, Bidegree bd) const {
    Element dx = d_->apply(x);
    if (dx.is_zero()) return true;
    Bidegree out_bd = bd + d_->shift();
    if (!out_bd.first_quadrant()) return true;
    for (Gf16 c : page_->coords(dx, out_bd))
        if (!c.is_zero()) return false;
    return true;
}

bool Subquotient::is_boundary(const Element& x, Bidegree bd) const {
    auto coords = class_coords(x, bd);
    for (Gf16 c : coords)
        if (!c.is_zero()) return false;
    return true;
}

SparseRow Subquotient::class_row(const Element& x, Bidegree bd) const {
    if (!is_cycle(x, bd)) throw std::domain_error("Subquotient: element is not a cycle");
    const HomologyAt& h = at(bd);
    SparseRow v = page_->coords_row(x, bd);
    SparseRow red = h.solver.reduce(std::move(v));
    for (const auto& [col, c] : red.entries)
        if (col < h.ncols)
            throw std::logic_error("Subquotient: cycle not in boundary+basis span at " + bd.str());
    SparseRow out;
    for (const auto& [col, c] : red.entries) out.entries.emplace_back(col - h.ncols, c);
    return out;
}

std::vector<Gf16> Subquotient::class_coords(const Element& x, Bidegree bd) const {
    const HomologyAt& h = at(bd);
    SparseRow row = class_row(x, bd);
    std::vector<Gf16> v(static_cast<size_t>(h.dim), Gf16::zero());
    for (const auto& [col, c] : row.entries) v[static_cast<size_t>(col)] = c;
    return v;
}

std::optional<Element> Subquotient::divide(const Element& z, const Element& x,
                                           Bidegree bd) const {
    if (z.bidegree() != std::optional<Bidegree>(Bidegree{1, 0}))
        throw std::domain_error("Subquotient::divide: divisor must have bidegree (1,0)");
    const GeneratorTable& t = *page_->presentation().table;
    Bidegree wd{bd.p - 1, bd.q};
    if (!wd.first_quadrant()) {
        SparseRow xr = class_row(x, bd);
        if (xr.empty()) return Element::zero(t);
        return std::nullopt;
    }
    const HomologyAt& hw = at(wd);
    const int ncols = at(bd).dim;
    Echelon solver(ncols);
    for (int i = 0; i < static_cast<int>(hw.lifts.size()); ++i) {
        SparseRow row = class_row(z * hw.lifts[static_cast<size_t>(i)], bd);
        row.entries.emplace_back(ncols + i, Gf16::one());
        solver.add(std::move(row));
    }
    SparseRow target = solver.reduce(class_row(x, bd));
    for (const auto& [col, c] : target.entries)
        if (col < ncols) return std::nullopt;
    Element w = Element::zero(t);
    for (const auto& [col, c] : target.entries)
        w += hw.lifts[static_cast<size_t>(col - ncols)].scaled(c);
    return w;
}

bool Subquotient::dd_vanishes(Bidegree bd) const {
    Bidegree dd_bd = bd + d_->shift() + d_->shift();
    for (const Element& b : page_->basis_elements(bd)) {
        Element ddb = d_->apply(d_->apply(b));
        if (ddb.is_zero()) continue;
        if (!dd_bd.first_quadrant()) return false;
        for (Gf16 c : page_->coords(ddb, dd_bd))
            if (!c.is_zero()) return false;
    }
    return true;
}

}  // namespace essq
