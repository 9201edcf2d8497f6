#include "essq/sseq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace essq {

namespace {

Element epow(const Element& x, int n) {
    Element r = Element::term(x.table(), Monomial::one(x.table()), Gf16::one());
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// ring homomorphism determined by generator images
Element substitute(const Element& x, const GeneratorTable& src, const std::vector<Element>& images,
                   const GeneratorTable& dst) {
    Element out = Element::zero(dst);
    for (const auto& [m, c] : x.terms()) {
        Element t = Element::term(dst, Monomial::one(dst), c);
        for (size_t i = 0; i < src.size(); ++i)
            if (m[i] > 0) t *= epow(images[i], m[i]);
        out += t;
    }
    return out;
}

std::vector<Element> parse_images(const GeneratorTable& src, const GeneratorTable& dst,
                                  const std::vector<std::string>& exprs) {
    std::vector<Element> out;
    out.reserve(src.size());
    for (const auto& e : exprs) out.push_back(Element::parse(dst, e));
    return out;
}

}  // namespace

SpectralSequence::SpectralSequence(Window w) : w_(w) {
    if (!w_.valid())
        throw std::invalid_argument("window too small: the full suite needs pmax >= " +
                                    std::to_string(Window::kMinP) + " and qmax >= " +
                                    std::to_string(Window::kMinQ) +
                                    " (the verification reaches E5^{*,10})");

    e2t_ = std::make_unique<GeneratorTable>(std::vector<GeneratorInfo>{
        {"a1", {1, 0}, 1, 1},
        {"a2", {1, 0}, 2, 2},
        {"a4", {1, 0}, 4, 3},
        {"a8", {1, 0}, 8, 0},
        {"u5", {0, 1}, 5, 5},
        {"u10", {0, 1}, 10, 4},
    });
    e3t_ = std::make_unique<GeneratorTable>(std::vector<GeneratorInfo>{
        {"a1", {1, 0}, 1, 1},
        {"a2", {1, 0}, 2, 2},
        {"a4", {1, 0}, 4, 3},
        {"a8", {1, 0}, 8, 0},
        {"u5_2", {0, 2}, 10, 5},
        {"u10_2", {0, 2}, 5, 4},
    });
    e4t_ = std::make_unique<GeneratorTable>(std::vector<GeneratorInfo>{
        {"a1", {1, 0}, 1, 1},
        {"a2", {1, 0}, 2, 2},
        {"a4", {1, 0}, 4, 3},
        {"a8", {1, 0}, 8, 0},
        {"b7", {2, 2}, 7, 5},
        {"b14", {2, 2}, 14, 6},
        {"b13", {2, 2}, 13, 7},
        {"b11", {2, 2}, 11, 4},
        {"u5_4", {0, 4}, 5, 9},
        {"u10_4", {0, 4}, 10, 8},
    });

    e2p_ = std::make_unique<Presentation>(*e2t_, std::vector<Element>{});

    auto rel3 = [&](const char* s) { return Element::parse(*e3t_, s); };
    e3p_ = std::make_unique<Presentation>(
        *e3t_, std::vector<Element>{rel3("a1*a4"), rel3("a2*a8")});

    auto rel4 = [&](const char* s) { return Element::parse(*e4t_, s); };
    std::vector<Element> e4rels = {
        rel4("a1*a4"), rel4("a2*a8"),
        rel4("a8*a1^2 + a2*a4^2"), rel4("a4*a8^2 + a1*a2^2"),
        rel4("a1*b7"), rel4("a2*b7"), rel4("a2*b14"), rel4("a4*b14"),
        rel4("a4*b13"), rel4("a8*b13"), rel4("a8*b11"), rel4("a1*b11"),
        rel4("a1*b14 + a2*b13 + a4*b11 + a8*b7"),
        rel4("b7^2"), rel4("b14^2"), rel4("b13^2"), rel4("b11^2"),
        rel4("b7*b14"), rel4("b7*b13"), rel4("b7*b11"),
        rel4("b14*b13"), rel4("b14*b11"), rel4("b13*b11"),
    };
    e4p_ = std::make_unique<Presentation>(*e4t_, std::move(e4rels));

    d2_ = std::make_unique<Derivation>(
        *e2t_, Bidegree{2, -1},
        std::vector<std::pair<std::string, Element>>{
            {"u5", Element::parse(*e2t_, "a1*a4")},
            {"u10", Element::parse(*e2t_, "a2*a8")},
        });
    d3_ = std::make_unique<Derivation>(
        *e3t_, Bidegree{3, -2},
        std::vector<std::pair<std::string, Element>>{
            {"u5_2", Element::parse(*e3t_, "a1^2*a8 + a2*a4^2")},
            {"u10_2", Element::parse(*e3t_, "a1*a2^2 + a4*a8^2")},
        });
    d5_ = std::make_unique<Derivation>(
        *e4t_, Bidegree{5, -4},
        std::vector<std::pair<std::string, Element>>{
            {"u5_4", Element::parse(*e4t_, "a1^5 + a4^5")},
            {"u10_4", Element::parse(*e4t_, "a2^5 + a8^5")},
        });

    // internal bounds leave room for differential neighbours, parameter
    // shifts and the d.d = 0 sweep
    e2s_ = std::make_unique<PageSpace>(*e2p_, Bidegree{w_.pmax + 4, w_.qmax + 2});
    e3s_ = std::make_unique<PageSpace>(*e3p_, Bidegree{w_.pmax + 6, w_.qmax + 4});
    e4s_ = std::make_unique<PageSpace>(*e4p_, Bidegree{w_.pmax + 10, w_.qmax + 8});

    h3_ = std::make_unique<Subquotient>(*e3s_, *d3_);
    einf_ = std::make_unique<Subquotient>(*e4s_, *d5_);

    e3_images_ = parse_images(*e3t_, *e2t_,
                              {"a1", "a2", "a4", "a8", "u5^2", "u10^2"});
    e4_images_ = parse_images(*e4t_, *e3t_,
                              {"a1", "a2", "a4", "a8", "a4*a8*u5_2", "a8*a1*u10_2",
                               "a1*a2*u5_2", "a2*a4*u10_2", "u5_2^2", "u10_2^2"});

    auto sym = [&](const char* name, const char* expr) {
        einf_symbols_.emplace(name, Element::parse(*e4t_, expr));
    };
    sym("d3", "a4^2*u10_4");
    sym("d6", "a8^2*u5_4");
    sym("d12", "a1^2*u10_4");
    sym("d9", "a2^2*u5_4");
    sym("d7", "a4*a8*u10_4");
    sym("d14", "a8*a1*u5_4");
    sym("d13", "a1*a2*u10_4");
    sym("d11", "a2*a4*u5_4");
    sym("t3", "a2*b11*u5_4");
    sym("t6", "a4*b7*u10_4");
    sym("t12", "a8*b14*u5_4");
    sym("t9", "a1*b13*u10_4");
    sym("t5", "a8*b7*u5_4 + a4*b11*u5_4");
    sym("t10", "a2*b13*u10_4 + a4*b11*u10_4");
    sym("x5", "a1*a2^2*u5_4*u10_4");
    sym("x10", "a2*a4^2*u5_4*u10_4");
    sym("u5_8", "u5_4^2");
    sym("u10_8", "u10_4^2");
    sym("xi", "a2^5*a4*b11*u5_4");
}

Element SpectralSequence::e3_to_e2(const Element& x) const {
    return substitute(x, *e3t_, e3_images_, *e2t_);
}

Element SpectralSequence::e4_to_e3(const Element& x) const {
    return substitute(x, *e4t_, e4_images_, *e3t_);
}

Element SpectralSequence::xi_rep() const { return einf_symbols_.at("xi"); }

namespace {

struct Tok {
    std::string_view text;
    size_t pos = 0;
    void ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        ws();
        return pos == text.size();
    }
    std::string ident() {
        ws();
        size_t s = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(s, pos - s));
    }
    int integer() {
        ws();
        size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (s == pos) throw std::invalid_argument("expected integer");
        return std::stoi(std::string(text.substr(s, pos - s)));
    }
};

}  // namespace

Element SpectralSequence::einf_rep(std::string_view expr) const {
    Tok tk{expr};
    Element out = Element::zero(*e4t_);
    bool first_term = true;
    while (!tk.done()) {
        if (!first_term && !tk.eat('+'))
            throw std::invalid_argument("einf_rep: expected '+' in '" + std::string(expr) + "'");
        first_term = false;
        Element term = Element::term(*e4t_, Monomial::one(*e4t_), Gf16::one());
        bool first_factor = true;
        for (;;) {
            if (!first_factor && !tk.eat('*')) break;
            first_factor = false;
            std::string id = tk.ident();
            if (id.empty()) throw std::invalid_argument("einf_rep: expected factor");
            int power = 1;
            bool has_power = tk.eat('^');
            if (has_power) power = tk.integer();
            if (auto idx = e4t_->index_of(id)) {
                term *= epow(Element::generator(*e4t_, id), power);
            } else if (auto it = einf_symbols_.find(id); it != einf_symbols_.end()) {
                term *= epow(it->second, power);
            } else if (id == "z") {
                term = term.scaled(Gf16::zeta_pow(power));
            } else if (id.size() == 1 && !has_power) {
                term = term.scaled(Gf16::parse(id));
            } else {
                throw std::invalid_argument("einf_rep: unknown symbol '" + id + "'");
            }
        }
        out += term;
    }
    return out;
}

const SpectralSequence::QuotientAt& SpectralSequence::quotient_at(Bidegree bd) const {
    auto key = std::make_pair(bd.p, bd.q);
    auto it = qcache_.find(key);
    if (it != qcache_.end()) return *it->second;

    auto qa = std::make_unique<QuotientAt>();
    const auto& h = einf_->at(bd);
    qa->ncols = h.dim;
    qa->param_span = Echelon(h.dim);
    Bidegree below{bd.p, bd.q - 8};
    if (below.first_quadrant()) {
        Element u58 = einf_symbols_.at("u5_8");
        Element u108 = einf_symbols_.at("u10_8");
        for (const Element& hb : einf_->at(below).lifts) {
            qa->param_span.add(einf_->class_row(u58 * hb, bd));
            qa->param_span.add(einf_->class_row(u108 * hb, bd));
        }
    }
    qa->solver = Echelon(h.dim);
    for (const auto& [piv, row] : qa->param_span.rows()) qa->solver.add(row);
    for (int i = 0; i < h.dim; ++i) {
        SparseRow unit;
        unit.entries.emplace_back(i, Gf16::one());
        int before = qa->solver.rank();
        SparseRow red = unit;
        red.entries.emplace_back(h.dim + qa->dim, Gf16::one());
        qa->solver.add(red);
        if (qa->solver.rank() > before) {
            qa->lifts.push_back(h.lifts[static_cast<size_t>(i)]);
            ++qa->dim;
        }
    }

    auto [pos, inserted] = qcache_.emplace(key, std::move(qa));
    return *pos->second;
}

int SpectralSequence::quotient_dim(Bidegree bd) const { return quotient_at(bd).dim; }

const std::vector<Element>& SpectralSequence::quotient_basis(Bidegree bd) const {
    return quotient_at(bd).lifts;
}

SparseRow SpectralSequence::quotient_coords(const Element& cycle, Bidegree bd) const {
    const QuotientAt& qa = quotient_at(bd);
    SparseRow v = einf_->class_row(cycle, bd);
    SparseRow red = qa.solver.reduce(std::move(v));
    SparseRow out;
    for (const auto& [col, c] : red.entries) {
        if (col < qa.ncols)
            throw std::logic_error("quotient_coords: residue outside complement basis");
        out.entries.emplace_back(col - qa.ncols, c);
    }
    return out;
}

int SpectralSequence::figure1(int p, int q) {
    if (p < 0 || p > 8 || q < 0 || q > 8) return 0;
    static constexpr int kFig[9][9] = {
        // p =  0  1  2   3  4  5  6  7  8
        /*q=0*/ {1, 4, 8, 10, 8, 6, 0, 0, 0},
        /*q=1*/ {0, 0, 0, 0, 0, 0, 0, 0, 0},
        /*q=2*/ {0, 0, 4, 7, 8, 8, 8, 0, 0},
        /*q=3*/ {0, 0, 0, 0, 0, 0, 0, 0, 0},
        /*q=4*/ {0, 0, 8, 12, 8, 7, 4, 0, 0},
        /*q=5*/ {0, 0, 0, 0, 0, 0, 0, 0, 0},
        /*q=6*/ {0, 0, 0, 6, 8, 8, 8, 4, 1},
        /*q=7*/ {0, 0, 0, 0, 0, 0, 0, 0, 0},
        /*q=8*/ {0, 0, 0, 2, 0, 0, 0, 0, 0},
    };
    return kFig[q][p];
}

std::vector<std::string> SpectralSequence::claimed_einf_basis(int p, int q) {
    static const std::map<std::pair<int, int>, std::vector<std::string>> kBasis = {
        {{0, 0}, {"1"}},
        {{1, 0}, {"a1", "a2", "a4", "a8"}},
        {{2, 0}, {"a1^2", "a2^2", "a4^2", "a8^2", "a1*a2", "a2*a4", "a4*a8", "a8*a1"}},
        {{3, 0}, {"a1^3", "a2^3", "a4^3", "a8^3", "a1^2*a2", "a2^2*a4", "a4^2*a8", "a8^2*a1",
                  "a1*a2^2", "a2*a4^2"}},
        {{4, 0}, {"a1^4", "a2^4", "a4^4", "a8^4", "a1^3*a2", "a2^3*a4", "a4^3*a8", "a8^3*a1"}},
        {{5, 0}, {"a1^4*a2", "a2^4*a4", "a4^4*a8", "a8^4*a1", "a1^5", "a2^5"}},
        {{2, 2}, {"b7", "b14", "b13", "b11"}},
        {{3, 2}, {"a4*b7", "a8*b14", "a1*b13", "a2*b11", "a8*b7", "a2*b13", "a4*b11"}},
        {{4, 2}, {"a4^2*b7", "a8^2*b14", "a1^2*b13", "a2^2*b11", "a4*a8*b7", "a8*a1*b14",
                  "a1*a2*b13", "a2*a4*b11"}},
        {{5, 2}, {"a4^3*b7", "a8^3*b14", "a1^3*b13", "a2^3*b11", "a4^2*a8*b7", "a8^2*a1*b14",
                  "a1^2*a2*b13", "a2^2*a4*b11"}},
        {{6, 2}, {"a4^4*b7", "a8^4*b14", "a1^4*b13", "a2^4*b11", "a4^3*a8*b7", "a8^3*a1*b14",
                  "a1^3*a2*b13", "a2^3*a4*b11"}},
        {{2, 4}, {"d7", "d14", "d13", "d11", "d3", "d6", "d12", "d9"}},
        {{3, 4}, {"a4*d7", "a8*d14", "a1*d13", "a2*d11", "a4*d3", "a8*d6", "a1*d12", "a2*d9",
                  "a2*d3", "a4*d6", "a8*d7", "a1*d14"}},
        {{4, 4}, {"a4^2*d7", "a8^2*d14", "a1^2*d13", "a2^2*d11", "a4^2*d3", "a8^2*d6",
                  "a1^2*d12", "a2^2*d9"}},
        {{5, 4}, {"a4^3*d7", "a8^3*d14", "a1^3*d13", "a2^3*d11", "a4^3*d3", "a8^3*d6",
                  "a2^3*d9"}},
        {{6, 4}, {"a4^4*d7", "a8^4*d14", "a1^4*d13", "a2^4*d11"}},
        {{3, 6}, {"t3", "t6", "t12", "t9", "t5", "t10"}},
        {{4, 6}, {"a2*t3", "a4*t6", "a8*t12", "a1*t9", "a4*t3", "a8*t6", "a1*t12", "a2*t9"}},
        {{5, 6}, {"a2^2*t3", "a4^2*t6", "a8^2*t12", "a1^2*t9", "a2*a4*t3", "a4*a8*t6",
                  "a8*a1*t12", "a1*a2*t9"}},
        {{6, 6}, {"a2^3*t3", "a4^3*t6", "a8^3*t12", "a1^3*t9", "a2^2*a4*t3", "a4^2*a8*t6",
                  "a8^2*a1*t12", "a1^2*a2*t9"}},
        {{7, 6}, {"a2^3*a4*t3", "a4^3*a8*t6", "a8^3*a1*t12", "a1^3*a2*t9"}},
        {{8, 6}, {"xi"}},
        {{3, 8}, {"x5", "x10"}},
    };
    auto it = kBasis.find({p, q});
    if (it == kBasis.end()) return {};
    return it->second;
}

std::vector<std::string> SpectralSequence::claimed_e4_basis(Bidegree bd) const {
    // E4 = E4^{0*} (x) (E4^{*0} (+) E4^{*2}); the a-part bases follow the two
    // published families, unbounded in p.
    auto star0 = [&](int p) -> std::vector<std::string> {
        if (p == 0) return {"1"};
        std::vector<std::string> v;
        const char* pure[] = {"a1", "a2", "a4", "a8"};
        const char* next[] = {"a2", "a4", "a8", "a1"};
        for (int i = 0; i < 4; ++i)
            v.push_back(std::string(pure[i]) + (p > 1 ? "^" + std::to_string(p) : ""));
        if (p >= 2)
            for (int i = 0; i < 4; ++i)
                v.push_back(std::string(pure[i]) +
                            (p - 1 > 1 ? "^" + std::to_string(p - 1) : "") + "*" + next[i]);
        if (p == 3) {
            v.push_back("a1*a2^2");
            v.push_back("a2*a4^2");
        }
        return v;
    };
    auto star2 = [&](int p) -> std::vector<std::string> {
        // a-degree k = p - 2
        int k = p - 2;
        if (k < 0) return {};
        std::vector<std::string> v;
        const char* host[] = {"a4", "a8", "a1", "a2"};   // b7, b14, b13, b11 partners
        const char* other[] = {"a8", "a1", "a2", "a4"};
        const char* beta[] = {"b7", "b14", "b13", "b11"};
        for (int i = 0; i < 4; ++i) {
            std::string s;
            if (k > 0) s = std::string(host[i]) + (k > 1 ? "^" + std::to_string(k) : "") + "*";
            v.push_back(s + beta[i]);
        }
        if (k >= 2)
            for (int i = 0; i < 4; ++i)
                v.push_back(std::string(host[i]) +
                            (k - 1 > 1 ? "^" + std::to_string(k - 1) : "") + "*" + other[i] +
                            "*" + beta[i]);
        if (k == 1) {
            v.push_back("a8*b7");
            v.push_back("a2*b13");
            v.push_back("a4*b11");
        }
        return v;
    };

    std::vector<std::string> out;
    auto with_params = [&](const std::vector<std::string>& part, int udeg) {
        for (int i = 0; i <= udeg; ++i) {
            std::string upart;
            if (i > 0) upart += "*u5_4" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (udeg - i > 0)
                upart += "*u10_4" + (udeg - i > 1 ? "^" + std::to_string(udeg - i) : std::string());
            for (const auto& b : part) {
                if (b == "1" && !upart.empty())
                    out.push_back(upart.substr(1));
                else
                    out.push_back(b + upart);
            }
        }
    };
    if (bd.q % 4 == 0) with_params(star0(bd.p), bd.q / 4);
    if (bd.q % 4 == 2 && bd.q >= 2) with_params(star2(bd.p), (bd.q - 2) / 4);
    return out;
}

}  // namespace essq
