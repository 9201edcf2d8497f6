#include "essq/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace essq {

namespace {

int mod15(long x) {
    long m = x % 15;
    if (m < 0) m += 15;
    return static_cast<int>(m);
}

// "a4" -> 4, "b13" -> 13, "u5_4" -> (5, power 4)
struct ParsedName {
    int subscript = -1;
    int power = 1;
};

std::optional<ParsedName> parse_subscript(std::string_view name) {
    size_t i = 0;
    while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
    if (i == 0 || i == name.size()) return std::nullopt;
    size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i) return std::nullopt;
    ParsedName out;
    out.subscript = std::stoi(std::string(name.substr(i, j - i)));
    if (j == name.size()) return out;
    if (name[j] != '_' || j + 1 == name.size()) return std::nullopt;
    out.power = std::stoi(std::string(name.substr(j + 1)));
    return out;
}

}  // namespace

GeneratorTable::GeneratorTable(std::vector<GeneratorInfo> gens) : gens_(std::move(gens)) {
    const size_t n = gens_.size();
    std::vector<int> seen(n, 0);
    for (size_t i = 0; i < n; ++i) {
        const auto& g = gens_[i];
        if (g.frob_next >= static_cast<int>(n) || g.frob_next < 0)
            throw std::invalid_argument("GeneratorTable: frob_next out of range for " + g.name);
        seen[g.frob_next]++;
        const auto& h = gens_[g.frob_next];
        if (h.deg != g.deg)
            throw std::invalid_argument("GeneratorTable: Frobenius changes bidegree of " + g.name);
        if (h.weight != mod15(2 * g.weight))
            throw std::invalid_argument("GeneratorTable: Frobenius image weight of " + g.name +
                                        " is not doubled");
        if (auto p = parse_subscript(g.name)) {
            if (mod15(p->subscript * p->power) != mod15(g.weight))
                throw std::invalid_argument("GeneratorTable: name/weight mismatch for " + g.name);
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (seen[i] != 1)
            throw std::invalid_argument("GeneratorTable: frob_next is not a permutation");
    for (size_t i = 0; i < n; ++i) {
        size_t j = i;
        int len = 0;
        do {
            j = static_cast<size_t>(gens_[j].frob_next);
            ++len;
        } while (j != i && len <= static_cast<int>(n));
        if (len != 1 && len != 2 && len != 4)
            throw std::invalid_argument("GeneratorTable: Frobenius orbit length " +
                                        std::to_string(len) + " does not divide 4");
    }
}

std::optional<size_t> GeneratorTable::index_of(std::string_view name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

int Monomial::total_exponent() const {
    int s = 0;
    for (uint8_t e : e_) s += e;
    return s;
}

Bidegree Monomial::bidegree(const GeneratorTable& t) const {
    Bidegree bd;
    for (size_t i = 0; i < e_.size(); ++i) {
        bd.p += e_[i] * t[i].deg.p;
        bd.q += e_[i] * t[i].deg.q;
    }
    return bd;
}

int Monomial::weight(const GeneratorTable& t) const {
    long w = 0;
    for (size_t i = 0; i < e_.size(); ++i) w += static_cast<long>(e_[i]) * t[i].weight;
    return mod15(w);
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
        int v = r.e_[i] + other.e_[i];
        if (v > 255) throw std::overflow_error("Monomial: exponent overflow");
        r.e_[i] = static_cast<uint8_t>(v);
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] < other.e_[i]) return false;
    return true;
}

Monomial Monomial::frobenius(const GeneratorTable& t) const {
    Monomial r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r.e_[t[i].frob_next] = e_[i];
    return r;
}

std::string Monomial::str(const GeneratorTable& t) const {
    std::string s;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += t[i].name;
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

bool Monomial::graded_lex_less(const Monomial& a, const Monomial& b) {
    int ta = a.total_exponent(), tb = b.total_exponent();
    if (ta != tb) return ta < tb;
    return a.e_ < b.e_;  // lexicographic on the exponent vector
}

Element Element::term(const GeneratorTable& t, Monomial m, Gf16 c) {
    Element e(t);
    if (!c.is_zero()) e.terms_.emplace_back(std::move(m), c);
    return e;
}

Element Element::generator(const GeneratorTable& t, std::string_view name, int power) {
    auto idx = t.index_of(name);
    if (!idx) throw std::invalid_argument("Element: unknown generator '" + std::string(name) + "'");
    Monomial m(t.size());
    m.set(*idx, static_cast<uint8_t>(power));
    return term(t, std::move(m), Gf16::one());
}

void Element::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) {
        return Monomial::graded_lex_less(y.first, x.first);  // decreasing
    });
    std::vector<std::pair<Monomial, Gf16>> out;
    for (auto& [m, c] : terms_) {
        if (!out.empty() && out.back().first == m)
            out.back().second += c;
        else
            out.emplace_back(std::move(m), c);
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Element ElementBuilder::build() {
    Element e(*table_);
    e.terms_ = std::move(terms_);
    e.normalize();
    return e;
}

Element operator+(const Element& x, const Element& y) {
    if (!x.table_->same_table(*y.table_)) throw std::domain_error("Element: mixed generator tables");
    ElementBuilder b(*x.table_);
    for (const auto& [m, c] : x.terms_) b.add(m, c);
    for (const auto& [m, c] : y.terms_) b.add(m, c);
    return b.build();
}

Element operator*(const Element& x, const Element& y) {
    if (!x.table_->same_table(*y.table_)) throw std::domain_error("Element: mixed generator tables");
    ElementBuilder b(*x.table_);
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) b.add(mx.times(my), cx * cy);
    return b.build();
}

Element Element::scaled(Gf16 c) const {
    Element r(*table_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v = v * c;
    return r;
}

bool operator==(const Element& x, const Element& y) {
    return x.table_->same_table(*y.table_) && x.terms_ == y.terms_;
}

Element Element::frobenius() const {
    ElementBuilder b(*table_);
    for (const auto& [m, c] : terms_) b.add(m.frobenius(*table_), c * c);
    return b.build();
}

Element Element::norm() const {
    Element acc = *this;
    Element fx = *this;
    for (int i = 0; i < 3; ++i) {
        fx = fx.frobenius();
        acc += fx;
    }
    return acc;
}

std::optional<Bidegree> Element::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    Bidegree bd = terms_.front().first.bidegree(*table_);
    for (const auto& [m, c] : terms_)
        if (m.bidegree(*table_) != bd) return std::nullopt;
    return bd;
}

std::optional<int> Element::weight() const {
    if (terms_.empty()) return std::nullopt;
    int w = terms_.front().first.weight(*table_);
    for (const auto& [m, c] : terms_)
        if (m.weight(*table_) != w) return std::nullopt;
    return w;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        bool unit_mono = m.total_exponent() == 0;
        if (c == Gf16::one() && !unit_mono) {
            s += m.str(*table_);
        } else if (unit_mono) {
            s += c.sym();
        } else {
            s += c.sym() + "*" + m.str(*table_);
        }
    }
    return s;
}

namespace {

struct Tokenizer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos == text.size();
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Element::parse: expected integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
};

}  // namespace

Element Element::parse(const GeneratorTable& t, std::string_view text) {
    Tokenizer tk{text};
    Element out = Element::zero(t);
    bool first_term = true;
    while (!tk.done()) {
        if (!first_term && !tk.eat('+'))
            throw std::invalid_argument("Element::parse: expected '+' in '" + std::string(text) + "'");
        first_term = false;
        Gf16 coef = Gf16::one();
        Monomial mono(t.size());
        bool first_factor = true;
        for (;;) {
            if (!first_factor && !tk.eat('*')) break;
            first_factor = false;
            std::string id = tk.ident();
            if (id.empty())
                throw std::invalid_argument("Element::parse: expected factor in '" +
                                            std::string(text) + "'");
            int power = 1;
            bool has_power = tk.eat('^');
            if (has_power) power = tk.integer();
            if (auto idx = t.index_of(id)) {
                Monomial m(t.size());
                m.set(*idx, static_cast<uint8_t>(power));
                mono = mono.times(m);
            } else if (id == "z") {
                coef *= Gf16::zeta_pow(power);
            } else if (id.size() == 1 && !has_power) {
                coef *= Gf16::parse(id);
            } else {
                throw std::invalid_argument("Element::parse: unknown symbol '" + id + "'");
            }
        }
        out += Element::term(t, std::move(mono), coef);
    }
    return out;
}

std::vector<Monomial> monomials_of_bidegree(const GeneratorTable& t, Bidegree bd) {
    std::vector<Monomial> out;
    if (!bd.first_quadrant()) return out;
    Monomial current(t.size());
    // depth-first over generators; all generator bidegrees are nonzero and
    // first-quadrant, so remaining degree bounds the exponent directly
    auto rec = [&](auto&& self, size_t i, Bidegree rest) -> void {
        if (i == t.size()) {
            if (rest == Bidegree{0, 0}) out.push_back(current);
            return;
        }
        const Bidegree g = t[i].deg;
        int max_e = 255;
        if (g.p > 0) max_e = std::min(max_e, rest.p / g.p);
        if (g.q > 0) max_e = std::min(max_e, rest.q / g.q);
        for (int e = 0; e <= max_e; ++e) {
            Bidegree r{rest.p - e * g.p, rest.q - e * g.q};
            if (r.first_quadrant()) {
                current.set(i, static_cast<uint8_t>(e));
                self(self, i + 1, r);
            }
        }
        current.set(i, 0);
    };
    rec(rec, 0, bd);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::graded_lex_less(b, a); });
    return out;
}

}  // namespace essq
