#include "essq/linalg.hpp"

#include <algorithm>

namespace essq {

Gf16 SparseRow::at(int col) const {
    for (const auto& [c, v] : entries)
        if (c == col) return v;
    return Gf16::zero();
}

void SparseRow::add_scaled(const SparseRow& other, Gf16 c) {
    if (c.is_zero() || other.empty()) return;
    std::vector<std::pair<int, Gf16>> merged;
    merged.reserve(entries.size() + other.entries.size());
    size_t i = 0, j = 0;
    while (i < entries.size() || j < other.entries.size()) {
        if (j == other.entries.size() ||
            (i < entries.size() && entries[i].first < other.entries[j].first)) {
            merged.push_back(entries[i++]);
        } else if (i == entries.size() || other.entries[j].first < entries[i].first) {
            merged.emplace_back(other.entries[j].first, c * other.entries[j].second);
            ++j;
        } else {
            Gf16 v = entries[i].second + c * other.entries[j].second;
            if (!v.is_zero()) merged.emplace_back(entries[i].first, v);
            ++i;
            ++j;
        }
    }
    entries = std::move(merged);
}

void SparseRow::scale(Gf16 c) {
    if (c.is_zero()) {
        entries.clear();
        return;
    }
    for (auto& [col, v] : entries) v = v * c;
}

SparseRow make_row(std::vector<std::pair<int, Gf16>> e) {
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow r;
    for (const auto& [col, v] : e) {
        if (v.is_zero()) continue;
        if (!r.entries.empty() && r.entries.back().first == col) {
            r.entries.back().second += v;
            if (r.entries.back().second.is_zero()) r.entries.pop_back();
        } else {
            r.entries.emplace_back(col, v);
        }
    }
    return r;
}

SparseRow Echelon::reduce(SparseRow r) const {
    // Rows are kept mutually reduced, so one left-to-right sweep suffices.
    for (size_t i = 0; i < r.entries.size();) {
        auto [col, v] = r.entries[i];
        auto it = rows_.find(col);
        if (it != rows_.end() && is_active(col)) {
            r.add_scaled(it->second, v);  // leading coef of pivot rows is 1
        } else {
            ++i;
        }
    }
    return r;
}

bool Echelon::active_empty(const SparseRow& r) const {
    for (const auto& [col, v] : r.entries)
        if (is_active(col)) return false;
    return true;
}

SparseRow Echelon::passive_part(SparseRow r) const {
    std::erase_if(r.entries, [&](const auto& e) { return is_active(e.first); });
    return r;
}

SparseRow Echelon::add(SparseRow r) {
    r = reduce(std::move(r));
    int pivot = -1;
    Gf16 lead;
    for (const auto& [col, v] : r.entries) {
        if (is_active(col)) {
            pivot = col;
            lead = v;
            break;
        }
    }
    if (pivot < 0) return r;
    SparseRow stored = r;
    stored.scale(lead.inverse());
    for (auto& [pc, row] : rows_) {
        Gf16 c = row.at(pivot);
        if (!c.is_zero()) row.add_scaled(stored, c);
    }
    rows_.emplace(pivot, std::move(stored));
    return r;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& [col, row] : rows_) p.push_back(col);
    return p;
}

std::vector<SparseRow> kernel_of(const std::vector<SparseRow>& rows, int ncols) {
    Echelon ech(ncols);
    std::vector<SparseRow> kernel;
    for (size_t i = 0; i < rows.size(); ++i) {
        SparseRow aug = rows[i];
        aug.entries.emplace_back(ncols + static_cast<int>(i), Gf16::one());
        aug = ech.add(std::move(aug));
        if (ech.active_empty(aug)) {
            SparseRow k;
            for (const auto& [col, v] : aug.entries)
                if (col >= ncols) k.entries.emplace_back(col - ncols, v);
            kernel.push_back(std::move(k));
        }
    }
    return kernel;
}

int rank_of(const std::vector<SparseRow>& rows) {
    Echelon ech;
    for (const auto& r : rows) ech.add(r);
    return ech.rank();
}

std::vector<SparseRow> intersect_row_spaces(const std::vector<SparseRow>& u,
                                            const std::vector<SparseRow>& v, int ncols) {
    // Zassenhaus: eliminate [u | u] and [v | 0] on the left block; rows whose
    // left block dies have right block in span(u) /\ span(v).
    Echelon ech(ncols);
    std::vector<SparseRow> meet;
    auto shift = [&](const SparseRow& r) {
        SparseRow s;
        for (const auto& [col, val] : r.entries) s.entries.emplace_back(col + ncols, val);
        return s;
    };
    for (const auto& r : u) {
        SparseRow aug = r;
        SparseRow tail = shift(r);
        aug.entries.insert(aug.entries.end(), tail.entries.begin(), tail.entries.end());
        aug = ech.add(std::move(aug));
        if (ech.active_empty(aug) && !aug.empty()) {
            SparseRow k;
            for (const auto& [col, val] : aug.entries) k.entries.emplace_back(col - ncols, val);
            meet.push_back(std::move(k));
        }
    }
    for (const auto& r : v) {
        SparseRow aug = ech.add(r);
        if (ech.active_empty(aug) && !aug.empty()) {
            SparseRow k;
            for (const auto& [col, val] : aug.entries) k.entries.emplace_back(col - ncols, val);
            meet.push_back(std::move(k));
        }
    }
    // The collected rows span the intersection; reduce to a basis.
    Echelon basis;
    std::vector<SparseRow> out;
    for (auto& m : meet) {
        SparseRow red = basis.add(std::move(m));
        if (!red.empty()) out.push_back(std::move(red));
    }
    return out;
}

}  // namespace essq
