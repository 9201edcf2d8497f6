#pragma once

#include <map>
#include <utility>
#include <vector>

#include "essq/gf16.hpp"

namespace essq {

// A sparse row vector over GF(16): (column, coefficient) pairs sorted by
// column, no zero coefficients stored.
struct SparseRow {
    std::vector<std::pair<int, Gf16>> entries;

    bool empty() const { return entries.empty(); }
    int lead() const { return entries.front().first; }
    Gf16 lead_coef() const { return entries.front().second; }
    Gf16 at(int col) const;

    void add_scaled(const SparseRow& other, Gf16 c);  // *this += c * other
    void scale(Gf16 c);

    friend bool operator==(const SparseRow& a, const SparseRow& b) = default;
};

SparseRow make_row(std::vector<std::pair<int, Gf16>> entries);  // sorts, merges

// Row space in reduced echelon form.  Pivots are chosen among the "active"
// columns [0, active_cols); columns >= active_cols are passive bookkeeping
// tags that never become pivots but are carried through every row operation.
// With active_cols = -1 every column is active.
class Echelon {
public:
    explicit Echelon(int active_cols = -1) : active_cols_(active_cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // Fully reduces r against the current rows (active and passive parts).
    SparseRow reduce(SparseRow r) const;

    // Reduce, and if an active entry survives, normalize and insert with
    // back-substitution.  Returns the reduced row; the caller can inspect
    // whether its active part vanished.
    SparseRow add(SparseRow r);

    bool active_empty(const SparseRow& r) const;
    SparseRow passive_part(SparseRow r) const;

    bool contains(SparseRow r) const { return active_empty(reduce(std::move(r))); }

    const std::map<int, SparseRow>& rows() const { return rows_; }
    std::vector<int> pivots() const;

private:
    bool is_active(int col) const { return active_cols_ < 0 || col < active_cols_; }
    int active_cols_;
    std::map<int, SparseRow> rows_;  // pivot column -> row
};

// Kernel of the matrix whose i-th row is rows[i], expressed over the input
// index set: returns vectors k with sum_i k[i] * rows[i] = 0.  Deterministic:
// rows are processed in order and kernel vectors come out in that order.
std::vector<SparseRow> kernel_of(const std::vector<SparseRow>& rows, int ncols);

// Rank of a list of rows.
int rank_of(const std::vector<SparseRow>& rows);

// Intersection of the row spaces spanned by u and v (both over columns
// [0, ncols)).  Returns a basis of the intersection.
std::vector<SparseRow> intersect_row_spaces(const std::vector<SparseRow>& u,
                                            const std::vector<SparseRow>& v, int ncols);

}  // namespace essq
