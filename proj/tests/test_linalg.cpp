#include <doctest.h>

#include <random>

#include "essq/linalg.hpp"

using namespace essq;

namespace {
SparseRow row(std::initializer_list<std::pair<int, int>> entries) {
    std::vector<std::pair<int, Gf16>> e;
    for (auto [c, v] : entries) e.emplace_back(c, Gf16(static_cast<unsigned>(v)));
    return make_row(std::move(e));
}
}  // namespace

TEST_CASE("echelon rank and membership") {
    Echelon ech;
    ech.add(row({{0, 1}, {1, 2}}));
    ech.add(row({{1, 3}}));
    ech.add(row({{0, 1}, {1, 1}}));  // dependent on the first two
    CHECK(ech.rank() == 2);
    CHECK(ech.contains(row({{0, 5}})));
    CHECK(!ech.contains(row({{2, 1}})));
}

TEST_CASE("kernel_of finds exact kernel combinations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int nrows = 3 + static_cast<int>(rng() % 6);
        int ncols = 2 + static_cast<int>(rng() % 5);
        std::vector<SparseRow> rows;
        for (int i = 0; i < nrows; ++i) {
            std::vector<std::pair<int, Gf16>> e;
            for (int j = 0; j < ncols; ++j)
                if (rng() % 2) e.emplace_back(j, Gf16(rng() % 16));
            rows.push_back(make_row(std::move(e)));
        }
        auto kernel = kernel_of(rows, ncols);
        CHECK(static_cast<int>(kernel.size()) == nrows - rank_of(rows));
        for (const auto& k : kernel) {
            SparseRow sum;
            for (const auto& [i, c] : k.entries) sum.add_scaled(rows[static_cast<size_t>(i)], c);
            CHECK(sum.empty());
        }
    }
}

TEST_CASE("row space intersection") {
    // span{e0, e1} /\ span{e1, e2} = span{e1}
    auto meet = intersect_row_spaces({row({{0, 1}}), row({{1, 1}})},
                                     {row({{1, 1}}), row({{2, 1}})}, 3);
    REQUIRE(meet.size() == 1);
    CHECK(meet[0].entries.size() == 1);
    CHECK(meet[0].entries[0].first == 1);

    // random consistency: dim(U /\ V) = dim U + dim V - dim(U + V)
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int ncols = 4 + static_cast<int>(rng() % 4);
        auto random_rows = [&](int n) {
            std::vector<SparseRow> rows;
            for (int i = 0; i < n; ++i) {
                std::vector<std::pair<int, Gf16>> e;
                for (int j = 0; j < ncols; ++j)
                    if (rng() % 2) e.emplace_back(j, Gf16(rng() % 16));
                rows.push_back(make_row(std::move(e)));
            }
            return rows;
        };
        auto u = random_rows(3), v = random_rows(3);
        auto both = u;
        both.insert(both.end(), v.begin(), v.end());
        int expect = rank_of(u) + rank_of(v) - rank_of(both);
        auto meet2 = intersect_row_spaces(u, v, ncols);
        CHECK(static_cast<int>(meet2.size()) == expect);
        Echelon uech, vech;
        for (const auto& r : u) uech.add(r);
        for (const auto& r : v) vech.add(r);
        for (const auto& m : meet2) {
            CHECK(uech.contains(m));
            CHECK(vech.contains(m));
        }
    }
}

TEST_CASE("passive tag columns never become pivots") {
    Echelon ech(2);
    SparseRow r1 = row({{0, 1}, {5, 1}});
    ech.add(r1);
    SparseRow r2 = ech.add(row({{0, 1}, {6, 1}}));
    CHECK(ech.rank() == 1);
    CHECK(ech.active_empty(r2));
    CHECK(r2.at(5) == Gf16::one());
    CHECK(r2.at(6) == Gf16::one());
}
