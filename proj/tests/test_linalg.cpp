#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace golod;

namespace {

SparseVec random_sparse(testgen::Rng& rng, int dim, int max_entries) {
    SparseVec v;
    int ne = rng.uniform(0, max_entries);
    for (int i = 0; i < ne; ++i) {
        int idx = rng.uniform(0, dim - 1);
        Rational c = rng.rational();
        if (c == 0) continue;
        bool dup = false;
        for (auto& [j, _] : v)
            if (j == idx) dup = true;
        if (!dup) v.push_back({idx, c});
    }
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return v;
}

oracle::DRow dense(const SparseVec& v, int dim) {
    oracle::DRow d(static_cast<size_t>(dim), Rational(0));
    for (auto& [i, c] : v) d[static_cast<size_t>(i)] = c;
    return d;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("sparse vector arithmetic matches dense arithmetic") {
    testgen::Rng rng(201);
    for (int i = 0; i < 200; ++i) {
        int dim = rng.uniform(1, 8);
        SparseVec a = random_sparse(rng, dim, 5), b = random_sparse(rng, dim, 5);
        Rational c = rng.rational();
        SparseVec sum = sv_axpy(a, c, b);  // a + c*b
        oracle::DRow da = dense(a, dim), db = dense(b, dim), ds = dense(sum, dim);
        for (int j = 0; j < dim; ++j)
            CHECK(ds[static_cast<size_t>(j)] ==
                  da[static_cast<size_t>(j)] + c * db[static_cast<size_t>(j)]);
        for (auto& [idx, coef] : sum) CHECK(coef != 0);  // canonical: no stored zeros
    }
}

TEST_CASE("row span rank matches dense rank") {
    testgen::Rng rng(202);
    for (int i = 0; i < 200; ++i) {
        int dim = rng.uniform(1, 7);
        int rows = rng.uniform(1, 8);
        RowSpan span;
        oracle::DMat mat;
        int prev_rank = 0;
        for (int rix = 0; rix < rows; ++rix) {
            SparseVec v = random_sparse(rng, dim, 4);
            mat.push_back(dense(v, dim));
            bool grew = span.insert(v);
            int now = oracle::dense_rank(mat);
            CHECK(grew == (now > prev_rank));
            prev_rank = now;
        }
        CHECK(span.dim() == oracle::dense_rank(mat));
    }
}

TEST_CASE("row span membership") {
    testgen::Rng rng(203);
    for (int i = 0; i < 200; ++i) {
        int dim = rng.uniform(2, 6);
        RowSpan span;
        std::vector<SparseVec> basis;
        for (int rix = 0; rix < rng.uniform(1, 4); ++rix) {
            SparseVec v = random_sparse(rng, dim, 4);
            span.insert(v);
            basis.push_back(v);
        }
        // random combination of the inserted vectors is contained
        SparseVec combo;
        for (auto& v : basis) combo = sv_axpy(combo, rng.rational(), v);
        CHECK(span.contains(combo));
    }
}

TEST_CASE("eliminator kernel combinations really annihilate") {
    testgen::Rng rng(204);
    for (int i = 0; i < 200; ++i) {
        int dim = rng.uniform(1, 6);
        Eliminator elim;
        std::vector<SparseVec> cols;
        int kernels = 0;
        for (int cix = 0; cix < rng.uniform(1, 8); ++cix) {
            SparseVec v = random_sparse(rng, dim, 4);
            cols.push_back(v);
            auto ker = elim.add_column(v);
            if (ker) {
                ++kernels;
                // sum of combo over original columns is the zero vector
                SparseVec acc;
                for (auto& [idx, coef] : *ker)
                    acc = sv_axpy(acc, coef, cols[static_cast<size_t>(idx)]);
                CHECK(sv_is_zero(acc));
                // the combination is supported on seen columns with the last one unit
                CHECK(!ker->empty());
                CHECK(ker->back().first == cix);
                CHECK(ker->back().second == 1);
            }
        }
        oracle::DMat mat;
        for (auto& v : cols) mat.push_back(dense(v, dim));
        CHECK(elim.rank() == oracle::dense_rank(mat));
        CHECK(kernels == static_cast<int>(cols.size()) - elim.rank());
        CHECK(static_cast<int>(elim.kernel().size()) == kernels);
    }
}

TEST_CASE("eliminator express reproduces targets in the span") {
    testgen::Rng rng(205);
    for (int i = 0; i < 200; ++i) {
        int dim = rng.uniform(2, 6);
        Eliminator elim;
        std::vector<SparseVec> cols;
        for (int cix = 0; cix < rng.uniform(1, 5); ++cix) {
            SparseVec v = random_sparse(rng, dim, 4);
            cols.push_back(v);
            elim.add_column(v);
        }
        SparseVec target;
        for (auto& v : cols) target = sv_axpy(target, rng.rational(), v);
        auto combo = elim.express(target);
        REQUIRE(combo.has_value());
        SparseVec acc;
        for (auto& [idx, coef] : *combo)
            acc = sv_axpy(acc, coef, cols[static_cast<size_t>(idx)]);
        SparseVec diff = sv_axpy(target, Rational(-1), acc);
        CHECK(sv_is_zero(diff));
    }
}

TEST_CASE("express rejects targets outside the span") {
    Eliminator elim;
    elim.add_column({{0, Rational(1)}});  // span = first axis
    CHECK(elim.express({{1, Rational(1)}}) == std::nullopt);
    CHECK(elim.express({{0, Rational(7)}}).has_value());
}

}  // TEST_SUITE
