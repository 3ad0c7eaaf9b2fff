#include "barq/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace barq;

TEST_CASE("rank of pinned matrices") {
    SpMat id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.add(i, i, Rat(1));
    CHECK(rank(id3) == 3);

    SpMat zero(4, 2);
    CHECK(rank(zero) == 0);

    // [[1,2],[2,4]] has rank 1 (second row is twice the first)
    SpMat m(2, 2);
    m.add(0, 0, Rat(1));
    m.add(0, 1, Rat(2));
    m.add(1, 0, Rat(2));
    m.add(1, 1, Rat(4));
    CHECK(rank(m) == 1);

    // rational entries
    SpMat q(2, 2);
    q.add(0, 0, rat(1, 2));
    q.add(0, 1, rat(1, 3));
    q.add(1, 0, rat(3, 2));
    q.add(1, 1, Rat(1));
    CHECK(rank(q) == 1);
    q.add(1, 1, rat(1, 7));
    CHECK(rank(q) == 2);
}

TEST_CASE("rank agrees with the dense oracle on random sparse matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 14), coef(-3, 3);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        SpMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (density(rng) < 0.3) m.add(i, j, Rat(coef(rng)));
        CHECK(rank(m) == rank_dense_oracle(m));
    }
}

TEST_CASE("rank of a composite is at most the min of the ranks") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 10), coef(-2, 2);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        int a = dim(rng), b = dim(rng), c = dim(rng);
        SpMat f(a, b), g(b, c);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (density(rng) < 0.4) f.add(i, j, Rat(coef(rng)));
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < c; ++j)
                if (density(rng) < 0.4) g.add(i, j, Rat(coef(rng)));
        long rf = rank(f), rg = rank(g), rfg = rank(f.compose(g));
        CHECK(rfg <= std::min(rf, rg));
    }
}

TEST_CASE("homology of pinned complexes") {
    // 0 -> Q --id--> Q -> 0 is acyclic
    FiniteComplex cx;
    cx.lo = 0;
    cx.dims = {1, 1};
    cx.d.assign(1, SpMat(1, 1));
    cx.d[0].add(0, 0, Rat(1));
    auto h = cx.homology_dims();
    CHECK(h[0] == 0);
    CHECK(h[1] == 0);

    // all differentials zero: homology = dimensions
    FiniteComplex z;
    z.lo = -1;
    z.dims = {2, 3, 1};
    z.d.assign(2, SpMat());
    z.d[0] = SpMat(3, 2);
    z.d[1] = SpMat(1, 3);
    auto hz = z.homology_dims();
    CHECK(hz[-1] == 2);
    CHECK(hz[0] == 3);
    CHECK(hz[1] == 1);
}

TEST_CASE("d^2 witness is reported") {
    FiniteComplex cx;
    cx.lo = 0;
    cx.dims = {1, 1, 1};
    cx.d.assign(2, SpMat(1, 1));
    cx.d[0].add(0, 0, Rat(1));
    cx.d[1].add(0, 0, Rat(1));
    auto w = cx.check_d2();
    REQUIRE(w.has_value());
    CHECK(w->degree == 0);
    CHECK(w->basis_index == 0);
    CHECK_THROWS_AS(cx.homology_dims(), std::logic_error);
}

namespace {

// random complex with known homology: direct sums of Q --c--> Q cones and
// bare Q summands, conjugated by random invertible upper/lower perturbations
FiniteComplex random_complex(std::mt19937& rng, std::map<int, long>& expected) {
    std::uniform_int_distribution<int> nc(0, 4), coef(-3, 3), pick(0, 2);
    int lo = -2, hi = 2;
    FiniteComplex cx;
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::vector<std::vector<std::pair<int, Rat>>> cols; // planned d columns per degree slot
    // plan summands
    struct Cone {
        int deg;
        int a, b;
    };
    std::vector<Cone> cones;
    for (int deg = lo; deg < hi; ++deg) {
        int k = nc(rng);
        for (int i = 0; i < k; ++i) {
            int a = static_cast<int>(cx.dims[deg - lo]++);
            int b = static_cast<int>(cx.dims[deg + 1 - lo]++);
            cones.push_back({deg, a, b});
        }
    }
    for (int deg = lo; deg <= hi; ++deg) {
        int k = nc(rng) / 2;
        for (int i = 0; i < k; ++i) {
            cx.dims[deg - lo]++;
            expected[deg]++;
        }
    }
    for (int deg = lo; deg <= hi; ++deg) expected.try_emplace(deg, 0);
    cx.d.assign(cx.dims.size() - 1, SpMat());
    for (size_t i = 0; i + 1 < cx.dims.size(); ++i)
        cx.d[i] = SpMat(static_cast<int>(cx.dims[i + 1]), static_cast<int>(cx.dims[i]));
    for (auto& c : cones) {
        int coefv = 0;
        while (coefv == 0) coefv = coef(rng);
        cx.d[c.deg - lo].add(c.b, c.a, Rat(coefv));
    }
    // conjugate by a random change of basis per degree: d -> P_{k+1} d P_k^{-1};
    // using elementary transvections keeps everything exact and invertible
    for (size_t k = 0; k < cx.dims.size(); ++k) {
        long n = cx.dims[k];
        if (n < 2) continue;
        for (int t = 0; t < 3; ++t) {
            int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
            if (i == j) continue;
            Rat c(coef(rng));
            if (is_zero(c)) continue;
            // row op on d out of degree k: col_i += c * col_j  <-> basis change
            if (k + 1 < cx.dims.size()) {
                for (int rr = 0; rr < cx.d[k].rows; ++rr) {
                    Rat vj = cx.d[k].at(rr, j);
                    if (!is_zero(vj)) cx.d[k].add(rr, i, c * vj);
                }
            }
            // the inverse op on d into degree k: row_j -= c * row_i
            if (k > 0) {
                auto row = cx.d[k - 1].row[i];
                for (auto& [cc, v] : row) cx.d[k - 1].add(j, cc, -c * v);
            }
        }
    }
    return cx;
}

} // namespace

TEST_CASE("homology agrees with the planned answer and the dense oracle on random complexes") {
    std::mt19937 rng(123456);
    for (int trial = 0; trial < 25; ++trial) {
        std::map<int, long> expected;
        FiniteComplex cx = random_complex(rng, expected);
        REQUIRE(!cx.check_d2().has_value());
        auto h = cx.homology_dims();
        for (auto& [deg, dim] : expected) CHECK(h[deg] == dim);
        // cross-check ranks against the dense oracle
        for (auto& d : cx.d) CHECK(rank(d) == rank_dense_oracle(d));
    }
}

TEST_CASE("cone of an isomorphism is acyclic, cone of zero is a shift") {
    FiniteComplex a;
    a.lo = 0;
    a.dims = {2, 2};
    a.d.assign(1, SpMat(2, 2));
    FiniteComplex b = a;
    ChainMap f;
    f.src = &a;
    f.dst = &b;
    f.f.assign(2, SpMat(2, 2));
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i) f.f[k].add(i, i, Rat(1));
    CHECK(is_quasi_iso(f));
    ChainMap z = f;
    z.f.assign(2, SpMat(2, 2));
    CHECK(!is_quasi_iso(z));
}

TEST_CASE("labeled maps validate their bases and compose") {
    using L = std::vector<int>; // structured labels
    LabeledMap<L> f;
    f.domain = {{0}, {1}};
    f.codomain = {{0, 0}, {0, 1}};
    f.columns[{0}].add({0, 0}, Rat(1));
    f.columns[{1}].add({0, 0}, Rat(2));
    f.columns[{1}].add({0, 1}, Rat(4));
    CHECK(rank(f) == 2);

    // identity on a 3-element basis has rank 3; the zero map has rank 0
    LabeledMap<L> id3;
    id3.domain = id3.codomain = {{7}, {8}, {9}};
    for (auto& l : id3.domain) id3.columns[l].add(l, Rat(1));
    CHECK(rank(id3) == 3);
    LabeledMap<L> z;
    z.domain = {{1}};
    z.codomain = {{2}};
    CHECK(rank(z) == 0);

    // a coefficient referencing an undeclared label is an error
    LabeledMap<L> bad = f;
    bad.columns[{2}].add({0, 0}, Rat(1));
    CHECK_THROWS_AS(bad.matrix(), std::invalid_argument);
    LabeledMap<L> bad2 = f;
    bad2.columns[{0}].add({5, 5}, Rat(1));
    CHECK_THROWS_AS(bad2.matrix(), std::invalid_argument);

    // composition checks the middle basis and acts pointwise
    LabeledMap<L> g;
    g.domain = f.codomain;
    g.codomain = {{3}};
    g.columns[{0, 0}].add({3}, Rat(1));
    LabeledMap<L> gf = g.compose(f);
    CHECK(rank(gf) == 1);
    CHECK(gf.apply(SparseVec<L>{{{{1}, Rat(1)}}}).at({3}) == Rat(2));
    CHECK_THROWS_AS(f.compose(g), std::invalid_argument);
}
