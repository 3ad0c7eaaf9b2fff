#include "barq/bar.hpp"
#include "barq/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace barq;

TEST_CASE("pinned bar differential values") {
    GLMonoid m = from_dg_algebra(catalog_find("dual0")->algebra, 4);
    // d^s(x (x) x) = (-1)^{0+1} x^2 = 0
    CHECK(bar_ds(m, bar_elt(2, m.tuple_index({1, 1}))).zero());
    // d^s(1 (x) x) = -x
    BarVec want;
    want.add({1, 1}, Rat(-1));
    CHECK(bar_ds(m, bar_elt(2, m.tuple_index({0, 1}))) == want);

    GLMonoid e = from_dg_algebra(catalog_find("ext1")->algebra, 4);
    // d^s(xi (x) xi) = (-1)^{1+1} xi^2 = 0 and deg(xi (x) xi) = -2+2 = 0
    int xixi = e.tuple_index({1, 1});
    CHECK(bar_ds(e, bar_elt(2, xixi)).zero());
    CHECK(bar_degree(e, {2, xixi}) == 0);
}

TEST_CASE("bar complex invariants on every catalog monoid at weight 6") {
    for (auto& entry : catalog()) {
        GLMonoid m = from_dg_algebra(entry.algebra, 6);
        Report r = check_bar(m, 6);
        for (auto& c : r.checks) {
            INFO(entry.name, " ", c.name, " ", c.witness);
            CHECK(c.pass);
        }
        // the truncated bar coalgebra passes the generic coalgebra suite
        Report rc = check_dg_coalgebra(bar_as_coalgebra(m, 4), 5);
        for (auto& c : rc.checks) {
            INFO(entry.name, " coalg ", c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("bar of the ground field is acyclic in the window; dense-oracle cross-check") {
    GLMonoid m = from_dg_algebra(catalog_find("k")->algebra, 4);
    FiniteComplex cx = bar_complex(m, 4, false);
    auto h = cx.homology_dims();
    for (int d = -4; d <= -1; ++d) CHECK(h[d] == 0);
    // independent dense row-reduction oracle for the same table
    std::map<int, long> dense;
    for (size_t i = 0; i < cx.dims.size(); ++i) {
        long out = (i + 1 < cx.dims.size()) ? rank_dense_oracle(cx.d[i]) : 0;
        long in = (i > 0) ? rank_dense_oracle(cx.d[i - 1]) : 0;
        dense[cx.lo + static_cast<int>(i)] = cx.dims[i] - out - in;
    }
    CHECK(dense == h);
}

TEST_CASE("unital contraction: dh + hd = -id on weights below the truncation") {
    for (auto& entry : catalog()) {
        GLMonoid m = from_dg_algebra(entry.algebra, 6);
        Report r = unital_contraction(m, 6);
        const CheckResult* c = r.find("contraction_identity");
        REQUIRE(c != nullptr);
        INFO(entry.name, " ", c->witness);
        CHECK(c->pass);
        CHECK(c->note.find("-id") != std::string::npos);
    }
    // hand value on the ground field: (Dh + hD)(1_(1)) = -1_(1)
    GLMonoid k = from_dg_algebra(catalog_find("k")->algebra, 3);
    Elt one;
    one.add(0, Rat(1));
    BarVec h1;
    for (auto& [j, cj] : k.apply_degen(1, 0, one).c) h1.add({2, j}, cj);
    BarVec lhs = bar_D(k, h1); // hD part vanishes since D(1_(1)) = 0
    BarVec want;
    want.add({1, 0}, Rat(-1));
    CHECK(lhs == want);
}

TEST_CASE("cobar differential, weight filtration, Leibniz") {
    for (auto& name : {"dual0", "ext1", "cone"}) {
        GLMonoid m = from_dg_algebra(catalog_find(name)->algebra, 4);
        Report r = check_cobar(m, 4);
        for (auto& c : r.checks) {
            INFO(name, " ", c.name, " ", c.witness);
            CHECK(c.pass);
        }
    }
    // random word pairs Leibniz, explicitly
    GLMonoid m = from_dg_algebra(catalog_find("cone")->algebra, 5);
    auto words = enumerate_words(m, 5, false);
    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        const Word& u = words[rng() % words.size()];
        const Word& v = words[rng() % words.size()];
        if (word_weight(u) + word_weight(v) > 5) continue;
        CobarVec uv;
        uv.add(u, Rat(1));
        CobarVec vv;
        vv.add(v, Rat(1));
        CobarVec lhs = cobar_D(m, cobar_mul(uv, vv));
        CobarVec rhs = cobar_mul(cobar_D(m, u), vv);
        rhs.axpy(sign_pow(cobar_degree(m, u)), cobar_mul(uv, cobar_D(m, v)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("L_n strata: L_0 is X_1, L_1..L_4 acyclic") {
    for (auto& entry : catalog()) {
        GLMonoid m = from_dg_algebra(entry.algebra, 5);
        FiniteComplex l0 = ln_complex(m, 0);
        FiniteComplex x1 = m.component_complex(1);
        CHECK(l0.lo == x1.lo);
        CHECK(l0.dims == x1.dims);
        for (size_t i = 0; i + 1 < l0.dims.size(); ++i) CHECK(l0.d[i] == x1.d[i]);
        for (int n = 1; n <= 4; ++n) {
            for (auto& [deg, h] : ln_complex(m, n).homology_dims()) {
                INFO(entry.name, " L_", n, " degree ", deg);
                CHECK(h == 0);
            }
        }
    }
    GLMonoid m = from_dg_algebra(catalog_find("dual0")->algebra, 5);
    CHECK_THROWS_AS(ln_complex(m, 5), std::invalid_argument);
}

TEST_CASE("counit: section, chain map, algebra map, homology certificate") {
    for (auto& name : {"dual0", "ext1", "cone", "poly3"}) {
        GLMonoid m = from_dg_algebra(catalog_find(name)->algebra, 4);
        Report r = check_phi(m, 4);
        for (auto& c : r.checks) {
            INFO(name, " ", c.name, " ", c.witness);
            CHECK(c.pass);
        }
    }
    // Phi on [x]*[x] multiplies out to x^2 = 0
    GLMonoid m = from_dg_algebra(catalog_find("dual0")->algebra, 4);
    CHECK(phi_counit(m, Word{{1, 1}, {1, 1}}).zero());
    // Phi(iota(x)) = x
    Elt x;
    x.add(1, Rat(1));
    CHECK(phi_counit(m, iota(1)) == x);
}

TEST_CASE("homology of truncated Cobar(Bar(-)) matches H(A) degree by degree") {
    std::map<std::string, std::map<int, long>> expect = {
        {"dual0", {{0, 2}}}, {"ext1", {{0, 1}, {1, 1}}}, {"cone", {}}, {"poly3", {{0, 3}}}};
    for (auto& [name, table] : expect) {
        auto h = cobar_homology(from_dg_algebra(catalog_find(name)->algebra, 4), 4);
        std::map<int, long> nz;
        for (auto& [d, v] : h)
            if (v != 0) nz[d] = v;
        INFO(name);
        CHECK(nz == table);
    }
}

TEST_CASE("bar preserves quasi-isomorphisms: acyclic-cone certificates") {
    DgAlgebra cone_alg = catalog_find("cone")->algebra;
    DgAlgebra zero;
    zero.name = "0";
    // cone -> 0 is a quasi-isomorphism of dg algebras; Bar of it has acyclic cone
    CHECK(bar_map_quasi_iso(cone_alg, zero, {}, 4));
    // identity map of dual0 likewise
    DgAlgebra d = catalog_find("dual0")->algebra;
    std::map<int, Elt> id;
    for (int i = 0; i < d.dim(); ++i) id[i] = d.basis(i);
    CHECK(bar_map_quasi_iso(d, d, id, 4));
    // dual0 -> 0 is not: H(dual0) has rank 2
    CHECK(!bar_map_quasi_iso(d, zero, {}, 4));
}

TEST_CASE("generic cobar of a conilpotent dg coalgebra") {
    // zero-coproduct coalgebra on one generator of degree 0: the cobar is the
    // free algebra on c[-1] with zero differential
    DgCoalgebra z;
    z.name = "free1";
    z.label = {"c"};
    z.deg = {0};
    CHECK(gcobar_D(z, GWord{0, 0, 0}).zero());
    FiniteComplex cx = gcobar_complex(z, 4);
    auto h = cx.homology_dims();
    for (int d = 1; d <= 4; ++d) CHECK(h[d] == 1); // one word per length
    CHECK(check_gcobar(z, 4, 4).all_pass());

    // the bar coalgebra of dual0 goes through the generic route and agrees
    // with the monoid-backed cobar differential letter by letter
    GLMonoid m = from_dg_algebra(catalog_find("dual0")->algebra, 3);
    DgCoalgebra bc = bar_as_coalgebra(m, 3);
    CHECK(check_gcobar(bc, 3, 4).all_pass());
    BarBasis bb = bar_basis(m, 3, false);
    auto keys = bb.keys;
    for (auto& k1 : keys)
        for (auto& k2 : keys) {
            if (k1.first + k2.first > 3) continue;
            Word w{k1, k2};
            GWord gw{bb.pos.at(k1), bb.pos.at(k2)};
            CobarVec dm = cobar_D(m, w);
            GCobarVec dg = gcobar_D(bc, gw);
            // compare via the position dictionary
            GCobarVec dm_as_g;
            for (auto& [wordm, c] : dm.c) {
                GWord g2;
                for (auto& k : wordm) g2.push_back(bb.pos.at(k));
                dm_as_g.add(g2, c);
            }
            CHECK(dm_as_g == dg);
        }
}

TEST_CASE("conilpotency gate: the generic cobar refuses an undecided coproduct") {
    DgCoalgebra g;
    g.label = {"g"};
    g.deg = {0};
    g.coprod[0].add({0, 0}, Rat(1)); // group-like
    Report r = check_gcobar(g, 3, 4);
    CHECK(!r.all_pass());
    const CheckResult* nil = r.find("conilpotent");
    REQUIRE(nil != nullptr);
    CHECK(nil->note.find("undecided") != std::string::npos);
}

TEST_CASE("the whole pipeline runs on a tensor-product monoid") {
    GLMonoid e1 = from_dg_algebra(catalog_find("ext1")->algebra, 4);
    GLMonoid d0 = from_dg_algebra(catalog_find("dual0")->algebra, 4);
    GLMonoid z = tensor_monoid(e1, d0);
    CHECK(check_bar(z, 4).all_pass());
    CHECK(check_cobar(z, 4).all_pass());
    CHECK(check_phi(z, 4).all_pass());
    // X_1 = ext1 (x) dual0 has homology of rank 2 spread over degrees 0 and 1
    auto h = cobar_homology(z, 4);
    CHECK(h[0] == 2);
    CHECK(h[1] == 2);
    // the ground field at N = 5 rounds out the catalog coverage
    auto hk = cobar_homology(from_dg_algebra(catalog_find("k")->algebra, 5), 5);
    for (auto& [d, v] : hk) CHECK(v == (d == 0 ? 1 : 0));
}
