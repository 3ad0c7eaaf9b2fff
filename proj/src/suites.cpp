#include "barq/suites.hpp"

#include <future>
#include <set>

namespace barq {

bool validate_config(const RunConfig& c, std::string& err) {
    if (c.max_weight < 1 || c.max_weight > kMaxWeightCap) {
        err = "max-weight must be in 1.." + std::to_string(kMaxWeightCap);
        return false;
    }
    if (c.max_arity < 1 || c.max_arity > kMaxArityCap) {
        err = "max-arity must be in 1.." + std::to_string(kMaxArityCap);
        return false;
    }
    if (c.max_length < 1 || c.max_length > kMaxLengthCap) {
        err = "max-length must be in 1.." + std::to_string(kMaxLengthCap);
        return false;
    }
    if (!c.negative_control.empty() && c.negative_control != "standard-signs") {
        err = "unknown negative control: " + c.negative_control;
        return false;
    }
    bool known = false;
    for (auto& s : suite_names())
        if (s == c.suite) known = true;
    if (c.suite == "all") known = true;
    if (!known) {
        err = "unknown suite: " + c.suite;
        return false;
    }
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "delta0",      "algebra",     "monoid", "sharp",       "bar",  "contraction",
        "cobar",       "ln",          "counit", "em-leibniz",  "em-lax", "em-symmetry",
        "em-coalgebra", "bialgebra",  "binf",   "ainf"};
    return names;
}

Report delta0_report() {
    Report r;

    auto& gens = r.add("generator_tables");
    {
        D0Map f = d0_face(1, 1);
        if (!(f.table == std::vector<int>{0, 2})) gens.pass = false;
        D0Map d = d0_degeneracy(0, 2);
        if (!(d.table == std::vector<int>{0, 0, 1})) gens.pass = false;
        D0Map w = d0_w(2, 3);
        if (!(w.table == std::vector<int>{0, 0, 1, 1})) gens.pass = false;
        bool threw = false;
        try {
            d0_face(0, 1);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (!threw) {
            gens.pass = false;
            gens.witness = "extreme face f_0 accepted";
        }
    }

    auto& simp = r.add("simplicial_identities_arrows");
    for (int n = 0; n <= 5 && simp.pass; ++n) {
        // F_i F_j = F_{j-1} F_i (i < j) reads f_j . f_i = f_i . f_{j-1} on arrows [n] -> [n+2]
        for (int j = 2; j <= n + 1 && simp.pass; ++j)
            for (int i = 1; i < j && i <= n && simp.pass; ++i) {
                D0Map lhs = d0_compose(d0_face(j, n + 1), d0_face(i, n));
                D0Map rhs = d0_compose(d0_face(i, n + 1), d0_face(j - 1, n));
                if (!(lhs == rhs)) {
                    simp.pass = false;
                    simp.witness = "f_" + std::to_string(j) + " f_" + std::to_string(i) + " on [" +
                                   std::to_string(n) + "]";
                }
            }
        // D_i D_j = D_{j+1} D_i (i <= j) reads delta_j . delta_i = delta_i . delta_{j+1} on [n] -> [n-2]
        for (int i = 0; i <= n - 2 && simp.pass; ++i)
            for (int j = i; j <= n - 2 && simp.pass; ++j) {
                D0Map lhs = d0_compose(d0_degeneracy(j, n - 1), d0_degeneracy(i, n));
                D0Map rhs = d0_compose(d0_degeneracy(i, n - 1), d0_degeneracy(j + 1, n));
                if (!(lhs == rhs)) {
                    simp.pass = false;
                    simp.witness = "delta_" + std::to_string(j) + " delta_" + std::to_string(i) + " on [" +
                                   std::to_string(n) + "]";
                }
            }
        // F_i D_j block reads delta_j . f_i on [n] -> [n]
        for (int j = 0; j <= n && simp.pass; ++j)
            for (int i = 1; i <= n && simp.pass; ++i) {
                D0Map lhs = d0_compose(d0_degeneracy(j, n + 1), d0_face(i, n));
                D0Map rhs;
                if (i == j || i == j + 1)
                    rhs = d0_identity(n);
                else if (i < j)
                    rhs = d0_compose(d0_face(i, n - 1), d0_degeneracy(j - 1, n));
                else
                    rhs = d0_compose(d0_face(i - 1, n - 1), d0_degeneracy(j, n));
                if (!(lhs == rhs)) {
                    simp.pass = false;
                    simp.witness = "delta_" + std::to_string(j) + " f_" + std::to_string(i) + " on [" +
                                   std::to_string(n) + "]";
                }
            }
    }

    auto& mon = r.add("monoidal_structure");
    {
        std::vector<D0Map> all;
        for (int s = 0; s <= 2; ++s)
            for (int t = 0; t <= 2; ++t)
                for (auto& f : enumerate_delta0(s, t)) all.push_back(f);
        D0Map e = d0_identity(0);
        for (auto& f : all) {
            if (!(d0_product(f, e) == f) || !(d0_product(e, f) == f)) {
                mon.pass = false;
                mon.witness = "unit [0] at " + f.str();
            }
        }
        for (auto& f : all)
            for (auto& g : all)
                for (auto& h : all) {
                    if (!mon.pass) break;
                    D0Map lhs = d0_product(d0_product(f, g), h);
                    D0Map rhs = d0_product(f, d0_product(g, h));
                    if (!(lhs == rhs)) {
                        mon.pass = false;
                        mon.witness = "associativity";
                    }
                }
        // the product is functorial in both arguments
        for (auto& f1 : all)
            for (auto& f2 : all) {
                if (!mon.pass) break;
                if (f1.dst != f2.src) continue;
                for (auto& g1 : all)
                    for (auto& g2 : all) {
                        if (g1.dst != g2.src) continue;
                        D0Map lhs = d0_product(d0_compose(f2, f1), d0_compose(g2, g1));
                        D0Map rhs = d0_compose(d0_product(f2, g2), d0_product(f1, g1));
                        if (!(lhs == rhs)) {
                            mon.pass = false;
                            mon.witness = "interchange";
                        }
                    }
            }
    }

    auto& w = r.add("w_map_product_identities");
    for (int a = 0; a <= 5 && w.pass; ++a)
        for (int b = 0; a + b <= 5 && w.pass; ++b) {
            for (int j = 1; j <= b && w.pass; ++j)
                if (!(d0_product(d0_collapse(a), d0_w(j, b)) == d0_w(a + j, a + b))) {
                    w.pass = false;
                    w.witness = "D^(a) x w_j";
                }
            for (int i = 1; i <= a && w.pass; ++i)
                if (!(d0_product(d0_w(i, a), d0_collapse(b)) == d0_w(i, a + b))) {
                    w.pass = false;
                    w.witness = "w_i x D^(b)";
                }
        }
    // w_k . f_i collapse rule on the arrow side
    auto& wf = r.add("w_face_collapse_arrows");
    for (int n = 2; n <= 5 && wf.pass; ++n)
        for (int i = 1; i <= n - 1 && wf.pass; ++i)
            for (int k = 1; k <= n && wf.pass; ++k) {
                D0Map lhs = d0_compose(d0_w(k, n), d0_face(i, n - 1));
                D0Map rhs = d0_w(k <= i ? k : k - 1, n - 1);
                if (!(lhs == rhs)) {
                    wf.pass = false;
                    wf.witness = "w_" + std::to_string(k) + " f_" + std::to_string(i);
                }
            }

    auto& joy = r.add("joyal_duality");
    for (int m = 0; m <= 4 && joy.pass; ++m)
        for (int n = 0; n <= 4 && joy.pass; ++n) {
            auto dom = enumerate_delta(m, n);
            std::set<std::vector<int>> images;
            for (auto& t : dom) {
                D0Map f = joyal_dual(t);
                if (f.src != n + 1 || f.dst != m + 1) {
                    joy.pass = false;
                    joy.witness = "sizes";
                }
                images.insert(f.table);
            }
            if (images.size() != dom.size()) {
                joy.pass = false;
                joy.witness = "not injective at (" + std::to_string(m) + "," + std::to_string(n) + ")";
            }
            if (static_cast<size_t>(enumerate_delta0(n + 1, m + 1).size()) != dom.size()) {
                joy.pass = false;
                joy.witness = "not surjective at (" + std::to_string(m) + "," + std::to_string(n) + ")";
            }
        }
    auto& joyc = r.add("joyal_contravariance");
    for (int m = 0; m <= 3 && joyc.pass; ++m)
        for (int n = 0; n <= 3 && joyc.pass; ++n)
            for (int p = 0; p <= 3 && joyc.pass; ++p)
                for (auto& t1 : enumerate_delta(m, n))
                    for (auto& t2 : enumerate_delta(n, p)) {
                        D0Map lhs = joyal_dual(delta_compose(t2, t1));
                        D0Map rhs = d0_compose(joyal_dual(t1), joyal_dual(t2));
                        if (!(lhs == rhs)) {
                            joyc.pass = false;
                            joyc.witness = "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                           std::to_string(p) + ")";
                        }
                    }
    auto& joyid = r.add("joyal_identity_and_endpoints");
    for (int n = 0; n <= 4 && joyid.pass; ++n) {
        DeltaMap id;
        id.src = id.dst = n;
        id.table.resize(n + 1);
        for (int i = 0; i <= n; ++i) id.table[i] = i;
        if (!(joyal_dual(id) == d0_identity(n + 1))) {
            joyid.pass = false;
            joyid.witness = "identity [" + std::to_string(n) + "]";
        }
    }

    auto& fact = r.add("generator_factorization");
    for (int m = 0; m <= 4 && fact.pass; ++m)
        for (int n = 0; n <= 4 && fact.pass; ++n)
            for (auto& f : enumerate_delta0(m, n)) {
                auto gens2 = d0_factor(f);
                D0Map acc = d0_identity(f.dst);
                for (auto& g : gens2) {
                    D0Map gm = g.kind == D0Generator::Face ? d0_face(g.index, g.src_size)
                                                           : d0_degeneracy(g.index, g.src_size);
                    acc = d0_compose(acc, gm);
                }
                if (!(acc == f)) {
                    fact.pass = false;
                    fact.witness = f.str();
                }
            }
    return r;
}

namespace {

GLMonoid monoid_of(const DgAlgebra& a, int n) { return from_dg_algebra(a, n); }

} // namespace

Report run_suite(const DgAlgebra& a, const std::string& suite, const RunConfig& c) {
    Report r;
    int N = c.max_weight;
    if (suite == "delta0") return delta0_report();
    if (suite == "algebra") return check_dg_algebra(a);
    if (suite == "monoid") return check_monoid(monoid_of(a, N));
    if (suite == "sharp") return check_sharp(monoid_of(a, N));
    if (suite == "bar") {
        GLMonoid m = monoid_of(a, N);
        Report rr = check_bar(m, N);
        rr.append(check_dg_coalgebra(bar_as_coalgebra(m, N), N + 1));
        return rr;
    }
    if (suite == "contraction") return unital_contraction(monoid_of(a, N), N);
    if (suite == "cobar") return check_cobar(monoid_of(a, N), N);
    if (suite == "ln") {
        GLMonoid m = monoid_of(a, N);
        Report rr;
        auto& l0 = rr.add("L0_is_X1");
        {
            FiniteComplex l = ln_complex(m, 0);
            FiniteComplex x1 = m.component_complex(1);
            if (!(l.lo == x1.lo && l.dims == x1.dims)) {
                l0.pass = false;
                l0.witness = "window mismatch";
            } else {
                for (size_t i = 0; i + 1 < l.dims.size(); ++i)
                    if (!(l.d[i] == x1.d[i])) {
                        l0.pass = false;
                        l0.witness = "differential mismatch";
                    }
            }
        }
        for (int n = 1; n <= std::min(4, N - 1); ++n) {
            auto& ln = rr.add("L" + std::to_string(n) + "_acyclic");
            for (auto& [deg, h] : ln_complex(m, n).homology_dims())
                if (h != 0) {
                    ln.pass = false;
                    ln.witness = "H^" + std::to_string(deg) + " = " + std::to_string(h);
                }
        }
        return rr;
    }
    if (suite == "counit") return check_phi(monoid_of(a, N), N);
    if (suite == "em-leibniz") {
        GLMonoid m = monoid_of(a, N);
        Report rr = check_em_leibniz(m, m, N, false, false);
        rr.append(check_em_leibniz(m, m, N, false, true));
        rr.append(check_em_signs(m, m, std::min(N, 5)));
        if (c.negative_control == "standard-signs") rr.append(check_em_leibniz(m, m, N, true, false));
        return rr;
    }
    if (suite == "em-lax") {
        GLMonoid m = monoid_of(a, std::min(N, 4));
        return check_em_lax(m, m, m, std::min(N, 4));
    }
    if (suite == "em-symmetry") {
        GLMonoid m = monoid_of(a, N);
        return check_em_symmetry(m, m, N);
    }
    if (suite == "em-coalgebra") {
        GLMonoid m = monoid_of(a, N);
        return check_em_coalgebra_map(m, m, N);
    }
    if (suite == "bialgebra") {
        GLMonoid m = monoid_of(a, std::min(N, 4));
        Report rr = check_bialgebra(bar_bialgebra(m, std::min(N, 4)), std::min(N, 4) + 1);
        rr.append(check_bar_product(m, std::min(N, 4)));
        return rr;
    }
    if (suite == "binf") {
        GLMonoid m = monoid_of(a, std::min(N, 4));
        BInfContext ctx;
        ctx.x = &m;
        ctx.n_weight = std::min(N, 4);
        ctx.n_length = c.max_length;
        Report rr = verify_b_infinity(ctx);
        auto& conv = rr.add("tk_convention_pinned");
        conv.note = ctx.conv.str();
        return rr;
    }
    if (suite == "ainf") {
        GLMonoid m = monoid_of(a, N);
        Report rr = check_ainfinity_relations(space_of(a), c.max_arity + 1);
        rr.append(check_ainfinity_relations(cobar_space(m, N), std::min(c.max_arity + 1, 4)));
        rr.append(check_morphism(m, std::min(c.max_arity, N - 1), N));
        rr.append(check_w_lemmas(m, std::min(N, 5)));
        return rr;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

Report run(const DgAlgebra& a, const RunConfig& c) {
    std::vector<std::string> todo;
    if (c.suite == "all")
        todo = suite_names();
    else
        todo = {c.suite};
    Report out;
    if (c.jobs > 1 && todo.size() > 1) {
        std::vector<std::future<Report>> futs;
        futs.reserve(todo.size());
        for (auto& s : todo)
            futs.push_back(std::async(std::launch::async, [&a, s, &c] { return run_suite(a, s, c); }));
        for (size_t i = 0; i < todo.size(); ++i) {
            Report r = futs[i].get();
            for (auto& ch : r.checks) {
                ch.name = todo[i] + "/" + ch.name;
                out.checks.push_back(ch);
            }
        }
    } else {
        for (auto& s : todo) {
            Report r = run_suite(a, s, c);
            for (auto& ch : r.checks) {
                ch.name = s + "/" + ch.name;
                out.checks.push_back(ch);
            }
        }
    }
    return out;
}

std::map<int, long> homology_table(const DgAlgebra& a, const std::string& complex, int n, int ln_index) {
    if (complex == "algebra") return a.homology();
    GLMonoid m = from_dg_algebra(a, n);
    if (complex == "bar") return bar_complex(m, n, false).homology_dims();
    if (complex == "cobar-bar") return cobar_homology(m, n);
    if (complex == "ln") return ln_complex(m, ln_index).homology_dims();
    throw std::invalid_argument("unknown complex: " + complex + " (use algebra|bar|cobar-bar|ln)");
}

} // namespace barq
