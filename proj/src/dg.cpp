#include "barq/dg.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace barq {

Elt DgAlgebra::basis(int i) const {
    Elt e;
    e.add(i, Rat(1));
    return e;
}

Elt DgAlgebra::d(const Elt& v) const {
    Elt out;
    for (auto& [i, c] : v.c) {
        auto it = diff.find(i);
        if (it != diff.end()) out.axpy(c, it->second);
    }
    return out;
}

Elt DgAlgebra::mul_basis(int i, int j) const {
    auto it = prod.find({i, j});
    return it == prod.end() ? Elt{} : it->second;
}

Elt DgAlgebra::mul(const Elt& a, const Elt& b) const {
    Elt out;
    for (auto& [i, ci] : a.c)
        for (auto& [j, cj] : b.c) out.axpy(ci * cj, mul_basis(i, j));
    return out;
}

int DgAlgebra::find_label(const std::string& s) const {
    for (int i = 0; i < dim(); ++i)
        if (label[i] == s) return i;
    return -1;
}

FiniteComplex DgAlgebra::as_complex() const {
    FiniteComplex cx;
    if (dim() == 0) {
        cx.lo = 0;
        cx.dims = {0};
        return cx;
    }
    int lo = *std::min_element(deg.begin(), deg.end());
    int hi = *std::max_element(deg.begin(), deg.end());
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::vector<int> pos(dim());
    for (int i = 0; i < dim(); ++i) pos[i] = static_cast<int>(cx.dims[deg[i] - lo]++);
    cx.d.assign(cx.dims.size() > 1 ? cx.dims.size() - 1 : 0, SpMat());
    for (size_t k = 0; k + 1 < cx.dims.size(); ++k)
        cx.d[k] = SpMat(static_cast<int>(cx.dims[k + 1]), static_cast<int>(cx.dims[k]));
    for (auto& [i, di] : diff)
        for (auto& [j, c] : di.c) {
            if (deg[j] != deg[i] + 1) throw std::logic_error("differential is not of degree +1");
            cx.d[deg[i] - lo].add(pos[j], pos[i], c);
        }
    return cx;
}

std::string elt_str(const DgAlgebra& a, const Elt& v) {
    if (v.zero()) return "0";
    std::string s;
    for (auto& [i, c] : v.c) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*" + a.label[i];
    }
    return s;
}

Report check_dg_algebra(const DgAlgebra& a) {
    Report r;
    int n = a.dim();

    auto& d2 = r.add("d_squared_zero");
    for (int i = 0; i < n && d2.pass; ++i) {
        Elt dd = a.d(a.d(a.basis(i)));
        if (!dd.zero()) {
            d2.pass = false;
            d2.witness = a.label[i];
        }
    }

    auto& degcheck = r.add("structure_degrees");
    for (auto& [i, di] : a.diff) {
        for (auto& [j, c] : di.c)
            if (a.deg[j] != a.deg[i] + 1) {
                degcheck.pass = false;
                degcheck.witness = a.label[i];
            }
    }
    for (auto& [ij, res] : a.prod)
        for (auto& [k, c] : res.c)
            if (a.deg[k] != a.deg[ij.first] + a.deg[ij.second]) {
                degcheck.pass = false;
                degcheck.witness = a.label[ij.first] + "*" + a.label[ij.second];
            }

    auto& leib = r.add("leibniz");
    for (int i = 0; i < n && leib.pass; ++i)
        for (int j = 0; j < n && leib.pass; ++j) {
            Elt lhs = a.d(a.mul_basis(i, j));
            Elt rhs = a.mul(a.d(a.basis(i)), a.basis(j));
            rhs.axpy(sign_pow(a.deg[i]), a.mul(a.basis(i), a.d(a.basis(j))));
            if (!(lhs == rhs)) {
                leib.pass = false;
                leib.witness = a.label[i] + "*" + a.label[j];
            }
        }

    auto& assoc = r.add("associative");
    std::set<std::tuple<int, int, int>> triples;
    for (auto& [ij, res] : a.prod) {
        for (int k = 0; k < n; ++k) {
            triples.insert({ij.first, ij.second, k});
            triples.insert({k, ij.first, ij.second});
        }
    }
    for (auto& [i, j, k] : triples) {
        Elt lhs = a.mul(a.mul_basis(i, j), a.basis(k));
        Elt rhs = a.mul(a.basis(i), a.mul_basis(j, k));
        if (!(lhs == rhs)) {
            assoc.pass = false;
            assoc.witness = "(" + a.label[i] + "*" + a.label[j] + ")*" + a.label[k];
            break;
        }
    }

    if (a.unit >= 0) {
        auto& u = r.add("unital");
        if (!a.d(a.basis(a.unit)).zero()) {
            u.pass = false;
            u.witness = "d(1) != 0";
        }
        for (int i = 0; i < n && u.pass; ++i) {
            if (!(a.mul_basis(a.unit, i) == a.basis(i)) || !(a.mul_basis(i, a.unit) == a.basis(i))) {
                u.pass = false;
                u.witness = a.label[i];
            }
        }
    }

    if (!a.multideg.empty()) {
        auto& m = r.add("multidegree_compatible");
        auto total = [&](const std::vector<int>& v) {
            int t = 0;
            for (int x : v) t += x;
            return t;
        };
        for (int i = 0; i < n && m.pass; ++i)
            if (total(a.multideg[i]) != a.deg[i]) {
                m.pass = false;
                m.witness = a.label[i];
            }
        for (auto& [ij, res] : a.prod) {
            if (!m.pass) break;
            auto [i, j] = ij;
            std::vector<int> want = a.multideg[i];
            for (size_t t = 0; t < want.size(); ++t) want[t] += a.multideg[j][t];
            for (auto& [k, c] : res.c)
                if (a.multideg[k] != want) {
                    m.pass = false;
                    m.witness = a.label[i] + "*" + a.label[j];
                }
        }
        // the differential must raise exactly one slot by one
        for (auto& [i, di] : a.diff) {
            if (!m.pass) break;
            for (auto& [j, c] : di.c) {
                int raised = 0;
                bool ok = a.multideg[i].size() == a.multideg[j].size();
                for (size_t t = 0; ok && t < a.multideg[i].size(); ++t) {
                    int delta = a.multideg[j][t] - a.multideg[i][t];
                    if (delta == 1)
                        ++raised;
                    else if (delta != 0)
                        ok = false;
                }
                if (!ok || raised != 1) {
                    m.pass = false;
                    m.witness = "d(" + a.label[i] + ")";
                }
            }
        }
    }
    return r;
}

Elt DgCoalgebra::d(const Elt& v) const {
    Elt out;
    for (auto& [i, c] : v.c) {
        auto it = diff.find(i);
        if (it != diff.end()) out.axpy(c, it->second);
    }
    return out;
}

SparseVec<std::pair<int, int>> DgCoalgebra::delta(const Elt& v) const {
    SparseVec<std::pair<int, int>> out;
    for (auto& [i, c] : v.c) {
        auto it = coprod.find(i);
        if (it != coprod.end()) out.axpy(c, it->second);
    }
    return out;
}

namespace {

using Pair = std::pair<int, int>;
using Triple = std::tuple<int, int, int>;

template <class Coalg>
bool coassoc_witness(const Coalg& c, int dim, std::string& w, const std::vector<std::string>& label) {
    for (int i = 0; i < dim; ++i) {
        SparseVec<Triple> lhs, rhs;
        Elt e;
        e.add(i, Rat(1));
        auto d1 = c.delta(e);
        for (auto& [jk, v] : d1.c) {
            Elt left;
            left.add(jk.first, Rat(1));
            for (auto& [lm, v2] : c.delta(left).c) lhs.add({lm.first, lm.second, jk.second}, v * v2);
            Elt right;
            right.add(jk.second, Rat(1));
            for (auto& [lm, v2] : c.delta(right).c) rhs.add({jk.first, lm.first, lm.second}, v * v2);
        }
        if (!(lhs == rhs)) {
            w = label[i];
            return false;
        }
    }
    return true;
}

template <class Coalg>
bool co_leibniz_witness(const Coalg& c, int dim, const std::vector<int>& deg, std::string& w,
                        const std::vector<std::string>& label) {
    for (int i = 0; i < dim; ++i) {
        Elt e;
        e.add(i, Rat(1));
        auto lhs = c.delta(c.d(e));
        SparseVec<Pair> rhs;
        for (auto& [jk, v] : c.delta(e).c) {
            Elt l, r;
            l.add(jk.first, Rat(1));
            r.add(jk.second, Rat(1));
            for (auto& [j2, v2] : c.d(l).c) rhs.add({j2, jk.second}, v * v2);
            for (auto& [k2, v2] : c.d(r).c) rhs.add({jk.first, k2}, v * v2 * sign_pow(deg[jk.first]));
        }
        if (!(lhs == rhs)) {
            w = label[i];
            return false;
        }
    }
    return true;
}

} // namespace

Report check_dg_coalgebra(const DgCoalgebra& c, int conilpotency_cap) {
    Report r;
    int n = c.dim();

    auto& d2 = r.add("d_squared_zero");
    for (int i = 0; i < n && d2.pass; ++i) {
        Elt e;
        e.add(i, Rat(1));
        if (!c.d(c.d(e)).zero()) {
            d2.pass = false;
            d2.witness = c.label[i];
        }
    }

    auto& ca = r.add("coassociative");
    ca.pass = coassoc_witness(c, n, ca.witness, c.label);

    auto& cl = r.add("co_leibniz");
    cl.pass = co_leibniz_witness(c, n, c.deg, cl.witness, c.label);

    auto& nil = r.add("conilpotent");
    // iterate Delta on left factors; x in F_l iff Delta^l(x) = 0
    std::vector<bool> dead(n, false);
    int level = 0;
    bool exhausted = false;
    std::vector<SparseVec<std::vector<int>>> state(n);
    for (int i = 0; i < n; ++i) state[i].add({i}, Rat(1));
    while (level < conilpotency_cap) {
        ++level;
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (dead[i]) continue;
            SparseVec<std::vector<int>> next;
            for (auto& [word, v] : state[i].c) {
                Elt head;
                head.add(word[0], Rat(1));
                for (auto& [jk, v2] : c.delta(head).c) {
                    std::vector<int> w;
                    w.push_back(jk.first);
                    w.push_back(jk.second);
                    w.insert(w.end(), word.begin() + 1, word.end());
                    next.add(w, v * v2);
                }
            }
            state[i] = std::move(next);
            if (state[i].zero())
                dead[i] = true;
            else
                all = false;
        }
        if (all) {
            exhausted = true;
            break;
        }
    }
    if (exhausted) {
        nil.note = "F_" + std::to_string(level) + " exhaustive";
    } else {
        nil.pass = false;
        nil.note = "conilpotency undecided at cap " + std::to_string(conilpotency_cap);
        for (int i = 0; i < n; ++i)
            if (!dead[i]) {
                nil.witness = c.label[i];
                break;
            }
    }
    return r;
}

SparseVec<std::pair<int, int>> DgBialgebra::delta(const Elt& v) const {
    SparseVec<std::pair<int, int>> out;
    for (auto& [i, c] : v.c) {
        auto it = coprod.find(i);
        if (it != coprod.end()) out.axpy(c, it->second);
    }
    return out;
}

bool DgBialgebra::in_window(std::initializer_list<int> basis) const {
    if (max_weight < 0 || weight.empty()) return true;
    long w = 0;
    for (int i : basis) w += weight[i];
    return w <= max_weight;
}

DgCoalgebra DgBialgebra::reduced_coalgebra() const {
    DgCoalgebra c;
    c.name = alg.name + "_reduced";
    int u = alg.unit;
    std::vector<int> remap(alg.dim(), -1);
    for (int i = 0; i < alg.dim(); ++i) {
        if (i == u) continue;
        remap[i] = static_cast<int>(c.label.size());
        c.label.push_back(alg.label[i]);
        c.deg.push_back(alg.deg[i]);
    }
    for (auto& [i, di] : alg.diff) {
        if (i == u) continue;
        Elt e;
        for (auto& [j, v] : di.c)
            if (j != u) e.add(remap[j], v);
        if (!e.zero()) c.diff[remap[i]] = e;
    }
    for (auto& [i, ci] : coprod) {
        if (i == u) continue;
        SparseVec<std::pair<int, int>> e;
        for (auto& [jk, v] : ci.c)
            if (jk.first != u && jk.second != u) e.add({remap[jk.first], remap[jk.second]}, v);
        if (!e.zero()) c.coprod[remap[i]] = e;
    }
    return c;
}

Report check_bialgebra(const DgBialgebra& b, int conilpotency_cap) {
    Report r;
    const DgAlgebra& a = b.alg;
    int n = a.dim();

    // algebra side, restricted to in-window tuples
    auto& d2 = r.add("d_squared_zero");
    for (int i = 0; i < n && d2.pass; ++i)
        if (!a.d(a.d(a.basis(i))).zero()) {
            d2.pass = false;
            d2.witness = a.label[i];
        }

    auto& leib = r.add("leibniz");
    for (int i = 0; i < n && leib.pass; ++i)
        for (int j = 0; j < n && leib.pass; ++j) {
            if (!b.in_window({i, j})) continue;
            Elt lhs = a.d(a.mul_basis(i, j));
            Elt rhs = a.mul(a.d(a.basis(i)), a.basis(j));
            rhs.axpy(sign_pow(a.deg[i]), a.mul(a.basis(i), a.d(a.basis(j))));
            if (!(lhs == rhs)) {
                leib.pass = false;
                leib.witness = a.label[i] + "*" + a.label[j];
            }
        }

    auto& assoc = r.add("associative");
    for (int i = 0; i < n && assoc.pass; ++i)
        for (int j = 0; j < n && assoc.pass; ++j) {
            if (!b.in_window({i, j})) continue;
            for (int k = 0; k < n && assoc.pass; ++k) {
                if (!b.in_window({i, j, k})) continue;
                Elt lhs = a.mul(a.mul_basis(i, j), a.basis(k));
                Elt rhs = a.mul(a.basis(i), a.mul_basis(j, k));
                if (!(lhs == rhs)) {
                    assoc.pass = false;
                    assoc.witness = "(" + a.label[i] + "*" + a.label[j] + ")*" + a.label[k];
                }
            }
        }

    if (a.unit >= 0) {
        auto& u = r.add("unital");
        for (int i = 0; i < n && u.pass; ++i)
            if (!(a.mul_basis(a.unit, i) == a.basis(i)) || !(a.mul_basis(i, a.unit) == a.basis(i))) {
                u.pass = false;
                u.witness = a.label[i];
            }
        auto& gl = r.add("unit_grouplike");
        auto du = b.coprod.find(a.unit);
        SparseVec<std::pair<int, int>> want;
        want.add({a.unit, a.unit}, Rat(1));
        if (du == b.coprod.end() || !(du->second == want)) {
            gl.pass = false;
            gl.witness = "Delta(1)";
        }
    }

    // coalgebra side (full coproduct)
    struct View {
        const DgBialgebra* b;
        Elt d(const Elt& v) const { return b->alg.d(v); }
        SparseVec<std::pair<int, int>> delta(const Elt& v) const { return b->delta(v); }
    } view{&b};

    auto& ca = r.add("coassociative");
    ca.pass = coassoc_witness(view, n, ca.witness, a.label);

    auto& cl = r.add("co_leibniz");
    cl.pass = co_leibniz_witness(view, n, a.deg, cl.witness, a.label);

    // Delta(x*y) = Delta(x)*Delta(y) with the Koszul middle interchange
    auto& inter = r.add("product_coproduct_interchange");
    for (int i = 0; i < n && inter.pass; ++i)
        for (int j = 0; j < n && inter.pass; ++j) {
            if (!b.in_window({i, j})) continue;
            auto lhs = b.delta(a.mul_basis(i, j));
            SparseVec<std::pair<int, int>> rhs;
            auto di = b.delta(a.basis(i));
            auto dj = b.delta(a.basis(j));
            for (auto& [x, vx] : di.c)
                for (auto& [y, vy] : dj.c) {
                    Rat s = vx * vy * sign_pow(static_cast<long>(a.deg[x.second]) * a.deg[y.first]);
                    Elt l = a.mul_basis(x.first, y.first);
                    Elt rgt = a.mul_basis(x.second, y.second);
                    for (auto& [p, vp] : l.c)
                        for (auto& [q, vq] : rgt.c) rhs.add({p, q}, s * vp * vq);
                }
            if (!(lhs == rhs)) {
                inter.pass = false;
                inter.witness = a.label[i] + "*" + a.label[j];
            }
        }

    auto nilrep = check_dg_coalgebra(b.reduced_coalgebra(), conilpotency_cap);
    if (auto* nil = nilrep.find("conilpotent")) {
        auto& c = r.add("conilpotent");
        c = *nil;
        c.name = "conilpotent";
    }
    return r;
}

DgAlgebra dg_algebra_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DgAlgebra a;
    a.name = j.value("name", std::string("input"));
    if (!j.contains("basis") || !j["basis"].is_array()) throw std::invalid_argument("schema: missing basis");
    size_t ml = 0;
    for (auto& e : j["basis"]) {
        a.label.push_back(e.at("label").get<std::string>());
        a.deg.push_back(e.at("degree").get<int>());
        if (e.contains("multidegree")) {
            a.multideg.resize(a.label.size());
            a.multideg.back() = e["multidegree"].get<std::vector<int>>();
            ml = std::max(ml, a.multideg.back().size());
        }
    }
    if (!a.multideg.empty()) {
        a.multideg.resize(a.label.size());
        for (auto& m : a.multideg)
            if (m.size() != ml) throw std::invalid_argument("schema: ragged multidegrees");
    }
    auto idx = [&](const std::string& s) {
        int i = a.find_label(s);
        if (i < 0) throw std::invalid_argument("schema: unknown label " + s);
        return i;
    };
    if (j.contains("unit") && !j["unit"].is_null()) a.unit = idx(j["unit"].get<std::string>());
    if (j.contains("differential"))
        for (auto& e : j["differential"]) {
            int from = idx(e.at("from").get<std::string>());
            a.diff[from].add(idx(e.at("to").get<std::string>()), parse_rat(e.at("coeff").get<std::string>()));
        }
    if (j.contains("product"))
        for (auto& e : j["product"]) {
            int l = idx(e.at("left").get<std::string>());
            int rr = idx(e.at("right").get<std::string>());
            Elt res;
            for (auto& t : e.at("result")) res.add(idx(t.at("label").get<std::string>()), parse_rat(t.at("coeff").get<std::string>()));
            if (!res.zero()) a.prod[{l, rr}] = res;
        }
    return a;
}

std::string dg_algebra_schema() {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["name"] = "optional string";
    j["basis"] = nlohmann::ordered_json::array(
        {{{"label", "string"}, {"degree", "int"}, {"multidegree", "optional [int]"}}});
    j["unit"] = "label or null";
    j["differential"] = nlohmann::ordered_json::array({{{"from", "label"}, {"to", "label"}, {"coeff", "p/q"}}});
    j["product"] = nlohmann::ordered_json::array(
        {{{"left", "label"}, {"right", "label"}, {"result", nlohmann::ordered_json::array({{{"label", "label"}, {"coeff", "p/q"}}})}}});
    return j.dump(2) + "\n";
}

} // namespace barq
