#include "barq/monoid.hpp"

#include <json.hpp>

#include <algorithm>

namespace barq {

namespace {

Elt apply_table(const std::map<int, Elt>& t, const Elt& v) {
    Elt out;
    for (auto& [i, c] : v.c) {
        auto it = t.find(i);
        if (it != t.end()) out.axpy(c, it->second);
    }
    return out;
}

} // namespace

int GLMonoid::tuple_index(const std::vector<int>& letters) const {
    int d = base->dim();
    int idx = 0;
    for (int t : letters) idx = idx * d + t;
    return idx;
}

std::vector<int> GLMonoid::tuple_letters(int n, int index) const {
    int d = base->dim();
    std::vector<int> t(n);
    for (int k = n - 1; k >= 0; --k) {
        t[k] = index % d;
        index /= d;
    }
    return t;
}

Elt GLMonoid::apply_face(int n, int i, const Elt& v) const {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("face index out of range");
    return apply_table(face[n][i - 1], v);
}

Elt GLMonoid::apply_degen(int n, int j, const Elt& v) const {
    if (n >= Nmax || j < 0 || j > n) throw std::invalid_argument("degeneracy index out of range");
    return apply_table(degen[n][j], v);
}

Elt GLMonoid::apply_diff(int n, const Elt& v) const { return apply_table(diff[n], v); }

SparseVec<std::pair<int, int>> GLMonoid::apply_beta(int n, int a, const Elt& v) const {
    if (a < 0 || a > n) throw std::invalid_argument("beta index out of range");
    SparseVec<std::pair<int, int>> out;
    for (auto& [i, c] : v.c) {
        auto it = beta[n][a].find(i);
        if (it != beta[n][a].end()) out.axpy(c, it->second);
    }
    return out;
}

Elt GLMonoid::mul_basis(int n, int i, int j) const {
    switch (pk) {
    case ProdKind::Table: {
        auto it = prod_table[n].find({i, j});
        return it == prod_table[n].end() ? Elt{} : it->second;
    }
    case ProdKind::TensorPower: {
        if (n == 0) {
            Elt e;
            e.add(0, Rat(1));
            return e;
        }
        auto u = tuple_letters(n, i);
        auto v = tuple_letters(n, j);
        long sign = 0;
        for (int l = 0; l < n; ++l)
            for (int k = l + 1; k < n; ++k) sign += static_cast<long>(base->deg[v[l]]) * base->deg[u[k]];
        // expand slotwise products
        std::map<std::vector<int>, Rat> acc;
        acc[{}] = sign_pow(sign);
        for (int k = 0; k < n; ++k) {
            std::map<std::vector<int>, Rat> next;
            Elt p = base->mul_basis(u[k], v[k]);
            for (auto& [pref, c] : acc)
                for (auto& [t, ct] : p.c) {
                    auto w = pref;
                    w.push_back(t);
                    auto& slot = next[w];
                    slot += c * ct;
                }
            acc = std::move(next);
            if (acc.empty()) break;
        }
        Elt out;
        for (auto& [w, c] : acc) out.add(tuple_index(w), c);
        return out;
    }
    case ProdKind::Tensor: {
        int dr = right_factor->comp[n].dim();
        int xl = i / dr, xr = i % dr;
        int yl = j / dr, yr = j % dr;
        Rat s = sign_pow(static_cast<long>(right_factor->comp[n].total(xr)) * left_factor->comp[n].total(yl));
        Elt l = left_factor->mul_basis(n, xl, yl);
        Elt r = right_factor->mul_basis(n, xr, yr);
        Elt out;
        for (auto& [a, ca] : l.c)
            for (auto& [b, cb] : r.c) out.add(a * dr + b, s * ca * cb);
        return out;
    }
    default:
        throw std::logic_error("monoid has no products (not algebra-flagged)");
    }
}

Elt GLMonoid::mul(int n, const Elt& x, const Elt& y) const {
    Elt out;
    for (auto& [i, ci] : x.c)
        for (auto& [j, cj] : y.c) out.axpy(ci * cj, mul_basis(n, i, j));
    return out;
}

Elt GLMonoid::act(const D0Map& f, const Elt& v) const {
    if (f.dst > Nmax || f.src > Nmax) throw std::invalid_argument("act: object outside window");
    Elt cur = v;
    int level = f.dst;
    for (auto& g : d0_factor(f)) {
        if (g.kind == D0Generator::Face) {
            // f_i: [s] -> [s+1] acts X_{s+1} -> X_s
            if (level != g.src_size + 1) throw std::logic_error("act: face chain mismatch");
            cur = apply_face(level, g.index, cur);
            level = g.src_size;
        } else {
            // delta_j: [s] -> [s-1] acts X_{s-1} -> X_s
            if (level != g.src_size - 1) throw std::logic_error("act: degeneracy chain mismatch");
            cur = apply_degen(level, g.index, cur);
            level = g.src_size;
        }
    }
    if (level != f.src) throw std::logic_error("act: factorization did not land on source");
    return cur;
}

Elt GLMonoid::w_action(int k, int n, const Elt& v) const { return act(d0_w(k, n), v); }

std::string GLMonoid::elt_name(int n, const Elt& v) const {
    if (v.zero()) return "0";
    std::string s = "X_" + std::to_string(n) + "(";
    bool first = true;
    for (auto& [i, c] : v.c) {
        if (!first) s += " + ";
        first = false;
        s += to_string(c) + "*" + comp[n].label[i];
    }
    return s + ")";
}

FiniteComplex GLMonoid::component_complex(int n) const {
    FiniteComplex cx;
    const Comp& c = comp[n];
    if (c.dim() == 0) {
        cx.lo = 0;
        cx.dims = {0};
        return cx;
    }
    int lo = c.total(0), hi = c.total(0);
    for (int i = 0; i < c.dim(); ++i) {
        lo = std::min(lo, c.total(i));
        hi = std::max(hi, c.total(i));
    }
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::vector<int> pos(c.dim());
    for (int i = 0; i < c.dim(); ++i) pos[i] = static_cast<int>(cx.dims[c.total(i) - lo]++);
    cx.d.assign(cx.dims.size() - 1, SpMat());
    for (size_t k = 0; k + 1 < cx.dims.size(); ++k)
        cx.d[k] = SpMat(static_cast<int>(cx.dims[k + 1]), static_cast<int>(cx.dims[k]));
    for (auto& [i, di] : diff[n])
        for (auto& [j, v] : di.c) cx.d[c.total(i) - lo].add(pos[j], pos[i], v);
    return cx;
}

GLMonoid from_dg_algebra(const DgAlgebra& a, int n_max) {
    if (a.unit < 0)
        throw std::invalid_argument("from_dg_algebra: non-unital algebra, degeneracies are undefined");
    GLMonoid m;
    m.name = a.name;
    m.Nmax = n_max;
    m.algebra = true;
    m.pk = GLMonoid::ProdKind::TensorPower;
    m.base = std::make_shared<DgAlgebra>(a);
    int d = a.dim();

    m.comp.resize(n_max + 1);
    m.face.resize(n_max + 1);
    m.degen.resize(n_max + 1);
    m.beta.resize(n_max + 1);
    m.diff.resize(n_max + 1);
    m.unit.assign(n_max + 1, -1);

    for (int n = 0; n <= n_max; ++n) {
        long dim = 1;
        for (int k = 0; k < n; ++k) dim *= d;
        auto& c = m.comp[n];
        c.mdeg.resize(dim);
        c.label.resize(dim);
        for (long i = 0; i < dim; ++i) {
            auto t = m.tuple_letters(n, static_cast<int>(i));
            std::vector<int> md(n);
            std::string lab = "(";
            for (int k = 0; k < n; ++k) {
                md[k] = a.deg[t[k]];
                lab += (k ? "," : "") + a.label[t[k]];
            }
            c.mdeg[i] = md;
            c.label[i] = lab + ")";
        }
        // unit word
        std::vector<int> u(n, a.unit);
        m.unit[n] = m.tuple_index(u);
    }

    for (int n = 0; n <= n_max; ++n) {
        int dim = m.comp[n].dim();
        // faces
        if (n >= 2) {
            m.face[n].resize(n - 1);
            for (int i = 1; i <= n - 1; ++i) {
                for (int idx = 0; idx < dim; ++idx) {
                    auto t = m.tuple_letters(n, idx);
                    Elt p = a.mul_basis(t[i - 1], t[i]);
                    Elt out;
                    for (auto& [k, ck] : p.c) {
                        auto w = t;
                        w.erase(w.begin() + i);
                        w[i - 1] = k;
                        out.add(m.tuple_index(w), ck);
                    }
                    if (!out.zero()) m.face[n][i - 1][idx] = out;
                }
            }
        }
        // degeneracies
        if (n < n_max) {
            m.degen[n].resize(n + 1);
            for (int j = 0; j <= n; ++j)
                for (int idx = 0; idx < dim; ++idx) {
                    auto t = m.tuple_letters(n, idx);
                    auto w = t;
                    w.insert(w.begin() + j, a.unit);
                    Elt out;
                    out.add(m.tuple_index(w), Rat(1));
                    m.degen[n][j][idx] = out;
                }
        }
        // beta: identity split
        m.beta[n].resize(n + 1);
        for (int split = 0; split <= n; ++split)
            for (int idx = 0; idx < dim; ++idx) {
                auto t = m.tuple_letters(n, idx);
                std::vector<int> l(t.begin(), t.begin() + split), r(t.begin() + split, t.end());
                SparseVec<std::pair<int, int>> out;
                out.add({m.tuple_index(l), m.tuple_index(r)}, Rat(1));
                m.beta[n][split][idx] = out;
            }
        // internal differential, slotwise with Koszul prefixes
        for (int idx = 0; idx < dim; ++idx) {
            auto t = m.tuple_letters(n, idx);
            Elt out;
            long pre = 0;
            for (int k = 0; k < n; ++k) {
                auto it = a.diff.find(t[k]);
                if (it != a.diff.end()) {
                    for (auto& [to, c] : it->second.c) {
                        auto w = t;
                        w[k] = to;
                        out.add(m.tuple_index(w), sign_pow(pre) * c);
                    }
                }
                pre += a.deg[t[k]];
            }
            if (!out.zero()) m.diff[n][idx] = out;
        }
    }
    return m;
}

GLMonoid tensor_monoid(const GLMonoid& x, const GLMonoid& y) {
    if (x.Nmax != y.Nmax) throw std::invalid_argument("tensor_monoid: N_max mismatch");
    GLMonoid m;
    m.name = x.name + "(x)" + y.name;
    m.Nmax = x.Nmax;
    m.algebra = x.algebra && y.algebra;
    m.pk = m.algebra ? GLMonoid::ProdKind::Tensor : GLMonoid::ProdKind::None;
    m.left_factor = std::make_shared<GLMonoid>(x);
    m.right_factor = std::make_shared<GLMonoid>(y);

    int N = m.Nmax;
    m.comp.resize(N + 1);
    m.face.resize(N + 1);
    m.degen.resize(N + 1);
    m.beta.resize(N + 1);
    m.diff.resize(N + 1);
    m.unit.assign(N + 1, -1);

    for (int n = 0; n <= N; ++n) {
        int dx = x.comp[n].dim(), dy = y.comp[n].dim();
        auto& c = m.comp[n];
        c.mdeg.resize(static_cast<size_t>(dx) * dy);
        c.label.resize(static_cast<size_t>(dx) * dy);
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j) {
                std::vector<int> md(n);
                for (int k = 0; k < n; ++k) md[k] = x.comp[n].mdeg[i][k] + y.comp[n].mdeg[j][k];
                c.mdeg[static_cast<size_t>(i) * dy + j] = md;
                c.label[static_cast<size_t>(i) * dy + j] = x.comp[n].label[i] + "|" + y.comp[n].label[j];
            }
        if (m.algebra) m.unit[n] = x.unit[n] * dy + y.unit[n];
    }

    auto pair_idx = [&](int n, int i, int j) { return i * y.comp[n].dim() + j; };

    for (int n = 0; n <= N; ++n) {
        int dx = x.comp[n].dim(), dy = y.comp[n].dim();
        if (n >= 2) {
            m.face[n].resize(n - 1);
            for (int fi = 1; fi <= n - 1; ++fi)
                for (int i = 0; i < dx; ++i) {
                    auto xi = x.face[n][fi - 1].find(i);
                    if (xi == x.face[n][fi - 1].end()) continue;
                    for (int j = 0; j < dy; ++j) {
                        auto yj = y.face[n][fi - 1].find(j);
                        if (yj == y.face[n][fi - 1].end()) continue;
                        Elt out;
                        for (auto& [a, ca] : xi->second.c)
                            for (auto& [b, cb] : yj->second.c) out.add(pair_idx(n - 1, a, b), ca * cb);
                        if (!out.zero()) m.face[n][fi - 1][pair_idx(n, i, j)] = out;
                    }
                }
        }
        if (n < N) {
            m.degen[n].resize(n + 1);
            for (int dj = 0; dj <= n; ++dj)
                for (int i = 0; i < dx; ++i) {
                    auto xi = x.degen[n][dj].find(i);
                    if (xi == x.degen[n][dj].end()) continue;
                    for (int j = 0; j < dy; ++j) {
                        auto yj = y.degen[n][dj].find(j);
                        if (yj == y.degen[n][dj].end()) continue;
                        Elt out;
                        for (auto& [a, ca] : xi->second.c)
                            for (auto& [b, cb] : yj->second.c) out.add(pair_idx(n + 1, a, b), ca * cb);
                        if (!out.zero()) m.degen[n][dj][pair_idx(n, i, j)] = out;
                    }
                }
        }
        // beta with the interchange sign (second x-factor past first y-factor)
        m.beta[n].resize(n + 1);
        for (int a = 0; a <= n; ++a) {
            int b = n - a;
            for (int i = 0; i < dx; ++i) {
                auto bx = x.beta[n][a].find(i);
                if (bx == x.beta[n][a].end()) continue;
                for (int j = 0; j < dy; ++j) {
                    auto by = y.beta[n][a].find(j);
                    if (by == y.beta[n][a].end()) continue;
                    SparseVec<std::pair<int, int>> out;
                    for (auto& [xp, cx] : bx->second.c)
                        for (auto& [yp, cy] : by->second.c) {
                            long s = static_cast<long>(x.comp[b].total(xp.second)) * y.comp[a].total(yp.first);
                            out.add({pair_idx(a, xp.first, yp.first), pair_idx(b, xp.second, yp.second)},
                                    sign_pow(s) * cx * cy);
                        }
                    if (!out.zero()) m.beta[n][a][pair_idx(n, i, j)] = out;
                }
            }
        }
        // tensor differential
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j) {
                Elt out;
                auto xi = x.diff[n].find(i);
                if (xi != x.diff[n].end())
                    for (auto& [a, ca] : xi->second.c) out.add(pair_idx(n, a, j), ca);
                auto yj = y.diff[n].find(j);
                if (yj != y.diff[n].end())
                    for (auto& [b, cb] : yj->second.c)
                        out.add(pair_idx(n, i, b), sign_pow(x.comp[n].total(i)) * cb);
                if (!out.zero()) m.diff[n][pair_idx(n, i, j)] = out;
            }
    }
    return m;
}

SharpView sharp(const GLMonoid& m) { return SharpView{&m}; }

Elt SharpView::face(int n, int i, const Elt& v) const {
    Elt out;
    for (auto& [idx, c] : v.c) {
        long s = 0;
        for (int k = 0; k < i; ++k) s += m->comp[n].mdeg[idx][k];
        Elt e;
        e.add(idx, sign_pow(s) * c);
        out.axpy(Rat(1), m->apply_face(n, i, e));
    }
    return out;
}

Elt SharpView::degen(int n, int j, const Elt& v) const {
    Elt out;
    for (auto& [idx, c] : v.c) {
        long s = 0;
        for (int k = 0; k < j; ++k) s += m->comp[n].mdeg[idx][k];
        Elt e;
        e.add(idx, sign_pow(s) * c);
        out.axpy(Rat(1), m->apply_degen(n, j, e));
    }
    return out;
}

namespace {

Elt basis_elt(int i) {
    Elt e;
    e.add(i, Rat(1));
    return e;
}

// complex of X_a (x) X_b on an explicit window, pairs indexed lexicographically
FiniteComplex pair_complex(const GLMonoid& m, int a, int b, int lo, int hi) {
    int da = m.comp[a].dim(), db = m.comp[b].dim();
    FiniteComplex cx;
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::vector<int> pos(static_cast<size_t>(da) * db);
    std::vector<int> tot(static_cast<size_t>(da) * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            int t = m.comp[a].total(i) + m.comp[b].total(j);
            tot[static_cast<size_t>(i) * db + j] = t;
            pos[static_cast<size_t>(i) * db + j] = static_cast<int>(cx.dims[t - lo]++);
        }
    cx.d.assign(cx.dims.size() - 1, SpMat());
    for (size_t k = 0; k + 1 < cx.dims.size(); ++k)
        cx.d[k] = SpMat(static_cast<int>(cx.dims[k + 1]), static_cast<int>(cx.dims[k]));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            int src = i * db + j;
            auto di = m.diff[a].find(i);
            if (di != m.diff[a].end())
                for (auto& [i2, c] : di->second.c)
                    cx.d[tot[src] - lo].add(pos[static_cast<size_t>(i2) * db + j], pos[src], c);
            auto dj = m.diff[b].find(j);
            if (dj != m.diff[b].end())
                for (auto& [j2, c] : dj->second.c)
                    cx.d[tot[src] - lo].add(pos[static_cast<size_t>(i) * db + j2], pos[src],
                                            sign_pow(m.comp[a].total(i)) * c);
        }
    return cx;
}

FiniteComplex component_complex_window(const GLMonoid& m, int n, int lo, int hi) {
    FiniteComplex cx;
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::vector<int> pos(m.comp[n].dim());
    for (int i = 0; i < m.comp[n].dim(); ++i) pos[i] = static_cast<int>(cx.dims[m.comp[n].total(i) - lo]++);
    cx.d.assign(cx.dims.size() - 1, SpMat());
    for (size_t k = 0; k + 1 < cx.dims.size(); ++k)
        cx.d[k] = SpMat(static_cast<int>(cx.dims[k + 1]), static_cast<int>(cx.dims[k]));
    for (auto& [i, di] : m.diff[n])
        for (auto& [j, v] : di.c) cx.d[m.comp[n].total(i) - lo].add(pos[j], pos[i], v);
    return cx;
}

} // namespace

Report check_monoid(const GLMonoid& m, CheckMonoidOptions opt) {
    Report r;
    int N = m.Nmax;

    auto& unitcomp = r.add("X0_is_ground_field");
    if (m.comp[0].dim() != 1 || !m.comp[0].mdeg[0].empty()) {
        unitcomp.pass = false;
        unitcomp.witness = "X_0 has dim " + std::to_string(m.comp[0].dim());
    }

    // multidegree behaviour of F, D, beta
    auto& grad = r.add("action_gradings");
    for (int n = 2; n <= N && grad.pass; ++n)
        for (int i = 1; i <= n - 1 && grad.pass; ++i)
            for (auto& [src, out] : m.face[n][i - 1]) {
                std::vector<int> want = m.comp[n].mdeg[src];
                want[i - 1] += want[i];
                want.erase(want.begin() + i);
                for (auto& [dst, c] : out.c)
                    if (m.comp[n - 1].mdeg[dst] != want) {
                        grad.pass = false;
                        grad.witness = "F_" + std::to_string(i) + " on " + m.comp[n].label[src];
                    }
            }
    for (int n = 0; n < N && grad.pass; ++n)
        for (int j = 0; j <= n && grad.pass; ++j)
            for (auto& [src, out] : m.degen[n][j]) {
                std::vector<int> want = m.comp[n].mdeg[src];
                want.insert(want.begin() + j, 0);
                for (auto& [dst, c] : out.c)
                    if (m.comp[n + 1].mdeg[dst] != want) {
                        grad.pass = false;
                        grad.witness = "D_" + std::to_string(j) + " on " + m.comp[n].label[src];
                    }
            }
    for (int n = 0; n <= N && grad.pass; ++n)
        for (int a = 0; a <= n && grad.pass; ++a)
            for (auto& [src, out] : m.beta[n][a]) {
                auto& md = m.comp[n].mdeg[src];
                for (auto& [pq, c] : out.c) {
                    std::vector<int> cat = m.comp[a].mdeg[pq.first];
                    auto& rightmd = m.comp[n - a].mdeg[pq.second];
                    cat.insert(cat.end(), rightmd.begin(), rightmd.end());
                    if (cat != md) {
                        grad.pass = false;
                        grad.witness = "beta_{" + std::to_string(a) + "," + std::to_string(n - a) + "} on " +
                                       m.comp[n].label[src];
                    }
                }
            }

    // differential: degree +1, raises exactly one multidegree slot
    auto& dgr = r.add("differential_slots");
    for (int n = 0; n <= N && dgr.pass; ++n)
        for (auto& [i, di] : m.diff[n])
            for (auto& [j, c] : di.c) {
                int raised = 0;
                bool ok = true;
                for (int k = 0; k < n; ++k) {
                    int dd = m.comp[n].mdeg[j][k] - m.comp[n].mdeg[i][k];
                    if (dd == 1)
                        ++raised;
                    else if (dd != 0)
                        ok = false;
                }
                if (!ok || raised != 1) {
                    dgr.pass = false;
                    dgr.witness = "d on " + m.comp[n].label[i];
                }
            }
    auto& dsq = r.add("internal_d_squared");
    for (int n = 0; n <= N && dsq.pass; ++n)
        for (int i = 0; i < m.comp[n].dim() && dsq.pass; ++i)
            if (!m.apply_diff(n, m.apply_diff(n, basis_elt(i))).zero()) {
                dsq.pass = false;
                dsq.witness = m.comp[n].label[i];
            }

    // restricted simplicial identities
    auto& simp = r.add("simplicial_identities");
    auto fail_simp = [&](const std::string& what, int n, int i) {
        simp.pass = false;
        simp.witness = what + " at level " + std::to_string(n) + " on " + m.comp[n].label[i];
    };
    for (int n = 2; n <= N; ++n) {
        int dim = m.comp[n].dim();
        // F_i F_j = F_{j-1} F_i, i < j (operators out of X_n)
        for (int j = 2; j <= n - 1 && simp.pass; ++j)
            for (int i = 1; i < j && simp.pass; ++i) {
                if (i > n - 2) continue;
                for (int b = 0; b < dim && simp.pass; ++b) {
                    Elt lhs = m.apply_face(n - 1, i, m.apply_face(n, j, basis_elt(b)));
                    Elt rhs = m.apply_face(n - 1, j - 1, m.apply_face(n, i, basis_elt(b)));
                    if (!(lhs == rhs))
                        fail_simp("F_" + std::to_string(i) + "F_" + std::to_string(j) + " = F_" +
                                      std::to_string(j - 1) + "F_" + std::to_string(i),
                                  n, b);
                }
            }
    }
    for (int n = 0; n + 2 <= N && simp.pass; ++n) {
        int dim = m.comp[n].dim();
        // D_i D_j = D_{j+1} D_i, i <= j (operators out of X_n)
        for (int j = 0; j <= n && simp.pass; ++j)
            for (int i = 0; i <= j && simp.pass; ++i)
                for (int b = 0; b < dim && simp.pass; ++b) {
                    Elt lhs = m.apply_degen(n + 1, i, m.apply_degen(n, j, basis_elt(b)));
                    Elt rhs = m.apply_degen(n + 1, j + 1, m.apply_degen(n, i, basis_elt(b)));
                    if (!(lhs == rhs))
                        fail_simp("D_" + std::to_string(i) + "D_" + std::to_string(j) + " = D_" +
                                      std::to_string(j + 1) + "D_" + std::to_string(i),
                                  n, b);
                }
    }
    for (int n = 0; n + 1 <= N && simp.pass; ++n) {
        int dim = m.comp[n].dim();
        // F_i D_j on X_n (D_j: X_n -> X_{n+1}, then F_i: X_{n+1} -> X_n)
        for (int j = 0; j <= n && simp.pass; ++j)
            for (int i = 1; i <= n && simp.pass; ++i)
                for (int b = 0; b < dim && simp.pass; ++b) {
                    Elt lhs = m.apply_face(n + 1, i, m.apply_degen(n, j, basis_elt(b)));
                    Elt rhs;
                    std::string name;
                    if (i == j || i == j + 1) {
                        rhs = basis_elt(b);
                        name = "F_" + std::to_string(i) + "D_" + std::to_string(j) + " = id";
                    } else if (i < j) {
                        rhs = m.apply_degen(n - 1, j - 1, m.apply_face(n, i, basis_elt(b)));
                        name = "F_" + std::to_string(i) + "D_" + std::to_string(j) + " = D_" +
                               std::to_string(j - 1) + "F_" + std::to_string(i);
                    } else { // i > j + 1
                        rhs = m.apply_degen(n - 1, j, m.apply_face(n, i - 1, basis_elt(b)));
                        name = "F_" + std::to_string(i) + "D_" + std::to_string(j) + " = D_" +
                               std::to_string(j) + "F_" + std::to_string(i - 1);
                    }
                    if (!(lhs == rhs)) fail_simp(name, n, b);
                }
    }

    // colax coherence and unit edges
    auto& colax = r.add("colax_coherence");
    for (int n = 0; n <= N && colax.pass; ++n)
        for (int a = 0; a <= n && colax.pass; ++a)
            for (int b = 0; a + b <= n && colax.pass; ++b) {
                int c3 = n - a - b;
                for (int src = 0; src < m.comp[n].dim() && colax.pass; ++src) {
                    SparseVec<std::tuple<int, int, int>> lhs, rhs;
                    for (auto& [pq, v] : m.apply_beta(n, a + b, basis_elt(src)).c) {
                        Elt l = basis_elt(pq.first);
                        for (auto& [lm, v2] : m.apply_beta(a + b, a, l).c)
                            lhs.add({lm.first, lm.second, pq.second}, v * v2);
                    }
                    for (auto& [pq, v] : m.apply_beta(n, a, basis_elt(src)).c) {
                        Elt rr = basis_elt(pq.second);
                        for (auto& [lm, v2] : m.apply_beta(n - a, b, rr).c)
                            rhs.add({pq.first, lm.first, lm.second}, v * v2);
                    }
                    if (!(lhs == rhs)) {
                        colax.pass = false;
                        colax.witness = "beta coherence (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c3) + ") on " + m.comp[n].label[src];
                    }
                }
            }
    auto& colax_unit = r.add("colax_unit_edges");
    for (int n = 0; n <= N && colax_unit.pass; ++n)
        for (int src = 0; src < m.comp[n].dim() && colax_unit.pass; ++src) {
            SparseVec<std::pair<int, int>> want_l, want_r;
            want_l.add({0, src}, Rat(1));
            want_r.add({src, 0}, Rat(1));
            if (!(m.apply_beta(n, 0, basis_elt(src)) == want_l) ||
                !(m.apply_beta(n, n, basis_elt(src)) == want_r)) {
                colax_unit.pass = false;
                colax_unit.witness = m.comp[n].label[src];
            }
        }

    // beta is a map of bifunctors: commutation with D and F across the split
    auto& bif = r.add("beta_bifunctor");
    for (int n = 1; n <= N && bif.pass; ++n) {
        // degeneracies: beta_{a,b} D_s, on X_{n-1}
        for (int a = 0; a <= n && bif.pass; ++a) {
            int b = n - a;
            for (int s = 0; s <= n - 1 && bif.pass; ++s)
                for (int src = 0; src < m.comp[n - 1].dim() && bif.pass; ++src) {
                    auto lhs = m.apply_beta(n, a, m.apply_degen(n - 1, s, basis_elt(src)));
                    SparseVec<std::pair<int, int>> rhs;
                    if (s <= a - 1) {
                        for (auto& [pq, v] : m.apply_beta(n - 1, a - 1, basis_elt(src)).c)
                            for (auto& [p2, v2] : m.apply_degen(a - 1, s, basis_elt(pq.first)).c)
                                rhs.add({p2, pq.second}, v * v2);
                    } else {
                        for (auto& [pq, v] : m.apply_beta(n - 1, a, basis_elt(src)).c)
                            for (auto& [q2, v2] : m.apply_degen(b - 1, s - a, basis_elt(pq.second)).c)
                                rhs.add({pq.first, q2}, v * v2);
                    }
                    if (!(lhs == rhs)) {
                        bif.pass = false;
                        bif.witness = "beta_{" + std::to_string(a) + "," + std::to_string(b) + "} D_" +
                                      std::to_string(s) + " on " + m.comp[n - 1].label[src];
                    }
                }
        }
        // faces: beta_{a,b} F_i, on X_{n+1} (n+1 <= N)
        if (n + 1 <= N) {
            for (int a = 0; a <= n && bif.pass; ++a) {
                int b = n - a;
                for (int i = 1; i <= n && bif.pass; ++i)
                    for (int src = 0; src < m.comp[n + 1].dim() && bif.pass; ++src) {
                        auto lhs = m.apply_beta(n, a, m.apply_face(n + 1, i, basis_elt(src)));
                        SparseVec<std::pair<int, int>> rhs;
                        if (i <= a) {
                            for (auto& [pq, v] : m.apply_beta(n + 1, a + 1, basis_elt(src)).c)
                                for (auto& [p2, v2] : m.apply_face(a + 1, i, basis_elt(pq.first)).c)
                                    rhs.add({p2, pq.second}, v * v2);
                        } else {
                            for (auto& [pq, v] : m.apply_beta(n + 1, a, basis_elt(src)).c)
                                for (auto& [q2, v2] : m.apply_face(b + 1, i - a, basis_elt(pq.second)).c)
                                    rhs.add({pq.first, q2}, v * v2);
                        }
                        if (!(lhs == rhs)) {
                            bif.pass = false;
                            bif.witness = "beta_{" + std::to_string(a) + "," + std::to_string(b) + "} F_" +
                                          std::to_string(i) + " on " + m.comp[n + 1].label[src];
                        }
                    }
            }
        }
    }

    // the Delta_0 actions and beta are chain maps
    auto& chain = r.add("actions_chain_maps");
    for (int n = 2; n <= N && chain.pass; ++n)
        for (int i = 1; i <= n - 1 && chain.pass; ++i)
            for (int b = 0; b < m.comp[n].dim() && chain.pass; ++b) {
                Elt lhs = m.apply_diff(n - 1, m.apply_face(n, i, basis_elt(b)));
                Elt rhs = m.apply_face(n, i, m.apply_diff(n, basis_elt(b)));
                if (!(lhs == rhs)) {
                    chain.pass = false;
                    chain.witness = "F_" + std::to_string(i) + " on " + m.comp[n].label[b];
                }
            }
    for (int n = 0; n < N && chain.pass; ++n)
        for (int j = 0; j <= n && chain.pass; ++j)
            for (int b = 0; b < m.comp[n].dim() && chain.pass; ++b) {
                Elt lhs = m.apply_diff(n + 1, m.apply_degen(n, j, basis_elt(b)));
                Elt rhs = m.apply_degen(n, j, m.apply_diff(n, basis_elt(b)));
                if (!(lhs == rhs)) {
                    chain.pass = false;
                    chain.witness = "D_" + std::to_string(j) + " on " + m.comp[n].label[b];
                }
            }
    for (int n = 0; n <= N && chain.pass; ++n)
        for (int a = 0; a <= n && chain.pass; ++a)
            for (int b = 0; b < m.comp[n].dim() && chain.pass; ++b) {
                auto lhs = m.apply_beta(n, a, m.apply_diff(n, basis_elt(b)));
                SparseVec<std::pair<int, int>> rhs;
                for (auto& [pq, v] : m.apply_beta(n, a, basis_elt(b)).c) {
                    for (auto& [p2, v2] : m.apply_diff(a, basis_elt(pq.first)).c) rhs.add({p2, pq.second}, v * v2);
                    for (auto& [q2, v2] : m.apply_diff(n - a, basis_elt(pq.second)).c)
                        rhs.add({pq.first, q2}, v * v2 * sign_pow(m.comp[a].total(pq.first)));
                }
                if (!(lhs == rhs)) {
                    chain.pass = false;
                    chain.witness = "beta_{" + std::to_string(a) + "," + std::to_string(n - a) + "} on " +
                                    m.comp[n].label[b];
                }
            }

    // beta_{a,b} is a quasi-isomorphism: acyclic cone on the finite window
    if (opt.quasi_iso) {
        auto& qi = r.add("beta_quasi_iso");
        for (int n = 0; n <= N && qi.pass; ++n)
            for (int a = 0; a <= n && qi.pass; ++a) {
                int b = n - a;
                int lo = 0, hi = 0;
                bool first = true;
                auto widen = [&](int t) {
                    if (first) {
                        lo = hi = t;
                        first = false;
                    } else {
                        lo = std::min(lo, t);
                        hi = std::max(hi, t);
                    }
                };
                for (int i = 0; i < m.comp[n].dim(); ++i) widen(m.comp[n].total(i));
                for (int i = 0; i < m.comp[a].dim(); ++i)
                    for (int j = 0; j < m.comp[b].dim(); ++j) widen(m.comp[a].total(i) + m.comp[b].total(j));
                if (first) continue;
                FiniteComplex src = component_complex_window(m, n, lo, hi);
                FiniteComplex dst = pair_complex(m, a, b, lo, hi);
                // position maps mirror the builders above
                std::vector<int> spos(m.comp[n].dim());
                {
                    std::vector<int> cnt(hi - lo + 1, 0);
                    for (int i = 0; i < m.comp[n].dim(); ++i) spos[i] = cnt[m.comp[n].total(i) - lo]++;
                }
                int db = m.comp[b].dim();
                std::vector<int> dpos(static_cast<size_t>(m.comp[a].dim()) * db);
                {
                    std::vector<int> cnt(hi - lo + 1, 0);
                    for (int i = 0; i < m.comp[a].dim(); ++i)
                        for (int j = 0; j < db; ++j)
                            dpos[static_cast<size_t>(i) * db + j] =
                                cnt[m.comp[a].total(i) + m.comp[b].total(j) - lo]++;
                }
                ChainMap f;
                f.src = &src;
                f.dst = &dst;
                f.f.assign(src.dims.size(), SpMat());
                for (size_t k = 0; k < src.dims.size(); ++k)
                    f.f[k] = SpMat(static_cast<int>(dst.dims[k]), static_cast<int>(src.dims[k]));
                for (int i = 0; i < m.comp[n].dim(); ++i)
                    for (auto& [pq, v] : m.apply_beta(n, a, basis_elt(i)).c)
                        f.f[m.comp[n].total(i) - lo].add(dpos[static_cast<size_t>(pq.first) * db + pq.second],
                                                         spos[i], v);
                if (!is_quasi_iso(f)) {
                    qi.pass = false;
                    qi.witness = "beta_{" + std::to_string(a) + "," + std::to_string(b) + "}";
                }
            }
    }

    if (m.algebra) {
        auto& alg = r.add("components_are_dg_algebras");
        for (int n = 0; n <= N && alg.pass; ++n) {
            long dim = m.comp[n].dim();
            // Leibniz and unit laws, quadratic
            for (int i = 0; i < dim && alg.pass; ++i) {
                if (!(m.mul_basis(n, m.unit[n], i) == basis_elt(i)) ||
                    !(m.mul_basis(n, i, m.unit[n]) == basis_elt(i))) {
                    alg.pass = false;
                    alg.witness = "unit law at " + m.comp[n].label[i];
                }
                for (int j = 0; j < dim && alg.pass; ++j) {
                    Elt lhs = m.apply_diff(n, m.mul_basis(n, i, j));
                    Elt rhs = m.mul(n, m.apply_diff(n, basis_elt(i)), basis_elt(j));
                    rhs.axpy(sign_pow(m.comp[n].total(i)), m.mul(n, basis_elt(i), m.apply_diff(n, basis_elt(j))));
                    if (!(lhs == rhs)) {
                        alg.pass = false;
                        alg.witness = "Leibniz at " + m.comp[n].label[i] + " * " + m.comp[n].label[j];
                    }
                    // product respects the Z^n grading
                    std::vector<int> want = m.comp[n].mdeg[i];
                    for (int k = 0; k < n; ++k) want[k] += m.comp[n].mdeg[j][k];
                    for (auto& [t, c] : m.mul_basis(n, i, j).c)
                        if (m.comp[n].mdeg[t] != want) {
                            alg.pass = false;
                            alg.witness = "graded product at " + m.comp[n].label[i] + " * " + m.comp[n].label[j];
                        }
                }
            }
            if (dim * dim * dim <= opt.cubic_budget) {
                for (int i = 0; i < dim && alg.pass; ++i)
                    for (int j = 0; j < dim && alg.pass; ++j)
                        for (int k = 0; k < dim && alg.pass; ++k) {
                            Elt lhs = m.mul(n, m.mul_basis(n, i, j), basis_elt(k));
                            Elt rhs = m.mul(n, basis_elt(i), m.mul_basis(n, j, k));
                            if (!(lhs == rhs)) {
                                alg.pass = false;
                                alg.witness = "associativity at level " + std::to_string(n);
                            }
                        }
            } else if (m.pk != GLMonoid::ProdKind::Table) {
                alg.note += "associativity at level " + std::to_string(n) + " delegated to factors; ";
            }
        }

        auto& maps = r.add("actions_are_algebra_maps");
        for (int n = 0; n <= N && maps.pass; ++n) {
            long dim = m.comp[n].dim();
            for (int i = 0; i < dim && maps.pass; ++i)
                for (int j = 0; j < dim && maps.pass; ++j) {
                    Elt p = m.mul_basis(n, i, j);
                    if (n >= 2)
                        for (int fi = 1; fi <= n - 1 && maps.pass; ++fi) {
                            Elt lhs = m.apply_face(n, fi, p);
                            Elt rhs = m.mul(n - 1, m.apply_face(n, fi, basis_elt(i)),
                                            m.apply_face(n, fi, basis_elt(j)));
                            if (!(lhs == rhs)) {
                                maps.pass = false;
                                maps.witness = "F_" + std::to_string(fi) + " at " + m.comp[n].label[i] + " * " +
                                               m.comp[n].label[j];
                            }
                        }
                    if (n < N)
                        for (int dj = 0; dj <= n && maps.pass; ++dj) {
                            Elt lhs = m.apply_degen(n, dj, p);
                            Elt rhs = m.mul(n + 1, m.apply_degen(n, dj, basis_elt(i)),
                                            m.apply_degen(n, dj, basis_elt(j)));
                            if (!(lhs == rhs)) {
                                maps.pass = false;
                                maps.witness = "D_" + std::to_string(dj) + " at " + m.comp[n].label[i] + " * " +
                                               m.comp[n].label[j];
                            }
                        }
                    for (int a = 0; a <= n && maps.pass; ++a) {
                        auto lhs = m.apply_beta(n, a, p);
                        SparseVec<std::pair<int, int>> rhs;
                        auto bi = m.apply_beta(n, a, basis_elt(i));
                        auto bj = m.apply_beta(n, a, basis_elt(j));
                        for (auto& [xp, vx] : bi.c)
                            for (auto& [yp, vy] : bj.c) {
                                Rat s = sign_pow(static_cast<long>(m.comp[n - a].total(xp.second)) *
                                                 m.comp[a].total(yp.first));
                                Elt l = m.mul_basis(a, xp.first, yp.first);
                                Elt rr = m.mul_basis(n - a, xp.second, yp.second);
                                for (auto& [x2, v2] : l.c)
                                    for (auto& [y2, v3] : rr.c) rhs.add({x2, y2}, s * vx * vy * v2 * v3);
                            }
                        if (!(lhs == rhs)) {
                            maps.pass = false;
                            maps.witness = "beta_{" + std::to_string(a) + "," + std::to_string(n - a) + "} at " +
                                           m.comp[n].label[i] + " * " + m.comp[n].label[j];
                        }
                    }
                }
            // units are preserved
            if (n >= 2)
                for (int fi = 1; fi <= n - 1 && maps.pass; ++fi)
                    if (!(m.apply_face(n, fi, basis_elt(m.unit[n])) == basis_elt(m.unit[n - 1]))) {
                        maps.pass = false;
                        maps.witness = "F_" + std::to_string(fi) + " drops the unit at level " + std::to_string(n);
                    }
            if (n < N)
                for (int dj = 0; dj <= n && maps.pass; ++dj)
                    if (!(m.apply_degen(n, dj, basis_elt(m.unit[n])) == basis_elt(m.unit[n + 1]))) {
                        maps.pass = false;
                        maps.witness = "D_" + std::to_string(dj) + " drops the unit at level " + std::to_string(n);
                    }
        }
    }
    return r;
}

Report check_sharp(const GLMonoid& m) {
    Report r;
    SharpView s = sharp(m);
    int N = m.Nmax;

    auto& simp = r.add("sharp_simplicial_identities");
    for (int n = 2; n <= N && simp.pass; ++n)
        for (int j = 2; j <= n - 1 && simp.pass; ++j)
            for (int i = 1; i < j && simp.pass; ++i) {
                if (i > n - 2) continue;
                for (int b = 0; b < m.comp[n].dim() && simp.pass; ++b) {
                    Elt lhs = s.face(n - 1, i, s.face(n, j, basis_elt(b)));
                    Elt rhs = s.face(n - 1, j - 1, s.face(n, i, basis_elt(b)));
                    if (!(lhs == rhs)) {
                        simp.pass = false;
                        simp.witness = "F#_" + std::to_string(i) + "F#_" + std::to_string(j) + " at " +
                                       m.comp[n].label[b];
                    }
                }
            }
    for (int n = 0; n + 2 <= N && simp.pass; ++n)
        for (int j = 0; j <= n && simp.pass; ++j)
            for (int i = 0; i <= j && simp.pass; ++i)
                for (int b = 0; b < m.comp[n].dim() && simp.pass; ++b) {
                    Elt lhs = s.degen(n + 1, i, s.degen(n, j, basis_elt(b)));
                    Elt rhs = s.degen(n + 1, j + 1, s.degen(n, i, basis_elt(b)));
                    if (!(lhs == rhs)) {
                        simp.pass = false;
                        simp.witness = "D#_" + std::to_string(i) + "D#_" + std::to_string(j) + " at " +
                                       m.comp[n].label[b];
                    }
                }
    for (int n = 0; n + 1 <= N && simp.pass; ++n)
        for (int j = 0; j <= n && simp.pass; ++j)
            for (int i = 1; i <= n && simp.pass; ++i)
                for (int b = 0; b < m.comp[n].dim() && simp.pass; ++b) {
                    Elt lhs = s.face(n + 1, i, s.degen(n, j, basis_elt(b)));
                    Elt rhs;
                    if (i == j || i == j + 1)
                        rhs = basis_elt(b);
                    else if (i < j)
                        rhs = s.degen(n - 1, j - 1, s.face(n, i, basis_elt(b)));
                    else
                        rhs = s.degen(n - 1, j, s.face(n, i - 1, basis_elt(b)));
                    if (!(lhs == rhs)) {
                        simp.pass = false;
                        simp.witness = "F#_" + std::to_string(i) + "D#_" + std::to_string(j) + " at " +
                                       m.comp[n].label[b];
                    }
                }

    // d_sharp (conventional alternating sum of F#) equals the signed d^s
    auto& dd = r.add("sharp_differential_matches_signed");
    for (int n = 2; n <= N && dd.pass; ++n)
        for (int b = 0; b < m.comp[n].dim() && dd.pass; ++b) {
            Elt lhs, rhs;
            for (int i = 1; i <= n - 1; ++i)
                lhs.axpy(sign_pow(i), s.face(n, i, basis_elt(b)));
            auto& md = m.comp[n].mdeg[b];
            long pre = 0;
            for (int i = 1; i <= n - 1; ++i) {
                pre += md[i - 1];
                rhs.axpy(sign_pow(i + pre), m.apply_face(n, i, basis_elt(b)));
            }
            if (!(lhs == rhs)) {
                dd.pass = false;
                dd.witness = m.comp[n].label[b];
            }
        }
    return r;
}

GLMonoid monoid_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GLMonoid m;
    m.name = j.value("name", std::string("monoid"));
    m.Nmax = j.at("N_max").get<int>();
    m.algebra = j.value("algebra", false);
    m.pk = m.algebra ? GLMonoid::ProdKind::Table : GLMonoid::ProdKind::None;
    int N = m.Nmax;
    m.comp.resize(N + 1);
    m.face.resize(N + 1);
    m.degen.resize(N + 1);
    m.beta.resize(N + 1);
    m.diff.resize(N + 1);
    m.unit.assign(N + 1, -1);
    if (m.algebra) m.prod_table.resize(N + 1);

    for (auto& e : j.at("components")) {
        int n = e.at("n").get<int>();
        if (n < 0 || n > N) throw std::invalid_argument("monoid schema: component level out of range");
        auto& c = m.comp[n];
        for (auto& be : e.at("basis")) {
            c.label.push_back(be.at("label").get<std::string>());
            auto md = be.contains("multidegree") ? be["multidegree"].get<std::vector<int>>() : std::vector<int>{};
            if (static_cast<int>(md.size()) != n)
                throw std::invalid_argument("monoid schema: multidegree length != n");
            c.mdeg.push_back(md);
        }
    }
    if (m.comp[0].dim() == 0) {
        m.comp[0].label.push_back("1");
        m.comp[0].mdeg.push_back({});
    }
    auto idx_of = [&](int n, const std::string& s) {
        for (int i = 0; i < m.comp[n].dim(); ++i)
            if (m.comp[n].label[i] == s) return i;
        throw std::invalid_argument("monoid schema: unknown label " + s + " at level " + std::to_string(n));
    };
    for (int n = 2; n <= N; ++n) m.face[n].resize(n - 1);
    for (int n = 0; n < N; ++n) m.degen[n].resize(n + 1);
    for (int n = 0; n <= N; ++n) m.beta[n].resize(n + 1);

    if (j.contains("faces"))
        for (auto& e : j["faces"]) {
            int n = e.at("n").get<int>(), i = e.at("i").get<int>();
            for (auto& t : e.at("entries"))
                m.face[n][i - 1][idx_of(n, t.at("from").get<std::string>())].add(
                    idx_of(n - 1, t.at("to").get<std::string>()), parse_rat(t.at("coeff").get<std::string>()));
        }
    if (j.contains("degeneracies"))
        for (auto& e : j["degeneracies"]) {
            int n = e.at("n").get<int>(), jj = e.at("j").get<int>();
            for (auto& t : e.at("entries"))
                m.degen[n][jj][idx_of(n, t.at("from").get<std::string>())].add(
                    idx_of(n + 1, t.at("to").get<std::string>()), parse_rat(t.at("coeff").get<std::string>()));
        }
    if (j.contains("beta"))
        for (auto& e : j["beta"]) {
            int a = e.at("a").get<int>(), b = e.at("b").get<int>();
            for (auto& t : e.at("entries"))
                m.beta[a + b][a][idx_of(a + b, t.at("from").get<std::string>())].add(
                    {idx_of(a, t.at("left").get<std::string>()), idx_of(b, t.at("right").get<std::string>())},
                    parse_rat(t.at("coeff").get<std::string>()));
        }
    if (j.contains("differential"))
        for (auto& e : j["differential"]) {
            int n = e.at("n").get<int>();
            for (auto& t : e.at("entries"))
                m.diff[n][idx_of(n, t.at("from").get<std::string>())].add(
                    idx_of(n, t.at("to").get<std::string>()), parse_rat(t.at("coeff").get<std::string>()));
        }
    if (j.contains("products"))
        for (auto& e : j["products"]) {
            int n = e.at("n").get<int>();
            for (auto& t : e.at("entries")) {
                Elt res;
                for (auto& rr : t.at("result"))
                    res.add(idx_of(n, rr.at("label").get<std::string>()), parse_rat(rr.at("coeff").get<std::string>()));
                if (!res.zero())
                    m.prod_table[n][{idx_of(n, t.at("left").get<std::string>()),
                                     idx_of(n, t.at("right").get<std::string>())}] = res;
            }
        }
    if (j.contains("units"))
        for (auto& e : j["units"]) m.unit[e.at("n").get<int>()] = idx_of(e.at("n").get<int>(), e.at("label").get<std::string>());

    // synthesize the colax unit edges (X_0 = Q forces them)
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i < m.comp[n].dim(); ++i) {
            if (m.beta[n][0].find(i) == m.beta[n][0].end()) m.beta[n][0][i].add({0, i}, Rat(1));
            if (m.beta[n][n].find(i) == m.beta[n][n].end() && n > 0) m.beta[n][n][i].add({i, 0}, Rat(1));
        }
    return m;
}

std::string monoid_schema() {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["name"] = "optional string";
    j["N_max"] = "int";
    j["algebra"] = "bool, default false";
    j["components"] = nlohmann::ordered_json::array(
        {{{"n", "int"}, {"basis", nlohmann::ordered_json::array({{{"label", "string"}, {"multidegree", "[int] of length n"}}})}}});
    j["faces"] = nlohmann::ordered_json::array(
        {{{"n", "int"}, {"i", "1..n-1"}, {"entries", nlohmann::ordered_json::array({{{"from", "label"}, {"to", "label"}, {"coeff", "p/q"}}})}}});
    j["degeneracies"] = nlohmann::ordered_json::array(
        {{{"n", "int"}, {"j", "0..n"}, {"entries", "as faces"}}});
    j["beta"] = nlohmann::ordered_json::array(
        {{{"a", "int"}, {"b", "int"}, {"entries", nlohmann::ordered_json::array({{{"from", "label"}, {"left", "label"}, {"right", "label"}, {"coeff", "p/q"}}})}}});
    j["differential"] = nlohmann::ordered_json::array({{{"n", "int"}, {"entries", "as faces, within level n"}}});
    j["products"] = nlohmann::ordered_json::array(
        {{{"n", "int"}, {"entries", nlohmann::ordered_json::array({{{"left", "label"}, {"right", "label"}, {"result", "[{label, coeff}]"}}})}}});
    j["units"] = nlohmann::ordered_json::array({{{"n", "int"}, {"label", "label"}}});
    return j.dump(2) + "\n";
}

} // namespace barq
