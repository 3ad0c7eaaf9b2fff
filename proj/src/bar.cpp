#include "barq/bar.hpp"

#include <algorithm>

namespace barq {

int bar_degree(const GLMonoid& m, const BarKey& k) { return -k.first + m.comp[k.first].total(k.second); }

namespace {

Elt basis_elt(int i) {
    Elt e;
    e.add(i, Rat(1));
    return e;
}

BarVec ds_impl(const GLMonoid& m, const BarVec& v, bool standard) {
    BarVec out;
    for (auto& [k, c] : v.c) {
        auto [w, idx] = k;
        if (w < 2) continue;
        auto& md = m.comp[w].mdeg[idx];
        long pre = 0;
        for (int i = 1; i <= w - 1; ++i) {
            long e;
            if (standard)
                e = pre + i - 1; // a_1+..+a_{i-1} + i-1
            else
                e = pre + md[i - 1] + i; // a_1+..+a_i + i
            Elt t = m.apply_face(w, i, basis_elt(idx));
            for (auto& [j, cj] : t.c) out.add({w - 1, j}, sign_pow(e) * c * cj);
            pre += md[i - 1];
        }
    }
    return out;
}

} // namespace

BarVec bar_ds(const GLMonoid& m, const BarVec& v) { return ds_impl(m, v, false); }
BarVec bar_ds_standard(const GLMonoid& m, const BarVec& v) { return ds_impl(m, v, true); }

BarVec bar_dint(const GLMonoid& m, const BarVec& v) {
    BarVec out;
    for (auto& [k, c] : v.c) {
        auto [w, idx] = k;
        auto it = m.diff[w].find(idx);
        if (it == m.diff[w].end()) continue;
        auto& md = m.comp[w].mdeg[idx];
        for (auto& [j, cj] : it->second.c) {
            // locate the raised slot
            int slot = -1;
            for (int s = 0; s < w; ++s)
                if (m.comp[w].mdeg[j][s] != md[s]) {
                    slot = s;
                    break;
                }
            if (slot < 0) throw std::logic_error("bar_dint: differential does not raise a slot");
            out.add({w, j}, sign_pow(slot) * c * cj); // (-1)^{i-1}, slot is 0-based
        }
    }
    return out;
}

BarVec bar_D(const GLMonoid& m, const BarVec& v) {
    BarVec out = bar_ds(m, v);
    out.axpy(Rat(1), bar_dint(m, v));
    return out;
}

SparseVec<std::pair<BarKey, BarKey>> bar_delta(const GLMonoid& m, const BarVec& v, bool reduced) {
    SparseVec<std::pair<BarKey, BarKey>> out;
    for (auto& [k, c] : v.c) {
        auto [w, idx] = k;
        int lo = reduced ? 1 : 0;
        int hi = reduced ? w - 1 : w;
        for (int a = lo; a <= hi; ++a)
            for (auto& [pq, v2] : m.apply_beta(w, a, basis_elt(idx)).c)
                out.add({{a, pq.first}, {w - a, pq.second}}, c * v2);
    }
    return out;
}

BarBasis bar_basis(const GLMonoid& m, int n_trunc, bool include_weight0) {
    BarBasis b;
    for (int w = include_weight0 ? 0 : 1; w <= n_trunc; ++w)
        for (int i = 0; i < m.comp[w].dim(); ++i) {
            b.pos[{w, i}] = static_cast<int>(b.keys.size());
            b.keys.push_back({w, i});
        }
    return b;
}

FiniteComplex bar_complex(const GLMonoid& m, int n_trunc, bool include_weight0) {
    BarBasis b = bar_basis(m, n_trunc, include_weight0);
    FiniteComplex cx;
    if (b.keys.empty()) {
        cx.lo = 0;
        cx.dims = {0};
        return cx;
    }
    int lo = bar_degree(m, b.keys[0]), hi = lo;
    for (auto& k : b.keys) {
        lo = std::min(lo, bar_degree(m, k));
        hi = std::max(hi, bar_degree(m, k));
    }
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::map<BarKey, int> slot;
    for (auto& k : b.keys) slot[k] = static_cast<int>(cx.dims[bar_degree(m, k) - lo]++);
    cx.d.assign(cx.dims.size() - 1, SpMat());
    for (size_t i = 0; i + 1 < cx.dims.size(); ++i)
        cx.d[i] = SpMat(static_cast<int>(cx.dims[i + 1]), static_cast<int>(cx.dims[i]));
    for (auto& k : b.keys) {
        int deg = bar_degree(m, k);
        if (deg - lo >= static_cast<int>(cx.d.size())) {
            if (!bar_D(m, bar_elt(k.first, k.second)).zero())
                throw std::logic_error("bar_complex: differential leaves the window");
            continue;
        }
        for (auto& [k2, c] : bar_D(m, bar_elt(k.first, k.second)).c) cx.d[deg - lo].add(slot[k2], slot[k], c);
    }
    return cx;
}

DgCoalgebra bar_as_coalgebra(const GLMonoid& m, int n_trunc) {
    BarBasis b = bar_basis(m, n_trunc, false);
    DgCoalgebra c;
    c.name = "Bar(" + m.name + ")";
    for (auto& k : b.keys) {
        c.label.push_back("w" + std::to_string(k.first) + ":" + m.comp[k.first].label[k.second]);
        c.deg.push_back(bar_degree(m, k));
    }
    for (auto& k : b.keys) {
        int i = b.pos.at(k);
        Elt d;
        for (auto& [k2, v] : bar_D(m, bar_elt(k.first, k.second)).c) d.add(b.pos.at(k2), v);
        if (!d.zero()) c.diff[i] = d;
        SparseVec<std::pair<int, int>> cop;
        for (auto& [pq, v] : bar_delta(m, bar_elt(k.first, k.second), true).c)
            cop.add({b.pos.at(pq.first), b.pos.at(pq.second)}, v);
        if (!cop.zero()) c.coprod[i] = cop;
    }
    return c;
}

Report check_bar(const GLMonoid& m, int n_trunc) {
    Report r;
    BarBasis b = bar_basis(m, n_trunc, true);

    auto& ds2 = r.add("signed_face_differential_squares_to_zero");
    for (auto& k : b.keys) {
        BarVec dd = bar_ds(m, bar_ds(m, bar_elt(k.first, k.second)));
        if (!dd.zero()) {
            ds2.pass = false;
            ds2.witness = m.comp[k.first].label[k.second];
            break;
        }
    }

    auto& dtot = r.add("total_differential_squares_to_zero");
    for (auto& k : b.keys) {
        BarVec dd = bar_D(m, bar_D(m, bar_elt(k.first, k.second)));
        if (!dd.zero()) {
            dtot.pass = false;
            dtot.witness = m.comp[k.first].label[k.second];
            break;
        }
    }

    auto& deg = r.add("bar_degree_bookkeeping");
    for (auto& k : b.keys) {
        int d0 = bar_degree(m, k);
        for (auto& [k2, c] : bar_D(m, bar_elt(k.first, k.second)).c)
            if (bar_degree(m, k2) != d0 + 1) {
                deg.pass = false;
                deg.witness = m.comp[k.first].label[k.second];
            }
    }

    // coassociativity of the reduced coproduct
    auto& ca = r.add("coproduct_coassociative");
    for (auto& k : b.keys) {
        if (!ca.pass) break;
        SparseVec<std::tuple<BarKey, BarKey, BarKey>> lhs, rhs;
        auto d1 = bar_delta(m, bar_elt(k.first, k.second), true);
        for (auto& [pq, v] : d1.c) {
            for (auto& [lm, v2] : bar_delta(m, bar_elt(pq.first.first, pq.first.second), true).c)
                lhs.add({lm.first, lm.second, pq.second}, v * v2);
            for (auto& [lm, v2] : bar_delta(m, bar_elt(pq.second.first, pq.second.second), true).c)
                rhs.add({pq.first, lm.first, lm.second}, v * v2);
        }
        if (!(lhs == rhs)) {
            ca.pass = false;
            ca.witness = m.comp[k.first].label[k.second];
        }
    }

    // Delta(d^s x) = d^s(Delta x) with the bar-degree Koszul sign,
    // for the total differential as well.
    for (bool total : {false, true}) {
        auto& cl = r.add(total ? "coproduct_compatible_with_total_differential"
                               : "coproduct_compatible_with_signed_differential");
        auto D = [&](const BarVec& v) { return total ? bar_D(m, v) : bar_ds(m, v); };
        for (auto& k : b.keys) {
            if (!cl.pass) break;
            auto lhs = bar_delta(m, D(bar_elt(k.first, k.second)), true);
            SparseVec<std::pair<BarKey, BarKey>> rhs;
            for (auto& [pq, v] : bar_delta(m, bar_elt(k.first, k.second), true).c) {
                for (auto& [k2, v2] : D(bar_elt(pq.first.first, pq.first.second)).c)
                    rhs.add({k2, pq.second}, v * v2);
                for (auto& [k2, v2] : D(bar_elt(pq.second.first, pq.second.second)).c)
                    rhs.add({pq.first, k2}, v * v2 * sign_pow(bar_degree(m, pq.first)));
            }
            if (!(lhs == rhs)) {
                cl.pass = false;
                cl.witness = m.comp[k.first].label[k.second];
            }
        }
    }
    return r;
}

Report unital_contraction(const GLMonoid& m, int n_trunc) {
    Report r;
    auto& c = r.add("contraction_identity");
    if (!m.algebra || m.unit[0] < 0) {
        c.pass = false;
        c.witness = "monoid is not unital";
        return r;
    }
    int found = 0; // +1 or -1 once determined
    for (int w = 1; w <= n_trunc - 1 && c.pass; ++w) {
        for (int i = 0; i < m.comp[w].dim() && c.pass; ++i) {
            // h = D_0 raises weight by one
            BarVec hx;
            for (auto& [j, cj] : m.apply_degen(w, 0, basis_elt(i)).c) hx.add({w + 1, j}, cj);
            BarVec lhs = bar_D(m, hx);
            BarVec dx = bar_D(m, bar_elt(w, i));
            for (auto& [k, ck] : dx.c)
                for (auto& [j, cj] : m.apply_degen(k.first, 0, basis_elt(k.second)).c)
                    lhs.add({k.first + 1, j}, ck * cj);
            // lhs must be s * x
            BarVec plus = lhs, minus = lhs;
            plus.add({w, i}, Rat(-1));
            minus.add({w, i}, Rat(1));
            int s = plus.zero() ? 1 : (minus.zero() ? -1 : 0);
            if (s == 0) {
                c.pass = false;
                c.witness = m.comp[w].label[i];
            } else if (found == 0) {
                found = s;
            } else if (found != s) {
                c.pass = false;
                c.witness = "sign flips at " + m.comp[w].label[i];
            }
        }
    }
    if (c.pass) c.note = std::string("Dh + hD = ") + (found >= 0 ? "+" : "-") + "id on weights 1.." +
                         std::to_string(n_trunc - 1);
    return r;
}

long word_weight(const Word& w) {
    long t = 0;
    for (auto& k : w) t += k.first;
    return t;
}

int cobar_degree(const GLMonoid& m, const Word& w) {
    int d = static_cast<int>(w.size());
    for (auto& k : w) d += bar_degree(m, k);
    return d;
}

std::string word_str(const GLMonoid& m, const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i)
        s += (i ? " | " : "") + ("w" + std::to_string(w[i].first) + ":" + m.comp[w[i].first].label[w[i].second]);
    return s + "]";
}

std::string cobar_str(const GLMonoid& m, const CobarVec& v) {
    if (v.zero()) return "0";
    std::string s;
    for (auto& [w, c] : v.c) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*" + word_str(m, w);
    }
    return s;
}

namespace {

CobarVec cobar_D_impl(const GLMonoid& m, const Word& w, bool include_face) {
    CobarVec out;
    long pre = 0; // sum over previous letters of (1 + bar degree)
    for (size_t i = 0; i < w.size(); ++i) {
        Rat prefix = sign_pow(pre);
        // letterwise bar differential
        BarVec dl = include_face ? bar_D(m, bar_elt(w[i].first, w[i].second))
                                 : bar_dint(m, bar_elt(w[i].first, w[i].second));
        for (auto& [k2, c] : dl.c) {
            Word nw = w;
            nw[i] = k2;
            out.add(nw, prefix * c);
        }
        // splitting through the reduced coproduct; the local sign is the
        // Cobar degree of the left fragment, 1 + deg_C c' (this is what makes
        // the counit a chain map, and matches the theta-split identity)
        for (auto& [pq, c] : bar_delta(m, bar_elt(w[i].first, w[i].second), true).c) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.insert(nw.end(), w.begin(), w.begin() + i);
            nw.push_back(pq.first);
            nw.push_back(pq.second);
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            out.add(nw, prefix * sign_pow(1 + bar_degree(m, pq.first)) * c);
        }
        pre += 1 + bar_degree(m, w[i]);
    }
    return out;
}

} // namespace

CobarVec cobar_D(const GLMonoid& m, const Word& w) { return cobar_D_impl(m, w, true); }

CobarVec cobar_D(const GLMonoid& m, const CobarVec& v) {
    CobarVec out;
    for (auto& [w, c] : v.c) out.axpy(c, cobar_D(m, w));
    return out;
}

CobarVec cobar_D_vertical(const GLMonoid& m, const Word& w) { return cobar_D_impl(m, w, false); }

CobarVec cobar_mul(const CobarVec& a, const CobarVec& b) {
    CobarVec out;
    for (auto& [u, cu] : a.c)
        for (auto& [v, cv] : b.c) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, cu * cv);
        }
    return out;
}

std::vector<Word> enumerate_words(const GLMonoid& m, int n, bool exact) {
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, long remaining) -> void {
        if (!cur.empty() && (!exact || remaining == 0)) out.push_back(cur);
        for (int w = 1; w <= remaining && w <= m.Nmax; ++w)
            for (int i = 0; i < m.comp[w].dim(); ++i) {
                cur.push_back({w, i});
                self(self, remaining - w);
                cur.pop_back();
            }
    };
    rec(rec, n);
    return out;
}

WordBasis word_basis(const GLMonoid& m, int n, bool exact) {
    WordBasis b;
    b.words = enumerate_words(m, n, exact);
    for (size_t i = 0; i < b.words.size(); ++i) b.pos[b.words[i]] = static_cast<int>(i);
    return b;
}

namespace {

FiniteComplex words_complex(const GLMonoid& m, const std::vector<Word>& words, bool vertical) {
    FiniteComplex cx;
    if (words.empty()) {
        cx.lo = 0;
        cx.dims = {0};
        return cx;
    }
    int lo = cobar_degree(m, words[0]), hi = lo;
    for (auto& w : words) {
        lo = std::min(lo, cobar_degree(m, w));
        hi = std::max(hi, cobar_degree(m, w));
    }
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::map<Word, int> slot;
    std::map<Word, int> degw;
    for (auto& w : words) {
        degw[w] = cobar_degree(m, w);
        slot[w] = static_cast<int>(cx.dims[degw[w] - lo]++);
    }
    cx.d.assign(cx.dims.size() - 1, SpMat());
    for (size_t i = 0; i + 1 < cx.dims.size(); ++i)
        cx.d[i] = SpMat(static_cast<int>(cx.dims[i + 1]), static_cast<int>(cx.dims[i]));
    for (auto& w : words) {
        CobarVec dv = vertical ? cobar_D_vertical(m, w) : cobar_D(m, w);
        int dg = degw[w];
        for (auto& [w2, c] : dv.c) {
            auto it = slot.find(w2);
            if (it == slot.end()) throw std::logic_error("words_complex: differential leaves the basis");
            cx.d[dg - lo].add(it->second, slot[w], c);
        }
    }
    return cx;
}

} // namespace

FiniteComplex cobar_complex(const GLMonoid& m, int n_trunc) {
    return words_complex(m, enumerate_words(m, n_trunc, false), false);
}

std::map<int, long> cobar_homology(const GLMonoid& m, int n_trunc) {
    return cobar_complex(m, n_trunc).homology_dims();
}

FiniteComplex ln_complex(const GLMonoid& m, int n) {
    if (n + 1 > m.Nmax) throw std::invalid_argument("ln_complex: n+1 exceeds N_max");
    return words_complex(m, enumerate_words(m, n + 1, true), true);
}

Report check_cobar(const GLMonoid& m, int n_trunc) {
    Report r;
    auto words = enumerate_words(m, n_trunc, false);

    auto& d2 = r.add("cobar_d_squared_zero");
    for (auto& w : words) {
        if (!cobar_D(m, cobar_D(m, w)).zero()) {
            d2.pass = false;
            d2.witness = word_str(m, w);
            break;
        }
    }

    auto& wt = r.add("cobar_weight_filtration");
    for (auto& w : words) {
        long w0 = word_weight(w);
        for (auto& [w2, c] : cobar_D(m, w).c)
            if (word_weight(w2) > w0) {
                wt.pass = false;
                wt.witness = word_str(m, w);
            }
    }

    auto& leib = r.add("cobar_product_leibniz");
    for (auto& u : words) {
        if (!leib.pass) break;
        for (auto& v : words) {
            if (word_weight(u) + word_weight(v) > n_trunc) continue;
            CobarVec uv;
            uv.add(u, Rat(1));
            CobarVec vv;
            vv.add(v, Rat(1));
            CobarVec lhs = cobar_D(m, cobar_mul(uv, vv));
            CobarVec rhs = cobar_mul(cobar_D(m, u), vv);
            CobarVec dv = cobar_D(m, v);
            CobarVec term = cobar_mul(uv, dv);
            rhs.axpy(sign_pow(cobar_degree(m, u)), term);
            if (!(lhs == rhs)) {
                leib.pass = false;
                leib.witness = word_str(m, u) + " * " + word_str(m, v);
                break;
            }
        }
    }
    return r;
}

Elt phi_counit(const GLMonoid& m, const Word& w) {
    if (!m.algebra) throw std::logic_error("phi_counit needs an algebra-flagged monoid");
    for (auto& k : w)
        if (k.first != 1) return Elt{};
    Elt acc = basis_elt(m.unit[1]);
    for (auto& k : w) acc = m.mul(1, acc, basis_elt(k.second));
    return acc;
}

Elt phi_counit(const GLMonoid& m, const CobarVec& v) {
    Elt out;
    for (auto& [w, c] : v.c) out.axpy(c, phi_counit(m, w));
    return out;
}

Word iota(int x1_index) { return Word{{1, x1_index}}; }

Report check_phi(const GLMonoid& m, int n_trunc) {
    Report r;
    auto words = enumerate_words(m, n_trunc, false);

    auto& sect = r.add("phi_iota_identity");
    for (int i = 0; i < m.comp[1].dim(); ++i) {
        Elt v = phi_counit(m, iota(i));
        if (!(v == basis_elt(i))) {
            sect.pass = false;
            sect.witness = m.comp[1].label[i];
            break;
        }
    }

    auto& chain = r.add("phi_chain_map");
    for (auto& w : words) {
        Elt lhs = phi_counit(m, cobar_D(m, w));
        Elt rhs = m.apply_diff(1, phi_counit(m, w));
        if (!(lhs == rhs)) {
            chain.pass = false;
            chain.witness = word_str(m, w);
            break;
        }
    }

    auto& alg = r.add("phi_algebra_map");
    for (auto& u : words) {
        if (!alg.pass) break;
        for (auto& v : words) {
            if (word_weight(u) + word_weight(v) > n_trunc) continue;
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Elt lhs = phi_counit(m, uv);
            Elt rhs = m.mul(1, phi_counit(m, u), phi_counit(m, v));
            if (!(lhs == rhs)) {
                alg.pass = false;
                alg.witness = word_str(m, u) + " * " + word_str(m, v);
                break;
            }
        }
    }

    auto& qi = r.add("cobar_bar_homology_equals_H_X1");
    auto h = cobar_homology(m, n_trunc);
    auto hx = m.component_complex(1).homology_dims();
    auto nonzero = [](const std::map<int, long>& t) {
        std::map<int, long> out;
        for (auto& [k, v] : t)
            if (v != 0) out[k] = v;
        return out;
    };
    qi.table = nonzero(h);
    if (nonzero(h) != nonzero(hx)) {
        qi.pass = false;
        qi.witness = "homology tables differ";
    }
    return r;
}

int gcobar_degree(const DgCoalgebra& c, const GWord& w) {
    int d = static_cast<int>(w.size());
    for (int i : w) d += c.deg[i];
    return d;
}

GCobarVec gcobar_D(const DgCoalgebra& c, const GWord& w) {
    GCobarVec out;
    long pre = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        Rat prefix = sign_pow(pre);
        Elt e;
        e.add(w[i], Rat(1));
        for (auto& [j, cj] : c.d(e).c) {
            GWord nw = w;
            nw[i] = j;
            out.add(nw, prefix * cj);
        }
        for (auto& [pq, cc] : c.delta(e).c) {
            GWord nw;
            nw.reserve(w.size() + 1);
            nw.insert(nw.end(), w.begin(), w.begin() + i);
            nw.push_back(pq.first);
            nw.push_back(pq.second);
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            out.add(nw, prefix * sign_pow(1 + c.deg[pq.first]) * cc);
        }
        pre += 1 + c.deg[w[i]];
    }
    return out;
}

GCobarVec gcobar_mul(const GWord& u, const GWord& v) {
    GWord w = u;
    w.insert(w.end(), v.begin(), v.end());
    GCobarVec out;
    out.add(w, Rat(1));
    return out;
}

namespace {

std::vector<GWord> gcobar_words(const DgCoalgebra& c, int n_length) {
    std::vector<GWord> out;
    GWord cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (left == 0) return;
        for (int i = 0; i < c.dim(); ++i) {
            cur.push_back(i);
            self(self, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, n_length);
    return out;
}

} // namespace

FiniteComplex gcobar_complex(const DgCoalgebra& c, int n_length) {
    auto words = gcobar_words(c, n_length);
    FiniteComplex cx;
    if (words.empty()) {
        cx.lo = 0;
        cx.dims = {0};
        return cx;
    }
    int lo = gcobar_degree(c, words[0]), hi = lo;
    for (auto& w : words) {
        lo = std::min(lo, gcobar_degree(c, w));
        hi = std::max(hi, gcobar_degree(c, w));
    }
    cx.lo = lo;
    cx.dims.assign(hi - lo + 1, 0);
    std::map<GWord, int> slot;
    for (auto& w : words) slot[w] = static_cast<int>(cx.dims[gcobar_degree(c, w) - lo]++);
    cx.d.assign(cx.dims.size() - 1, SpMat());
    for (size_t i = 0; i + 1 < cx.dims.size(); ++i)
        cx.d[i] = SpMat(static_cast<int>(cx.dims[i + 1]), static_cast<int>(cx.dims[i]));
    for (auto& w : words) {
        int dg = gcobar_degree(c, w);
        for (auto& [w2, v] : gcobar_D(c, w).c) {
            auto it = slot.find(w2);
            if (it == slot.end()) continue; // splitting beyond the length window
            cx.d[dg - lo].add(it->second, slot[w], v);
        }
    }
    return cx;
}

Report check_gcobar(const DgCoalgebra& c, int n_length, int conilpotency_cap) {
    Report r;
    Report pre = check_dg_coalgebra(c, conilpotency_cap);
    r.append(pre);
    if (!pre.all_pass()) return r; // conilpotency undecided blocks the construction

    auto words = gcobar_words(c, n_length);
    auto& d2 = r.add("gcobar_d_squared_zero");
    for (auto& w : words) {
        GCobarVec dd;
        for (auto& [w2, cc] : gcobar_D(c, w).c) dd.axpy(cc, gcobar_D(c, w2));
        if (!dd.zero()) {
            d2.pass = false;
            break;
        }
    }
    auto& leib = r.add("gcobar_leibniz");
    for (auto& u : words) {
        if (!leib.pass) break;
        for (auto& v : words) {
            if (static_cast<int>(u.size() + v.size()) + 1 > n_length) continue;
            GCobarVec lhs = gcobar_D(c, gcobar_mul(u, v).c.begin()->first);
            GCobarVec rhs;
            for (auto& [w2, cc] : gcobar_D(c, u).c) rhs.axpy(cc, gcobar_mul(w2, v));
            Rat s = sign_pow(gcobar_degree(c, u));
            for (auto& [w2, cc] : gcobar_D(c, v).c) rhs.axpy(s * cc, gcobar_mul(u, w2));
            if (!(lhs == rhs)) {
                leib.pass = false;
                break;
            }
        }
    }
    return r;
}

bool bar_map_quasi_iso(const DgAlgebra& a, const DgAlgebra& b, const std::map<int, Elt>& fmap, int n_trunc) {
    GLMonoid ma = from_dg_algebra(a, n_trunc);
    // b may be the zero algebra; build its bar complex directly
    GLMonoid mb;
    bool b_zero = b.dim() == 0;
    if (!b_zero) mb = from_dg_algebra(b, n_trunc);

    FiniteComplex A = bar_complex(ma, n_trunc, false);
    FiniteComplex B;
    if (b_zero) {
        B.lo = A.lo;
        B.dims.assign(A.dims.size(), 0);
        B.d.assign(A.dims.size() ? A.dims.size() - 1 : 0, SpMat());
        for (size_t i = 0; i + 1 < B.dims.size(); ++i) B.d[i] = SpMat(0, 0);
    } else {
        B = bar_complex(mb, n_trunc, false);
        // align windows
        int lo = std::min(A.lo, B.lo), hi = std::max(A.lo + static_cast<int>(A.dims.size()),
                                                     B.lo + static_cast<int>(B.dims.size())) - 1;
        auto realign = [&](FiniteComplex& C) {
            FiniteComplex R;
            R.lo = lo;
            R.dims.assign(hi - lo + 1, 0);
            R.d.assign(hi - lo, SpMat());
            for (size_t i = 0; i < R.dims.size(); ++i) {
                int deg = lo + static_cast<int>(i);
                R.dims[i] = C.dim(deg);
            }
            for (size_t i = 0; i + 1 < R.dims.size(); ++i) {
                int deg = lo + static_cast<int>(i);
                int ci = deg - C.lo;
                if (ci >= 0 && ci + 1 < static_cast<int>(C.dims.size()))
                    R.d[i] = C.d[ci];
                else
                    R.d[i] = SpMat(static_cast<int>(R.dims[i + 1]), static_cast<int>(R.dims[i]));
            }
            C = R;
        };
        realign(A);
        realign(B);
    }

    // f on bar words: apply fmap letterwise (degree 0 map, no Koszul signs)
    ChainMap cm;
    cm.src = &A;
    cm.dst = &B;
    cm.f.assign(A.dims.size(), SpMat());
    for (size_t i = 0; i < A.dims.size(); ++i)
        cm.f[i] = SpMat(static_cast<int>(B.dims[i]), static_cast<int>(A.dims[i]));
    if (!b_zero) {
        // positions in each complex mirror bar_complex's construction order
        BarBasis ba = bar_basis(ma, n_trunc, false);
        BarBasis bb = bar_basis(mb, n_trunc, false);
        std::map<BarKey, int> slotA, slotB;
        {
            std::map<int, int> cnt;
            for (auto& k : ba.keys) slotA[k] = cnt[bar_degree(ma, k)]++;
        }
        {
            std::map<int, int> cnt;
            for (auto& k : bb.keys) slotB[k] = cnt[bar_degree(mb, k)]++;
        }
        for (auto& k : ba.keys) {
            auto letters = ma.tuple_letters(k.first, k.second);
            std::map<std::vector<int>, Rat> acc;
            acc[{}] = Rat(1);
            for (int l : letters) {
                std::map<std::vector<int>, Rat> next;
                auto it = fmap.find(l);
                if (it == fmap.end()) {
                    acc.clear();
                    break;
                }
                for (auto& [pref, c] : acc)
                    for (auto& [t, ct] : it->second.c) {
                        auto wtuple = pref;
                        wtuple.push_back(t);
                        next[wtuple] += c * ct;
                    }
                acc = std::move(next);
            }
            for (auto& [wtuple, c] : acc) {
                if (is_zero(c)) continue;
                BarKey k2{k.first, mb.tuple_index(wtuple)};
                cm.f[bar_degree(ma, k) - A.lo].add(slotB[k2], slotA[k], c);
            }
        }
    }
    return is_quasi_iso(cm);
}

} // namespace barq
