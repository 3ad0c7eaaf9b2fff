#include "barq/binf.hpp"

namespace barq {

std::string TkConvention::str() const {
    return std::string(reduced_diamond ? "reduced" : "counital") + ",alpha=" + std::to_string(alpha) +
           ",beta=" + std::to_string(beta) + ",gamma=" + std::to_string(gamma) + ",delta=" + std::to_string(delta);
}

CobarVec diamond(const BInfContext& ctx, BarKey a, const Word& y) {
    const GLMonoid& m = *ctx.x;
    int r = static_cast<int>(y.size());
    // iterated coproduct of a into r factors
    SparseVec<std::vector<BarKey>> split;
    split.add({a}, Rat(1));
    for (int step = 1; step < r; ++step) {
        SparseVec<std::vector<BarKey>> next;
        for (auto& [f, c] : split.c) {
            for (auto& [pq, v] : bar_delta(m, bar_elt(f[0].first, f[0].second), ctx.conv.reduced_diamond).c) {
                std::vector<BarKey> g;
                g.push_back(pq.first);
                g.push_back(pq.second);
                g.insert(g.end(), f.begin() + 1, f.end());
                next.add(g, c * v);
            }
        }
        split = std::move(next);
    }
    // factorwise product into the letters of y, with the tensor Koszul sign:
    // block_k passes y_1..y_{k-1}
    CobarVec out;
    for (auto& [blocks, c] : split.c) {
        long e = 0, ypre = 0;
        for (int k = 0; k < r; ++k) {
            e += (static_cast<long>(bar_degree(m, blocks[k])) + ctx.conv.gamma) * ypre;
            ypre += bar_degree(m, y[k]) + ctx.conv.delta;
        }
        // expand the per-slot products
        SparseVec<Word> acc;
        acc.add({}, c * sign_pow(e));
        for (int k = 0; k < r && !acc.zero(); ++k) {
            SparseVec<Word> next;
            BarVec p = bar_mul(m, bar_elt(blocks[k].first, blocks[k].second), bar_elt(y[k].first, y[k].second));
            for (auto& [pref, cp] : acc.c)
                for (auto& [bk, cb] : p.c) {
                    Word w = pref;
                    w.push_back(bk);
                    next.add(w, cp * cb);
                }
            acc = std::move(next);
        }
        out.axpy(Rat(1), acc);
    }
    return out;
}

CobarVec tk_brace(const BInfContext& ctx, const Word& a, const std::vector<Word>& ys) {
    const GLMonoid& m = *ctx.x;
    int n = static_cast<int>(a.size());
    int l = static_cast<int>(ys.size());
    if (l == 0) {
        CobarVec out;
        out.add(a, Rat(1));
        return out;
    }
    CobarVec out;
    if (l > n) return out; // zero for l > n
    // suffix sums of (deg_C letter + beta)
    std::vector<long> suf(n + 1, 0);
    for (int u = n - 1; u >= 0; --u)
        suf[u] = suf[u + 1] + (bar_degree(m, a[u]) + 1) + ctx.conv.beta;
    std::vector<int> pos(l);
    auto rec = [&](auto&& self, int j, int from) -> void {
        if (j == l) {
            long e = 0;
            for (int t = 0; t < l; ++t) e += (cobar_degree(m, ys[t]) + ctx.conv.alpha) * suf[pos[t] + 1];
            // splice: combinations over the diamond expansions per slot
            SparseVec<Word> acc;
            acc.add({}, sign_pow(e));
            int cursor = 0;
            for (int t = 0; t < l && !acc.zero(); ++t) {
                // plain letters before the insertion slot
                SparseVec<Word> next;
                CobarVec dia = diamond(ctx, a[pos[t]], ys[t]);
                for (auto& [pref, cp] : acc.c)
                    for (auto& [seg, cs] : dia.c) {
                        Word w = pref;
                        w.insert(w.end(), a.begin() + cursor, a.begin() + pos[t]);
                        w.insert(w.end(), seg.begin(), seg.end());
                        next.add(w, cp * cs);
                    }
                acc = std::move(next);
                cursor = pos[t] + 1;
            }
            if (!acc.zero()) {
                SparseVec<Word> fin;
                for (auto& [pref, cp] : acc.c) {
                    Word w = pref;
                    w.insert(w.end(), a.begin() + cursor, a.end());
                    fin.add(w, cp);
                }
                out.axpy(Rat(1), fin);
            }
            return;
        }
        for (int p = from; p <= n - (l - j); ++p) {
            pos[j] = p;
            self(self, j + 1, p + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

int tensor_degree(const GLMonoid& m, const Tensor& t) {
    int d = 0;
    for (auto& w : t) d += cobar_degree(m, w) - 1;
    return d;
}

TVec tensor_mul(const BInfContext& ctx, const Tensor& u, const Tensor& v) {
    const GLMonoid& m = *ctx.x;
    int k = static_cast<int>(u.size()), l = static_cast<int>(v.size());
    // shifted degrees
    std::vector<long> du(k), dv(l);
    for (int i = 0; i < k; ++i) du[i] = cobar_degree(m, u[i]) - 1;
    for (int j = 0; j < l; ++j) dv[j] = cobar_degree(m, v[j]) - 1;
    std::vector<long> usuf(k + 1, 0);
    for (int i = k - 1; i >= 0; --i) usuf[i] = usuf[i + 1] + du[i];

    TVec out;
    // walk: at (i, j) either place v_j free (crossing u_i..u_k), or place u_i
    // with an absorbed run v_j..v_{j+r-1} (the run crossing u_{i+1}..u_k).
    auto rec = [&](auto&& self, int i, int j, const Tensor& prefix, const Rat& coeff) -> void {
        if (i == k && j == l) {
            out.add(prefix, coeff);
            return;
        }
        if (j < l) {
            Rat s = sign_pow(dv[j] * usuf[i]);
            Tensor p = prefix;
            p.push_back(v[j]);
            self(self, i, j + 1, p, coeff * s);
        }
        if (i < k) {
            for (int r = 0; j + r <= l; ++r) {
                std::vector<Word> run(v.begin() + j, v.begin() + j + r);
                long cross = 0;
                for (int t = 0; t < r; ++t) cross += dv[j + t];
                Rat s = sign_pow(cross * usuf[i + 1]);
                CobarVec br = tk_brace(ctx, u[i], run);
                if (br.zero()) continue;
                for (auto& [w, c] : br.c) {
                    Tensor p = prefix;
                    p.push_back(w);
                    self(self, i + 1, j + r, p, coeff * s * c);
                }
            }
        }
    };
    rec(rec, 0, 0, Tensor{}, Rat(1));
    return out;
}

TVec tensor_D(const BInfContext& ctx, const Tensor& t) {
    const GLMonoid& m = *ctx.x;
    TVec out;
    int p = static_cast<int>(t.size());
    // concatenation terms, nonstandard bar signs: (-1)^{i + deg y_1+..+deg y_i}
    long pre = 0;
    for (int i = 1; i <= p - 1; ++i) {
        pre += cobar_degree(m, t[i - 1]);
        Tensor nt;
        nt.reserve(p - 1);
        nt.insert(nt.end(), t.begin(), t.begin() + i - 1);
        Word merged = t[i - 1];
        merged.insert(merged.end(), t[i].begin(), t[i].end());
        nt.push_back(merged);
        nt.insert(nt.end(), t.begin() + i + 1, t.end());
        out.add(nt, sign_pow(i + pre));
    }
    // internal terms: (-1)^{i-1 + deg y_1+..+deg y_{i-1}}
    pre = 0;
    for (int i = 1; i <= p; ++i) {
        CobarVec dw = cobar_D(m, t[i - 1]);
        for (auto& [w, c] : dw.c) {
            Tensor nt = t;
            nt[i - 1] = w;
            out.add(nt, c * sign_pow(i - 1 + pre));
        }
        pre += cobar_degree(m, t[i - 1]);
    }
    return out;
}

std::vector<Tensor> enumerate_tensors(const GLMonoid& m, int n_weight, int n_length) {
    std::vector<Word> words = enumerate_words(m, n_weight, false);
    std::vector<Tensor> out;
    Tensor cur;
    auto rec = [&](auto&& self, long wleft, int lleft) -> void {
        out.push_back(cur);
        if (lleft == 0) return;
        for (auto& w : words) {
            long ww = word_weight(w);
            if (ww > wleft) continue;
            cur.push_back(w);
            self(self, wleft - ww, lleft - 1);
            cur.pop_back();
        }
    };
    rec(rec, n_weight, n_length);
    return out;
}

namespace {

long tensor_weight(const Tensor& t) {
    long w = 0;
    for (auto& x : t) w += word_weight(x);
    return w;
}

std::string tensor_str(const GLMonoid& m, const Tensor& t) {
    if (t.empty()) return "()";
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? " ; " : "") + word_str(m, t[i]);
    return s + ")";
}

} // namespace

Report verify_b_infinity(const BInfContext& ctx) {
    const GLMonoid& m = *ctx.x;
    Report r;
    auto tensors = enumerate_tensors(m, ctx.n_weight, ctx.n_length);
    // group by outer length for the windowed pair/triple quantifications
    std::vector<std::vector<std::pair<const Tensor*, long>>> by_len(ctx.n_length + 1);
    for (auto& t : tensors) by_len[t.size()].push_back({&t, tensor_weight(t)});

    auto& d2 = r.add("binf_differential_squares_to_zero");
    d2.note = "differential is the bar-type differential of the cobar dg algebra";
    for (auto& t : tensors) {
        TVec dd;
        for (auto& [t2, c] : tensor_D(ctx, t).c) dd.axpy(c, tensor_D(ctx, t2));
        if (!dd.zero()) {
            d2.pass = false;
            d2.witness = tensor_str(m, t);
            break;
        }
    }

    auto& unit = r.add("binf_unit");
    for (auto& t : tensors) {
        TVec l = tensor_mul(ctx, Tensor{}, t);
        TVec rr = tensor_mul(ctx, t, Tensor{});
        TVec want;
        want.add(t, Rat(1));
        if (!(l == want) || !(rr == want)) {
            unit.pass = false;
            unit.witness = tensor_str(m, t);
            break;
        }
    }

    auto for_pairs = [&](auto&& body) {
        for (int la = 0; la <= ctx.n_length; ++la)
            for (int lb = 0; la + lb <= ctx.n_length; ++lb)
                for (auto& [u, wu] : by_len[la])
                    for (auto& [v, wv] : by_len[lb]) {
                        if (wu + wv > ctx.n_weight) continue;
                        if (!body(*u, *v)) return;
                    }
    };

    auto& leib = r.add("binf_leibniz");
    for_pairs([&](const Tensor& u, const Tensor& v) {
        TVec lhs;
        for (auto& [t, c] : tensor_mul(ctx, u, v).c) lhs.axpy(c, tensor_D(ctx, t));
        TVec rhs;
        for (auto& [t, c] : tensor_D(ctx, u).c) rhs.axpy(c, tensor_mul(ctx, t, v));
        Rat s = sign_pow(tensor_degree(m, u));
        for (auto& [t, c] : tensor_D(ctx, v).c) rhs.axpy(s * c, tensor_mul(ctx, u, t));
        if (!(lhs == rhs)) {
            leib.pass = false;
            leib.witness = tensor_str(m, u) + " * " + tensor_str(m, v);
            return false;
        }
        return true;
    });

    auto& assoc = r.add("binf_associative");
    for (int la = 0; la <= ctx.n_length && assoc.pass; ++la)
        for (int lb = 0; la + lb <= ctx.n_length && assoc.pass; ++lb)
            for (int lc = 0; la + lb + lc <= ctx.n_length && assoc.pass; ++lc)
                for (auto& [u, wu] : by_len[la]) {
                    if (!assoc.pass) break;
                    for (auto& [v, wv] : by_len[lb]) {
                        if (!assoc.pass) break;
                        if (wu + wv > ctx.n_weight) continue;
                        TVec uv = tensor_mul(ctx, *u, *v);
                        for (auto& [w, ww] : by_len[lc]) {
                            if (wu + wv + ww > ctx.n_weight) continue;
                            TVec lhs, rhs;
                            for (auto& [t, c] : uv.c) lhs.axpy(c, tensor_mul(ctx, t, *w));
                            for (auto& [t, c] : tensor_mul(ctx, *v, *w).c) rhs.axpy(c, tensor_mul(ctx, *u, t));
                            if (!(lhs == rhs)) {
                                assoc.pass = false;
                                assoc.witness = tensor_str(m, *u) + " , " + tensor_str(m, *v) + " , " +
                                                tensor_str(m, *w);
                                break;
                            }
                        }
                    }
                }

    auto& inter = r.add("binf_interchange");
    auto deconcat = [&](const Tensor& t) {
        SparseVec<std::pair<Tensor, Tensor>> out;
        for (size_t i = 0; i <= t.size(); ++i)
            out.add({Tensor(t.begin(), t.begin() + i), Tensor(t.begin() + i, t.end())}, Rat(1));
        return out;
    };
    for_pairs([&](const Tensor& u, const Tensor& v) {
        SparseVec<std::pair<Tensor, Tensor>> lhs, rhs;
        for (auto& [t, c] : tensor_mul(ctx, u, v).c) lhs.axpy(c, deconcat(t));
        for (auto& [up, cu] : deconcat(u).c)
            for (auto& [vp, cv] : deconcat(v).c) {
                Rat s = sign_pow(static_cast<long>(tensor_degree(m, up.second)) * tensor_degree(m, vp.first));
                for (auto& [a, ca] : tensor_mul(ctx, up.first, vp.first).c)
                    for (auto& [b, cb] : tensor_mul(ctx, up.second, vp.second).c)
                        rhs.add({a, b}, s * cu * cv * ca * cb);
            }
        if (!(lhs == rhs)) {
            inter.pass = false;
            inter.witness = tensor_str(m, u) + " * " + tensor_str(m, v);
            return false;
        }
        return true;
    });

    // corank-1 projections reconstruct the product (cofreeness round-trip)
    auto& taylor = r.add("binf_taylor_roundtrip");
    for_pairs([&](const Tensor& u, const Tensor& v) {
        if (u.size() != 1) return true;
        CobarVec want = tk_brace(ctx, u[0], v);
        CobarVec got;
        for (auto& [t, c] : tensor_mul(ctx, u, v).c)
            if (t.size() == 1) got.add(t[0], c);
        if (!(got == want)) {
            taylor.pass = false;
            taylor.witness = tensor_str(m, u) + " * " + tensor_str(m, v);
            return false;
        }
        return true;
    });
    return r;
}

TkSearchResult tk_sign_search(const std::vector<BInfContext>& instances) {
    TkSearchResult res;
    for (bool reduced : {true, false})
        for (int alpha : {0, 1})
            for (int beta : {0, 1})
                for (int gamma : {0, 1})
                    for (int delta : {0, 1}) {
                        TkConvention conv{reduced, alpha, beta, gamma, delta};
                        bool ok = true;
                        for (auto inst : instances) {
                            inst.conv = conv;
                            if (!verify_b_infinity(inst).all_pass()) {
                                ok = false;
                                break;
                            }
                        }
                        auto& c = res.report.add("tk_convention(" + conv.str() + ")");
                        c.pass = ok;
                        if (ok) res.passing.push_back(conv);
                    }
    return res;
}

} // namespace barq
