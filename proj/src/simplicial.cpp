#include "barq/simplicial.hpp"

#include "barq/em.hpp"

namespace barq {

namespace {
Elt basis_elt(int i) {
    Elt e;
    e.add(i, Rat(1));
    return e;
}
} // namespace

Elt SimplicialVS::apply_face(int n, int i, const Elt& v) const {
    Elt out;
    for (auto& [b, c] : v.c) {
        auto it = face[n][i].find(b);
        if (it != face[n][i].end()) out.axpy(c, it->second);
    }
    return out;
}

Elt SimplicialVS::apply_degen(int n, int j, const Elt& v) const {
    Elt out;
    for (auto& [b, c] : v.c) {
        auto it = degen[n][j].find(b);
        if (it != degen[n][j].end()) out.axpy(c, it->second);
    }
    return out;
}

Elt SimplicialVS::chain_d(int n, const Elt& v) const {
    Elt out;
    for (int i = 0; i <= n; ++i) out.axpy(sign_pow(i), apply_face(n, i, v));
    return out;
}

SimplicialVS nerve(const std::string& name, const std::vector<std::vector<int>>& mult, int unit, int n_max) {
    SimplicialVS s;
    s.name = name;
    s.Nmax = n_max;
    int q = static_cast<int>(mult.size());
    s.dims.resize(n_max + 1);
    s.face.resize(n_max + 1);
    s.degen.resize(n_max + 1);
    auto enc = [&](const std::vector<int>& t) {
        int idx = 0;
        for (int a : t) idx = idx * q + a;
        return idx;
    };
    auto dec = [&](int n, int idx) {
        std::vector<int> t(n);
        for (int k = n - 1; k >= 0; --k) {
            t[k] = idx % q;
            idx /= q;
        }
        return t;
    };
    for (int n = 0; n <= n_max; ++n) {
        int dim = 1;
        for (int k = 0; k < n; ++k) dim *= q;
        s.dims[n] = dim;
        if (n >= 1) {
            s.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                for (int idx = 0; idx < dim; ++idx) {
                    auto t = dec(n, idx);
                    std::vector<int> w;
                    if (i == 0)
                        w.assign(t.begin() + 1, t.end());
                    else if (i == n)
                        w.assign(t.begin(), t.end() - 1);
                    else {
                        w = t;
                        w[i - 1] = mult[t[i - 1]][t[i]];
                        w.erase(w.begin() + i);
                    }
                    s.face[n][i][idx] = basis_elt(enc(w));
                }
        }
        if (n < n_max) {
            s.degen[n].resize(n + 1);
            for (int j = 0; j <= n; ++j)
                for (int idx = 0; idx < dim; ++idx) {
                    auto t = dec(n, idx);
                    auto w = t;
                    w.insert(w.begin() + j, unit);
                    s.degen[n][j][idx] = basis_elt(enc(w));
                }
        }
    }
    return s;
}

SimplicialVS tensor_simplicial(const SimplicialVS& x, const SimplicialVS& y) {
    SimplicialVS s;
    s.name = x.name + "(x)" + y.name;
    s.Nmax = std::min(x.Nmax, y.Nmax);
    s.dims.resize(s.Nmax + 1);
    s.face.resize(s.Nmax + 1);
    s.degen.resize(s.Nmax + 1);
    for (int n = 0; n <= s.Nmax; ++n) {
        int dx = x.dims[n], dy = y.dims[n];
        s.dims[n] = dx * dy;
        auto diag = [&](const std::map<int, Elt>& fx, const std::map<int, Elt>& fy, int dy2) {
            std::map<int, Elt> out;
            for (auto& [i, ex] : fx)
                for (auto& [j, ey] : fy) {
                    Elt e;
                    for (auto& [a, ca] : ex.c)
                        for (auto& [b, cb] : ey.c) e.add(a * dy2 + b, ca * cb);
                    out[i * dy + j] = e;
                }
            return out;
        };
        if (n >= 1) {
            s.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i) s.face[n][i] = diag(x.face[n][i], y.face[n][i], y.dims[n - 1]);
        }
        if (n < s.Nmax) {
            s.degen[n].resize(n + 1);
            for (int j = 0; j <= n; ++j) s.degen[n][j] = diag(x.degen[n][j], y.degen[n][j], y.dims[n + 1]);
        }
    }
    return s;
}

Elt classical_em(const SimplicialVS& x, const SimplicialVS& y, int m, int i, int n, int j) {
    int dy = y.dims[m + n];
    Elt out;
    for (auto& s : enumerate_shuffles(m, n)) {
        Rat sign = sign_pow(shuffle_inversions(s));
        Elt xt = basis_elt(i);
        int level = m;
        for (int k = m; k < m + n; ++k) {
            xt = x.apply_degen(level, s.pos[k], xt);
            ++level;
        }
        Elt yt = basis_elt(j);
        level = n;
        for (int k = 0; k < m; ++k) {
            yt = y.apply_degen(level, s.pos[k], yt);
            ++level;
        }
        for (auto& [a, ca] : xt.c)
            for (auto& [b, cb] : yt.c) out.add(a * dy + b, sign * ca * cb);
    }
    return out;
}

Report check_classical_em(const SimplicialVS& x, const SimplicialVS& y, int n_trunc) {
    Report r;
    SimplicialVS z = tensor_simplicial(x, y);
    auto& leib = r.add("classical_em_chain_map");
    for (int m = 0; m <= n_trunc && leib.pass; ++m)
        for (int n = 0; m + n <= n_trunc && leib.pass; ++n) {
            if (m + n == 0) continue;
            for (int i = 0; i < x.dims[m] && leib.pass; ++i)
                for (int j = 0; j < y.dims[n] && leib.pass; ++j) {
                    Elt lhs = z.chain_d(m + n, classical_em(x, y, m, i, n, j));
                    Elt rhs;
                    if (m >= 1) {
                        Elt dx = x.chain_d(m, basis_elt(i));
                        for (auto& [a, ca] : dx.c) rhs.axpy(ca, classical_em(x, y, m - 1, a, n, j));
                    }
                    if (n >= 1) {
                        Elt dyv = y.chain_d(n, basis_elt(j));
                        for (auto& [b, cb] : dyv.c)
                            rhs.axpy(cb * sign_pow(m), classical_em(x, y, m, i, n - 1, b));
                    }
                    if (!(lhs == rhs)) {
                        leib.pass = false;
                        leib.witness = "level (" + std::to_string(m) + "," + std::to_string(n) + ") basis (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")";
                    }
                }
        }
    return r;
}

} // namespace barq
