#include "barq/delta0.hpp"

namespace barq {

std::string D0Map::str() const {
    std::string s = "[" + std::to_string(src) + "]->[" + std::to_string(dst) + "]:";
    for (int j = 0; j <= src; ++j) s += (j ? "," : " ") + std::to_string(table[j]);
    return s;
}

D0Map d0_identity(int n) {
    D0Map f;
    f.src = f.dst = n;
    f.table.resize(n + 1);
    for (int j = 0; j <= n; ++j) f.table[j] = j;
    return f;
}

D0Map d0_make(int src, int dst, std::vector<int> table) {
    if (src < 0 || dst < 0 || static_cast<int>(table.size()) != src + 1)
        throw std::invalid_argument("d0_make: bad sizes");
    for (int j = 0; j <= src; ++j) {
        if (table[j] < 0 || table[j] > dst) throw std::invalid_argument("d0_make: value out of range");
        if (j > 0 && table[j] < table[j - 1]) throw std::invalid_argument("d0_make: not monotone");
    }
    if (table[0] != 0 || table[src] != dst)
        throw std::invalid_argument("d0_make: endpoints not preserved");
    D0Map f;
    f.src = src;
    f.dst = dst;
    f.table = std::move(table);
    return f;
}

D0Map d0_compose(const D0Map& g, const D0Map& f) {
    if (f.dst != g.src) throw std::invalid_argument("d0_compose: size mismatch");
    D0Map h;
    h.src = f.src;
    h.dst = g.dst;
    h.table.resize(f.src + 1);
    for (int j = 0; j <= f.src; ++j) h.table[j] = g.table[f.table[j]];
    return h;
}

D0Map d0_face(int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("face f_" + std::to_string(i) + ": [" + std::to_string(n) +
                                    "]->[" + std::to_string(n + 1) + "] is not a Delta_0 morphism");
    D0Map f;
    f.src = n;
    f.dst = n + 1;
    f.table.resize(n + 1);
    for (int j = 0; j <= n; ++j) f.table[j] = (j < i) ? j : j + 1;
    return f;
}

D0Map d0_degeneracy(int j, int n) {
    if (n < 1 || j < 0 || j > n - 1) throw std::invalid_argument("degeneracy index out of range");
    D0Map f;
    f.src = n;
    f.dst = n - 1;
    f.table.resize(n + 1);
    for (int k = 0; k <= n; ++k) f.table[k] = (k <= j) ? k : k - 1;
    return f;
}

D0Map d0_product(const D0Map& f, const D0Map& g) {
    D0Map h;
    h.src = f.src + g.src;
    h.dst = f.dst + g.dst;
    h.table.resize(h.src + 1);
    for (int j = 0; j <= f.src; ++j) h.table[j] = f.table[j];
    for (int j = 1; j <= g.src; ++j) h.table[f.src + j] = f.dst + g.table[j];
    return h;
}

D0Map d0_w(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("w_k out of range");
    D0Map f;
    f.src = n;
    f.dst = 1;
    f.table.resize(n + 1);
    for (int j = 0; j <= n; ++j) f.table[j] = (j <= k - 1) ? 0 : 1;
    return f;
}

D0Map d0_collapse(int c) {
    D0Map f;
    f.src = c;
    f.dst = 0;
    f.table.assign(c + 1, 0);
    return f;
}

std::vector<D0Generator> d0_factor(const D0Map& f) {
    // Surjection part first (degeneracies), then injection part (faces):
    // f = (insert skipped values) . (collapse repeats).
    std::vector<D0Generator> out;
    std::vector<int> values; // image, increasing
    for (int j = 0; j <= f.src; ++j)
        if (j == 0 || f.table[j] != f.table[j - 1]) values.push_back(f.table[j]);
    // faces: one per element of [dst] \ image, composed outside-in (largest last applied)
    std::vector<int> skipped;
    {
        size_t vi = 0;
        for (int v = 0; v <= f.dst; ++v) {
            if (vi < values.size() && values[vi] == v)
                ++vi;
            else
                skipped.push_back(v);
        }
    }
    // Insert skipped values from the largest down so indices stay valid.
    {
        int size = f.dst - 1;
        std::vector<D0Generator> faces;
        for (auto it = skipped.rbegin(); it != skipped.rend(); ++it) {
            faces.push_back({D0Generator::Face, *it, size});
            --size;
        }
        // faces currently listed outermost-first; keep that order
        out.insert(out.end(), faces.begin(), faces.end());
    }
    // degeneracies: collapse each repeat f(j) == f(j+1); do it from the left.
    {
        std::vector<int> t = f.table;
        int size = f.src;
        std::vector<D0Generator> degs;
        for (int j = 0; j + 1 <= size;) {
            if (t[j] == t[j + 1]) {
                degs.push_back({D0Generator::Degeneracy, j, size});
                t.erase(t.begin() + j);
                --size;
            } else {
                ++j;
            }
        }
        // innermost degeneracy is applied first: reverse so the chain reads outside-in
        out.insert(out.end(), degs.rbegin(), degs.rend());
    }
    return out;
}

DeltaMap delta_make(int src, int dst, std::vector<int> table) {
    if (src < 0 || dst < 0 || static_cast<int>(table.size()) != src + 1)
        throw std::invalid_argument("delta_make: bad sizes");
    for (int j = 0; j <= src; ++j) {
        if (table[j] < 0 || table[j] > dst) throw std::invalid_argument("delta_make: value out of range");
        if (j > 0 && table[j] < table[j - 1]) throw std::invalid_argument("delta_make: not monotone");
    }
    DeltaMap f;
    f.src = src;
    f.dst = dst;
    f.table = std::move(table);
    return f;
}

DeltaMap delta_compose(const DeltaMap& g, const DeltaMap& f) {
    if (f.dst != g.src) throw std::invalid_argument("delta_compose: size mismatch");
    DeltaMap h;
    h.src = f.src;
    h.dst = g.dst;
    h.table.resize(f.src + 1);
    for (int j = 0; j <= f.src; ++j) h.table[j] = g.table[f.table[j]];
    return h;
}

D0Map joyal_dual(const DeltaMap& theta) {
    // q_i: [n] -> [1], q_i(j) = 0 for j < i; q_i . theta = q_{i'} with
    // i' = min { j : theta(j) >= i }, or m+1 when the set is empty.
    int m = theta.src, n = theta.dst;
    D0Map f;
    f.src = n + 1;
    f.dst = m + 1;
    f.table.resize(n + 2);
    for (int i = 0; i <= n + 1; ++i) {
        int v = m + 1;
        for (int j = 0; j <= m; ++j)
            if (theta.table[j] >= i) {
                v = j;
                break;
            }
        f.table[i] = v;
    }
    return f;
}

namespace {
template <class F>
void enumerate_monotone(int src, int dst, bool endpoints, F&& emit) {
    std::vector<int> t(src + 1);
    auto rec = [&](auto&& self, int j, int minv) -> void {
        if (j > src) {
            if (!endpoints || t[src] == dst) emit(t);
            return;
        }
        int lo = (j == 0 && endpoints) ? 0 : minv;
        int hi = (j == 0 && endpoints) ? 0 : dst;
        for (int v = lo; v <= hi; ++v) {
            t[j] = v;
            self(self, j + 1, v);
        }
    };
    rec(rec, 0, 0);
}
} // namespace

std::vector<DeltaMap> enumerate_delta(int m, int n) {
    std::vector<DeltaMap> out;
    enumerate_monotone(m, n, false, [&](const std::vector<int>& t) {
        out.push_back(DeltaMap{m, n, t});
    });
    return out;
}

std::vector<D0Map> enumerate_delta0(int m, int n) {
    std::vector<D0Map> out;
    enumerate_monotone(m, n, true, [&](const std::vector<int>& t) {
        out.push_back(D0Map{m, n, t});
    });
    return out;
}

} // namespace barq
