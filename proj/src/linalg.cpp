#include "barq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace barq {

SpMat SpMat::compose(const SpMat& other) const {
    if (cols != other.rows)
        throw std::invalid_argument("compose: size mismatch");
    SpMat out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (auto& [j, v] : row[i])
            for (auto& [k, w] : other.row[j]) out.add(i, k, v * w);
    return out;
}

SpMat SpMat::transpose() const {
    SpMat out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (auto& [j, v] : row[i]) out.row[j][i] = v;
    return out;
}

bool SpMat::operator==(const SpMat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (int i = 0; i < rows; ++i)
        if (row[i] != o.row[i]) return false;
    return true;
}

namespace {

// Integer rows after clearing denominators rowwise.
std::vector<std::map<int, Int>> integer_rows(const SpMat& m) {
    std::vector<std::map<int, Int>> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        if (m.row[i].empty()) continue;
        Int l = 1;
        for (auto& [j, v] : m.row[i]) {
            Int den = v.get_den();
            l = lcm(l, den);
        }
        for (auto& [j, v] : m.row[i]) {
            Int e = v.get_num() * (l / v.get_den());
            if (e != 0) rows[i][j] = e;
        }
    }
    return rows;
}

} // namespace

long rank(const SpMat& m) {
    auto rows = integer_rows(m);
    std::vector<long> col_nnz(m.cols, 0);
    for (auto& r : rows)
        for (auto& [j, v] : r) ++col_nnz[j];

    std::vector<bool> row_done(m.rows, false);
    long rk = 0;
    for (;;) {
        // Markowitz-flavoured pivot: cheapest (row fill) * (col fill).
        int pr = -1, pc = -1;
        long best = -1;
        for (int i = 0; i < m.rows; ++i) {
            if (row_done[i] || rows[i].empty()) continue;
            for (auto& [j, v] : rows[i]) {
                long score = (static_cast<long>(rows[i].size()) - 1) * (col_nnz[j] - 1);
                if (best < 0 || score < best) {
                    best = score;
                    pr = i;
                    pc = j;
                }
            }
            if (best == 0) break;
        }
        if (pr < 0) break;

        Int p = rows[pr][pc];
        for (int i = 0; i < m.rows; ++i) {
            if (i == pr || row_done[i]) continue;
            auto it = rows[i].find(pc);
            if (it == rows[i].end()) continue;
            Int a = it->second;
            // cross-multiplied elimination row_i := p*row_i - a*row_pr,
            // renormalized by the row content to keep the entries small
            std::map<int, Int> next;
            Int content = 0;
            auto ai = rows[i].begin();
            auto bi = rows[pr].begin();
            while (ai != rows[i].end() || bi != rows[pr].end()) {
                int jc;
                Int val;
                if (bi == rows[pr].end() || (ai != rows[i].end() && ai->first < bi->first)) {
                    jc = ai->first;
                    val = p * ai->second;
                    ++ai;
                } else if (ai == rows[i].end() || bi->first < ai->first) {
                    jc = bi->first;
                    val = -a * bi->second;
                    ++bi;
                } else {
                    jc = ai->first;
                    val = p * ai->second - a * bi->second;
                    ++ai;
                    ++bi;
                }
                if (val != 0) {
                    content = gcd(content, val);
                    next[jc] = val;
                }
            }
            if (content > 1)
                for (auto& [jc, val] : next) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), content.get_mpz_t());
            for (auto& [j, v] : rows[i]) --col_nnz[j];
            rows[i] = std::move(next);
            for (auto& [j, v] : rows[i]) ++col_nnz[j];
        }
        for (auto& [j, v] : rows[pr]) --col_nnz[j];
        row_done[pr] = true;
        rows[pr].clear();
        ++rk;
    }
    return rk;
}

long rank_dense_oracle(const SpMat& m) {
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols, Rat(0)));
    for (int i = 0; i < m.rows; ++i)
        for (auto& [j, v] : m.row[i]) a[i][j] = v;
    long rk = 0;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(a[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            Rat f = a[i][c] / a[r][c];
            for (int j = c; j < m.cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
        ++rk;
    }
    return rk;
}

std::optional<FiniteComplex::D2Witness> FiniteComplex::check_d2() const {
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        SpMat sq = d[i + 1].compose(d[i]);
        for (int b = 0; b < sq.cols; ++b) {
            for (int r = 0; r < sq.rows; ++r)
                if (!is_zero(sq.at(r, b))) return D2Witness{lo + static_cast<int>(i), b};
        }
    }
    return std::nullopt;
}

std::map<int, long> FiniteComplex::homology_dims() const {
    if (auto w = check_d2())
        throw std::logic_error("homology_dims: d^2 != 0 at degree " + std::to_string(w->degree) +
                               ", basis index " + std::to_string(w->basis_index));
    std::map<int, long> h;
    size_t n = dims.size();
    std::vector<long> rk(n, 0); // rk[i] = rank d[i] (d out of degree lo+i)
    for (size_t i = 0; i + 1 < n; ++i) rk[i] = rank(d[i]);
    for (size_t i = 0; i < n; ++i) {
        long out = (i + 1 < n) ? rk[i] : 0;
        long in = (i > 0) ? rk[i - 1] : 0;
        h[lo + static_cast<int>(i)] = dims[i] - out - in;
    }
    return h;
}

FiniteComplex cone(const ChainMap& m) {
    const FiniteComplex& A = *m.src;
    const FiniteComplex& B = *m.dst;
    if (A.lo != B.lo || A.dims.size() != B.dims.size())
        throw std::invalid_argument("cone: windows differ");
    FiniteComplex C;
    C.lo = A.lo - 1;
    size_t n = A.dims.size() + 1;
    C.dims.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        long da = (i < A.dims.size()) ? A.dims[i] : 0; // A sits one degree lower
        long db = (i > 0) ? B.dims[i - 1] : 0;
        C.dims[i] = da + db;
    }
    C.d.assign(n - 1, SpMat());
    for (size_t i = 0; i + 1 < n; ++i) {
        SpMat dm(static_cast<int>(C.dims[i + 1]), static_cast<int>(C.dims[i]));
        long aoff_src = 0, boff_src = (i < A.dims.size()) ? A.dims[i] : 0;
        long aoff_dst = 0, boff_dst = (i + 1 < A.dims.size()) ? A.dims[i + 1] : 0;
        // -d_A block
        if (i + 1 < A.dims.size()) {
            const SpMat& dA = A.d[i];
            for (int r = 0; r < dA.rows; ++r)
                for (auto& [c, v] : dA.row[r]) dm.add(static_cast<int>(aoff_dst) + r, static_cast<int>(aoff_src) + c, -v);
        }
        // f block: A^{k+1} -> B^{k+1}
        if (i < A.dims.size()) {
            const SpMat& F = m.f[i];
            for (int r = 0; r < F.rows; ++r)
                for (auto& [c, v] : F.row[r]) dm.add(static_cast<int>(boff_dst) + r, static_cast<int>(aoff_src) + c, v);
        }
        // d_B block
        if (i > 0 && i - 1 + 1 < B.dims.size()) {
            const SpMat& dB = B.d[i - 1];
            for (int r = 0; r < dB.rows; ++r)
                for (auto& [c, v] : dB.row[r]) dm.add(static_cast<int>(boff_dst) + r, static_cast<int>(boff_src) + c, v);
        }
        C.d[i] = std::move(dm);
    }
    return C;
}

bool is_quasi_iso(const ChainMap& m) {
    FiniteComplex C = cone(m);
    for (auto& [deg, h] : C.homology_dims())
        if (h != 0) return false;
    return true;
}

} // namespace barq
