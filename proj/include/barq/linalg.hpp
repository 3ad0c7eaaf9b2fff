#pragma once

#include "barq/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace barq {

// Sparse vector over an ordered key type. Never stores zeros.
template <class K>
struct SparseVec {
    std::map<K, Rat> c;

    void add(const K& k, const Rat& v) {
        if (is_zero(v)) return;
        auto it = c.find(k);
        if (it == c.end()) {
            c.emplace(k, v);
        } else {
            it->second += v;
            if (is_zero(it->second)) c.erase(it);
        }
    }
    void axpy(const Rat& s, const SparseVec& o) {
        if (is_zero(s)) return;
        for (auto& [k, v] : o.c) add(k, s * v);
    }
    Rat at(const K& k) const {
        auto it = c.find(k);
        return it == c.end() ? Rat(0) : it->second;
    }
    bool zero() const { return c.empty(); }
    bool operator==(const SparseVec& o) const { return c == o.c; }
};

// Sparse matrix with dense 0-based row/column indices, row-major storage.
struct SpMat {
    int rows = 0, cols = 0;
    std::vector<std::map<int, Rat>> row; // row[i][j] = entry

    SpMat() = default;
    SpMat(int r, int c) : rows(r), cols(c), row(r) {}
    void add(int i, int j, const Rat& v) {
        if (is_zero(v)) return;
        auto& e = row[i][j];
        e += v;
        if (is_zero(e)) row[i].erase(j);
    }
    Rat at(int i, int j) const {
        auto it = row[i].find(j);
        return it == row[i].end() ? Rat(0) : it->second;
    }
    bool zero() const {
        for (auto& r : row)
            if (!r.empty()) return false;
        return true;
    }
    // this ∘ other (apply other first): (this*other)[i][k] = sum_j this[i][j]*other[j][k]
    SpMat compose(const SpMat& other) const;
    SpMat transpose() const;
    bool operator==(const SpMat& o) const;
};

// Rank over Q by fraction-free elimination on big integers.
long rank(const SpMat& m);

// A linear map between labeled bases. Labels are structured values with a
// canonical order; every coefficient must reference declared labels.
template <class K>
struct LabeledMap {
    std::vector<K> domain, codomain;
    std::map<K, SparseVec<K>> columns; // image of each domain label

    SpMat matrix() const {
        std::map<K, int> dpos, cpos;
        for (size_t i = 0; i < domain.size(); ++i) dpos[domain[i]] = static_cast<int>(i);
        for (size_t i = 0; i < codomain.size(); ++i) cpos[codomain[i]] = static_cast<int>(i);
        SpMat m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
        for (auto& [from, col] : columns) {
            auto df = dpos.find(from);
            if (df == dpos.end()) throw std::invalid_argument("label mismatch: unknown domain label");
            for (auto& [to, v] : col.c) {
                auto cf = cpos.find(to);
                if (cf == cpos.end()) throw std::invalid_argument("label mismatch: unknown codomain label");
                m.add(cf->second, df->second, v);
            }
        }
        return m;
    }
    SparseVec<K> apply(const SparseVec<K>& v) const {
        SparseVec<K> out;
        for (auto& [k, c] : v.c) {
            auto it = columns.find(k);
            if (it != columns.end()) out.axpy(c, it->second);
        }
        return out;
    }
    // this after other
    LabeledMap compose(const LabeledMap& other) const {
        if (other.codomain != domain) throw std::invalid_argument("label mismatch: composition bases differ");
        LabeledMap out;
        out.domain = other.domain;
        out.codomain = codomain;
        for (auto& [from, col] : other.columns) {
            SparseVec<K> v = apply(col);
            if (!v.zero()) out.columns[from] = v;
        }
        return out;
    }
};

template <class K>
long rank(const LabeledMap<K>& m) {
    return rank(m.matrix());
}

// Exact reduced row echelon over Q; dense and naive. Kept as an independent
// second route for tests and small certificates.
long rank_dense_oracle(const SpMat& m);

// A cochain complex on a finite window of degrees [lo, hi]; d[i] maps
// degree lo+i to degree lo+i+1. Degrees outside the window are zero.
struct FiniteComplex {
    int lo = 0;
    std::vector<long> dims;        // dims[i] = dim in degree lo+i
    std::vector<SpMat> d;          // d[i]: dims[i] -> dims[i+1], size dims.size()-1 (or 0)

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    long dim(int degree) const {
        int i = degree - lo;
        if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
        return dims[i];
    }

    // Degree and basis index of the first basis vector on which d*d != 0.
    struct D2Witness {
        int degree;
        int basis_index;
    };
    std::optional<D2Witness> check_d2() const;

    // dim ker d^i - rank d^{i-1} per degree in the window. Throws if d^2 != 0.
    std::map<int, long> homology_dims() const;
};

// A degree-0 chain map f: A -> B between complexes over the same window
// (f[i]: A.dims[i] -> B.dims[i]). Cone(f) with the convention
// Cone^k = A^{k+1} (+) B^k, d(a,b) = (-d_A a, f(a) + d_B b).
struct ChainMap {
    const FiniteComplex* src;
    const FiniteComplex* dst;
    std::vector<SpMat> f;
};

FiniteComplex cone(const ChainMap& m);

bool is_quasi_iso(const ChainMap& m);

} // namespace barq
