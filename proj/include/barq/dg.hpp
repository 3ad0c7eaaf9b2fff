#pragma once

#include "barq/linalg.hpp"
#include "barq/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace barq {

using Elt = SparseVec<int>; // element of a based space, keyed by basis index

// Finite-dimensional dg algebra presentation over Q. Structure constants are
// stored sparsely per basis pair; a missing pair multiplies to zero.
struct DgAlgebra {
    std::string name;
    std::vector<std::string> label;
    std::vector<int> deg;
    std::vector<std::vector<int>> multideg; // optional Z^l refinement, empty if absent
    int unit = -1;                          // basis index, -1 if non-unital
    std::map<int, Elt> diff;                // d(basis i), absent rows are zero
    std::map<std::pair<int, int>, Elt> prod;

    int dim() const { return static_cast<int>(label.size()); }
    Elt d(const Elt& v) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt mul_basis(int i, int j) const;
    Elt basis(int i) const;
    int find_label(const std::string& s) const;

    // The algebra as a complex on its degree window.
    FiniteComplex as_complex() const;
    std::map<int, long> homology() const { return as_complex().homology_dims(); }
};

Report check_dg_algebra(const DgAlgebra& a);

// Conilpotent dg coalgebra presentation: the stored coproduct is reduced
// (no unit edge terms), as required for Cobar input.
struct DgCoalgebra {
    std::string name;
    std::vector<std::string> label;
    std::vector<int> deg;
    std::map<int, Elt> diff;
    // Delta(basis i) = sum of coeff * (j (x) k)
    std::map<int, SparseVec<std::pair<int, int>>> coprod;

    int dim() const { return static_cast<int>(label.size()); }
    Elt d(const Elt& v) const;
    SparseVec<std::pair<int, int>> delta(const Elt& v) const;
};

// conilpotency_cap: iterate Delta at most this many times before giving up
// ("conilpotency undecided at cap" is reported distinctly from failure).
Report check_dg_coalgebra(const DgCoalgebra& c, int conilpotency_cap);

// A dg bialgebra sharing one underlying space. The coproduct here is the
// full (counital) one; when `unit` is set the reduced part drops the
// unit (x) x and x (x) unit edge terms. `weight` + `max_weight`, when
// present, restrict axiom checks to tuples whose products stay in-window
// (weight-truncated presentations).
struct DgBialgebra {
    DgAlgebra alg;
    std::map<int, SparseVec<std::pair<int, int>>> coprod;
    std::vector<long> weight;
    long max_weight = -1;

    SparseVec<std::pair<int, int>> delta(const Elt& v) const;
    bool in_window(std::initializer_list<int> basis) const;
    DgCoalgebra reduced_coalgebra() const; // drops the unit line, reduces Delta
};

Report check_bialgebra(const DgBialgebra& b, int conilpotency_cap = 64);

// JSON input schema (see `schema` in the CLI): fields basis/unit/
// differential/product, coefficients as "p/q" strings.
DgAlgebra dg_algebra_from_json(const std::string& text);
std::string dg_algebra_schema();

std::string elt_str(const DgAlgebra& a, const Elt& v);

} // namespace barq
