#pragma once

#include "barq/monoid.hpp"

namespace barq {

// Element of the augmented bar space Bar+(X) = (+)_{l=0..Nmax} X_l, keyed by
// (weight, index). The conilpotent coalgebra used by Cobar is the weight >= 1
// part; weight 0 is the counital edge (the empty word).
using BarKey = std::pair<int, int>;
using BarVec = SparseVec<BarKey>;

inline BarVec bar_elt(int w, int i) {
    BarVec v;
    v.add({w, i}, Rat(1));
    return v;
}

int bar_degree(const GLMonoid& m, const BarKey& k); // -weight + internal total

// The signed face-sum differential d^s of the bar complex:
// d^s|_{X_l} = sum_i (-1)^{A_i} F_i with A_i = a_1+...+a_i+i.
BarVec bar_ds(const GLMonoid& m, const BarVec& v);
// Standard-sign variant (A_i = a_1+...+a_{i-1}+i-1), kept as a negative control.
BarVec bar_ds_standard(const GLMonoid& m, const BarVec& v);
// Internal differential: the slot-i component of d_{X_l} enters with (-1)^{i-1}.
BarVec bar_dint(const GLMonoid& m, const BarVec& v);
// Total bar differential.
BarVec bar_D(const GLMonoid& m, const BarVec& v);

// Coproduct terms of the (a, b) split; reduced = drop a=0 / b=0 edges.
SparseVec<std::pair<BarKey, BarKey>> bar_delta(const GLMonoid& m, const BarVec& v, bool reduced);

// Bar+(X) truncated at weight N as a finite complex, with its basis order.
struct BarBasis {
    std::vector<BarKey> keys;
    std::map<BarKey, int> pos;
};
BarBasis bar_basis(const GLMonoid& m, int n_trunc, bool include_weight0);
FiniteComplex bar_complex(const GLMonoid& m, int n_trunc, bool include_weight0 = false);

// The weight >= 1 part as a conilpotent dg coalgebra presentation.
DgCoalgebra bar_as_coalgebra(const GLMonoid& m, int n_trunc);

// Structural checks of the bar complex: (d^s)^2 = 0, total
// differential squares to zero, coassociativity, d-Delta compatibility.
Report check_bar(const GLMonoid& m, int n_trunc);

// Contraction h = D_0 of the bar complex of a unital monoid; finds the sign
// s with Dh + hD = s*id per weight and asserts it is consistent.
Report unital_contraction(const GLMonoid& m, int n_trunc);

// ---- Cobar ----

// A cobar word: letters are bar keys of weight >= 1; total weight is the sum.
using Word = std::vector<BarKey>;
using CobarVec = SparseVec<Word>;

long word_weight(const Word& w);
int cobar_degree(const GLMonoid& m, const Word& w); // length - weight + internal
std::string word_str(const GLMonoid& m, const Word& w);
std::string cobar_str(const GLMonoid& m, const CobarVec& v);

// Full cobar differential: letterwise bar differential plus coproduct
// splitting with the nonstandard sign (i-1 + deg c_i' + sum_{j<i} deg c_j).
CobarVec cobar_D(const GLMonoid& m, const Word& w);
CobarVec cobar_D(const GLMonoid& m, const CobarVec& v);
// Weight-preserving part only (internal + splitting): the vertical
// differential of the L_n strata.
CobarVec cobar_D_vertical(const GLMonoid& m, const Word& w);

// Free (concatenation) product.
CobarVec cobar_mul(const CobarVec& a, const CobarVec& b);

// All words of total weight <= N (or == N when exact), deterministic order.
std::vector<Word> enumerate_words(const GLMonoid& m, int n, bool exact = false);

struct WordBasis {
    std::vector<Word> words;
    std::map<Word, int> pos;
};
WordBasis word_basis(const GLMonoid& m, int n, bool exact = false);

// Truncated Cobar(Bar(X)) as a finite complex (weight <= N is a subcomplex).
FiniteComplex cobar_complex(const GLMonoid& m, int n_trunc);
std::map<int, long> cobar_homology(const GLMonoid& m, int n_trunc);

// L_n stratum: words of total weight n+1 with the vertical differential.
FiniteComplex ln_complex(const GLMonoid& m, int n);

Report check_cobar(const GLMonoid& m, int n_trunc);

// Phi: Cobar(Bar(X)) -> X_1 multiplies out all-singleton words; iota is the
// inclusion of X_1 as the single-letter stratum. Phi . iota = id.
Elt phi_counit(const GLMonoid& m, const Word& w);
Elt phi_counit(const GLMonoid& m, const CobarVec& v);
Word iota(int x1_index);

Report check_phi(const GLMonoid& m, int n_trunc);

// Bar of a dg algebra map (letterwise f^{(x)l}) as a chain map of truncated
// bar complexes; true when its cone is acyclic.
bool bar_map_quasi_iso(const DgAlgebra& a, const DgAlgebra& b, const std::map<int, Elt>& f, int n_trunc);

// ---- Cobar of a generic conilpotent dg coalgebra ----
// Words over the coalgebra basis, truncated by length; the differential uses
// the same splitting-sign convention as the bar-backed cobar.
using GWord = std::vector<int>;
using GCobarVec = SparseVec<GWord>;

int gcobar_degree(const DgCoalgebra& c, const GWord& w);
GCobarVec gcobar_D(const DgCoalgebra& c, const GWord& w);
GCobarVec gcobar_mul(const GWord& u, const GWord& v);
FiniteComplex gcobar_complex(const DgCoalgebra& c, int n_length);
Report check_gcobar(const DgCoalgebra& c, int n_length, int conilpotency_cap);

} // namespace barq
