#pragma once

#include "barq/bar.hpp"

namespace barq {

// An (m,n)-shuffle: pos[i] is the final position of slot i, increasing on
// 0..m-1 and on m..m+n-1.
struct Shuffle {
    int m = 0, n = 0;
    std::vector<int> pos;
};

std::vector<Shuffle> enumerate_shuffles(int m, int n);
long shuffle_inversions(const Shuffle& s);

// Sign exponents of the modified map, from the multidegrees of the inputs.
long s_em(const Shuffle& s, const std::vector<int>& adeg, const std::vector<int>& bdeg);
long s_sharp(const Shuffle& s, const std::vector<int>& adeg, const std::vector<int>& bdeg);

// The modified Eilenberg-MacLane map on basis elements x in X_m, y in Y_n,
// landing in (X (x) Y)_{m+n} with the pair index i*dim(Y_{m+n})+j (the basis
// order of tensor_monoid, which therefore never needs to be materialized).
Elt modified_em(const GLMonoid& x, const GLMonoid& y, BarKey xk, BarKey yk);

// Bilinear extension Bar+(X) (x) Bar+(Y) -> Bar+(X(x)Y).
BarVec nabla(const GLMonoid& x, const GLMonoid& y, const BarVec& u, const BarVec& v);

// Chain-map identity (the Leibniz rule of the modified map) on basis pairs
// with m+n <= n_trunc. `standard_signs` swaps in the standard-sign bar
// differential (the negative control); `total` uses the full differential.
Report check_em_leibniz(const GLMonoid& x, const GLMonoid& y, int n_trunc, bool standard_signs = false,
                        bool total = false);

// Lax associativity square and the unit diagrams for three monoids.
Report check_em_lax(const GLMonoid& x, const GLMonoid& y, const GLMonoid& z3, int n_trunc);

// Symmetry square with kappa_1 (bar-degree swap) and kappa_2 (inner swap).
Report check_em_symmetry(const GLMonoid& x, const GLMonoid& y, int n_trunc);

// The map is a morphism of dg coalgebras (counital coproducts).
Report check_em_coalgebra_map(const GLMonoid& x, const GLMonoid& y, int n_trunc);

// Sign bookkeeping facts: shuffle counts, zero-grading classical signs,
// and the kappa discrepancy congruences.
Report check_em_signs(const GLMonoid& x, const GLMonoid& y, int n_trunc);

// Product on Bar+(X) of an algebra-flagged monoid: multiply after nabla.
BarVec bar_mul(const GLMonoid& x, const BarVec& u, const BarVec& v);

// The weight-truncated dg bialgebra presentation of Bar+(X).
DgBialgebra bar_bialgebra(const GLMonoid& x, int n_trunc);

// Associativity of bar_mul on in-window triples (the lax square instantiated).
Report check_bar_product(const GLMonoid& x, int n_trunc);

} // namespace barq
