#pragma once

#include "barq/dg.hpp"

namespace barq {

// A simplicial vector space on levels 0..Nmax with all faces (including the
// extreme ones) and degeneracies; only what the classical Eilenberg-MacLane
// regression needs.
struct SimplicialVS {
    std::string name;
    int Nmax = 0;
    std::vector<int> dims;
    std::vector<std::vector<std::map<int, Elt>>> face;  // face[n][i]: X_n -> X_{n-1}, 0 <= i <= n
    std::vector<std::vector<std::map<int, Elt>>> degen; // degen[n][j]: X_n -> X_{n+1}, 0 <= j <= n

    Elt apply_face(int n, int i, const Elt& v) const;
    Elt apply_degen(int n, int j, const Elt& v) const;
    // chain differential F_0 - F_1 + ... + (-1)^n F_n
    Elt chain_d(int n, const Elt& v) const;
};

// k-linear nerve of a finite monoid given by its multiplication table
// (mult[a][b] = index of a*b) with unit element `unit`.
SimplicialVS nerve(const std::string& name, const std::vector<std::vector<int>>& mult, int unit, int n_max);

SimplicialVS tensor_simplicial(const SimplicialVS& x, const SimplicialVS& y);

// The classical shuffle map on basis elements, landing in (X (x) Y)_{m+n}
// with the transposition sign.
Elt classical_em(const SimplicialVS& x, const SimplicialVS& y, int m, int i, int n, int j);

// Leibniz for the full simplicial chain differential, m+n <= n_trunc.
Report check_classical_em(const SimplicialVS& x, const SimplicialVS& y, int n_trunc);

} // namespace barq
