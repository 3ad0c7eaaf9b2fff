#pragma once

#include "barq/bar.hpp"

#include <functional>

namespace barq {

// A finite graded space with differential, optional product and optional
// weight window; the common substrate for the sign calculus below.
struct FSpace {
    std::vector<int> deg;
    std::vector<std::string> label;
    std::function<Elt(int)> d;
    std::function<Elt(int, int)> mul;
    std::vector<long> weight; // optional; with max_weight restricts tuples
    long max_weight = -1;

    int dim() const { return static_cast<int>(deg.size()); }
    Elt d_elt(const Elt& v) const;
    Elt mul_elt(const Elt& a, const Elt& b) const;
    int deg_elt(const Elt& v) const; // degree of a homogeneous element
};

FSpace space_of(const DgAlgebra& a);
// Cobar(Bar(X)) truncated at weight N as a strict dg algebra (concatenation).
FSpace cobar_space(const GLMonoid& m, int n_trunc);

// Multilinear cochain V^{(x)k} -> V with its coefficient table.
struct Cochain {
    int arity = 1;
    int degree = 0;
    std::map<std::vector<int>, Elt> table;
};
Elt eval(const Cochain& c, const std::vector<int>& args);

// (groot2)-style differential of a cochain.
Cochain d_cochain(const FSpace& V, const Cochain& c);

// Shifted-rescaled cochain on V[1]: same table, evaluation carries the
// (k-1)deg v_1 + ... + deg v_{k-1} prefix.
struct SCochain {
    int arity = 1;
    int sdeg = 0; // degree as a map T(V[1]) -> V[1]
    std::map<std::vector<int>, Elt> table;
};
SCochain shift_rescale(const FSpace& V, const Cochain& c);
SCochain d_scochain(const FSpace& V, const SCochain& c);

// Insertion circle product of shifted cochains.
SCochain circle(const FSpace& V, const SCochain& c1, const SCochain& c2);

// Strict A-infinity relations (m_1 = d, m_2 = product, m_{>=3} = 0) verified
// per arity n = a+b <= n_max on all in-window basis tuples.
Report check_ainfinity_relations(const FSpace& V, int n_max);

// theta_n(x_1,...,x_n) = w_1(x_1) * ... * w_n(x_n) in X_n, and the Taylor
// component phi_n = (-1)^{(n-1)deg x_1 + ... + deg x_{n-1}} theta_n viewed as
// a one-letter cobar word.
Elt theta(const GLMonoid& x, const std::vector<int>& xs);
CobarVec yoneda_phi(const GLMonoid& x, const std::vector<int>& xs);

// The morphism relation for arities n <= n_max (target Cobar(Bar(X)) at
// weight n_trunc), the two split identities, and the w-map lemmas.
Report check_morphism(const GLMonoid& x, int n_max, int n_trunc);

// w-lemmas: F_i w_k collapse rule and beta of w-images (unit factors).
Report check_w_lemmas(const GLMonoid& x, int n_trunc);

// Per-arity coefficient tables of the Yoneda components, as JSON.
std::string yoneda_morphism_json(const GLMonoid& x, int n_max);

} // namespace barq
