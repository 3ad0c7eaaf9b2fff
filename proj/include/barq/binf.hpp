#pragma once

#include "barq/em.hpp"

namespace barq {

// Tensor-coalgebra element over Y[1], Y = Cobar(Bar(X)): an outer word whose
// letters are cobar words. The empty tensor is the unit.
using Tensor = std::vector<Word>;
using TVec = SparseVec<Tensor>;

// The Koszul convention for the brace insertion sign and for the coproduct
// power used by the diamond action; resolved by search (see tk_sign_search).
// The unique passing convention on the catalog instances: counital coproduct
// in the diamond; a crossing of y_j over a tail letter a_u contributes
// (deg_C y_j + 1)(deg_C a_u); inside the diamond, block a^{(k)} crossing the
// word letter y^j contributes deg_B(a^{(k)}) (deg_B(y^j) + 1).
struct TkConvention {
    bool reduced_diamond = false;
    int alpha = 1; // insertion sign, y-degree twist: (deg_C y + alpha)
    int beta = 0;  // insertion sign, passed-letter twist: (deg_C a_u + beta)
    int gamma = 0; // diamond reorder, coproduct-block twist: (deg_B a^{(k)} + gamma)
    int delta = 1; // diamond reorder, word-letter twist: (deg_B y^j + delta)
    std::string str() const;
};

struct BInfContext {
    const GLMonoid* x = nullptr; // algebra-flagged monoid, B = Bar+(X)
    int n_weight = 4;
    int n_length = 3;
    TkConvention conv;
};

// a (diamond) y = (Delta^{r-1} a) * y, factorwise product with Koszul signs.
CobarVec diamond(const BInfContext& ctx, BarKey a, const Word& y);

// m_{1,l}([a_1..a_n]; y_1, ..., y_l): insertion sum with the convention signs.
CobarVec tk_brace(const BInfContext& ctx, const Word& a, const std::vector<Word>& ys);

// Product on the tensor coalgebra (coalgebra-map extension of the braces).
TVec tensor_mul(const BInfContext& ctx, const Tensor& u, const Tensor& v);

// Bar-type differential of the dg algebra Y on the tensor coalgebra.
TVec tensor_D(const BInfContext& ctx, const Tensor& t);

int tensor_degree(const GLMonoid& m, const Tensor& t); // sum of (deg_C - 1)

std::vector<Tensor> enumerate_tensors(const GLMonoid& m, int n_weight, int n_length);

// Axiom suite: differential squares to zero, associativity, Leibniz,
// product/coproduct interchange, unit, Taylor-component round-trip.
Report verify_b_infinity(const BInfContext& ctx);

// Search the finite convention set on the given instances; report the
// passing conventions (the suite demands a unique survivor).
struct TkSearchResult {
    std::vector<TkConvention> passing;
    Report report; // one line per convention
};
TkSearchResult tk_sign_search(const std::vector<BInfContext>& instances);

} // namespace barq
