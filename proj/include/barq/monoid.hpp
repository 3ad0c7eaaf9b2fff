#pragma once

#include "barq/delta0.hpp"
#include "barq/dg.hpp"

#include <memory>

namespace barq {

// A graded Leinster monoid on the finite window [0], ..., [N_max]: components
// X_n with Z^n multidegrees, the Delta_0 actions F_i/D_j, colax maps
// beta_{a,b} (unit edges a=0 / b=0 included), optional internal differentials,
// and, when algebra-flagged, componentwise products and units.
struct GLMonoid {
    std::string name;
    int Nmax = 0;
    bool algebra = false;

    struct Comp {
        std::vector<std::vector<int>> mdeg; // per basis element, length n
        std::vector<std::string> label;
        int dim() const { return static_cast<int>(mdeg.size()); }
        int total(int i) const {
            int t = 0;
            for (int a : mdeg[i]) t += a;
            return t;
        }
    };
    std::vector<Comp> comp; // 0..Nmax

    // face[n][i-1]: X_n -> X_{n-1}, 1 <= i <= n-1 (n >= 2)
    std::vector<std::vector<std::map<int, Elt>>> face;
    // degen[n][j]: X_n -> X_{n+1}, 0 <= j <= n (n <= Nmax-1)
    std::vector<std::vector<std::map<int, Elt>>> degen;
    // beta[n][a]: X_n -> X_a (x) X_{n-a}, 0 <= a <= n
    std::vector<std::vector<std::map<int, SparseVec<std::pair<int, int>>>>> beta;
    // internal differential per component (may be all-zero)
    std::vector<std::map<int, Elt>> diff;
    std::vector<int> unit; // unit[n] = index of 1^{(n)}, -1 when absent

    // product strategy
    enum class ProdKind { None, Table, TensorPower, Tensor };
    ProdKind pk = ProdKind::None;
    std::shared_ptr<const DgAlgebra> base;                    // TensorPower
    std::shared_ptr<const GLMonoid> left_factor, right_factor; // Tensor
    std::vector<std::map<std::pair<int, int>, Elt>> prod_table;

    // tuple coding for TensorPower components
    int tuple_index(const std::vector<int>& letters) const;
    std::vector<int> tuple_letters(int n, int index) const;

    Elt apply_face(int n, int i, const Elt& v) const;   // F_i: X_n -> X_{n-1}
    Elt apply_degen(int n, int j, const Elt& v) const;  // D_j: X_n -> X_{n+1}
    Elt apply_diff(int n, const Elt& v) const;
    SparseVec<std::pair<int, int>> apply_beta(int n, int a, const Elt& v) const;

    Elt mul(int n, const Elt& x, const Elt& y) const;
    Elt mul_basis(int n, int i, int j) const;

    // Contravariant action: f: [p] -> [q] in Delta_0 acts X_q -> X_p.
    Elt act(const D0Map& f, const Elt& v) const;
    // w_k^{(n)}: X_1 -> X_n
    Elt w_action(int k, int n, const Elt& v) const;

    std::string elt_name(int n, const Elt& v) const;

    // component X_n as a finite complex (degrees = total multidegree)
    FiniteComplex component_complex(int n) const;
};

// X_n = A^{(x)n} with multidegree (deg a_1, ..., deg a_n), inner faces by
// multiplication, degeneracies by unit insertion, beta the identity split.
GLMonoid from_dg_algebra(const DgAlgebra& a, int n_max);

// Componentwise tensor product with the interchange signs on beta.
GLMonoid tensor_monoid(const GLMonoid& x, const GLMonoid& y);

struct CheckMonoidOptions {
    long cubic_budget = 2'000'000; // max dim^3 for exhaustive associativity per level
    bool quasi_iso = true;         // certify beta quasi-isomorphisms by cone homology
};
Report check_monoid(const GLMonoid& m, CheckMonoidOptions opt = {});

// The sharp twist: F_i and D_j re-signed by the partial multidegree sums.
struct SharpView {
    const GLMonoid* m;
    Elt face(int n, int i, const Elt& v) const;
    Elt degen(int n, int j, const Elt& v) const;
};
SharpView sharp(const GLMonoid& m);
Report check_sharp(const GLMonoid& m);

// JSON schema for hand-built monoids (components + explicit F/D/beta tables).
GLMonoid monoid_from_json(const std::string& text);
std::string monoid_schema();

} // namespace barq
