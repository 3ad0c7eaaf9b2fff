#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace barq {

// A morphism [src] -> [dst] of Delta_0: monotone with f(0)=0, f(src)=dst.
// Stored as the full value table, table[j] = f(j), j = 0..src.
struct D0Map {
    int src = 0, dst = 0;
    std::vector<int> table;

    bool operator==(const D0Map&) const = default;
    auto operator<=>(const D0Map&) const = default;
    bool is_identity() const { return src == dst && well_formed_id(); }
    std::string str() const;

  private:
    bool well_formed_id() const {
        for (int j = 0; j <= src; ++j)
            if (table[j] != j) return false;
        return true;
    }
};

D0Map d0_identity(int n);

// Validates monotonicity and endpoint preservation; throws on failure.
D0Map d0_make(int src, int dst, std::vector<int> table);

// g after f; requires f.dst == g.src.
D0Map d0_compose(const D0Map& g, const D0Map& f);

// Elementary face f_i: [n] -> [n+1]. Delta_0 excludes the extreme faces,
// so 1 <= i <= n; i = 0 or i = n+1 is an error.
D0Map d0_face(int i, int n);

// Elementary degeneracy delta_j: [n] -> [n-1], 0 <= j <= n-1.
D0Map d0_degeneracy(int j, int n);

// Monoidal product, gluing the right end of f to the left end of g.
D0Map d0_product(const D0Map& f, const D0Map& g);

// w_k^(n): [n] -> [1], 0 on {0..k-1}, 1 above; 1 <= k <= n.
D0Map d0_w(int k, int n);

// The unique map [c] -> [0].
D0Map d0_collapse(int c);

// Generator factorization: f = faces ... degeneracies, as a composable chain
// listed outside-in (apply right-to-left). Tokens: (kind, index, source size).
struct D0Generator {
    enum Kind { Face, Degeneracy } kind;
    int index;
    int src_size; // object size the generator acts from
};
std::vector<D0Generator> d0_factor(const D0Map& f);

// Plain Delta morphism [src] -> [dst] (monotone, endpoints free).
struct DeltaMap {
    int src = 0, dst = 0;
    std::vector<int> table;
    bool operator==(const DeltaMap&) const = default;
    auto operator<=>(const DeltaMap&) const = default;
};

DeltaMap delta_make(int src, int dst, std::vector<int> table);
DeltaMap delta_compose(const DeltaMap& g, const DeltaMap& f);

// Joyal duality F: Delta^opp -> Delta_0 on morphisms: a Delta-morphism
// theta: [m] -> [n] induces F(theta): [n+1] -> [m+1] by precomposition on
// Hom_Delta(-, [1]), fixing both endpoints.
D0Map joyal_dual(const DeltaMap& theta);

std::vector<DeltaMap> enumerate_delta(int m, int n);
std::vector<D0Map> enumerate_delta0(int m, int n);

} // namespace barq
