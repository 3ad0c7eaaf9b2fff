#include "barq/catalog.hpp"

namespace barq {

namespace {

DgAlgebra ground_field() {
    DgAlgebra a;
    a.name = "k";
    a.label = {"1"};
    a.deg = {0};
    a.unit = 0;
    a.prod[{0, 0}].add(0, Rat(1));
    return a;
}

// Q[x]/(x^(k+1)) with deg x = xdeg (truncated polynomial / exterior algebra).
DgAlgebra truncated_poly(const std::string& name, int k, int xdeg) {
    DgAlgebra a;
    a.name = name;
    for (int i = 0; i <= k; ++i) {
        a.label.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        a.deg.push_back(i * xdeg);
    }
    a.unit = 0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            if (i + j > k) continue;
            // odd generator: x*x = 0 is already enforced by i+j > k for k = 1
            if (xdeg % 2 != 0 && i == 1 && j == 1) continue;
            a.prod[{i, j}].add(i + j, Rat(1));
        }
    return a;
}

DgAlgebra cone_algebra() {
    DgAlgebra a;
    a.name = "cone";
    a.label = {"1", "e"};
    a.deg = {0, -1};
    a.unit = 0;
    a.prod[{0, 0}].add(0, Rat(1));
    a.prod[{0, 1}].add(1, Rat(1));
    a.prod[{1, 0}].add(1, Rat(1));
    // e*e = 0 (deg -2 component is empty), d(e) = 1
    a.diff[1].add(0, Rat(1));
    return a;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> v;
    v.push_back({"k", "the ground field Q", ground_field(), {{0, 1}}});
    v.push_back({"dual0", "Q[x]/(x^2), deg x = 0, d = 0 (dual numbers)", truncated_poly("dual0", 1, 0), {{0, 2}}});
    v.push_back({"ext1", "exterior algebra on one generator of degree 1", truncated_poly("ext1", 1, 1), {{0, 1}, {1, 1}}});
    v.push_back({"cone", "Q[e]/(e^2), deg e = -1, d(e) = 1; acyclic", cone_algebra(), {{-1, 0}, {0, 0}}});
    v.push_back({"poly3", "Q[x]/(x^3), deg x = 0, d = 0", truncated_poly("poly3", 2, 0), {{0, 3}}});
    return v;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = build();
    return c;
}

std::optional<CatalogEntry> catalog_find(const std::string& name) {
    for (auto& e : catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

} // namespace barq
