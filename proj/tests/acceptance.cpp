// Acceptance suite: one line per criterion, exit 0 iff all pass.
#include "barq/suites.hpp"

#include <functional>
#include <iostream>

using namespace barq;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool report_ok(const Report& r, std::string& detail) {
    for (auto& c : r.checks)
        if (!c.pass) {
            detail = c.name + (c.witness.empty() ? "" : " at " + c.witness);
            return false;
        }
    return true;
}

std::map<int, long> nonzero(const std::map<int, long>& t) {
    std::map<int, long> out;
    for (auto& [k, v] : t)
        if (v != 0) out[k] = v;
    return out;
}

GLMonoid mono(const std::string& name, int n) { return from_dg_algebra(catalog_find(name)->algebra, n); }

} // namespace

int main() {
    criterion(1, "signed bar differential squares to zero, weight <= 6, all catalog monoids (exact)",
              [](std::string& detail) {
                  for (auto& e : catalog()) {
                      GLMonoid m = from_dg_algebra(e.algebra, 6);
                      BarBasis b = bar_basis(m, 6, true);
                      for (auto& k : b.keys)
                          if (!bar_ds(m, bar_ds(m, bar_elt(k.first, k.second))).zero()) {
                              detail = e.name + " at " + m.comp[k.first].label[k.second];
                              return false;
                          }
                  }
                  return true;
              });

    criterion(2, "bar coproduct coassociative and compatible with the differential, weight <= 6 (exact)",
              [](std::string& detail) {
                  for (auto& e : catalog()) {
                      GLMonoid m = from_dg_algebra(e.algebra, 6);
                      Report r = check_bar(m, 6);
                      if (!report_ok(r, detail)) {
                          detail = e.name + ": " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3,
              "modified EM map is a chain map, m+n <= 5, dual0xdual0 / ext1xext1 / ext1xdual0; "
              "standard-sign variant fails on the graded pairs",
              [](std::string& detail) {
                  GLMonoid d0 = mono("dual0", 5), e1 = mono("ext1", 5);
                  struct Pair {
                      const GLMonoid *x, *y;
                      std::string name;
                  } pairs[] = {{&d0, &d0, "dual0 x dual0"}, {&e1, &e1, "ext1 x ext1"}, {&e1, &d0, "ext1 x dual0"}};
                  for (auto& p : pairs) {
                      Report r = check_em_leibniz(*p.x, *p.y, 5);
                      if (!report_ok(r, detail)) {
                          detail = p.name + ": " + detail;
                          return false;
                      }
                  }
                  // negative control: the standard-sign differential must break it
                  if (check_em_leibniz(e1, e1, 5, true).all_pass()) {
                      detail = "standard signs unexpectedly pass on ext1 x ext1";
                      return false;
                  }
                  if (check_em_leibniz(e1, d0, 5, true).all_pass()) {
                      detail = "standard signs unexpectedly pass on ext1 x dual0";
                      return false;
                  }
                  return true;
              });

    criterion(4, "lax monoidality and symmetry of the EM map, windows m+n <= 4 / three factors <= 4 (exact)",
              [](std::string& detail) {
                  GLMonoid d0 = mono("dual0", 4), e1 = mono("ext1", 4);
                  if (!report_ok(check_em_lax(d0, d0, d0, 4), detail)) return false;
                  if (!report_ok(check_em_lax(e1, e1, e1, 4), detail)) return false;
                  if (!report_ok(check_em_lax(e1, d0, e1, 4), detail)) return false;
                  if (!report_ok(check_em_symmetry(d0, d0, 4), detail)) return false;
                  if (!report_ok(check_em_symmetry(e1, e1, 4), detail)) return false;
                  if (!report_ok(check_em_symmetry(e1, d0, 4), detail)) return false;
                  return true;
              });

    criterion(5, "EM map is a morphism of dg coalgebras, m+n <= 5 (exact)", [](std::string& detail) {
        GLMonoid d0 = mono("dual0", 5), e1 = mono("ext1", 5);
        if (!report_ok(check_em_coalgebra_map(d0, d0, 5), detail)) return false;
        if (!report_ok(check_em_coalgebra_map(e1, e1, 5), detail)) return false;
        if (!report_ok(check_em_coalgebra_map(e1, d0, 5), detail)) return false;
        return true;
    });

    criterion(6, "Bar of the monoid is a dg bialgebra on the weight <= 4 truncation, dual0 and ext1",
              [](std::string& detail) {
                  for (auto& name : {"dual0", "ext1"}) {
                      GLMonoid m = mono(name, 4);
                      Report r = check_bialgebra(bar_bialgebra(m, 4), 5);
                      if (!report_ok(r, detail)) {
                          detail = std::string(name) + ": " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "L_0 is X_1 and L_1..L_4 are acyclic for every catalog monoid (exact)",
              [](std::string& detail) {
                  for (auto& e : catalog()) {
                      GLMonoid m = from_dg_algebra(e.algebra, 5);
                      FiniteComplex l0 = ln_complex(m, 0);
                      FiniteComplex x1 = m.component_complex(1);
                      bool same = l0.lo == x1.lo && l0.dims == x1.dims;
                      for (size_t i = 0; same && i + 1 < l0.dims.size(); ++i) same = l0.d[i] == x1.d[i];
                      if (!same) {
                          detail = e.name + ": L_0 differs from X_1";
                          return false;
                      }
                      for (int n = 1; n <= 4; ++n)
                          for (auto& [deg, h] : ln_complex(m, n).homology_dims())
                              if (h != 0) {
                                  detail = e.name + ": L_" + std::to_string(n) + " has H^" +
                                           std::to_string(deg) + " = " + std::to_string(h);
                                  return false;
                              }
                  }
                  return true;
              });

    criterion(8,
              "bar-cobar counit: Phi o iota = id and H(Cobar Bar) at N = 5 equals H(X_1): "
              "dual0 {0:2}, ext1 {0:1,1:1}, cone {}, poly3 {0:3}",
              [](std::string& detail) {
                  std::map<std::string, std::map<int, long>> expect = {
                      {"dual0", {{0, 2}}}, {"ext1", {{0, 1}, {1, 1}}}, {"cone", {}}, {"poly3", {{0, 3}}}};
                  for (auto& [name, table] : expect) {
                      GLMonoid m = mono(name, 5);
                      Report r = check_phi(m, 5);
                      if (!report_ok(r, detail)) {
                          detail = name + ": " + detail;
                          return false;
                      }
                      auto h = nonzero(cobar_homology(m, 5));
                      if (h != table) {
                          detail = name + ": homology table differs";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "unital contraction dh + hd = -id on words of weight <= N-1, N = 6, all catalog algebras",
              [](std::string& detail) {
                  for (auto& e : catalog()) {
                      GLMonoid m = from_dg_algebra(e.algebra, 6);
                      Report r = unital_contraction(m, 6);
                      if (!report_ok(r, detail)) {
                          detail = e.name + ": " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10,
              "Tamarkin-Kadeishvili B-infinity on Bar(dual0), weight <= 4, length <= 3; the sign search "
              "resolves to a unique convention",
              [](std::string& detail) {
                  GLMonoid d0 = mono("dual0", 4), e1 = mono("ext1", 4);
                  BInfContext c1, c2;
                  c1.x = &d0;
                  c1.n_weight = 4;
                  c1.n_length = 3;
                  c2.x = &e1;
                  c2.n_weight = 4;
                  c2.n_length = 3;
                  Report r = verify_b_infinity(c1);
                  if (!report_ok(r, detail)) return false;
                  TkSearchResult search = tk_sign_search({c1, c2});
                  if (search.passing.size() != 1) {
                      detail = std::to_string(search.passing.size()) + " conventions pass";
                      return false;
                  }
                  TkConvention pinned;
                  if (search.passing.front().str() != pinned.str()) {
                      detail = "search found " + search.passing.front().str() + ", engine pins " + pinned.str();
                      return false;
                  }
                  return true;
              });

    criterion(11,
              "A-infinity morphism relation for arities <= 4 plus the split identities, dual0 and ext1; "
              "phi_1 induces the homology isomorphism of criterion 8",
              [](std::string& detail) {
                  for (auto& name : {"dual0", "ext1"}) {
                      GLMonoid m = mono(name, 5);
                      Report r = check_morphism(m, 4, 5);
                      if (!report_ok(r, detail)) {
                          detail = std::string(name) + ": " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(12, "sharp twist: d-sharp equals the signed differential (weight <= 5) and the sharp actions "
                  "satisfy the restricted simplicial identities",
              [](std::string& detail) {
                  for (auto& e : catalog()) {
                      GLMonoid m = from_dg_algebra(e.algebra, 5);
                      Report r = check_sharp(m);
                      if (!report_ok(r, detail)) {
                          detail = e.name + ": " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(13, "Delta_0 combinatorics: simplicial identities <= 5, Joyal duality bijective and "
                  "contravariant <= 4, w-map product identities a+b <= 5",
              [](std::string& detail) { return report_ok(delta0_report(), detail); });

    criterion(14,
              "zero-grading specialization: modified EM chain map on zero-graded monoids, m+n <= 5, and "
              "its shuffle signs equal the classical transposition signs",
              [](std::string& detail) {
                  GLMonoid d0 = mono("dual0", 5), p3 = mono("poly3", 5);
                  if (!report_ok(check_em_leibniz(d0, d0, 5), detail)) return false;
                  if (!report_ok(check_em_leibniz(p3, d0, 5), detail)) return false;
                  for (int m = 0; m <= 5; ++m)
                      for (int n = 0; m + n <= 5; ++n) {
                          std::vector<int> za(m, 0), zb(n, 0);
                          for (auto& s : enumerate_shuffles(m, n))
                              if (parity(s_em(s, za, zb) + s_sharp(s, za, zb)) !=
                                  parity(shuffle_inversions(s))) {
                                  detail = "shuffle sign differs at (" + std::to_string(m) + "," +
                                           std::to_string(n) + ")";
                                  return false;
                              }
                      }
                  return true;
              });

    if (failures == 0) {
        std::cout << "acceptance: all 14 criteria PASS" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAIL" << std::endl;
    return 1;
}
