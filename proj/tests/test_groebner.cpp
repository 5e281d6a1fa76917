#include "doctest.h"
#include "oracle.hpp"
#include "torsam/hilbert.hpp"
#include "torsam/module_ops.hpp"
#include "torsam/parse.hpp"
#include "torsam/resolution.hpp"
#include "torsam/submodule.hpp"

using namespace torsam;

TEST_CASE("ideal basis of (x^2, xy+y^2)") {
  auto R = make_ring("x,y");
  Poly x = R->var(0), y = R->var(1);
  Submodule U(R, FreeModule{{0}}, {{x * x}, {x * y + y * y}});
  // the S-pair of the two generators reduces to y^3
  auto gb = groebner_basis(U);
  CHECK(gb.generators().size() == 3);
  CHECK(U.contains({y * y * y}));
  CHECK_FALSE(U.contains({y * y}));
  CHECK(U.contains({x * y * y}));
  CHECK(U.normal_form({x * y}) == Vector{-(y * y)});
}

TEST_CASE("Betti numbers of the residue field") {
  SUBCASE("Koszul complex over k[x,y,z]") {
    auto R = make_ring("x,y,z");
    auto F = minimal_resolution(ModulePresentation::residue_field(R), 5);
    std::vector<int> expect = {1, 3, 3, 1, 0, 0};
    for (int i = 0; i <= 5; ++i) CHECK(F.betti(i) == expect[i]);
    CHECK(F.graded_betti(2) == std::map<int, int>{{2, 3}});
  }
  SUBCASE("hypersurface k[x,y]/(x^2): Poincare series (1+t)/(1-t)") {
    auto R = make_ring("x,y", "x^2");
    auto F = minimal_resolution(ModulePresentation::residue_field(R), 5);
    CHECK(F.betti(0) == 1);
    for (int i = 1; i <= 5; ++i) CHECK(F.betti(i) == 2);
  }
  SUBCASE("R/(x) over k[x,y]/(xy) is periodic of period 2") {
    auto R = make_ring("x,y", "x*y");
    auto F = minimal_resolution(make_module(R, {0}, {{"x"}}), 6);
    for (int i = 0; i <= 6; ++i) CHECK(F.betti(i) == 1);
    CHECK(F.graded_betti(3) == std::map<int, int>{{3, 1}});
  }
}

TEST_CASE("Hilbert series from monomial leads, from Betti numbers and by brute force agree") {
  // k[x,y]/(x^2, xy): 1 + 2z + z^2 + z^3 + ..., numerator 1 - 2z^2 + z^3 over (1-z)^2
  CHECK(monomial_numerator({Monomial::from_exponents({2, 0}), Monomial::from_exponents({1, 1})}) ==
        std::vector<long long>{1, 0, -2, 1});

  auto R = make_ring("x,y,z", "x*y - z^2, x^3");
  std::vector<ModulePresentation> mods = {
      ModulePresentation::free(R, {0}),
      make_module(R, {0, 1}, {{"x*y", "y^2"}, {"z", "-3*x"}}),
      quotient_by_power(make_module(R, {0}, {{"y"}}), 3),
      ModulePresentation::residue_field(R),
  };
  for (auto& M : mods) {
    HilbertSeries a = hilbert_series(M);
    HilbertSeries b = quotient_series(relation_submodule(M));
    b.reduce();
    CHECK(a == b);
    for (int e = -1; e <= 7; ++e) CHECK(a.value(e) == oracle::piece_dim(M, e));
  }
}

TEST_CASE("minimal presentations drop redundant generators") {
  auto R = make_ring("x,y");
  // a unit entry kills the second generator
  auto M = make_module(R, {0, 0}, {{"x", "0"}, {"0", "1"}});
  auto m = minimal_presentation(M);
  CHECK(m.rank() == 1);
  CHECK(hilbert_series(m) == hilbert_series(M));
}
