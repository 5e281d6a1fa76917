#include <random>

#include "doctest.h"
#include "torsam/linalg.hpp"
#include "torsam/parse.hpp"
#include "torsam/ring.hpp"

using namespace torsam;

TEST_CASE("field inverse") {
  PrimeField f(7);
  for (Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS(PrimeField(12));
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(15) == 1);
}

TEST_CASE("polynomial arithmetic") {
  auto P = std::make_shared<const PolyRing>(PrimeField(), std::vector<std::string>{"x", "y"});
  Poly x = Poly::variable(P.get(), 0), y = Poly::variable(P.get(), 1);
  Poly s = x + y;
  CHECK(s.pow(2) == x * x + Poly::constant(P.get(), 2) * x * y + y * y);
  CHECK((s - s).is_zero());
  CHECK(s.pow(3).degree() == 3);
  CHECK(s.pow(3).is_homogeneous());
  CHECK_FALSE((x * x + y).is_homogeneous());
  CHECK(parse_poly(P.get(), "x^2 + 2xy + y^2") == s.pow(2));
  CHECK(parse_poly(P.get(), "x*y - y*x").is_zero());
}

TEST_CASE("parser accepts the documented grammar") {
  Document doc = parse_document(R"(# comment
field 101
ring R = k[x,y] / (x^2)
ring S = k[a,b,c]
module M over R = coker deg(0) [[x]]
module N over S = coker deg(0,1) [[a^2, b^2], [0, c]]
)");
  CHECK(doc.field.characteristic() == 101);
  REQUIRE(doc.rings.size() == 2);
  REQUIRE(doc.modules.size() == 2);
  CHECK(doc.ring("R")->relations().size() == 1);
  CHECK(doc.ring("S")->relations().empty());
  CHECK(doc.module("M").rank() == 1);
  CHECK(doc.module("N").rank() == 2);
  CHECK(doc.module("N").relations().size() == 2);
}

TEST_CASE("printed documents parse back to the same objects") {
  std::string text =
      "field 32003\n"
      "ring R = k[x,y,z] / (x*y - z^2, x^3)\n"
      "module M over R = coker deg(0,1) [[x*y, y^2], [z, -3*x]]\n";
  Document a = parse_document(text);
  std::string again = "field 32003\n" + ring_to_text("R", *a.ring("R")) + "\n" + module_to_text("M", "R", a.module("M")) + "\n";
  Document b = parse_document(again);
  CHECK(ring_to_text("R", *b.ring("R")) == ring_to_text("R", *a.ring("R")));
  CHECK(module_to_text("M", "R", b.module("M")) == module_to_text("M", "R", a.module("M")));
}

TEST_CASE("parse errors carry line and column") {
  auto error_at = [](const std::string& text) -> std::pair<int, int> {
    try {
      parse_document(text);
    } catch (const InputError& e) {
      return {e.line(), e.column()};
    }
    return {-1, -1};
  };
  auto [l1, c1] = error_at("ring R = k[x,y] / (x^2 + y)\n");
  CHECK(l1 == 1);
  CHECK(c1 > 0);
  CHECK(error_at("ring R = k[x,y]\nmodule M over T = coker deg(0) [[x]]\n").first == 2);
  CHECK(error_at("ring R = k[x,y]\nmodule M over R = coker deg(0,0) [[x], [y^2]]\n").first == 2);  // degree mismatch
  CHECK(error_at("ring R = k[x,y]\n\nmodule M over R = coker deg(0,0) [[x]]\n").first == 3);   // row count
  CHECK(error_at("ring R = k[x,x]\n").first == 1);
  CHECK(error_at("ring R = k[x,y]\nring R = k[z]\n").first == 2);
  CHECK(error_at("ring R = k[x,y] / (x^2\n").first == 1);
  CHECK(error_at("# fine\nring R = k[x] / (x^2)\n").first == -1);
}

TEST_CASE("rank kernels agree") {
  PrimeField f;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    int rows = 1 + static_cast<int>(rng() % 90), cols = 1 + static_cast<int>(rng() % 90);
    int true_rank = static_cast<int>(rng() % (std::min(rows, cols) + 1));
    // product of random rows x r and r x cols has rank at most r, and r almost surely
    DenseMatrix a(rows, true_rank), b(true_rank, cols), m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < true_rank; ++k) a.at(i, k) = static_cast<Scalar>(rng() % f.characteristic());
    for (int k = 0; k < true_rank; ++k)
      for (int j = 0; j < cols; ++j) b.at(k, j) = rng() % 3 == 0 ? static_cast<Scalar>(rng() % f.characteristic()) : 0;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Scalar s = 0;
        for (int k = 0; k < true_rank; ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
        m.at(i, j) = s;
      }
    int r = rank_serial(f, m);
    CHECK(r <= true_rank);
    CHECK(rank_parallel(f, m) == r);
    CHECK(rank_sparse(f, m) == r);
    CHECK(rank(f, m) == r);
    CHECK(rank_serial(f, m.transposed()) == r);
  }
}
