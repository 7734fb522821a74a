#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qvs/cost.hpp"
#include "qvs/quantale.hpp"

using namespace qvs;

namespace {

const LawReport& line(const Reports& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.check == name) return r;
  static LawReport missing;
  REQUIRE_MESSAGE(false, "missing report line ", name);
  return missing;
}

// diamond bot < {a,b} < top with multiplication = meet and the involution
// swapping the two middle elements
FiniteQuantale diamond_swap() {
  // order: bot=0, a=1, b=2, top=3
  std::vector<std::vector<bool>> leq{{true, true, true, true},
                                     {false, true, false, true},
                                     {false, false, true, true},
                                     {false, false, false, true}};
  std::vector<std::vector<int>> mul{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  return FiniteQuantale::from_tables({"bot", "a", "b", "top"}, leq, mul, 3, {0, 2, 1, 3});
}

} // namespace

TEST_CASE("lukasiewicz residuals match the closed form") {
  // indices 0,1,2 stand for 0, 1/2, 1; a & b = max(0, a+b-2) in indices
  FiniteQuantale Q = FiniteQuantale::chain_lukasiewicz(3);
  CHECK(all_passed(validate_quantale(Q)));
  for (int r = 0; r < 3; ++r)
    for (int b = 0; b < 3; ++b) {
      CHECK(Q.mul(r, b) == std::max(0, r + b - 2));
      CHECK(Q.left_imp(r, b) == std::min(2, 2 - b + r));
      CHECK(Q.right_imp(b, r) == Q.left_imp(r, b)); // commutative
    }
  // the largest x with x & 1/2 <= 0 is 1/2
  CHECK(Q.left_imp(0, 1) == 1);
  CHECK(Q.name(Q.left_imp(0, 1)) == "1/2");
  // full adjunction sweep, independent of the precomputed tables
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        CHECK(Q.leq(Q.mul(p, q), r) == Q.leq(p, Q.left_imp(r, q)));
        CHECK(Q.leq(Q.mul(p, q), r) == Q.leq(q, Q.right_imp(p, r)));
      }
}

TEST_CASE("goedel residuals are truncation") {
  FiniteQuantale Q = FiniteQuantale::chain_goedel(3);
  CHECK(all_passed(validate_quantale(Q)));
  for (int r = 0; r < 3; ++r)
    for (int b = 0; b < 3; ++b) {
      CHECK(Q.mul(r, b) == std::min(r, b));
      CHECK(Q.left_imp(r, b) == (b <= r ? 2 : r));
    }
}

TEST_CASE("boolean residual is material implication") {
  FiniteQuantale Q = FiniteQuantale::boolean2();
  CHECK(all_passed(validate_quantale(Q)));
  CHECK(Q.left_imp(0, 0) == 1);
  CHECK(Q.left_imp(0, 1) == 0);
  CHECK(Q.left_imp(1, 0) == 1);
  CHECK(Q.left_imp(1, 1) == 1);
  CHECK(Q.unit() == 1);
  CHECK(Q.top() == 1);
  CHECK(Q.bottom() == 0);
}

TEST_CASE("chain builtins up to five validate") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(all_passed(validate_quantale(FiniteQuantale::chain_lukasiewicz(n))));
    CHECK(all_passed(validate_quantale(FiniteQuantale::chain_goedel(n))));
  }
}

TEST_CASE("frame and monoid powerset builtins validate") {
  // Sierpinski space: one closed point; opens {} {x} {x,y}
  FiniteQuantale S = FiniteQuantale::finite_frame({"x", "y"}, {{}, {0}, {0, 1}});
  CHECK(S.size() == 3);
  CHECK(all_passed(validate_quantale(S)));
  CHECK(S.unit() == S.top());

  // powerset of Z2 under elementwise sum
  FiniteQuantale P = FiniteQuantale::powerset_of_monoid({"0", "1"}, {{0, 1}, {1, 0}}, 0, {0, 1});
  CHECK(P.size() == 4);
  CHECK(all_passed(validate_quantale(P)));
  // {1} & {1} = {0}
  int one = -1, zero = -1;
  for (int a = 0; a < 4; ++a) {
    if (P.name(a) == "{1}") one = a;
    if (P.name(a) == "{0}") zero = a;
  }
  REQUIRE(one >= 0);
  REQUIRE(zero >= 0);
  CHECK(P.mul(one, one) == zero);
  CHECK(P.unit() == zero);
  CHECK(static_cast<int>(P.hermitian_elements().size()) == 4);
}

TEST_CASE("an involution that swaps incomparable elements") {
  FiniteQuantale D = diamond_swap();
  CHECK(all_passed(validate_quantale(D)));
  CHECK(D.is_hermitian(0));
  CHECK(D.is_hermitian(3));
  CHECK(!D.is_hermitian(1));
  CHECK(!D.is_hermitian(2));
  std::vector<int> h = D.hermitian_elements();
  CHECK(h == std::vector<int>{0, 3});
}

TEST_CASE("a broken unit is caught by validation not construction") {
  // multiplication = meet but the claimed unit is bot
  std::vector<std::vector<bool>> leq{{true, true}, {false, true}};
  std::vector<std::vector<int>> mul{{0, 0}, {0, 1}};
  FiniteQuantale Q = FiniteQuantale::from_tables({"lo", "hi"}, leq, mul, 0, {0, 1});
  Reports rs = validate_quantale(Q);
  CHECK(!all_passed(rs));
  const LawReport& u = line(rs, "monoid.unit");
  CHECK(!u.passed());
  CHECK(!u.witnesses.empty());
}

TEST_CASE("cost values subtract exactly") {
  CostQuantale C;
  CHECK(C.right_imp(CostVal::of(1), CostVal::of(3)) == CostVal::of(2));
  CHECK(C.left_imp(CostVal::of(3), CostVal::of(1)) == CostVal::of(2));
  CHECK(C.left_imp(CostVal::of(1), CostVal::of(3)) == CostVal::of(0));
  CHECK(C.mul(CostVal::of(1, 2), CostVal::of(1, 3)) == CostVal::of(5, 6));
  CHECK(C.leq(CostVal::of(3), CostVal::of(2)));       // larger cost is lower
  CHECK(C.leq(CostVal::infinity(), CostVal::of(7)));  // infinity is bottom
  CHECK(C.mul(CostVal::infinity(), CostVal::of(0)) == CostVal::infinity());
  CHECK(C.left_imp(CostVal::infinity(), CostVal::infinity()) == CostVal::of(0));
  CHECK(C.join(CostVal::of(2), CostVal::of(5)) == CostVal::of(2));
  CHECK(C.meet(CostVal::of(2), CostVal::of(5)) == CostVal::of(5));

  std::vector<CostVal> grid{CostVal::of(0), CostVal::of(1, 3), CostVal::of(1, 2),
                            CostVal::of(2), CostVal::infinity()};
  CHECK(all_passed(validate_cost_grid(grid)));
}
