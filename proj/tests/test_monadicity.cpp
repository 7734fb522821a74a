#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <string>
#include <vector>

#include "qvs/monadicity.hpp"
#include "qvs/presheaf.hpp"

using namespace qvs;

namespace {

std::shared_ptr<const Quantaloid> two() {
  auto Q = std::make_shared<const FiniteQuantale>(FiniteQuantale::boolean2());
  return std::make_shared<const Quantaloid>(build_dstar(Q));
}

const LawReport& line(const Reports& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.check == name) return r;
  REQUIRE_MESSAGE(false, "missing report: " << name);
  static LawReport dummy;
  return dummy;
}

} // namespace

TEST_CASE("the three worked split forks verify, with stable report shape") {
  EnumCaps caps;
  struct Expect {
    std::string name;
    int cocones, auto_cocones;
  };
  for (const Expect& e : {Expect{"identity", 6, 5}, Expect{"closure", 5, 4}, Expect{"collapse", 3, 2}}) {
    CAPTURE(e.name);
    SplitLiftResult res = verify_split_lift(builtin_split_fork(e.name), {}, caps);
    CHECK(res.ok);
    CHECK(all_passed(res.reports));
    CHECK(res.reports.size() == 69);
    CHECK(res.detail["cocones"] == e.cocones);
    CHECK(res.detail["auto_cocones"] == e.auto_cocones);
    CHECK(res.detail["auto_worlds"] == 2);
    CHECK(res.detail["auto_worlds_skipped"] == false);
    CHECK(res.detail["alternative_structures"] == 0);
    CHECK(res.detail["supplied"] == 0);
  }
}

TEST_CASE("the lifted structures and join sections are the expected ones") {
  EnumCaps caps;

  SplitLiftResult identity = verify_split_lift(builtin_split_fork("identity"), {}, caps);
  CHECK(identity.lifted.hom_matrix() ==
        std::vector<int>{0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1});
  CHECK(identity.join_section == std::vector<int>{0, 1, 2, 3, 4});

  SplitLiftResult closure = verify_split_lift(builtin_split_fork("closure"), {}, caps);
  REQUIRE(closure.lifted.size() == 4);
  CHECK(closure.lifted.hom_matrix() ==
        std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1});
  CHECK(closure.join_section == std::vector<int>{0, 1, 2, 4});
  CHECK(closure.lifted.label(0) == "o");
  CHECK(closure.lifted.label(1) == "{}");
  CHECK(closure.lifted.label(2) == "{p}");
  CHECK(closure.lifted.label(3) == "{p,q}");

  SplitLiftResult collapse = verify_split_lift(builtin_split_fork("collapse"), {}, caps);
  REQUIRE(collapse.lifted.size() == 2);
  CHECK(collapse.lifted.hom_matrix() == std::vector<int>{0, 0, 0, 1});
  CHECK(collapse.join_section == std::vector<int>{0, 2});
  CHECK(collapse.lifted.label(0) == "o");
  CHECK(collapse.lifted.label(1) == "{}");
}

TEST_CASE("the closure fork lifts to the fixpoint subcategory") {
  EnumCaps caps;
  auto K = two();
  QCategory X = subset_lattice(K, {"p", "q"});
  std::vector<int> c{0, 1, 2, 4, 4}; // close {q} up to {p,q}
  REQUIRE(all_passed(validate_closure_operator(X, c)));
  QCategory fix = sub_category(X, closure_fixpoints(X, c));

  SplitLiftResult res = verify_split_lift(builtin_split_fork("closure"), {}, caps);
  REQUIRE(res.ok);
  REQUIRE(fix.size() == res.lifted.size());
  CHECK(fix.hom_matrix() == res.lifted.hom_matrix());
  for (int i = 0; i < fix.size(); ++i) {
    CHECK(fix.label(i) == res.lifted.label(i));
    CHECK(fix.type(i) == res.lifted.type(i));
  }
}

TEST_CASE("a supplied cocone that factors keeps the verdict and is counted") {
  EnumCaps caps;
  SplitFork fk = builtin_split_fork("collapse");
  SplitLiftResult first = verify_split_lift(fk, {}, caps);
  REQUIRE(first.ok);
  // the quotient map into the lifted structure is itself a competing cocone
  SplitLiftResult again = verify_split_lift(fk, {Cocone{first.lifted, fk.h, "requotient"}}, caps);
  CHECK(again.ok);
  CHECK(again.detail["supplied"] == 1);
  CHECK(again.detail["cocones"] == first.detail["cocones"].get<int>() + 1);
}

TEST_CASE("fiber joins lift a retraction of the subset lattice onto a chain") {
  EnumCaps caps;
  auto K = two();
  QCategory X = subset_lattice(K, {"p", "q"});
  TypedSet Y{{"o", "bot", "top"}, {X.type(0), X.type(1), X.type(1)}};
  SectionLift lift = section_lift(X, Y, {0, 1, 2, 2, 2}, caps);
  CHECK(lift.conditions_hold);
  CHECK(all_passed(lift.reports));
  CHECK(lift.section == std::vector<int>{0, 1, 4});
  REQUIRE(lift.lifted.size() == 3);
  CHECK(lift.lifted.hom_matrix() == std::vector<int>{0, 0, 0, 0, 1, 1, 0, 0, 1});
}

TEST_CASE("a retraction whose joins do not factor is refused with a witness") {
  EnumCaps caps;
  auto K = two();
  QCategory X = subset_lattice(K, {"p", "q"});
  // send {p} and {q} to different chain levels; their join lands too high
  TypedSet Y{{"o", "lo", "mid", "hi"}, {X.type(0), X.type(1), X.type(1), X.type(1)}};
  SectionLift lift = section_lift(X, Y, {0, 1, 2, 2, 3}, caps);
  CHECK(!lift.conditions_hold);
  const LawReport& r = line(lift.reports, "retract.joins_factor");
  REQUIRE(!r.passed());
  CHECK(r.witnesses.at(0) == json({{"family", {"{p}", "{q}"}},
                                   {"image_of_join", "hi"},
                                   {"other_family", {"{p}"}},
                                   {"other_image_of_join", "mid"},
                                   {"type", "1"}}));
}

TEST_CASE("a broken splitting is rejected at the fork equations") {
  EnumCaps caps;
  SplitFork fk = builtin_split_fork("collapse");
  fk.s = {0, 0};
  SplitLiftResult res = verify_split_lift(fk, {}, caps);
  CHECK(!res.ok);
  const LawReport& r = line(res.reports, "fork.split_equations");
  REQUIRE(!r.passed());
  CHECK(r.witnesses.at(0) == json({{"equation", "h s = 1"}, {"z", "{}"}}));
}

TEST_CASE("a corrupted quotient structure is rejected before any lifting") {
  EnumCaps caps;
  SplitFork fk = builtin_split_fork("closure");
  std::vector<int> gamma = fk.Z.hom_matrix();
  const int n = fk.Z.size();
  // pretend two distinct classes are isomorphic
  gamma[1 * n + 2] = 1;
  gamma[2 * n + 1] = 1;
  fk.Z = QCategory(fk.Z.quantaloid_ptr(), fk.Z.carrier(), gamma);
  SplitLiftResult res = verify_split_lift(fk, {}, caps);
  CHECK(!res.ok);
  // the section is no longer a functor out of the fattened quotient
  CHECK(!line(res.reports, "fork.sym_s.hom_inequality").passed());
}

TEST_CASE("there are two complete worlds with at most three elements") {
  EnumCaps caps;
  auto K = two();
  std::vector<QCategory> worlds = small_complete_categories(K, 3, caps);
  REQUIRE(worlds.size() == 2);

  REQUIRE(worlds[0].size() == 2);
  CHECK(worlds[0].type(0) == 0);
  CHECK(worlds[0].type(1) == 1);
  CHECK(worlds[0].hom_matrix() == std::vector<int>{0, 0, 0, 1});

  REQUIRE(worlds[1].size() == 3);
  CHECK(worlds[1].type(0) == 0);
  CHECK(worlds[1].type(1) == 1);
  CHECK(worlds[1].type(2) == 1);
  CHECK(worlds[1].hom_matrix() == std::vector<int>{0, 0, 0, 0, 1, 0, 0, 1, 1});

  for (const QCategory& w : worlds) {
    CompletenessInfo info = check_complete(w, caps);
    CHECK(info.complete);
    CHECK(all_passed(info.reports));
  }
}
