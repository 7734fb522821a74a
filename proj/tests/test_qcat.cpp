#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <vector>

#include "qvs/monadicity.hpp" // subset_lattice, a handy worked category
#include "qvs/presheaf.hpp"   // sub_category
#include "qvs/qcat.hpp"
#include "qvs/quantaloid.hpp"

using namespace qvs;

namespace {

std::shared_ptr<const Quantaloid> two_world() {
  auto Q = std::make_shared<const FiniteQuantale>(FiniteQuantale::boolean2());
  return std::make_shared<const Quantaloid>(build_dstar(Q));
}

// every relation between two fixed typed sets over the two-element world
std::vector<QRelation> all_relations(const std::shared_ptr<const Quantaloid>& K,
                                     const TypedSet& src, const TypedSet& dst) {
  std::vector<QRelation> out;
  const int cells = src.size() * dst.size();
  std::vector<int> pick(static_cast<std::size_t>(cells), 0);
  for (;;) {
    std::vector<int> entries;
    for (int x = 0; x < src.size(); ++x)
      for (int y = 0; y < dst.size(); ++y) {
        const HomSet& h = K->hom(src.type(x), dst.type(y));
        entries.push_back(h.elems[static_cast<std::size_t>(
            pick[static_cast<std::size_t>(x * dst.size() + y)])]);
      }
    out.emplace_back(K, src, dst, entries);
    int i = 0;
    for (; i < cells; ++i) {
      const HomSet& h = K->hom(src.type(i / dst.size()), dst.type(i % dst.size()));
      if (++pick[static_cast<std::size_t>(i)] < h.size()) break;
      pick[static_cast<std::size_t>(i)] = 0;
    }
    if (i == cells) break;
  }
  return out;
}

} // namespace

TEST_CASE("the subset lattice is a valid separated category ordered by inclusion") {
  auto K = two_world();
  QCategory X = subset_lattice(K, {"p", "q"});
  REQUIRE(X.size() == 5); // o {} {p} {q} {p,q}
  CHECK(all_passed(validate_category(X)));
  CHECK(is_separated(X));
  CHECK(!is_symmetric(X));

  CHECK(X.label(0) == "o");
  CHECK(X.label(4) == "{p,q}");
  CHECK(X.type(0) == 0);
  CHECK(X.type(1) == 1);
  // inclusion order on the type-1 part, o below nothing but itself
  CHECK(X.leq_under(1, 4));
  CHECK(X.leq_under(2, 4));
  CHECK(!X.leq_under(2, 3));
  CHECK(!X.leq_under(0, 1)); // different types never compare
  CHECK(X.iso(3, 3));
}

TEST_CASE("symmetrization keeps the diagonal and meets opposite homs") {
  auto K = two_world();
  QCategory X = subset_lattice(K, {"p", "q"});
  QCategory S = symmetrize(X);
  CHECK(!check_symmetric(X).passed());
  CHECK(check_symmetric(S).passed());
  CHECK(all_passed(validate_category(S)));
  for (int i = 0; i < X.size(); ++i) CHECK(S.hom(i, i) == X.hom(i, i));
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j)
      CHECK(S.hom(i, j) == K->hom_meet(X.type(i), X.type(j), X.hom(i, j),
                                       K->inv_mor(X.type(j), X.type(i), X.hom(j, i))));
}

TEST_CASE("an adjunction holds exactly for the fiber-maximum right adjoint") {
  auto K = two_world();
  QCategory X = subset_lattice(K, {"p", "q"});
  QCategory Y = subset_lattice(K, {"p"});
  // collapse both atoms onto the single atom
  std::vector<int> f{0, 1, 2, 2, 2};
  // right adjoint: largest preimage
  std::vector<int> g{0, 1, 4};
  CHECK(all_passed(check_functor(X, Y, f)));
  CHECK(all_passed(check_adjunction(X, Y, f, g)));

  // the section {} -> {}, {p} -> {p} is monotone but not right adjoint to f
  std::vector<int> wrong{0, 1, 2};
  CHECK(all_passed(check_functor(Y, X, wrong)));
  Reports rs = check_adjunction(X, Y, f, wrong);
  CHECK(!all_passed(rs));
}

TEST_CASE("relation composition is associative with identities neutral") {
  auto K = two_world();
  TypedSet T{{"o", "u", "v"}, {0, 1, 1}};
  std::vector<QRelation> rels = all_relations(K, T, T);
  REQUIRE(rels.size() == 16); // four type-1 cells with two choices each
  QRelation id = identity_rel(K, T);
  for (const QRelation& a : rels) {
    CHECK(rel_eq(compose_rel(a, id), a));
    CHECK(rel_eq(compose_rel(id, a), a));
  }
  for (const QRelation& a : rels)
    for (const QRelation& b : rels)
      for (const QRelation& c : rels)
        CHECK(rel_eq(compose_rel(compose_rel(a, b), c), compose_rel(a, compose_rel(b, c))));
}

TEST_CASE("residuals of relations satisfy the galois equivalences") {
  auto K = two_world();
  TypedSet T{{"o", "u", "v"}, {0, 1, 1}};
  std::vector<QRelation> rels = all_relations(K, T, T);
  for (const QRelation& psi : rels)
    for (const QRelation& phi : rels)
      for (const QRelation& eta : rels) {
        bool below = rel_leq(compose_rel(psi, phi), eta);
        CHECK(below == rel_leq(psi, imp_left(eta, phi)));
        CHECK(below == rel_leq(phi, imp_right(psi, eta)));
      }
}

TEST_CASE("functor graphs are distributors") {
  auto K = two_world();
  QCategory X = subset_lattice(K, {"p", "q"});
  QCategory Y = subset_lattice(K, {"p"});
  std::vector<int> f{0, 1, 2, 2, 2};
  CHECK(all_passed(validate_distributor(graph(X, Y, f), X, Y)));
  CHECK(all_passed(validate_distributor(cograph(X, Y, f), Y, X)));
}

TEST_CASE("order joins and meets on the subset lattice") {
  auto K = two_world();
  QCategory X = subset_lattice(K, {"p", "q"});
  CHECK(order_join(X, {2, 3}, 1) == std::optional<int>(4));
  CHECK(order_meet(X, {2, 3}, 1) == std::optional<int>(1));
  CHECK(order_join(X, {}, 1) == std::optional<int>(1));  // empty join is the bottom subset
  CHECK(order_meet(X, {}, 1) == std::optional<int>(4));
  CHECK(order_join(X, {}, 0) == std::optional<int>(0));
  // a family of mixed type is a structural error, not a missing bound
  CHECK_THROWS_AS(order_join(X, {0, 2}, 1), StructuralError);
  // incomparable pair with no upper bound: drop {p,q} from the lattice
  QCategory W = sub_category(X, {0, 1, 2, 3});
  CHECK(order_join(W, {2, 3}, 1) == std::nullopt);
}

TEST_CASE("map enumeration respects types and caps") {
  auto K = two_world();
  QCategory X = subset_lattice(K, {"p", "q"});
  EnumCaps caps;
  auto maps = enumerate_type_preserving_maps(X.carrier(), X.carrier(), caps);
  CHECK(maps.size() == 256); // one choice for o, four for each of the four subsets
  EnumCaps tight{100000, 10};
  CHECK_THROWS_AS(enumerate_type_preserving_maps(X.carrier(), X.carrier(), tight),
                  CapacityError);
}

TEST_CASE("separation fails when two elements are isomorphic") {
  auto K = two_world();
  TypedSet T{{"u", "v"}, {1, 1}};
  QCategory X(K, T, {1, 1, 1, 1});
  CHECK(all_passed(validate_category(X)));
  CHECK(is_symmetric(X));
  CHECK(!is_separated(X));
  LawReport r = check_separated(X);
  CHECK(!r.passed());
  REQUIRE(!r.witnesses.empty());
}
