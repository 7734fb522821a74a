#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <vector>

#include "qvs/monad.hpp"
#include "qvs/monadicity.hpp"
#include "qvs/parallel.hpp"

using namespace qvs;

namespace {

std::shared_ptr<const Quantaloid> two() {
  auto Q = std::make_shared<const FiniteQuantale>(FiniteQuantale::boolean2());
  return std::make_shared<const Quantaloid>(build_dstar(Q));
}

QCategory crisp(const std::shared_ptr<const Quantaloid>& K, int n) {
  TypedSet ts;
  std::vector<int> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    ts.labels.push_back("x" + std::to_string(i + 1));
    ts.types.push_back(K->object_of_element(K->base().unit()));
    alpha[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(i)] = K->base().unit();
  }
  return QCategory(K, std::move(ts), std::move(alpha));
}

struct SerialGuard {
  ~SerialGuard() { set_parallel_kernels(true); }
};

} // namespace

TEST_CASE("the kernel switch is observable") {
  SerialGuard restore;
  set_parallel_kernels(false);
  CHECK(!parallel_kernels());
  set_parallel_kernels(true);
  CHECK(parallel_kernels());
}

TEST_CASE("serial and parallel hom grids agree entry for entry") {
  SerialGuard restore;
  EnumCaps caps;
  auto K = two();
  QCategory X = subset_lattice(K, {"p", "q"});
  QCategory C = crisp(K, 3);

  set_parallel_kernels(false);
  PresheafCat ps = presheaf_category(X, caps);
  CopresheafCat cs = copresheaf_category(X, caps);
  PowerObject ss = power_object(C, caps);

  set_parallel_kernels(true);
  PresheafCat pp = presheaf_category(X, caps);
  CopresheafCat cp = copresheaf_category(X, caps);
  PowerObject sp = power_object(C, caps);

  CHECK(ps.cat.hom_matrix() == pp.cat.hom_matrix());
  CHECK(cs.cat.hom_matrix() == cp.cat.hom_matrix());
  CHECK(ss.cat.hom_matrix() == sp.cat.hom_matrix());
  REQUIRE(ps.objects.size() == pp.objects.size());
  for (std::size_t i = 0; i < ps.objects.size(); ++i) {
    CHECK(ps.objects[i].type_obj == pp.objects[i].type_obj);
    CHECK(ps.objects[i].values == pp.objects[i].values);
  }
  for (int i = 0; i < ps.cat.size(); ++i) CHECK(ps.cat.label(i) == pp.cat.label(i));
}

TEST_CASE("whole law runs are bit-identical across the switch") {
  SerialGuard restore;
  EnumCaps caps;
  auto K = two();
  QCategory C = crisp(K, 2);
  set_parallel_kernels(false);
  json serial = reports_to_json(check_monad_laws(C, caps, {}));
  set_parallel_kernels(true);
  json parallel = reports_to_json(check_monad_laws(C, caps, {}));
  CHECK(serial == parallel);
}
