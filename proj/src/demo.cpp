#include "qvs/demo.hpp"

#include <numeric>

#include "qvs/axioms.hpp"
#include "qvs/cost.hpp"

namespace qvs {

namespace {

QCategory crisp_category(const std::shared_ptr<const Quantaloid>& Kp, int n) {
  const FiniteQuantale& Q = Kp->base();
  const int o1 = Kp->object_of_element(Q.top());
  TypedSet ts;
  for (int i = 0; i < n; ++i) {
    ts.labels.push_back("x" + std::to_string(i + 1));
    ts.types.push_back(o1);
  }
  std::vector<int> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Q.bottom());
  for (int i = 0; i < n; ++i)
    alpha[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
        Q.top();
  return QCategory(Kp, ts, alpha);
}

} // namespace

Reports demo_crisp(int n, std::ostream& out) {
  if (n < 1 || n > 4)
    throw StructuralError("crisp demo size out of range", {{"n", n}, {"allowed", "1..4"}});
  auto base = std::make_shared<const FiniteQuantale>(FiniteQuantale::boolean2());
  auto Kp = std::make_shared<const Quantaloid>(build_dstar(base));
  const Quantaloid& K = *Kp;
  const FiniteQuantale& Q = *base;
  const QCategory X = crisp_category(Kp, n);
  const EnumCaps caps{};

  const auto subsets = enumerate_potential_subsets(X, caps);
  out << "candidate subsets of the crisp " << n << "-point set (" << subsets.size() << "):\n";
  for (const auto& mu : subsets) {
    out << "  (type " << K.obj_name(mu.type_obj) << ") [";
    for (int x = 0; x < X.size(); ++x)
      out << (x ? ", " : "") << X.label(x) << ":"
          << Q.name(mu.values[static_cast<std::size_t>(x)]);
    out << "]\n";
  }

  Reports R;
  R.push_back(check_power_paths_agree(X, caps));
  SampleSpec sp;
  sp.sampled = n >= 3;
  sp.seed = 17;
  sp.count = 500;
  append(R, check_monad_laws(X, caps, sp));
  out << reports_to_table(R);
  return R;
}

Reports demo_partial_metric(std::ostream& out) {
  using R64 = boost::rational<long long>;
  const CostQuantale cq;
  // closed rational intervals [lo, hi]; the two degenerate points keep the
  // zero-extent edge in play
  const std::vector<std::pair<R64, R64>> iv = {
      {{0, 1}, {1, 1}},  {{1, 2}, {3, 2}},  {{1, 3}, {2, 3}},  {{1, 1}, {2, 1}},
      {{3, 4}, {7, 4}},  {{0, 1}, {1, 2}},  {{2, 5}, {4, 5}},  {{1, 6}, {5, 6}},
      {{5, 4}, {9, 4}},  {{1, 2}, {1, 2}},  {{0, 1}, {0, 1}},  {{2, 1}, {3, 1}},
      {{7, 3}, {8, 3}},  {{1, 5}, {6, 5}},  {{3, 2}, {5, 2}},  {{1, 8}, {3, 8}},
      {{5, 6}, {7, 6}},  {{2, 3}, {5, 3}},  {{1, 4}, {2, 1}},  {{0, 1}, {3, 1}}};
  const int n = static_cast<int>(iv.size());

  auto val = [](const R64& r) { return CostVal{false, r}; };
  auto alpha = std::function<CostVal(int, int)>([&](int x, int y) {
    const auto& [a, b] = iv[static_cast<std::size_t>(x)];
    const auto& [c, d] = iv[static_cast<std::size_t>(y)];
    return val(std::max(b, d) - std::min(a, c));
  });
  auto label = std::function<std::string(int)>([&](int x) {
    const auto& [a, b] = iv[static_cast<std::size_t>(x)];
    return "[" + CostVal{false, a}.str() + "," + CostVal{false, b}.str() + "]";
  });

  out << "interval distances alpha([a,b],[c,d]) = max(b,d) - min(a,c) over " << n
      << " rational intervals\n";
  Reports R = check_valued_set_axioms<CostQuantale>(cq, n, alpha, label);

  // the representable at one interval is a subset candidate; a constant-zero
  // vector of the same extent is not, and the bound names the first culprit
  const int pivot = 3;
  const CostVal extent = alpha(pivot, pivot);
  auto mu_good = std::function<CostVal(int)>([&](int x) { return alpha(x, pivot); });
  append(R, scoped("candidate",
                   check_subset_candidate<CostQuantale>(cq, n, alpha, mu_good, extent, label)));

  auto mu_bad = std::function<CostVal(int)>([&](int) { return cq.unit(); });
  Reports bad = check_subset_candidate<CostQuantale>(cq, n, alpha, mu_bad, extent, label);
  LawReport line{.check = "rejection.bound", .method = "derived", .cases = 1};
  bool saw_bound_witness = false;
  for (const auto& r : bad)
    if (r.check == "bound" && !r.passed()) {
      saw_bound_witness = true;
      out << "zero-distance candidate rejected: " << r.witnesses.front().dump() << "\n";
    }
  if (!saw_bound_witness)
    line.add_witness({{"expected", "a bound violation for the zero-distance candidate"}});
  R.push_back(line);

  out << reports_to_table(R);
  return R;
}

} // namespace qvs
