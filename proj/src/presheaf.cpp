#include "qvs/presheaf.hpp"

#include <algorithm>
#include <limits>

#include "qvs/parallel.hpp"

namespace qvs {

namespace {

constexpr std::int64_t kSatMax = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSatMax / b) return kSatMax;
  return a * b;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a > kSatMax - b) return kSatMax;
  return a + b;
}

std::string weight_label(const QCategory& X, int q, const std::vector<int>& values) {
  const Quantaloid& K = X.quantaloid();
  std::string s = K.obj_name(q) + ":(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += K.base().name(values[i]);
  }
  s += ")";
  return s;
}

// mu(x') ∘ alpha(x,x') <= mu(x)
bool presheaf_pair_ok(const QCategory& X, int q, int x, int xp, int vx, int vxp) {
  const Quantaloid& K = X.quantaloid();
  int c = K.compose(X.type(x), X.type(xp), q, vxp, X.hom(x, xp));
  return K.base().leq(c, vx);
}

// alpha(x,x') ∘ la(x) <= la(x')
bool copresheaf_pair_ok(const QCategory& X, int q, int x, int xp, int vx, int vxp) {
  const Quantaloid& K = X.quantaloid();
  int c = K.compose(q, X.type(x), X.type(xp), X.hom(x, xp), vx);
  return K.base().leq(c, vxp);
}

void shape_check(const QCategory& X, int type_obj, const std::vector<int>& values,
                 const char* what) {
  if (type_obj < 0 || type_obj >= X.quantaloid().objects())
    throw StructuralError(std::string(what) + " has an unknown type object",
                          {{"type_obj", type_obj}});
  if (values.size() != static_cast<std::size_t>(X.size()))
    throw StructuralError(std::string(what) + " has the wrong number of values",
                          {{"expected", X.size()}, {"got", values.size()}});
}

// Generic backtracking over one value per element, candidates drawn from a
// per-element hom-set, pruned by pairwise stability against the assigned
// prefix (including the diagonal).
template <class PairOk, class Emit>
void backtrack_weights(const QCategory& X, int q,
                       const std::vector<const HomSet*>& cand, PairOk&& ok,
                       Emit&& emit) {
  const int n = X.size();
  std::vector<int> vals(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      emit(vals);
      return;
    }
    for (int v : cand[static_cast<std::size_t>(depth)]->elems) {
      vals[static_cast<std::size_t>(depth)] = v;
      bool fits = true;
      for (int j = 0; j <= depth && fits; ++j) {
        if (!ok(X, q, j, depth, vals[static_cast<std::size_t>(j)], v)) fits = false;
        if (fits && j != depth &&
            !ok(X, q, depth, j, v, vals[static_cast<std::size_t>(j)]))
          fits = false;
      }
      if (fits) self(self, depth + 1);
    }
    vals[static_cast<std::size_t>(depth)] = -1;
  };
  rec(rec, 0);
}

} // namespace

bool operator==(const Presheaf& a, const Presheaf& b) {
  return a.type_obj == b.type_obj && a.values == b.values;
}

std::string weight_label(const QCategory& X, const Presheaf& mu) {
  return weight_label(X, mu.type_obj, mu.values);
}

std::string weight_label(const QCategory& X, const Copresheaf& la) {
  return weight_label(X, la.type_obj, la.values);
}

bool presheaf_less(const Presheaf& a, const Presheaf& b) {
  if (a.type_obj != b.type_obj) return a.type_obj < b.type_obj;
  return a.values < b.values;
}

bool operator==(const Copresheaf& a, const Copresheaf& b) {
  return a.type_obj == b.type_obj && a.values == b.values;
}

bool copresheaf_less(const Copresheaf& a, const Copresheaf& b) {
  if (a.type_obj != b.type_obj) return a.type_obj < b.type_obj;
  return a.values < b.values;
}

QCategory unit_category(const std::shared_ptr<const Quantaloid>& K, int q,
                        const std::string& label) {
  TypedSet one{{label}, {q}};
  return QCategory(K, std::move(one), {K->id(q)});
}

QRelation presheaf_to_relation(const QCategory& X, const Presheaf& mu) {
  shape_check(X, mu.type_obj, mu.values, "presheaf");
  TypedSet one{{"*"}, {mu.type_obj}};
  return QRelation(X.quantaloid_ptr(), X.carrier(), std::move(one), mu.values);
}

QRelation copresheaf_to_relation(const QCategory& X, const Copresheaf& la) {
  shape_check(X, la.type_obj, la.values, "copresheaf");
  TypedSet one{{"*"}, {la.type_obj}};
  return QRelation(X.quantaloid_ptr(), std::move(one), X.carrier(), la.values);
}

Reports validate_presheaf(const QCategory& X, const Presheaf& mu) {
  QCategory one = unit_category(X.quantaloid_ptr(), mu.type_obj);
  return scoped("presheaf", validate_distributor(presheaf_to_relation(X, mu), X, one));
}

Reports validate_copresheaf(const QCategory& X, const Copresheaf& la) {
  QCategory one = unit_category(X.quantaloid_ptr(), la.type_obj);
  return scoped("copresheaf",
                validate_distributor(copresheaf_to_relation(X, la), one, X));
}

bool is_presheaf(const QCategory& X, const Presheaf& mu) {
  return all_passed(validate_presheaf(X, mu));
}

bool is_copresheaf(const QCategory& X, const Copresheaf& la) {
  return all_passed(validate_copresheaf(X, la));
}

std::int64_t presheaf_count_estimate(const QCategory& X) {
  const Quantaloid& K = X.quantaloid();
  std::int64_t estimate = 0;
  for (int q = 0; q < K.objects(); ++q) {
    std::int64_t prod = 1;
    for (int x = 0; x < X.size(); ++x) prod = sat_mul(prod, K.hom(X.type(x), q).size());
    estimate = sat_add(estimate, prod);
  }
  return estimate;
}

std::vector<Presheaf> enumerate_presheaves(const QCategory& X, const EnumCaps& caps) {
  const Quantaloid& K = X.quantaloid();
  const int n = X.size();

  std::int64_t estimate = presheaf_count_estimate(X);
  if (estimate > caps.max_presheaves)
    throw CapacityError("presheaf enumeration", estimate, caps.max_presheaves);

  std::vector<Presheaf> out;
  for (int q = 0; q < K.objects(); ++q) {
    std::vector<const HomSet*> cand;
    for (int x = 0; x < n; ++x) cand.push_back(&K.hom(X.type(x), q));
    backtrack_weights(X, q, cand, presheaf_pair_ok, [&](const std::vector<int>& vals) {
      out.push_back(Presheaf{q, vals});
    });
  }
  return out;
}

std::vector<Copresheaf> enumerate_copresheaves(const QCategory& X, const EnumCaps& caps) {
  const Quantaloid& K = X.quantaloid();
  const int n = X.size();

  std::int64_t estimate = 0;
  for (int q = 0; q < K.objects(); ++q) {
    std::int64_t prod = 1;
    for (int x = 0; x < n; ++x) prod = sat_mul(prod, K.hom(q, X.type(x)).size());
    estimate = sat_add(estimate, prod);
  }
  if (estimate > caps.max_presheaves)
    throw CapacityError("copresheaf enumeration", estimate, caps.max_presheaves);

  std::vector<Copresheaf> out;
  for (int q = 0; q < K.objects(); ++q) {
    std::vector<const HomSet*> cand;
    for (int x = 0; x < n; ++x) cand.push_back(&K.hom(q, X.type(x)));
    backtrack_weights(X, q, cand, copresheaf_pair_ok, [&](const std::vector<int>& vals) {
      out.push_back(Copresheaf{q, vals});
    });
  }
  return out;
}

int presheaf_hom(const QCategory& X, const Presheaf& mu, const Presheaf& nu) {
  const Quantaloid& K = X.quantaloid();
  int acc = K.hom_top(mu.type_obj, nu.type_obj);
  for (int x = 0; x < X.size(); ++x) {
    int v = K.hom_imp_left(X.type(x), mu.type_obj, nu.type_obj,
                           nu.values[static_cast<std::size_t>(x)],
                           mu.values[static_cast<std::size_t>(x)]);
    acc = K.hom_meet(mu.type_obj, nu.type_obj, acc, v);
  }
  return acc;
}

int copresheaf_hom(const QCategory& X, const Copresheaf& la, const Copresheaf& ka) {
  const Quantaloid& K = X.quantaloid();
  int acc = K.hom_top(la.type_obj, ka.type_obj);
  for (int x = 0; x < X.size(); ++x) {
    int u = K.hom_imp_right(la.type_obj, ka.type_obj, X.type(x),
                            ka.values[static_cast<std::size_t>(x)],
                            la.values[static_cast<std::size_t>(x)]);
    acc = K.hom_meet(la.type_obj, ka.type_obj, acc, u);
  }
  return acc;
}

int PresheafCat::index_of(const Presheaf& mu) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), mu, presheaf_less);
  if (it == objects.end() || !(*it == mu)) return -1;
  return static_cast<int>(it - objects.begin());
}

int CopresheafCat::index_of(const Copresheaf& la) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), la, copresheaf_less);
  if (it == objects.end() || !(*it == la)) return -1;
  return static_cast<int>(it - objects.begin());
}

PresheafCat presheaf_category(const QCategory& X, const EnumCaps& caps) {
  PresheafCat PX;
  PX.objects = enumerate_presheaves(X, caps);
  const int m = static_cast<int>(PX.objects.size());
  TypedSet elems;
  for (const Presheaf& mu : PX.objects) {
    elems.labels.push_back(weight_label(X, mu.type_obj, mu.values));
    elems.types.push_back(mu.type_obj);
  }
  std::vector<int> alpha(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  // Entries are independent and the objects are enumerated (so always valid:
  // nothing below can throw out of the region).
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel_kernels())
#endif
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      alpha[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
            static_cast<std::size_t>(j)] =
          presheaf_hom(X, PX.objects[static_cast<std::size_t>(i)],
                       PX.objects[static_cast<std::size_t>(j)]);
  PX.cat = QCategory(X.quantaloid_ptr(), std::move(elems), std::move(alpha));
  return PX;
}

CopresheafCat copresheaf_category(const QCategory& X, const EnumCaps& caps) {
  CopresheafCat CX;
  CX.objects = enumerate_copresheaves(X, caps);
  const int m = static_cast<int>(CX.objects.size());
  TypedSet elems;
  for (const Copresheaf& la : CX.objects) {
    elems.labels.push_back(weight_label(X, la.type_obj, la.values));
    elems.types.push_back(la.type_obj);
  }
  std::vector<int> alpha(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel_kernels())
#endif
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      alpha[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
            static_cast<std::size_t>(j)] =
          copresheaf_hom(X, CX.objects[static_cast<std::size_t>(i)],
                         CX.objects[static_cast<std::size_t>(j)]);
  CX.cat = QCategory(X.quantaloid_ptr(), std::move(elems), std::move(alpha));
  return CX;
}

Presheaf yoneda(const QCategory& X, int x) {
  Presheaf mu{X.type(x), std::vector<int>(static_cast<std::size_t>(X.size()))};
  for (int xp = 0; xp < X.size(); ++xp)
    mu.values[static_cast<std::size_t>(xp)] = X.hom(xp, x);
  return mu;
}

Copresheaf co_yoneda(const QCategory& X, int x) {
  Copresheaf la{X.type(x), std::vector<int>(static_cast<std::size_t>(X.size()))};
  for (int xp = 0; xp < X.size(); ++xp)
    la.values[static_cast<std::size_t>(xp)] = X.hom(x, xp);
  return la;
}

std::vector<int> yoneda_map(const QCategory& X, const PresheafCat& PX) {
  std::vector<int> y(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    int i = PX.index_of(yoneda(X, x));
    if (i < 0)
      throw StructuralError("representable weight missing from the weight category",
                            {{"x", X.label(x)}});
    y[static_cast<std::size_t>(x)] = i;
  }
  return y;
}

std::vector<int> co_yoneda_map(const QCategory& X, const CopresheafCat& CX) {
  std::vector<int> y(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    int i = CX.index_of(co_yoneda(X, x));
    if (i < 0)
      throw StructuralError("representable weight missing from the weight category",
                            {{"x", X.label(x)}});
    y[static_cast<std::size_t>(x)] = i;
  }
  return y;
}

Reports check_yoneda(const QCategory& X, const PresheafCat& PX) {
  Reports out;
  const int n = X.size();
  {
    LawReport r{.check = "yoneda.representables_valid", .method = "exhaustive", .cases = n};
    for (int x = 0; x < n; ++x) {
      Presheaf mu = yoneda(X, x);
      if (!is_presheaf(X, mu) || PX.index_of(mu) < 0)
        r.add_witness({{"x", X.label(x)}});
    }
    out.push_back(std::move(r));
    if (!out.back().passed()) return out;
  }
  std::vector<int> y = yoneda_map(X, PX);
  {
    LawReport r{.check = "yoneda.fully_faithful", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(n) * n};
    const auto& Q = X.quantaloid().base();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = PX.cat.hom(y[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)]);
        if (lhs != X.hom(a, b))
          r.add_witness({{"x", X.label(a)}, {"x'", X.label(b)},
                         {"hom_of_representables", Q.name(lhs)},
                         {"hom", Q.name(X.hom(a, b))}});
      }
    out.push_back(std::move(r));
  }
  {
    LawReport r{.check = "yoneda.evaluation", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(PX.objects.size())};
    const auto& Q = X.quantaloid().base();
    for (int x = 0; x < n; ++x)
      for (std::size_t j = 0; j < PX.objects.size(); ++j) {
        int lhs = PX.cat.hom(y[static_cast<std::size_t>(x)], static_cast<int>(j));
        if (lhs != PX.objects[j].values[static_cast<std::size_t>(x)])
          r.add_witness({{"x", X.label(x)}, {"mu", PX.cat.label(static_cast<int>(j))},
                         {"hom", Q.name(lhs)},
                         {"mu(x)", Q.name(PX.objects[j].values[static_cast<std::size_t>(x)])}});
      }
    out.push_back(std::move(r));
  }
  return out;
}

Reports check_co_yoneda(const QCategory& X, const CopresheafCat& CX) {
  Reports out;
  const int n = X.size();
  {
    LawReport r{.check = "coyoneda.representables_valid", .method = "exhaustive", .cases = n};
    for (int x = 0; x < n; ++x) {
      Copresheaf la = co_yoneda(X, x);
      if (!is_copresheaf(X, la) || CX.index_of(la) < 0)
        r.add_witness({{"x", X.label(x)}});
    }
    out.push_back(std::move(r));
    if (!out.back().passed()) return out;
  }
  std::vector<int> y = co_yoneda_map(X, CX);
  {
    LawReport r{.check = "coyoneda.fully_faithful", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(n) * n};
    const auto& Q = X.quantaloid().base();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = CX.cat.hom(y[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)]);
        if (lhs != X.hom(a, b))
          r.add_witness({{"x", X.label(a)}, {"x'", X.label(b)},
                         {"hom_of_representables", Q.name(lhs)},
                         {"hom", Q.name(X.hom(a, b))}});
      }
    out.push_back(std::move(r));
  }
  {
    LawReport r{.check = "coyoneda.evaluation", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(CX.objects.size())};
    const auto& Q = X.quantaloid().base();
    for (int x = 0; x < n; ++x)
      for (std::size_t j = 0; j < CX.objects.size(); ++j) {
        int lhs = CX.cat.hom(static_cast<int>(j), y[static_cast<std::size_t>(x)]);
        if (lhs != CX.objects[j].values[static_cast<std::size_t>(x)])
          r.add_witness({{"x", X.label(x)}, {"la", CX.cat.label(static_cast<int>(j))},
                         {"hom", Q.name(lhs)},
                         {"la(x)", Q.name(CX.objects[j].values[static_cast<std::size_t>(x)])}});
      }
    out.push_back(std::move(r));
  }
  return out;
}

Presheaf push_presheaf(const QCategory& X, const QCategory& Y,
                       const std::vector<int>& f, const Presheaf& mu) {
  shape_check(X, mu.type_obj, mu.values, "presheaf");
  if (f.size() != static_cast<std::size_t>(X.size()))
    throw StructuralError("map has wrong length",
                          {{"expected", X.size()}, {"got", f.size()}});
  const Quantaloid& K = X.quantaloid();
  const int q = mu.type_obj;
  Presheaf out{q, std::vector<int>(static_cast<std::size_t>(Y.size()))};
  for (int y = 0; y < Y.size(); ++y) {
    int acc = K.hom_bottom(Y.type(y), q);
    for (int x = 0; x < X.size(); ++x) {
      int fx = f[static_cast<std::size_t>(x)];
      if (Y.type(fx) != X.type(x))
        throw StructuralError("map does not preserve types", {{"x", X.label(x)}});
      int c = K.compose(Y.type(y), X.type(x), q,
                        mu.values[static_cast<std::size_t>(x)], Y.hom(y, fx));
      acc = K.hom_join(Y.type(y), q, acc, c);
    }
    out.values[static_cast<std::size_t>(y)] = acc;
  }
  return out;
}

Presheaf pull_presheaf(const QCategory& X, const QCategory& Y,
                       const std::vector<int>& f, const Presheaf& nu) {
  shape_check(Y, nu.type_obj, nu.values, "presheaf");
  if (f.size() != static_cast<std::size_t>(X.size()))
    throw StructuralError("map has wrong length",
                          {{"expected", X.size()}, {"got", f.size()}});
  const Quantaloid& K = X.quantaloid();
  const int q = nu.type_obj;
  Presheaf out{q, std::vector<int>(static_cast<std::size_t>(X.size()))};
  for (int x = 0; x < X.size(); ++x) {
    int fx = f[static_cast<std::size_t>(x)];
    if (Y.type(fx) != X.type(x))
      throw StructuralError("map does not preserve types", {{"x", X.label(x)}});
    int acc = K.hom_bottom(X.type(x), q);
    for (int y = 0; y < Y.size(); ++y) {
      int c = K.compose(X.type(x), Y.type(y), q,
                        nu.values[static_cast<std::size_t>(y)], Y.hom(fx, y));
      acc = K.hom_join(X.type(x), q, acc, c);
    }
    out.values[static_cast<std::size_t>(x)] = acc;
  }
  return out;
}

namespace {

// alpha(s, x') rows a sup of mu must realize.
std::vector<int> sup_rows(const QCategory& X, const Presheaf& mu) {
  const Quantaloid& K = X.quantaloid();
  std::vector<int> rows(static_cast<std::size_t>(X.size()));
  for (int xp = 0; xp < X.size(); ++xp) {
    int acc = K.hom_top(mu.type_obj, X.type(xp));
    for (int x = 0; x < X.size(); ++x) {
      int v = K.hom_imp_left(X.type(x), mu.type_obj, X.type(xp), X.hom(x, xp),
                             mu.values[static_cast<std::size_t>(x)]);
      acc = K.hom_meet(mu.type_obj, X.type(xp), acc, v);
    }
    rows[static_cast<std::size_t>(xp)] = acc;
  }
  return rows;
}

// alpha(x', i) columns an inf of la must realize.
std::vector<int> inf_rows(const QCategory& X, const Copresheaf& la) {
  const Quantaloid& K = X.quantaloid();
  std::vector<int> rows(static_cast<std::size_t>(X.size()));
  for (int xp = 0; xp < X.size(); ++xp) {
    int acc = K.hom_top(X.type(xp), la.type_obj);
    for (int x = 0; x < X.size(); ++x) {
      int u = K.hom_imp_right(X.type(xp), la.type_obj, X.type(x),
                              la.values[static_cast<std::size_t>(x)], X.hom(xp, x));
      acc = K.hom_meet(X.type(xp), la.type_obj, acc, u);
    }
    rows[static_cast<std::size_t>(xp)] = acc;
  }
  return rows;
}

int find_by_out_rows(const QCategory& X, int q, const std::vector<int>& rows) {
  for (int s = 0; s < X.size(); ++s) {
    if (X.type(s) != q) continue;
    bool match = true;
    for (int xp = 0; xp < X.size() && match; ++xp)
      if (X.hom(s, xp) != rows[static_cast<std::size_t>(xp)]) match = false;
    if (match) return s;
  }
  return -1;
}

int find_by_in_rows(const QCategory& X, int q, const std::vector<int>& rows) {
  for (int s = 0; s < X.size(); ++s) {
    if (X.type(s) != q) continue;
    bool match = true;
    for (int xp = 0; xp < X.size() && match; ++xp)
      if (X.hom(xp, s) != rows[static_cast<std::size_t>(xp)]) match = false;
    if (match) return s;
  }
  return -1;
}

} // namespace

int sup_presheaf(const QCategory& X, const Presheaf& mu) {
  shape_check(X, mu.type_obj, mu.values, "presheaf");
  return find_by_out_rows(X, mu.type_obj, sup_rows(X, mu));
}

int inf_copresheaf(const QCategory& X, const Copresheaf& la) {
  shape_check(X, la.type_obj, la.values, "copresheaf");
  return find_by_in_rows(X, la.type_obj, inf_rows(X, la));
}

int tensor(const QCategory& X, int x, int q, int u) {
  const Quantaloid& K = X.quantaloid();
  if (!K.hom(X.type(x), q).contains(u))
    throw StructuralError("tensor scalar outside hom(|x|, q)",
                          {{"x", X.label(x)}, {"q", K.obj_name(q)},
                           {"u", K.base().name(u)}});
  std::vector<int> rows(static_cast<std::size_t>(X.size()));
  for (int xp = 0; xp < X.size(); ++xp)
    rows[static_cast<std::size_t>(xp)] =
        K.hom_imp_left(X.type(x), q, X.type(xp), X.hom(x, xp), u);
  return find_by_out_rows(X, q, rows);
}

int cotensor(const QCategory& X, int x, int q, int u) {
  const Quantaloid& K = X.quantaloid();
  if (!K.hom(q, X.type(x)).contains(u))
    throw StructuralError("cotensor scalar outside hom(q, |x|)",
                          {{"x", X.label(x)}, {"q", K.obj_name(q)},
                           {"u", K.base().name(u)}});
  std::vector<int> rows(static_cast<std::size_t>(X.size()));
  for (int xp = 0; xp < X.size(); ++xp)
    rows[static_cast<std::size_t>(xp)] =
        K.hom_imp_right(X.type(xp), q, X.type(x), u, X.hom(xp, x));
  return find_by_in_rows(X, q, rows);
}

std::vector<int> sup_map(const QCategory& X, const PresheafCat& PX) {
  std::vector<int> s(PX.objects.size());
  for (std::size_t i = 0; i < PX.objects.size(); ++i)
    s[i] = sup_presheaf(X, PX.objects[i]);
  return s;
}

CompletenessInfo check_complete(const QCategory& X, const EnumCaps& caps) {
  CompletenessInfo info;
  const Quantaloid& K = X.quantaloid();
  const auto& Q = K.base();
  const int n = X.size();

  json tens_fail = json::array(), cotens_fail = json::array(), order_fail = json::array();
  info.tensored = true;
  info.cotensored = true;
  for (int x = 0; x < n; ++x)
    for (int q = 0; q < K.objects(); ++q) {
      for (int u : K.hom(X.type(x), q).elems)
        if (tensor(X, x, q, u) < 0) {
          info.tensored = false;
          if (tens_fail.size() < LawReport::max_witnesses)
            tens_fail.push_back({{"x", X.label(x)}, {"q", K.obj_name(q)}, {"u", Q.name(u)}});
        }
      for (int u : K.hom(q, X.type(x)).elems)
        if (cotensor(X, x, q, u) < 0) {
          info.cotensored = false;
          if (cotens_fail.size() < LawReport::max_witnesses)
            cotens_fail.push_back({{"x", X.label(x)}, {"q", K.obj_name(q)}, {"u", Q.name(u)}});
        }
    }

  info.order_complete = true;
  for (int q = 0; q < K.objects(); ++q) {
    std::vector<int> fiber;
    for (int x = 0; x < n; ++x)
      if (X.type(x) == q) fiber.push_back(x);
    if (fiber.size() > 20)
      throw CapacityError("order completeness subset enumeration",
                          std::int64_t(1) << fiber.size(), std::int64_t(1) << 20);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << fiber.size()); ++mask) {
      std::vector<int> xs;
      for (std::size_t i = 0; i < fiber.size(); ++i)
        if ((mask >> i) & 1) xs.push_back(fiber[i]);
      bool have_join = order_join(X, xs, q).has_value();
      bool have_meet = order_meet(X, xs, q).has_value();
      if (!have_join || !have_meet) {
        info.order_complete = false;
        if (order_fail.size() < LawReport::max_witnesses) {
          json labels = json::array();
          for (int x : xs) labels.push_back(X.label(x));
          order_fail.push_back({{"q", K.obj_name(q)}, {"subset", labels},
                                {"missing", have_join ? "meet" : "join"}});
        }
      }
    }
  }

  info.complete = info.tensored && info.cotensored && info.order_complete;
  info.detail = {{"tensor_failures", tens_fail},
                 {"cotensor_failures", cotens_fail},
                 {"order_failures", order_fail}};

  // Direct cross-check: the three-way characterization must coincide with
  // every weight having a sup and every coweight having an inf; when it
  // holds, sup must be a functor left adjoint to the representable embedding.
  try {
    PresheafCat PX = presheaf_category(X, caps);
    std::vector<Copresheaf> colas = enumerate_copresheaves(X, caps);
    std::vector<int> sups = sup_map(X, PX);
    bool all_sups = true;
    json missing_sup = json::array();
    for (std::size_t i = 0; i < sups.size(); ++i)
      if (sups[i] < 0) {
        all_sups = false;
        if (missing_sup.size() < LawReport::max_witnesses)
          missing_sup.push_back(PX.cat.label(static_cast<int>(i)));
      }
    bool all_infs = true;
    json missing_inf = json::array();
    for (const Copresheaf& la : colas)
      if (inf_copresheaf(X, la) < 0) {
        all_infs = false;
        if (missing_inf.size() < LawReport::max_witnesses)
          missing_inf.push_back(weight_label(X, la.type_obj, la.values));
      }

    LawReport r{.check = "complete.characterization", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(sups.size() + colas.size())};
    if (all_sups != info.complete || all_infs != info.complete)
      r.add_witness({{"tensored", info.tensored},
                     {"cotensored", info.cotensored},
                     {"order_complete", info.order_complete},
                     {"all_sups", all_sups},
                     {"all_infs", all_infs},
                     {"weights_without_sup", missing_sup},
                     {"coweights_without_inf", missing_inf}});
    info.reports.push_back(std::move(r));

    if (info.complete && all_sups) {
      LawReport adj{.check = "complete.sup_adjunction", .method = "exhaustive",
                    .cases = static_cast<std::int64_t>(sups.size()) * X.size()};
      Reports fun = check_functor(PX.cat, X, sups);
      if (!all_passed(fun)) adj.add_witness({{"law", "sup_is_a_functor"}});
      std::vector<int> y = yoneda_map(X, PX);
      Reports pair = check_adjunction(PX.cat, X, sups, y);
      if (!all_passed(pair)) adj.add_witness({{"law", "sup_left_adjoint_to_representables"}});
      info.reports.push_back(std::move(adj));
    }
  } catch (const CapacityError& e) {
    LawReport r{.check = "complete.characterization",
                .method = std::string("skipped(capacity: ") + e.what() + ")", .cases = 0};
    info.reports.push_back(std::move(r));
  }

  return info;
}

Reports validate_closure_operator(const QCategory& X, const std::vector<int>& c) {
  Reports out = scoped("closure", check_functor(X, X, c));
  if (!all_passed(out)) return out;
  {
    LawReport r{.check = "closure.extensive", .method = "exhaustive", .cases = X.size()};
    for (int x = 0; x < X.size(); ++x)
      if (!X.leq_under(x, c[static_cast<std::size_t>(x)]))
        r.add_witness({{"x", X.label(x)}, {"cx", X.label(c[static_cast<std::size_t>(x)])}});
    out.push_back(std::move(r));
  }
  {
    LawReport r{.check = "closure.idempotent", .method = "exhaustive", .cases = X.size()};
    for (int x = 0; x < X.size(); ++x) {
      int cx = c[static_cast<std::size_t>(x)];
      int ccx = c[static_cast<std::size_t>(cx)];
      if (!X.iso(ccx, cx))
        r.add_witness({{"x", X.label(x)}, {"cx", X.label(cx)}, {"ccx", X.label(ccx)}});
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> closure_fixpoints(const QCategory& X, const std::vector<int>& c) {
  std::vector<int> out;
  for (int x = 0; x < X.size(); ++x)
    if (X.iso(c[static_cast<std::size_t>(x)], x)) out.push_back(x);
  return out;
}

QCategory sub_category(const QCategory& X, const std::vector<int>& keep) {
  TypedSet elems;
  for (int x : keep) {
    elems.labels.push_back(X.label(x));
    elems.types.push_back(X.type(x));
  }
  const int m = static_cast<int>(keep.size());
  std::vector<int> alpha(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      alpha[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
            static_cast<std::size_t>(j)] =
          X.hom(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  return QCategory(X.quantaloid_ptr(), std::move(elems), std::move(alpha));
}

LeftAdjointInfo check_left_adjoint(const QCategory& X, const QCategory& Y,
                                   const std::vector<int>& f, const EnumCaps& caps) {
  LeftAdjointInfo info;
  const Quantaloid& K = X.quantaloid();

  Reports fun = scoped("leftadjoint", check_functor(X, Y, f));
  bool f_is_functor = all_passed(fun);
  append(info.reports, std::move(fun));

  std::vector<std::vector<int>> reverse_maps =
      enumerate_type_preserving_maps(Y.carrier(), X.carrier(), caps);

  // Route 1: some map is a two-sided adjoint partner.
  if (f_is_functor) {
    for (const auto& g : reverse_maps) {
      if (all_passed(check_adjunction(X, Y, f, g))) {
        info.by_right_adjoint = true;
        info.right_adjoint = g;
        break;
      }
    }
  }

  // Route 2: an order-theoretic right adjoint exists and f preserves tensors
  // up to iso.
  bool order_found = false;
  std::vector<int> order_partner;
  for (const auto& g : reverse_maps) {
    bool ok = true;
    for (int x = 0; x < X.size() && ok; ++x)
      for (int y = 0; y < Y.size() && ok; ++y)
        if (Y.leq_under(f[static_cast<std::size_t>(x)], y) !=
            X.leq_under(x, g[static_cast<std::size_t>(y)]))
          ok = false;
    if (ok) {
      order_found = true;
      order_partner = g;
      break;
    }
  }
  bool tensors_preserved = true;
  std::int64_t tensor_skipped = 0;
  json tensor_fail = json::array();
  if (f_is_functor) {
    for (int x = 0; x < X.size(); ++x)
      for (int q = 0; q < K.objects(); ++q)
        for (int u : K.hom(X.type(x), q).elems) {
          int tx = tensor(X, x, q, u);
          if (tx < 0) {
            ++tensor_skipped;
            continue;
          }
          int ty = tensor(Y, f[static_cast<std::size_t>(x)], q, u);
          if (ty < 0 || !Y.iso(f[static_cast<std::size_t>(tx)], ty)) {
            tensors_preserved = false;
            if (tensor_fail.size() < LawReport::max_witnesses)
              tensor_fail.push_back({{"x", X.label(x)}, {"q", K.obj_name(q)},
                                     {"u", K.base().name(u)}});
          }
        }
  }
  info.by_order_and_tensors = f_is_functor && order_found && tensors_preserved;

  // Route 3: f preserves every existing sup of a weight up to iso.
  bool sups_preserved = f_is_functor;
  std::int64_t sup_skipped = 0;
  json sup_fail = json::array();
  if (f_is_functor) {
    for (const Presheaf& mu : enumerate_presheaves(X, caps)) {
      int s = sup_presheaf(X, mu);
      if (s < 0) {
        ++sup_skipped;
        continue;
      }
      Presheaf nu = push_presheaf(X, Y, f, mu);
      int sy = sup_presheaf(Y, nu);
      if (sy < 0 || !Y.iso(f[static_cast<std::size_t>(s)], sy)) {
        sups_preserved = false;
        if (sup_fail.size() < LawReport::max_witnesses)
          sup_fail.push_back(weight_label(X, mu.type_obj, mu.values));
      }
    }
  }
  info.by_sup_preservation = sups_preserved;

  info.agree = info.by_right_adjoint == info.by_order_and_tensors &&
               info.by_right_adjoint == info.by_sup_preservation;
  {
    LawReport r{.check = "leftadjoint.criteria_agree", .method = "exhaustive", .cases = 3};
    if (!info.agree)
      r.add_witness({{"right_adjoint_search", info.by_right_adjoint},
                     {"order_adjoint_and_tensors", info.by_order_and_tensors},
                     {"sup_preservation", info.by_sup_preservation}});
    info.reports.push_back(std::move(r));
  }

  json partner_labels = json::array();
  for (int i : info.right_adjoint) partner_labels.push_back(X.label(i));
  json order_labels = json::array();
  for (int i : order_partner) order_labels.push_back(X.label(i));
  info.detail = {{"right_adjoint", partner_labels},
                 {"order_adjoint", order_labels},
                 {"order_adjoint_found", order_found},
                 {"tensor_failures", tensor_fail},
                 {"tensor_skipped", tensor_skipped},
                 {"sup_failures", sup_fail},
                 {"sup_skipped", sup_skipped}};
  return info;
}

} // namespace qvs
