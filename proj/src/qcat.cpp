#include "qvs/qcat.hpp"

#include <algorithm>

namespace qvs {

namespace {

void check_types(const Quantaloid& K, const TypedSet& s) {
  if (s.labels.size() != s.types.size())
    throw StructuralError("typed set labels and types differ in length");
  for (int t : s.types)
    if (t < 0 || t >= K.objects())
      throw StructuralError("element type is not an object", {{"type", t}});
}

} // namespace

QRelation::QRelation(std::shared_ptr<const Quantaloid> K_, TypedSet src_, TypedSet dst_,
                     std::vector<int> entries_)
    : K(std::move(K_)), src(std::move(src_)), dst(std::move(dst_)), entries(std::move(entries_)) {
  check_types(*K, src);
  check_types(*K, dst);
  if (entries.size() != static_cast<std::size_t>(src.size()) * static_cast<std::size_t>(dst.size()))
    throw StructuralError("relation matrix has wrong shape",
                          {{"rows", src.size()}, {"cols", dst.size()}, {"entries", entries.size()}});
}

QCategory::QCategory(std::shared_ptr<const Quantaloid> K, TypedSet elems, std::vector<int> alpha)
    : K_(std::move(K)), elems_(std::move(elems)), alpha_(std::move(alpha)) {
  check_types(*K_, elems_);
  if (alpha_.size() != static_cast<std::size_t>(size()) * static_cast<std::size_t>(size()))
    throw StructuralError("hom matrix has wrong shape", {{"size", size()}});
}

bool QCategory::leq_under(int x, int y) const {
  if (type(x) != type(y)) return false;
  return K_->base().leq(K_->id(type(x)), hom(x, y));
}

QRelation QCategory::hom_relation() const {
  return QRelation(K_, elems_, elems_, alpha_);
}

QRelation identity_rel(const std::shared_ptr<const Quantaloid>& K, const TypedSet& X) {
  const int n = X.size();
  std::vector<int> e(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      e[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] =
          (x == y) ? K->id(X.type(x)) : K->hom_bottom(X.type(x), X.type(y));
  return QRelation(K, X, X, std::move(e));
}

QRelation compose_rel(const QRelation& psi, const QRelation& phi) {
  // phi: X -> Y, psi: Y -> Z
  if (phi.dst.size() != psi.src.size())
    throw StructuralError("relation composition: middle sets differ",
                          {{"phi_dst", phi.dst.size()}, {"psi_src", psi.src.size()}});
  const auto& K = *phi.K;
  const int nx = phi.src.size(), ny = phi.dst.size(), nz = psi.dst.size();
  std::vector<int> e(static_cast<std::size_t>(nx) * nz);
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nz; ++z) {
      int p = phi.src.type(x), s = psi.dst.type(z);
      int acc = K.hom_bottom(p, s);
      for (int y = 0; y < ny; ++y) {
        int q = phi.dst.type(y);
        acc = K.hom_join(p, s, acc, K.compose(p, q, s, psi.at(y, z), phi.at(x, y)));
      }
      e[static_cast<std::size_t>(x) * nz + static_cast<std::size_t>(z)] = acc;
    }
  return QRelation(phi.K, phi.src, psi.dst, std::move(e));
}

QRelation imp_left(const QRelation& eta, const QRelation& phi) {
  // eta: X -> Z, phi: X -> Y, result: Y -> Z
  if (eta.src.size() != phi.src.size())
    throw StructuralError("implication: source sets differ");
  const auto& K = *eta.K;
  const int nx = eta.src.size(), ny = phi.dst.size(), nz = eta.dst.size();
  std::vector<int> e(static_cast<std::size_t>(ny) * nz);
  for (int y = 0; y < ny; ++y)
    for (int z = 0; z < nz; ++z) {
      int q = phi.dst.type(y), s = eta.dst.type(z);
      int acc = K.hom_top(q, s);
      for (int x = 0; x < nx; ++x) {
        int p = phi.src.type(x);
        acc = K.hom_meet(q, s, acc, K.hom_imp_left(p, q, s, eta.at(x, z), phi.at(x, y)));
      }
      e[static_cast<std::size_t>(y) * nz + static_cast<std::size_t>(z)] = acc;
    }
  return QRelation(eta.K, phi.dst, eta.dst, std::move(e));
}

QRelation imp_right(const QRelation& psi, const QRelation& eta) {
  // psi: Y -> Z, eta: X -> Z, result: X -> Y; meet ranges over the far set Z
  if (psi.dst.size() != eta.dst.size())
    throw StructuralError("implication: target sets differ");
  const auto& K = *eta.K;
  const int nx = eta.src.size(), ny = psi.src.size(), nz = psi.dst.size();
  std::vector<int> e(static_cast<std::size_t>(nx) * ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      int p = eta.src.type(x), q = psi.src.type(y);
      int acc = K.hom_top(p, q);
      for (int z = 0; z < nz; ++z) {
        int s = psi.dst.type(z);
        acc = K.hom_meet(p, q, acc, K.hom_imp_right(p, q, s, psi.at(y, z), eta.at(x, z)));
      }
      e[static_cast<std::size_t>(x) * ny + static_cast<std::size_t>(y)] = acc;
    }
  return QRelation(eta.K, eta.src, psi.src, std::move(e));
}

bool rel_leq(const QRelation& a, const QRelation& b) {
  if (a.src.size() != b.src.size() || a.dst.size() != b.dst.size()) return false;
  const auto& Q = a.K->base();
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!Q.leq(a.entries[i], b.entries[i])) return false;
  return true;
}

bool rel_eq(const QRelation& a, const QRelation& b) {
  return a.src.size() == b.src.size() && a.dst.size() == b.dst.size() && a.entries == b.entries;
}

Reports validate_category(const QCategory& X) {
  Reports out;
  const auto& K = X.quantaloid();
  const auto& Q = K.base();
  const int n = X.size();

  {
    LawReport r{.check = "entries_in_hom", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(n) * n};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!K.hom(X.type(x), X.type(y)).contains(X.hom(x, y)))
          r.add_witness({{"x", X.label(x)}, {"y", X.label(y)},
                         {"value", X.hom(x, y) >= 0 && X.hom(x, y) < Q.size()
                                       ? Q.name(X.hom(x, y))
                                       : std::to_string(X.hom(x, y))}});
    out.push_back(std::move(r));
    if (!out.back().passed()) return out; // the axioms below assume membership
  }

  {
    LawReport r{.check = "identity_inequality", .method = "exhaustive", .cases = n};
    for (int x = 0; x < n; ++x)
      if (!Q.leq(K.id(X.type(x)), X.hom(x, x)))
        r.add_witness({{"x", X.label(x)}, {"id", Q.name(K.id(X.type(x)))},
                       {"hom(x,x)", Q.name(X.hom(x, x))}});
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "composition_inequality", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(n) * n * n};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int c = K.compose(X.type(x), X.type(y), X.type(z), X.hom(y, z), X.hom(x, y));
          if (!Q.leq(c, X.hom(x, z)))
            r.add_witness({{"x", X.label(x)}, {"y", X.label(y)}, {"z", X.label(z)},
                           {"composite", Q.name(c)}, {"hom(x,z)", Q.name(X.hom(x, z))}});
        }
    out.push_back(std::move(r));
  }

  return out;
}

Reports validate_distributor(const QRelation& phi, const QCategory& X, const QCategory& Y) {
  Reports out;
  const auto& K = *phi.K;
  {
    LawReport r{.check = "entries_in_hom", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(phi.src.size()) * phi.dst.size()};
    for (int x = 0; x < phi.src.size(); ++x)
      for (int y = 0; y < phi.dst.size(); ++y)
        if (!K.hom(phi.src.type(x), phi.dst.type(y)).contains(phi.at(x, y)))
          r.add_witness({{"x", phi.src.label(x)}, {"y", phi.dst.label(y)}});
    out.push_back(std::move(r));
    if (!out.back().passed()) return out;
  }
  {
    LawReport r{.check = "action_stability", .method = "exhaustive", .cases = 2};
    QRelation left = compose_rel(phi, X.hom_relation());  // phi ∘ alpha
    QRelation right = compose_rel(Y.hom_relation(), phi); // beta ∘ phi
    if (!rel_leq(left, phi))
      r.add_witness({{"law", "phi∘alpha<=phi"}});
    if (!rel_leq(right, phi))
      r.add_witness({{"law", "beta∘phi<=phi"}});
    out.push_back(std::move(r));
  }
  return out;
}

Reports check_functor(const QCategory& X, const QCategory& Y, const std::vector<int>& f) {
  Reports out;
  const auto& Q = X.quantaloid().base();
  const int n = X.size();
  if (f.size() != static_cast<std::size_t>(n))
    throw StructuralError("map has wrong length", {{"expected", n}, {"got", f.size()}});
  for (int v : f)
    if (v < 0 || v >= Y.size())
      throw StructuralError("map value out of range", {{"value", v}});

  {
    LawReport r{.check = "type_preservation", .method = "exhaustive", .cases = n};
    for (int x = 0; x < n; ++x)
      if (X.type(x) != Y.type(f[static_cast<std::size_t>(x)]))
        r.add_witness({{"x", X.label(x)}, {"fx", Y.label(f[static_cast<std::size_t>(x)])},
                       {"|x|", X.quantaloid().obj_name(X.type(x))},
                       {"|fx|", Y.quantaloid().obj_name(Y.type(f[static_cast<std::size_t>(x)]))}});
    out.push_back(std::move(r));
    if (!out.back().passed()) return out;
  }
  {
    LawReport r{.check = "hom_inequality", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(n) * n};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!Q.leq(X.hom(x, y), Y.hom(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])))
          r.add_witness({{"x", X.label(x)}, {"y", X.label(y)},
                         {"alpha(x,y)", Q.name(X.hom(x, y))},
                         {"beta(fx,fy)", Q.name(Y.hom(f[static_cast<std::size_t>(x)],
                                                      f[static_cast<std::size_t>(y)]))}});
    out.push_back(std::move(r));
  }
  return out;
}

LawReport check_extent_preserving(const QCategory& X, const QCategory& Y,
                                  const std::vector<int>& f) {
  const auto& Q = X.quantaloid().base();
  LawReport r{.check = "extent_preservation", .method = "exhaustive", .cases = X.size()};
  for (int x = 0; x < X.size(); ++x) {
    int fx = f[static_cast<std::size_t>(x)];
    if (X.hom(x, x) != Y.hom(fx, fx))
      r.add_witness({{"x", X.label(x)}, {"alpha(x,x)", Q.name(X.hom(x, x))},
                     {"beta(fx,fx)", Q.name(Y.hom(fx, fx))}});
  }
  return r;
}

Reports check_adjunction(const QCategory& X, const QCategory& Y,
                         const std::vector<int>& f, const std::vector<int>& g) {
  Reports out;
  const auto& Q = X.quantaloid().base();

  LawReport hom_eq{.check = "hom_equality", .method = "exhaustive",
                   .cases = static_cast<std::int64_t>(X.size()) * Y.size()};
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y) {
      int lhs = Y.hom(f[static_cast<std::size_t>(x)], y);
      int rhs = X.hom(x, g[static_cast<std::size_t>(y)]);
      if (lhs != rhs)
        hom_eq.add_witness({{"x", X.label(x)}, {"y", Y.label(y)},
                            {"beta(fx,y)", Q.name(lhs)}, {"alpha(x,gy)", Q.name(rhs)}});
    }

  LawReport unit_counit{.check = "unit_counit", .method = "exhaustive",
                        .cases = static_cast<std::int64_t>(X.size()) + Y.size()};
  for (int x = 0; x < X.size(); ++x)
    if (!X.leq_under(x, g[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])]))
      unit_counit.add_witness({{"law", "1<=gf"}, {"x", X.label(x)},
                               {"gfx", X.label(g[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])])}});
  for (int y = 0; y < Y.size(); ++y)
    if (!Y.leq_under(f[static_cast<std::size_t>(g[static_cast<std::size_t>(y)])], y))
      unit_counit.add_witness({{"law", "fg<=1"}, {"y", Y.label(y)},
                               {"fgy", Y.label(f[static_cast<std::size_t>(g[static_cast<std::size_t>(y)])])}});

  LawReport agree{.check = "routes_agree", .method = "derived", .cases = 1};
  // The two characterizations must agree for functors; a mismatch means the
  // maps are not both functors (reported by the caller) or a real defect.
  bool both_functors = all_passed(check_functor(X, Y, f)) && all_passed(check_functor(Y, X, g));
  if (both_functors && hom_eq.passed() != unit_counit.passed())
    agree.add_witness({{"hom_equality", hom_eq.passed()}, {"unit_counit", unit_counit.passed()}});

  out.push_back(std::move(hom_eq));
  out.push_back(std::move(unit_counit));
  out.push_back(std::move(agree));
  return out;
}

QRelation graph(const QCategory& X, const QCategory& Y, const std::vector<int>& f) {
  const int nx = X.size(), ny = Y.size();
  std::vector<int> e(static_cast<std::size_t>(nx) * ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      e[static_cast<std::size_t>(x) * ny + static_cast<std::size_t>(y)] =
          Y.hom(f[static_cast<std::size_t>(x)], y);
  return QRelation(X.quantaloid_ptr(), X.carrier(), Y.carrier(), std::move(e));
}

QRelation cograph(const QCategory& X, const QCategory& Y, const std::vector<int>& f) {
  const int nx = X.size(), ny = Y.size();
  std::vector<int> e(static_cast<std::size_t>(ny) * nx);
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x)
      e[static_cast<std::size_t>(y) * nx + static_cast<std::size_t>(x)] =
          Y.hom(y, f[static_cast<std::size_t>(x)]);
  return QRelation(X.quantaloid_ptr(), Y.carrier(), X.carrier(), std::move(e));
}

LawReport check_symmetric(const QCategory& X) {
  const auto& K = X.quantaloid();
  const auto& Q = K.base();
  LawReport r{.check = "symmetry", .method = "exhaustive",
              .cases = static_cast<std::int64_t>(X.size()) * X.size()};
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y) {
      int expect = K.inv_mor(X.type(y), X.type(x), X.hom(y, x));
      if (X.hom(x, y) != expect)
        r.add_witness({{"x", X.label(x)}, {"y", X.label(y)},
                       {"alpha(x,y)", Q.name(X.hom(x, y))},
                       {"alpha(y,x)°", Q.name(expect)}});
    }
  return r;
}

bool is_symmetric(const QCategory& X) { return check_symmetric(X).passed(); }

QCategory symmetrize(const QCategory& X) {
  const auto& K = X.quantaloid();
  const int n = X.size();
  std::vector<int> alpha(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int p = X.type(x), q = X.type(y);
      int other = K.inv_mor(q, p, X.hom(y, x));
      alpha[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] =
          K.hom_meet(p, q, X.hom(x, y), other);
    }
  return QCategory(X.quantaloid_ptr(), X.carrier(), std::move(alpha));
}

LawReport check_separated(const QCategory& X) {
  LawReport r{.check = "separated", .method = "exhaustive",
              .cases = static_cast<std::int64_t>(X.size()) * X.size()};
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (x != y && X.iso(x, y))
        r.add_witness({{"x", X.label(x)}, {"y", X.label(y)}});
  return r;
}

bool is_separated(const QCategory& X) { return check_separated(X).passed(); }

namespace {

std::optional<int> order_bound(const QCategory& X, const std::vector<int>& xs, int type,
                               bool upper) {
  for (int x : xs)
    if (X.type(x) != type)
      throw StructuralError("bound over elements of mixed type",
                            {{"x", X.label(x)}});
  std::vector<int> bounds;
  for (int z = 0; z < X.size(); ++z) {
    if (X.type(z) != type) continue;
    bool ok = true;
    for (int x : xs)
      if (upper ? !X.leq_under(x, z) : !X.leq_under(z, x)) { ok = false; break; }
    if (ok) bounds.push_back(z);
  }
  for (int z : bounds) {
    bool extreme = true;
    for (int w : bounds)
      if (upper ? !X.leq_under(z, w) : !X.leq_under(w, z)) { extreme = false; break; }
    if (extreme) return z; // least index wins: bounds are scanned ascending
  }
  return std::nullopt;
}

} // namespace

std::optional<int> order_join(const QCategory& X, const std::vector<int>& xs, int type) {
  return order_bound(X, xs, type, true);
}

std::optional<int> order_meet(const QCategory& X, const std::vector<int>& xs, int type) {
  return order_bound(X, xs, type, false);
}

std::vector<std::vector<int>> enumerate_type_preserving_maps(const TypedSet& X,
                                                             const TypedSet& Y,
                                                             const EnumCaps& caps) {
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(X.size()));
  std::int64_t estimate = 1;
  for (int x = 0; x < X.size(); ++x) {
    for (int y = 0; y < Y.size(); ++y)
      if (X.type(x) == Y.type(y)) candidates[static_cast<std::size_t>(x)].push_back(y);
    if (candidates[static_cast<std::size_t>(x)].empty()) return {};
    estimate *= static_cast<std::int64_t>(candidates[static_cast<std::size_t>(x)].size());
    if (estimate > caps.max_maps)
      throw CapacityError("too many type-preserving maps", estimate, caps.max_maps);
  }
  std::vector<std::vector<int>> out;
  if (X.size() == 0) { out.push_back({}); return out; }
  const int n = X.size();
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> cur(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      cur[static_cast<std::size_t>(i)] = candidates[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]];
    out.push_back(std::move(cur));
    int i = n - 1;
    while (i >= 0 && ++pos[static_cast<std::size_t>(i)] == candidates[static_cast<std::size_t>(i)].size()) {
      pos[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

} // namespace qvs
