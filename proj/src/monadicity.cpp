#include "qvs/monadicity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qvs/presheaf.hpp"

namespace qvs {

namespace {

std::vector<int> compose_map(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    r[i] = outer[static_cast<std::size_t>(inner[i])];
  return r;
}

json labels_of(const TypedSet& ts, const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(ts.label(x));
  return a;
}

std::string map_string(const TypedSet& src, const TypedSet& dst, const std::vector<int>& f) {
  std::string out;
  for (int x = 0; x < src.size(); ++x) {
    if (x) out += ", ";
    out += src.label(x) + ">" + dst.label(f[x]);
  }
  return out;
}

/// Right adjoint of f by row matching: g y is the least x0 of y's type with
/// alpha(-, x0) equal to beta(f -, y) as a whole column.
std::optional<std::vector<int>> find_right_adjoint(const QCategory& X, const QCategory& Y,
                                                   const std::vector<int>& f) {
  std::vector<int> g(static_cast<std::size_t>(Y.size()));
  for (int y = 0; y < Y.size(); ++y) {
    int hit = -1;
    for (int cand = 0; cand < X.size() && hit < 0; ++cand) {
      if (X.type(cand) != Y.type(y)) continue;
      bool ok = true;
      for (int x = 0; x < X.size() && ok; ++x)
        ok = X.hom(x, cand) == Y.hom(f[x], y);
      if (ok) hit = cand;
    }
    if (hit < 0) return std::nullopt;
    g[static_cast<std::size_t>(y)] = hit;
  }
  return g;
}

bool hom_leq_pointwise(const QCategory& A, const QCategory& B) {
  const FiniteQuantale& Q = A.quantaloid().base();
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y)
      if (!Q.leq(A.hom(x, y), B.hom(x, y))) return false;
  return true;
}

bool functor_ok(const QCategory& X, const QCategory& Y, const std::vector<int>& f) {
  const FiniteQuantale& Q = X.quantaloid().base();
  for (int x = 0; x < X.size(); ++x) {
    if (Y.type(f[static_cast<std::size_t>(x)]) != X.type(x)) return false;
    for (int x2 = 0; x2 < X.size(); ++x2)
      if (!Q.leq(X.hom(x, x2),
                 Y.hom(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(x2)])))
        return false;
  }
  return true;
}

} // namespace

SectionLift section_lift(const QCategory& X, const TypedSet& Yset,
                         const std::vector<int>& f, const EnumCaps& caps) {
  const auto& Kp = X.quantaloid_ptr();
  if (!Kp) throw StructuralError("section lift needs a backed category", {});
  const Quantaloid& K = *Kp;
  const FiniteQuantale& Q = K.base();
  const int nx = X.size();
  const int ny = Yset.size();
  if (static_cast<int>(f.size()) != nx)
    throw StructuralError("retraction size mismatch",
                          {{"domain", nx}, {"map_entries", f.size()}});
  if (Yset.labels.size() != Yset.types.size())
    throw StructuralError("typed set shape mismatch",
                          {{"labels", Yset.labels.size()}, {"types", Yset.types.size()}});
  if (ny > 63)
    throw CapacityError("image keying needs a small codomain", ny, 63);
  for (int y = 0; y < ny; ++y)
    if (Yset.types[static_cast<std::size_t>(y)] < 0 ||
        Yset.types[static_cast<std::size_t>(y)] >= K.objects())
      throw StructuralError("codomain type out of range", {{"y", Yset.label(y)}});
  for (int x = 0; x < nx; ++x)
    if (f[static_cast<std::size_t>(x)] < 0 || f[static_cast<std::size_t>(x)] >= ny)
      throw StructuralError("retraction lands outside the codomain", {{"x", X.label(x)}});

  SectionLift out;
  Reports& R = out.reports;

  {
    LawReport r{.check = "retract.type_preserving", .method = "exhaustive", .cases = nx};
    for (int x = 0; x < nx; ++x)
      if (Yset.types[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] != X.type(x))
        r.add_witness({{"x", X.label(x)},
                       {"image", Yset.label(f[static_cast<std::size_t>(x)])},
                       {"x_type", K.obj_name(X.type(x))},
                       {"image_type",
                        K.obj_name(Yset.types[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])])}});
    R.push_back(r);
  }

  std::vector<std::vector<int>> fiber(static_cast<std::size_t>(ny));
  for (int x = 0; x < nx; ++x) fiber[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])].push_back(x);
  {
    LawReport r{.check = "retract.surjective", .method = "exhaustive", .cases = ny};
    for (int y = 0; y < ny; ++y)
      if (fiber[static_cast<std::size_t>(y)].empty()) r.add_witness({{"y", Yset.label(y)}});
    R.push_back(r);
  }

  append(R, scoped("retract.domain", validate_category(X)));
  {
    LawReport r = check_separated(X);
    r.check = "retract.domain_separated";
    R.push_back(r);
  }
  CompletenessInfo ci = check_complete(X, caps);
  append(R, scoped("retract.domain", ci.reports));
  {
    LawReport r{.check = "retract.domain_complete", .method = "derived", .cases = 1};
    if (!ci.complete) r.add_witness(ci.detail);
    R.push_back(r);
  }
  if (!all_passed(R)) return out;

  // condition: joins of families with equal image sets have equal images
  {
    LawReport r{.check = "retract.joins_factor", .method = "exhaustive"};
    for (int q = 0; q < K.objects(); ++q) {
      std::vector<int> xs;
      for (int x = 0; x < nx; ++x)
        if (X.type(x) == q) xs.push_back(x);
      if (xs.size() > 20)
        throw CapacityError("fiber subset enumeration",
                            static_cast<std::int64_t>(1) << xs.size(),
                            static_cast<std::int64_t>(1) << 20);
      const std::uint64_t total = 1ull << xs.size();
      // image bitmask over Y -> (image of the join, an example subset mask)
      std::map<std::uint64_t, std::pair<int, std::uint64_t>> seen;
      auto decode = [&](std::uint64_t m) {
        std::vector<int> S;
        for (std::size_t i = 0; i < xs.size(); ++i)
          if (m >> i & 1) S.push_back(xs[i]);
        return S;
      };
      for (std::uint64_t m = 0; m < total; ++m) {
        std::vector<int> S = decode(m);
        std::uint64_t img = 0;
        for (int x : S) img |= 1ull << f[static_cast<std::size_t>(x)];
        ++r.cases;
        auto j = order_join(X, S, q);
        if (!j) {
          r.add_witness({{"type", K.obj_name(q)}, {"missing_join", labels_of(X.carrier(), S)}});
          continue;
        }
        const int fj = f[static_cast<std::size_t>(*j)];
        auto [it, fresh] = seen.try_emplace(img, fj, m);
        if (!fresh && it->second.first != fj)
          r.add_witness({{"type", K.obj_name(q)},
                         {"family", labels_of(X.carrier(), S)},
                         {"other_family", labels_of(X.carrier(), decode(it->second.second))},
                         {"image_of_join", Yset.label(fj)},
                         {"other_image_of_join", Yset.label(it->second.first)}});
      }
    }
    R.push_back(r);
  }

  // condition: tensors of fiber-mates by any scalar stay fiber-mates
  {
    LawReport r{.check = "retract.tensors_factor", .method = "exhaustive"};
    for (int y = 0; y < ny; ++y) {
      const auto& fb = fiber[static_cast<std::size_t>(y)];
      for (std::size_t i = 0; i < fb.size(); ++i)
        for (std::size_t j = i + 1; j < fb.size(); ++j) {
          const int x = fb[i], x2 = fb[j];
          for (int q = 0; q < K.objects(); ++q)
            for (int u : K.hom(X.type(x), q).elems) {
              ++r.cases;
              const int t1 = tensor(X, x, q, u);
              const int t2 = tensor(X, x2, q, u);
              if (t1 < 0 || t2 < 0) {
                r.add_witness({{"missing_tensor_of", X.label(t1 < 0 ? x : x2)},
                               {"scalar", Q.name(u)}, {"scalar_type", K.obj_name(q)}});
                continue;
              }
              if (f[static_cast<std::size_t>(t1)] != f[static_cast<std::size_t>(t2)])
                r.add_witness({{"x", X.label(x)}, {"x_mate", X.label(x2)},
                               {"scalar", Q.name(u)}, {"scalar_type", K.obj_name(q)},
                               {"tensor", X.label(t1)}, {"tensor_mate", X.label(t2)},
                               {"image", Yset.label(f[static_cast<std::size_t>(t1)])},
                               {"image_mate", Yset.label(f[static_cast<std::size_t>(t2)])}});
            }
        }
    }
    R.push_back(r);
  }

  out.conditions_hold = all_passed(R);
  if (!out.conditions_hold) return out;

  out.section.resize(static_cast<std::size_t>(ny));
  for (int y = 0; y < ny; ++y) {
    auto j = order_join(X, fiber[static_cast<std::size_t>(y)], Yset.types[static_cast<std::size_t>(y)]);
    if (!j) throw StructuralError("fiber join vanished on a complete domain", {{"y", Yset.label(y)}});
    out.section[static_cast<std::size_t>(y)] = *j;
  }
  std::vector<int> beta(static_cast<std::size_t>(ny) * static_cast<std::size_t>(ny));
  for (int y = 0; y < ny; ++y)
    for (int y2 = 0; y2 < ny; ++y2)
      beta[static_cast<std::size_t>(y) * static_cast<std::size_t>(ny) + static_cast<std::size_t>(y2)] =
          X.hom(out.section[static_cast<std::size_t>(y)], out.section[static_cast<std::size_t>(y2)]);
  out.lifted = QCategory(Kp, Yset, beta);

  {
    LawReport r{.check = "lift.section_property", .method = "exhaustive", .cases = ny};
    for (int y = 0; y < ny; ++y)
      if (f[static_cast<std::size_t>(out.section[static_cast<std::size_t>(y)])] != y)
        r.add_witness({{"y", Yset.label(y)},
                       {"fiber_join", X.label(out.section[static_cast<std::size_t>(y)])},
                       {"its_image",
                        Yset.label(f[static_cast<std::size_t>(out.section[static_cast<std::size_t>(y)])])}});
    R.push_back(r);
  }

  append(R, scoped("lift", validate_category(out.lifted)));
  {
    LawReport r = check_separated(out.lifted);
    r.check = "lift.separated";
    R.push_back(r);
  }
  CompletenessInfo li = check_complete(out.lifted, caps);
  append(R, scoped("lift", li.reports));
  {
    LawReport r{.check = "lift.complete", .method = "derived", .cases = 1};
    if (!li.complete) r.add_witness(li.detail);
    R.push_back(r);
  }

  append(R, scoped("lift.adjunction", check_adjunction(X, out.lifted, f, out.section)));

  // the retraction followed by the section is a closure operator whose
  // fixpoints are exactly the section's image
  const std::vector<int> cl = compose_map(out.section, f);
  append(R, scoped("lift.closure", validate_closure_operator(X, cl)));
  {
    LawReport r{.check = "lift.fixpoints_match", .method = "derived", .cases = 1};
    std::vector<int> image = out.section;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const std::vector<int> fixed = closure_fixpoints(X, cl);
    if (fixed != image)
      r.add_witness({{"fixpoints", labels_of(X.carrier(), fixed)},
                     {"section_image", labels_of(X.carrier(), image)}});
    R.push_back(r);
  }

  // every section of f sits below the join section, pointwise and hom-wise
  {
    LawReport r{.check = "lift.sections_dominated", .method = "exhaustive"};
    double est = 1;
    for (int y = 0; y < ny; ++y) est *= static_cast<double>(fiber[static_cast<std::size_t>(y)].size());
    if (est > static_cast<double>(caps.max_maps))
      throw CapacityError("section enumeration", static_cast<std::int64_t>(est), caps.max_maps);
    std::vector<std::size_t> idx(static_cast<std::size_t>(ny), 0);
    std::vector<int> g(static_cast<std::size_t>(ny));
    while (true) {
      for (int y = 0; y < ny; ++y) g[static_cast<std::size_t>(y)] = fiber[static_cast<std::size_t>(y)][idx[static_cast<std::size_t>(y)]];
      ++r.cases;
      json bad;
      for (int y = 0; y < ny && bad.is_null(); ++y)
        if (!X.leq_under(g[static_cast<std::size_t>(y)], out.section[static_cast<std::size_t>(y)]))
          bad = {{"y", Yset.label(y)}, {"section_value", X.label(g[static_cast<std::size_t>(y)])},
                 {"join_section_value", X.label(out.section[static_cast<std::size_t>(y)])}};
      for (int y = 0; y < ny && bad.is_null(); ++y)
        for (int y2 = 0; y2 < ny && bad.is_null(); ++y2)
          if (!Q.leq(X.hom(g[static_cast<std::size_t>(y)], g[static_cast<std::size_t>(y2)]),
                     out.lifted.hom(y, y2)))
            bad = {{"y", Yset.label(y)}, {"y_prime", Yset.label(y2)},
                   {"section_hom", Q.name(X.hom(g[static_cast<std::size_t>(y)], g[static_cast<std::size_t>(y2)]))},
                   {"lifted_hom", Q.name(out.lifted.hom(y, y2))}};
      if (!bad.is_null()) {
        bad["section"] = map_string(Yset, X.carrier(), g);
        r.add_witness(bad);
      }
      int pos = ny - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == fiber[static_cast<std::size_t>(pos)].size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    R.push_back(r);
  }

  return out;
}

std::vector<QCategory> small_complete_categories(const std::shared_ptr<const Quantaloid>& Kp,
                                                 int max_size, const EnumCaps& caps) {
  const Quantaloid& K = *Kp;
  const FiniteQuantale& Q = K.base();
  const int nobj = K.objects();

  // raw matrix count across all nondecreasing type tuples, before filtering
  double raw = 0;
  std::vector<std::vector<int>> tuples;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    while (true) {
      double prod = 1;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          prod *= static_cast<double>(K.hom(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]).size());
      raw += prod;
      tuples.push_back(t);
      int pos = n - 1;
      while (pos >= 0 && t[static_cast<std::size_t>(pos)] == nobj - 1) --pos;
      if (pos < 0) break;
      const int v = t[static_cast<std::size_t>(pos)] + 1;
      for (int i = pos; i < n; ++i) t[static_cast<std::size_t>(i)] = v;
    }
  }
  if (raw > static_cast<double>(caps.max_maps))
    throw CapacityError("small category enumeration", static_cast<std::int64_t>(raw), caps.max_maps);

  std::vector<QCategory> out;
  std::set<std::vector<int>> seen;
  for (const auto& t : tuples) {
    const int n = static_cast<int>(t.size());
    std::vector<const HomSet*> slot(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        slot[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
            &K.hom(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
    std::vector<std::size_t> idx(slot.size(), 0);
    std::vector<int> a(slot.size());
    while (true) {
      for (std::size_t s = 0; s < slot.size(); ++s) a[s] = slot[s]->elems[idx[s]];
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        ok = Q.leq(K.id(t[static_cast<std::size_t>(i)]),
                   a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)]);
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          for (int k = 0; k < n && ok; ++k)
            ok = Q.leq(K.compose(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)],
                                 t[static_cast<std::size_t>(k)],
                                 a[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)],
                                 a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]),
                       a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)]);
      if (ok) {
        TypedSet ts;
        for (int i = 0; i < n; ++i) {
          ts.labels.push_back("e" + std::to_string(i));
          ts.types.push_back(t[static_cast<std::size_t>(i)]);
        }
        QCategory W(Kp, ts, a);
        if (is_separated(W) && check_complete(W, caps).complete) {
          // canonical key over all relabelings
          std::vector<int> perm(static_cast<std::size_t>(n));
          std::iota(perm.begin(), perm.end(), 0);
          std::vector<int> best;
          do {
            std::vector<int> key;
            key.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) key.push_back(t[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j)
                key.push_back(a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
            if (best.empty() || key < best) best = key;
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (seen.insert(best).second) out.push_back(W);
        }
      }
      std::size_t s = slot.size();
      while (s > 0 && ++idx[s - 1] == slot[s - 1]->elems.size()) idx[--s] = 0;
      if (s == 0) break;
    }
  }
  return out;
}

SplitLiftResult verify_split_lift(const SplitFork& in, const std::vector<Cocone>& supplied,
                                  const EnumCaps& caps) {
  const auto& Kp = in.X.quantaloid_ptr();
  if (!Kp || in.Y.quantaloid_ptr() != Kp || in.Z.quantaloid_ptr() != Kp)
    throw StructuralError("split fork needs categories over one shared quantaloid", {});
  const Quantaloid& K = *Kp;
  const FiniteQuantale& Q = K.base();
  auto need = [](const std::vector<int>& m, int dom, int cod, const char* what) {
    if (static_cast<int>(m.size()) != dom)
      throw StructuralError("map size mismatch", {{"map", what}, {"expected", dom}});
    for (int v : m)
      if (v < 0 || v >= cod) throw StructuralError("map lands out of range", {{"map", what}});
  };
  need(in.f, in.X.size(), in.Y.size(), "f");
  need(in.g, in.X.size(), in.Y.size(), "g");
  need(in.t, in.Y.size(), in.X.size(), "t");
  need(in.h, in.Y.size(), in.Z.size(), "h");
  need(in.s, in.Z.size(), in.Y.size(), "s");

  SplitLiftResult out;
  Reports& R = out.reports;

  append(R, scoped("fork.domain", validate_category(in.X)));
  {
    LawReport r = check_separated(in.X);
    r.check = "fork.domain_separated";
    R.push_back(r);
  }
  {
    LawReport r{.check = "fork.domain_complete", .method = "derived", .cases = 1};
    CompletenessInfo ci = check_complete(in.X, caps);
    if (!ci.complete) r.add_witness(ci.detail);
    R.push_back(r);
  }
  append(R, scoped("fork.codomain", validate_category(in.Y)));
  {
    LawReport r = check_separated(in.Y);
    r.check = "fork.codomain_separated";
    R.push_back(r);
  }
  {
    LawReport r{.check = "fork.codomain_complete", .method = "derived", .cases = 1};
    CompletenessInfo ci = check_complete(in.Y, caps);
    if (!ci.complete) r.add_witness(ci.detail);
    R.push_back(r);
  }
  append(R, scoped("fork.quotient", validate_category(in.Z)));
  {
    LawReport r = check_symmetric(in.Z);
    r.check = "fork.quotient_symmetric";
    R.push_back(r);
  }
  if (!all_passed(R)) return out;

  {
    LawReport r{.check = "fork.split_equations", .method = "exhaustive"};
    for (int x = 0; x < in.X.size(); ++x) {
      ++r.cases;
      if (in.h[static_cast<std::size_t>(in.f[static_cast<std::size_t>(x)])] !=
          in.h[static_cast<std::size_t>(in.g[static_cast<std::size_t>(x)])])
        r.add_witness({{"equation", "h f = h g"}, {"x", in.X.label(x)}});
    }
    for (int z = 0; z < in.Z.size(); ++z) {
      ++r.cases;
      if (in.h[static_cast<std::size_t>(in.s[static_cast<std::size_t>(z)])] != z)
        r.add_witness({{"equation", "h s = 1"}, {"z", in.Z.label(z)}});
    }
    for (int y = 0; y < in.Y.size(); ++y) {
      ++r.cases;
      if (in.g[static_cast<std::size_t>(in.t[static_cast<std::size_t>(y)])] != y)
        r.add_witness({{"equation", "g t = 1"}, {"y", in.Y.label(y)}});
      ++r.cases;
      if (in.f[static_cast<std::size_t>(in.t[static_cast<std::size_t>(y)])] !=
          in.s[static_cast<std::size_t>(in.h[static_cast<std::size_t>(y)])])
        r.add_witness({{"equation", "f t = s h"}, {"y", in.Y.label(y)}});
    }
    R.push_back(r);
  }

  // the fork legs are left adjoints between the completes; the splitting
  // maps only need to be functors after symmetrizing
  {
    LeftAdjointInfo la = check_left_adjoint(in.X, in.Y, in.f, caps);
    append(R, scoped("fork.f", la.reports));
    LawReport r{.check = "fork.f_left_adjoint", .method = "derived", .cases = 1};
    if (!la.by_right_adjoint) r.add_witness(la.detail);
    R.push_back(r);
  }
  {
    LeftAdjointInfo la = check_left_adjoint(in.X, in.Y, in.g, caps);
    append(R, scoped("fork.g", la.reports));
    LawReport r{.check = "fork.g_left_adjoint", .method = "derived", .cases = 1};
    if (!la.by_right_adjoint) r.add_witness(la.detail);
    R.push_back(r);
  }
  const QCategory Xs = symmetrize(in.X);
  const QCategory Ys = symmetrize(in.Y);
  append(R, scoped("fork.sym_f", check_functor(Xs, Ys, in.f)));
  append(R, scoped("fork.sym_g", check_functor(Xs, Ys, in.g)));
  append(R, scoped("fork.sym_t", check_functor(Ys, Xs, in.t)));
  append(R, scoped("fork.sym_h", check_functor(Ys, in.Z, in.h)));
  append(R, scoped("fork.sym_s", check_functor(in.Z, Ys, in.s)));
  if (!all_passed(R)) return out;

  // step 1: fiber joins lift the quotient
  SectionLift lift = section_lift(in.Y, in.Z.carrier(), in.h, caps);
  append(R, scoped("step1", lift.reports));
  if (!lift.conditions_hold || !all_passed(lift.reports)) return out;
  out.lifted = lift.lifted;
  out.join_section = lift.section;
  const QCategory& ZX = out.lifted;
  const int nz = in.Z.size();

  {
    LawReport r{.check = "step1.symmetrization_matches", .method = "exhaustive",
                .cases = nz * nz};
    const QCategory Zs = symmetrize(ZX);
    for (int z = 0; z < nz; ++z)
      for (int z2 = 0; z2 < nz; ++z2)
        if (Zs.hom(z, z2) != in.Z.hom(z, z2))
          r.add_witness({{"z", in.Z.label(z)}, {"z_prime", in.Z.label(z2)},
                         {"symmetrized_lift", Q.name(Zs.hom(z, z2))},
                         {"given", Q.name(in.Z.hom(z, z2))}});
    R.push_back(r);
  }
  {
    LawReport r{.check = "step1.split_section_dominated", .method = "exhaustive",
                .cases = nz + nz * nz};
    for (int z = 0; z < nz; ++z)
      if (!in.Y.leq_under(in.s[static_cast<std::size_t>(z)], lift.section[static_cast<std::size_t>(z)]))
        r.add_witness({{"z", in.Z.label(z)},
                       {"split_section", in.Y.label(in.s[static_cast<std::size_t>(z)])},
                       {"join_section", in.Y.label(lift.section[static_cast<std::size_t>(z)])}});
    for (int z = 0; z < nz; ++z)
      for (int z2 = 0; z2 < nz; ++z2)
        if (!Q.leq(in.Y.hom(in.s[static_cast<std::size_t>(z)], in.s[static_cast<std::size_t>(z2)]),
                   ZX.hom(z, z2)))
          r.add_witness({{"z", in.Z.label(z)}, {"z_prime", in.Z.label(z2)},
                         {"split_hom", Q.name(in.Y.hom(in.s[static_cast<std::size_t>(z)],
                                                       in.s[static_cast<std::size_t>(z2)]))},
                         {"lifted_hom", Q.name(ZX.hom(z, z2))}});
    R.push_back(r);
  }

  // step 2: the lift is the coequalizer, against every qualifying cocone
  std::vector<Cocone> cocones;
  cocones.push_back({ZX, in.h, "lifted-quotient"});
  {
    LawReport r{.check = "step2.supplied_cocones_qualify", .method = "exhaustive",
                .cases = static_cast<int>(supplied.size())};
    for (const auto& c : supplied) {
      if (c.W.quantaloid_ptr() != Kp)
        throw StructuralError("cocone from another enrichment world", {{"name", c.name}});
      need(c.k, in.Y.size(), c.W.size(), c.name.c_str());
      std::string why;
      if (!all_passed(validate_category(c.W))) why = "not a category";
      else if (!is_separated(c.W)) why = "not separated";
      else if (!check_complete(c.W, caps).complete) why = "not complete";
      else if (compose_map(c.k, in.f) != compose_map(c.k, in.g)) why = "does not equalize the fork";
      else if (!functor_ok(in.Y, c.W, c.k)) why = "not a functor";
      else if (!find_right_adjoint(in.Y, c.W, c.k)) why = "no right adjoint";
      if (!why.empty()) r.add_witness({{"name", c.name}, {"reason", why}});
      else cocones.push_back(c);
    }
    R.push_back(r);
  }

  bool worlds_skipped = false;
  std::vector<QCategory> worlds;
  try {
    worlds = small_complete_categories(Kp, 3, caps);
  } catch (const CapacityError&) {
    worlds_skipped = true;
  }
  int auto_cocones = 0;
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    const QCategory& W = worlds[w];
    const auto maps = enumerate_type_preserving_maps(in.Y.carrier(), W.carrier(), caps);
    for (std::size_t m = 0; m < maps.size(); ++m) {
      const auto& k = maps[m];
      if (compose_map(k, in.f) != compose_map(k, in.g)) continue;
      if (!functor_ok(in.Y, W, k)) continue;
      if (!find_right_adjoint(in.Y, W, k)) continue;
      cocones.push_back({W, k, "auto:" + std::to_string(w) + ":" + std::to_string(m)});
      ++auto_cocones;
    }
  }

  const std::string m2 = "exhaustive(cocones=" + std::to_string(cocones.size()) +
                         ", worlds=" + std::to_string(worlds.size()) +
                         (worlds_skipped ? ", auto-worlds-skipped" : "") + ")";
  LawReport med{.check = "step2.mediator_factors", .method = m2};
  LawReport mla{.check = "step2.mediator_left_adjoint", .method = m2};
  LawReport muq{.check = "step2.mediator_unique", .method = m2};
  for (const auto& c : cocones) {
    const std::vector<int> m = compose_map(c.k, lift.section);
    ++med.cases;
    for (int y = 0; y < in.Y.size(); ++y)
      if (m[static_cast<std::size_t>(in.h[static_cast<std::size_t>(y)])] != c.k[static_cast<std::size_t>(y)]) {
        med.add_witness({{"cocone", c.name}, {"y", in.Y.label(y)},
                         {"through_lift", c.W.label(m[static_cast<std::size_t>(in.h[static_cast<std::size_t>(y)])])},
                         {"direct", c.W.label(c.k[static_cast<std::size_t>(y)])}});
        break;
      }
    ++mla.cases;
    bool ok = functor_ok(ZX, c.W, m);
    if (ok) {
      auto ra = find_right_adjoint(ZX, c.W, m);
      ok = ra.has_value() && all_passed(check_adjunction(ZX, c.W, m, *ra));
    }
    if (!ok) mla.add_witness({{"cocone", c.name}, {"mediator", map_string(in.Z.carrier(), c.W.carrier(), m)}});
    ++muq.cases;
    int hits = 0;
    bool only_m = true;
    for (const auto& cand : enumerate_type_preserving_maps(in.Z.carrier(), c.W.carrier(), caps))
      if (compose_map(cand, in.h) == c.k) {
        ++hits;
        if (cand != m) only_m = false;
      }
    if (hits != 1 || !only_m)
      muq.add_witness({{"cocone", c.name}, {"factorizations", hits}});
  }
  R.push_back(med);
  R.push_back(mla);
  R.push_back(muq);

  // step 3: no other separated complete structure on the quotient carrier
  // symmetrizes to gamma, receives h as a left adjoint, and compares to the
  // lift through the identity
  {
    double raw = 1;
    for (int z = 0; z < nz; ++z)
      for (int z2 = 0; z2 < nz; ++z2)
        raw *= static_cast<double>(K.hom(in.Z.type(z), in.Z.type(z2)).size());
    if (raw > static_cast<double>(caps.max_maps))
      throw CapacityError("alternative structure enumeration", static_cast<std::int64_t>(raw),
                          caps.max_maps);
    const std::string m3 = "exhaustive(matrices=" + std::to_string(static_cast<std::int64_t>(raw)) + ")";

    std::vector<int> idm(static_cast<std::size_t>(nz));
    std::iota(idm.begin(), idm.end(), 0);
    auto qualifies = [&](const QCategory& C) {
      if (!is_separated(C)) return false;
      const QCategory Cs = symmetrize(C);
      for (int z = 0; z < nz; ++z)
        for (int z2 = 0; z2 < nz; ++z2)
          if (Cs.hom(z, z2) != in.Z.hom(z, z2)) return false;
      if (!functor_ok(in.Y, C, in.h)) return false;
      if (!find_right_adjoint(in.Y, C, in.h)) return false;
      return check_complete(C, caps).complete;
    };

    LawReport self{.check = "step3.lift_qualifies", .method = "derived", .cases = 1};
    if (!qualifies(ZX)) self.add_witness({{"reason", "the lift fails its own screening"}});
    R.push_back(self);

    LawReport uq{.check = "step3.unique_lift", .method = m3};
    int alternatives = 0;
    std::vector<const HomSet*> slot(static_cast<std::size_t>(nz) * static_cast<std::size_t>(nz));
    for (int z = 0; z < nz; ++z)
      for (int z2 = 0; z2 < nz; ++z2)
        slot[static_cast<std::size_t>(z) * static_cast<std::size_t>(nz) + static_cast<std::size_t>(z2)] =
            &K.hom(in.Z.type(z), in.Z.type(z2));
    std::vector<std::size_t> idx(slot.size(), 0);
    std::vector<int> eta(slot.size());
    while (true) {
      for (std::size_t s = 0; s < slot.size(); ++s) eta[s] = slot[s]->elems[idx[s]];
      ++uq.cases;
      bool ok = true;
      for (int z = 0; z < nz && ok; ++z)
        ok = Q.leq(K.id(in.Z.type(z)),
                   eta[static_cast<std::size_t>(z) * static_cast<std::size_t>(nz) + static_cast<std::size_t>(z)]);
      for (int z = 0; z < nz && ok; ++z)
        for (int z2 = 0; z2 < nz && ok; ++z2)
          for (int z3 = 0; z3 < nz && ok; ++z3)
            ok = Q.leq(K.compose(in.Z.type(z), in.Z.type(z2), in.Z.type(z3),
                                 eta[static_cast<std::size_t>(z2) * static_cast<std::size_t>(nz) + static_cast<std::size_t>(z3)],
                                 eta[static_cast<std::size_t>(z) * static_cast<std::size_t>(nz) + static_cast<std::size_t>(z2)]),
                       eta[static_cast<std::size_t>(z) * static_cast<std::size_t>(nz) + static_cast<std::size_t>(z3)]);
      if (ok) {
        const QCategory C(Kp, in.Z.carrier(), eta);
        if (eta != ZX.hom_matrix() && qualifies(C)) {
          ++alternatives;
          // a true coequalizer structure would compare to the lift through
          // the identity as a left adjoint; that forces equality
          if (hom_leq_pointwise(C, ZX) && find_right_adjoint(C, ZX, idm))
            uq.add_witness({{"indistinguishable_structure",
                             map_string(in.Z.carrier(), in.Z.carrier(), idm)},
                            {"hom_matrix", eta}});
        }
      }
      std::size_t s = slot.size();
      while (s > 0 && ++idx[s - 1] == slot[s - 1]->elems.size()) idx[--s] = 0;
      if (s == 0) break;
    }
    R.push_back(uq);
    out.detail = {{"cocones", cocones.size()},
                  {"supplied", supplied.size()},
                  {"auto_worlds", worlds.size()},
                  {"auto_cocones", auto_cocones},
                  {"auto_worlds_skipped", worlds_skipped},
                  {"alternative_structures", alternatives}};
  }

  out.ok = all_passed(R);
  return out;
}

QCategory subset_lattice(const std::shared_ptr<const Quantaloid>& Kp,
                         const std::vector<std::string>& atom_names) {
  const Quantaloid& K = *Kp;
  const FiniteQuantale& Q = K.base();
  if (Q.size() != 2)
    throw StructuralError("subset lattice needs the two-element base", {{"base_size", Q.size()}});
  if (atom_names.size() > 6)
    throw CapacityError("subset lattice", static_cast<std::int64_t>(1) << atom_names.size(), 64);
  const int o0 = K.object_of_element(Q.bottom());
  const int o1 = K.object_of_element(Q.top());
  const int n = 1 << atom_names.size();
  TypedSet ts;
  ts.labels.push_back("o");
  ts.types.push_back(o0);
  for (int m = 0; m < n; ++m) {
    std::string l = "{";
    for (std::size_t i = 0; i < atom_names.size(); ++i)
      if (m >> i & 1) {
        if (l.size() > 1) l += ",";
        l += atom_names[i];
      }
    l += "}";
    ts.labels.push_back(l);
    ts.types.push_back(o1);
  }
  const int sz = n + 1;
  std::vector<int> alpha(static_cast<std::size_t>(sz) * static_cast<std::size_t>(sz), Q.bottom());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      alpha[static_cast<std::size_t>(a + 1) * static_cast<std::size_t>(sz) + static_cast<std::size_t>(b + 1)] =
          (a & ~b) == 0 ? Q.top() : Q.bottom();
  return QCategory(Kp, ts, alpha);
}

std::vector<std::string> builtin_split_fork_names() { return {"identity", "closure", "collapse"}; }

SplitFork builtin_split_fork(const std::string& name) {
  auto base = std::make_shared<const FiniteQuantale>(FiniteQuantale::boolean2());
  auto Kp = std::make_shared<const Quantaloid>(build_dstar(base));
  SplitFork fk;
  if (name == "identity") {
    fk.X = subset_lattice(Kp, {"p", "q"});
    fk.Y = fk.X;
    fk.Z = symmetrize(fk.X);
    std::vector<int> id(static_cast<std::size_t>(fk.X.size()));
    std::iota(id.begin(), id.end(), 0);
    fk.f = fk.g = fk.t = fk.h = fk.s = id;
    return fk;
  }
  if (name == "closure") {
    // quotient by the closure operator sending {q} to {p,q}
    fk.X = subset_lattice(Kp, {"p", "q"}); // o {} {p} {q} {p,q}
    fk.Y = fk.X;
    fk.f = {0, 1, 2, 4, 4};
    fk.g = {0, 1, 2, 3, 4};
    fk.t = fk.g;
    fk.Z = symmetrize(sub_category(fk.X, {0, 1, 2, 4}));
    fk.h = {0, 1, 2, 3, 3};
    fk.s = {0, 1, 2, 4};
    return fk;
  }
  if (name == "collapse") {
    // both membership forks collapse onto the one-subset world
    fk.X = subset_lattice(Kp, {"p", "q"});
    fk.Y = subset_lattice(Kp, {"p"}); // o {} {p}
    fk.Z = symmetrize(subset_lattice(Kp, {}));
    fk.f = {0, 1, 2, 1, 2}; // membership of p
    fk.g = {0, 1, 2, 2, 2}; // nonemptiness
    fk.t = {0, 1, 3};
    fk.h = {0, 1, 1};
    fk.s = {0, 1};
    return fk;
  }
  throw StructuralError("unknown split fork", {{"name", name}});
}

} // namespace qvs
