#include "qvs/monad.hpp"

#include <algorithm>

#include "qvs/axioms.hpp"

namespace qvs {

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
  if (n == 0) throw StructuralError("uniform draw from an empty range");
  if (n == 1) return 0;
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t v = gen() & mask;
    if (v < n) return v;
  }
}

int PowerObject::index_of(const Presheaf& mu) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), mu, presheaf_less);
  if (it == objects.end() || !(*it == mu)) return -1;
  return static_cast<int>(it - objects.begin());
}

PowerObject power_object(const QCategory& X, const EnumCaps& caps) {
  if (!is_symmetric(X))
    throw StructuralError("power object needs a symmetric category");
  PresheafCat PX = presheaf_category(X, caps);
  PowerObject P;
  P.cat = symmetrize(PX.cat);
  P.objects = std::move(PX.objects);
  return P;
}

std::vector<int> power_unit(const QCategory& X, const PowerObject& PX) {
  std::vector<int> u(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    int i = PX.index_of(yoneda(X, x));
    if (i < 0)
      throw StructuralError("representable weight missing from the power object",
                            {{"x", X.label(x)}});
    u[static_cast<std::size_t>(x)] = i;
  }
  return u;
}

Presheaf power_mult_eval(const QCategory& X, const PowerObject& PX, const Presheaf& Phi) {
  if (Phi.values.size() != PX.objects.size())
    throw StructuralError("weight on the power object has the wrong number of values",
                          {{"expected", PX.objects.size()}, {"got", Phi.values.size()}});
  const Quantaloid& K = X.quantaloid();
  const int q = Phi.type_obj;
  Presheaf out{q, std::vector<int>(static_cast<std::size_t>(X.size()))};
  for (int x = 0; x < X.size(); ++x) {
    int acc = K.hom_bottom(X.type(x), q);
    for (std::size_t i = 0; i < PX.objects.size(); ++i) {
      const Presheaf& mu = PX.objects[i];
      int c = K.compose(X.type(x), mu.type_obj, q, Phi.values[i],
                        mu.values[static_cast<std::size_t>(x)]);
      acc = K.hom_join(X.type(x), q, acc, c);
    }
    out.values[static_cast<std::size_t>(x)] = acc;
  }
  return out;
}

std::vector<int> power_mult_map(const QCategory& X, const PowerObject& PX,
                                const PowerObject& PPX) {
  std::vector<int> m(PPX.objects.size());
  for (std::size_t i = 0; i < PPX.objects.size(); ++i) {
    int idx = PX.index_of(power_mult_eval(X, PX, PPX.objects[i]));
    if (idx < 0)
      throw StructuralError("flattened weight missing from the power object",
                            {{"Phi", PPX.cat.label(static_cast<int>(i))}});
    m[i] = idx;
  }
  return m;
}

std::vector<int> power_map(const QCategory& X, const QCategory& Y, const std::vector<int>& f,
                           const PowerObject& PX, const PowerObject& PY) {
  std::vector<int> m(PX.objects.size());
  for (std::size_t i = 0; i < PX.objects.size(); ++i) {
    int idx = PY.index_of(push_presheaf(X, Y, f, PX.objects[i]));
    if (idx < 0)
      throw StructuralError("forward image missing from the power object",
                            {{"mu", PX.cat.label(static_cast<int>(i))}});
    m[i] = idx;
  }
  return m;
}

Presheaf push_presheaf_direct(const QCategory& X, const QCategory& Y,
                              const std::vector<int>& f, const Presheaf& mu) {
  const Quantaloid& K = X.quantaloid();
  if (!K.objects_are_elements())
    throw CapabilityError("the direct forward-image formula needs an arrow quantaloid");
  if (mu.values.size() != static_cast<std::size_t>(X.size()) ||
      f.size() != static_cast<std::size_t>(X.size()))
    throw StructuralError("direct forward image: wrong sizes");
  const FiniteQuantale& Q = K.base();
  Presheaf out{mu.type_obj, std::vector<int>(static_cast<std::size_t>(Y.size()))};
  for (int y = 0; y < Y.size(); ++y) {
    int acc = Q.bottom();
    for (int x = 0; x < X.size(); ++x) {
      int ext = X.hom(x, x);
      int t = Q.mul(Q.left_imp(mu.values[static_cast<std::size_t>(x)], ext),
                    Y.hom(y, f[static_cast<std::size_t>(x)]));
      acc = Q.join(acc, t);
    }
    out.values[static_cast<std::size_t>(y)] = acc;
  }
  return out;
}

Reports check_power_map(const QCategory& X, const QCategory& Y, const std::vector<int>& f,
                        const EnumCaps& caps) {
  Reports out = scoped("powermap", check_functor(X, Y, f));
  if (!all_passed(out)) return out;

  PowerObject PX = power_object(X, caps);
  PowerObject PY = power_object(Y, caps);
  const std::int64_t m = static_cast<std::int64_t>(PX.objects.size());

  std::vector<int> pf(PX.objects.size(), -1);
  {
    LawReport r{.check = "powermap.images_are_weights", .method = "exhaustive", .cases = m};
    for (std::size_t i = 0; i < PX.objects.size(); ++i) {
      Presheaf nu = push_presheaf(X, Y, f, PX.objects[i]);
      int idx = PY.index_of(nu);
      if (idx < 0 || !is_presheaf(Y, nu))
        r.add_witness({{"mu", PX.cat.label(static_cast<int>(i))}});
      else
        pf[i] = idx;
    }
    out.push_back(std::move(r));
    if (!out.back().passed()) return out;
  }
  {
    LawReport r{.check = "powermap.direct_formula_agrees", .method = "exhaustive", .cases = m};
    if (X.quantaloid().objects_are_elements()) {
      for (std::size_t i = 0; i < PX.objects.size(); ++i) {
        Presheaf generic = push_presheaf(X, Y, f, PX.objects[i]);
        Presheaf direct = push_presheaf_direct(X, Y, f, PX.objects[i]);
        if (!(generic == direct))
          r.add_witness({{"mu", PX.cat.label(static_cast<int>(i))},
                         {"generic", PY.cat.label(PY.index_of(generic))}});
      }
    } else {
      r.method = "skipped(not an arrow quantaloid)";
      r.cases = 0;
    }
    out.push_back(std::move(r));
  }
  {
    LawReport r{.check = "powermap.identity_to_identity", .method = "exhaustive", .cases = m};
    std::vector<int> idm(static_cast<std::size_t>(X.size()));
    for (int i = 0; i < X.size(); ++i) idm[static_cast<std::size_t>(i)] = i;
    std::vector<int> pid = power_map(X, X, idm, PX, PX);
    for (std::size_t i = 0; i < pid.size(); ++i)
      if (pid[i] != static_cast<int>(i))
        r.add_witness({{"mu", PX.cat.label(static_cast<int>(i))},
                       {"image", PX.cat.label(pid[i])}});
    out.push_back(std::move(r));
  }
  append(out, scoped("powermap.functor", check_functor(PX.cat, PY.cat, pf)));
  {
    LawReport r = check_extent_preserving(PX.cat, PY.cat, pf);
    r.check = "powermap.extent_preservation";
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// A pseudo-random weight on W: a join of 1..3 scaled representables
// v ∘ hom(-, pivot). Always a valid weight; every weight is such a join when
// enough pivots are allowed, so sampling has full support.
Presheaf sample_weight(const QCategory& W, std::mt19937_64& gen) {
  const Quantaloid& K = W.quantaloid();
  int q = static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(K.objects())));
  Presheaf out{q, std::vector<int>(static_cast<std::size_t>(W.size()))};
  for (int x = 0; x < W.size(); ++x)
    out.values[static_cast<std::size_t>(x)] = K.hom_bottom(W.type(x), q);
  if (W.size() == 0) return out;
  int pivots = 1 + static_cast<int>(uniform_below(gen, 3));
  for (int p = 0; p < pivots; ++p) {
    int j = static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(W.size())));
    const HomSet& h = K.hom(W.type(j), q);
    int v = h.elems[uniform_below(gen, static_cast<std::uint64_t>(h.size()))];
    for (int x = 0; x < W.size(); ++x) {
      int c = K.compose(W.type(x), W.type(j), q, v, W.hom(x, j));
      out.values[static_cast<std::size_t>(x)] =
          K.hom_join(W.type(x), q, out.values[static_cast<std::size_t>(x)], c);
    }
  }
  return out;
}

} // namespace

Reports check_monad_laws(const QCategory& X, const EnumCaps& caps, const SampleSpec& spec) {
  if (!is_symmetric(X))
    throw StructuralError("the powerset construction lives on symmetric categories");
  Reports out;
  PowerObject PX = power_object(X, caps);
  std::vector<int> unit = power_unit(X, PX);
  const std::int64_t m = static_cast<std::int64_t>(PX.objects.size());

  append(out, scoped("unit", check_functor(X, PX.cat, unit)));
  {
    LawReport r = check_extent_preserving(X, PX.cat, unit);
    r.check = "unit.extent_preservation";
    out.push_back(std::move(r));
  }
  {
    LawReport r{.check = "unit.fully_faithful", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(X.size()) * X.size()};
    const auto& Q = X.quantaloid().base();
    for (int a = 0; a < X.size(); ++a)
      for (int b = 0; b < X.size(); ++b) {
        int lhs = PX.cat.hom(unit[static_cast<std::size_t>(a)],
                             unit[static_cast<std::size_t>(b)]);
        if (lhs != X.hom(a, b))
          r.add_witness({{"x", X.label(a)}, {"y", X.label(b)},
                         {"hom_of_representables", Q.name(lhs)},
                         {"hom", Q.name(X.hom(a, b))}});
      }
    out.push_back(std::move(r));
  }

  // flatten ∘ (image of unit) = identity
  {
    LawReport r{.check = "mult.flatten_unit_image", .method = "exhaustive", .cases = m};
    for (std::size_t i = 0; i < PX.objects.size(); ++i) {
      Presheaf Phi = push_presheaf(X, PX.cat, unit, PX.objects[i]);
      Presheaf back = power_mult_eval(X, PX, Phi);
      if (!(back == PX.objects[i]))
        r.add_witness({{"mu", PX.cat.label(static_cast<int>(i))},
                       {"flattened", weight_label(X, back)}});
    }
    out.push_back(std::move(r));
  }
  // flatten ∘ (unit of the power object) = identity
  {
    LawReport r{.check = "mult.flatten_representable", .method = "exhaustive", .cases = m};
    for (std::size_t i = 0; i < PX.objects.size(); ++i) {
      Presheaf Phi = yoneda(PX.cat, static_cast<int>(i));
      Presheaf back = power_mult_eval(X, PX, Phi);
      if (!(back == PX.objects[i]))
        r.add_witness({{"mu", PX.cat.label(static_cast<int>(i))},
                       {"flattened", weight_label(X, back)}});
    }
    out.push_back(std::move(r));
  }

  // Associativity needs the double power object outright; its enumeration is
  // never sampled.
  PowerObject PPX = power_object(PX.cat, caps);
  std::vector<int> mult(PPX.objects.size(), -1);
  {
    LawReport r{.check = "mult.lands_in_power_object", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(PPX.objects.size())};
    for (std::size_t i = 0; i < PPX.objects.size(); ++i) {
      Presheaf mu = power_mult_eval(X, PX, PPX.objects[i]);
      int idx = PX.index_of(mu);
      if (idx < 0 || !is_presheaf(X, mu))
        r.add_witness({{"Phi", PPX.cat.label(static_cast<int>(i))}});
      else
        mult[i] = idx;
    }
    out.push_back(std::move(r));
    if (!out.back().passed()) return out;
  }
  append(out, scoped("mult", check_functor(PPX.cat, PX.cat, mult)));
  {
    LawReport r = check_extent_preserving(PPX.cat, PX.cat, mult);
    r.check = "mult.extent_preservation";
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "mult.associativity", .method = "exhaustive", .cases = 0};
    auto check_one = [&](const Presheaf& Psi, const json& tag) {
      Presheaf via_power = power_mult_eval(X, PX, push_presheaf(PPX.cat, PX.cat, mult, Psi));
      Presheaf via_flatten = power_mult_eval(X, PX, power_mult_eval(PX.cat, PPX, Psi));
      ++r.cases;
      if (!(via_power == via_flatten))
        r.add_witness({{"Psi", tag},
                       {"flatten_after_power_of_flatten", weight_label(X, via_power)},
                       {"flatten_after_flatten", weight_label(X, via_flatten)}});
    };
    if (!spec.sampled) {
      std::int64_t estimate = presheaf_count_estimate(PPX.cat);
      if (estimate > caps.max_presheaves)
        throw CapacityError("associativity layer enumeration", estimate,
                            caps.max_presheaves);
      r.cases = 0;
      for (const Presheaf& Psi : enumerate_presheaves(PPX.cat, caps))
        check_one(Psi, weight_label(PPX.cat, Psi));
    } else {
      r.method = "sampled(seed=" + std::to_string(spec.seed) +
                 ",count=" + std::to_string(spec.count) + ")";
      std::mt19937_64 gen(spec.seed);
      for (std::int64_t i = 0; i < spec.count; ++i)
        check_one(sample_weight(PPX.cat, gen), {{"sample", i}});
    }
    out.push_back(std::move(r));
  }
  return out;
}

Reports check_power_naturality(const QCategory& X, const QCategory& Y,
                               const std::vector<int>& f, const EnumCaps& caps) {
  Reports out = scoped("naturality", check_functor(X, Y, f));
  if (!all_passed(out)) return out;

  PowerObject PX = power_object(X, caps);
  PowerObject PY = power_object(Y, caps);
  std::vector<int> unitX = power_unit(X, PX);
  std::vector<int> unitY = power_unit(Y, PY);
  std::vector<int> pf = power_map(X, Y, f, PX, PY);

  {
    LawReport r{.check = "naturality.unit", .method = "exhaustive", .cases = X.size()};
    for (int x = 0; x < X.size(); ++x)
      if (pf[static_cast<std::size_t>(unitX[static_cast<std::size_t>(x)])] !=
          unitY[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])])
        r.add_witness({{"x", X.label(x)}});
    out.push_back(std::move(r));
  }
  {
    PowerObject PPX = power_object(PX.cat, caps);
    PowerObject PPY = power_object(PY.cat, caps);
    std::vector<int> ppf = power_map(PX.cat, PY.cat, pf, PPX, PPY);
    std::vector<int> multX = power_mult_map(X, PX, PPX);
    std::vector<int> multY = power_mult_map(Y, PY, PPY);
    LawReport r{.check = "naturality.flatten", .method = "exhaustive",
                .cases = static_cast<std::int64_t>(PPX.objects.size())};
    for (std::size_t i = 0; i < PPX.objects.size(); ++i)
      if (pf[static_cast<std::size_t>(multX[i])] !=
          multY[static_cast<std::size_t>(ppf[i])])
        r.add_witness({{"Phi", PPX.cat.label(static_cast<int>(i))}});
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Presheaf> enumerate_potential_subsets(const QCategory& X, const EnumCaps& caps) {
  const Quantaloid& K = X.quantaloid();
  if (!K.objects_are_elements())
    throw CapabilityError("potential-subset enumeration needs an arrow quantaloid");
  const FiniteQuantale& Q = K.base();
  const int n = X.size();
  std::vector<int> extents = Q.hermitian_elements();

  std::int64_t estimate = static_cast<std::int64_t>(extents.size());
  for (int x = 0; x < n; ++x) {
    (void)x;
    if (estimate > caps.max_maps / Q.size()) {
      estimate = caps.max_maps + 1;
      break;
    }
    estimate *= Q.size();
  }
  if (estimate > caps.max_maps)
    throw CapacityError("potential-subset enumeration", estimate, caps.max_maps);

  FiniteBackend B{&Q};
  std::function<int(int, int)> alpha = [&](int i, int j) { return X.hom(i, j); };
  std::function<std::string(int)> label = [&](int i) { return X.label(i); };

  std::vector<Presheaf> out;
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  for (int qe : extents) {
    int qobj = K.object_of_element(qe);
    std::function<int(int)> mu = [&](int i) { return vals[static_cast<std::size_t>(i)]; };
    for (;;) {
      if (all_passed(check_subset_candidate<FiniteBackend>(B, n, alpha, mu, qe, label)))
        out.push_back(Presheaf{qobj, vals});
      int pos = n - 1;
      while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == Q.size() - 1) {
        vals[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++vals[static_cast<std::size_t>(pos)];
    }
  }
  std::sort(out.begin(), out.end(), presheaf_less);
  return out;
}

LawReport check_power_paths_agree(const QCategory& X, const EnumCaps& caps) {
  std::vector<Presheaf> via_subsets = enumerate_potential_subsets(X, caps);
  std::vector<Presheaf> via_weights = enumerate_presheaves(X, caps);
  LawReport r{.check = "power.paths_agree", .method = "exhaustive",
              .cases = static_cast<std::int64_t>(via_subsets.size() + via_weights.size())};
  if (via_subsets.size() != via_weights.size())
    r.add_witness({{"potential_subsets", via_subsets.size()},
                   {"weights", via_weights.size()}});
  std::size_t lim = std::min(via_subsets.size(), via_weights.size());
  for (std::size_t i = 0; i < lim; ++i)
    if (!(via_subsets[i] == via_weights[i])) {
      r.add_witness({{"index", i}});
      if (r.witnesses.size() >= LawReport::max_witnesses) break;
    }
  return r;
}

} // namespace qvs
