#include "qvs/quantaloid.hpp"

#include <algorithm>

#include "qvs/parallel.hpp"

namespace qvs {

int HomSet::index_of(int d) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), d);
  return (it != elems.end() && *it == d) ? static_cast<int>(it - elems.begin()) : -1;
}

HomSet HomSet::of(std::vector<int> es) {
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  HomSet h;
  for (int e : es) {
    if (e < 0 || e >= 64) throw StructuralError("hom element out of bitmask range", {{"elem", e}});
    h.mask |= (1ull << e);
  }
  h.elems = std::move(es);
  return h;
}

Quantaloid Quantaloid::from_parts(std::shared_ptr<const FiniteQuantale> base,
                                  std::vector<std::string> obj_names,
                                  std::vector<HomSet> homs,
                                  std::vector<std::vector<int>> comp,
                                  std::vector<int> identities,
                                  std::vector<std::vector<int>> inv_tables) {
  const int m = static_cast<int>(obj_names.size());
  if (m == 0) throw StructuralError("quantaloid has no objects");
  if (base->size() > 64)
    throw CapacityError("base quantale too large for hom bitmasks", base->size(), 64);
  const auto m2 = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  if (homs.size() != m2) throw StructuralError("hom table has wrong shape");
  if (comp.size() != m2 * static_cast<std::size_t>(m))
    throw StructuralError("composition table has wrong shape");
  if (identities.size() != static_cast<std::size_t>(m))
    throw StructuralError("identity table has wrong shape");
  if (inv_tables.size() != m2) throw StructuralError("involution table has wrong shape");

  Quantaloid K;
  K.base_ = std::move(base);
  K.nobj_ = m;
  K.obj_names_ = std::move(obj_names);
  K.homs_ = std::move(homs);
  K.comp_ = std::move(comp);
  K.ids_ = std::move(identities);
  K.inv_ = std::move(inv_tables);

  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      const auto& h = K.homs_[K.oidx(p, q)];
      for (int e : h.elems)
        if (e < 0 || e >= K.base_->size())
          throw StructuralError("hom element outside base carrier", {{"elem", e}});
      if (K.inv_[K.oidx(p, q)].size() != h.elems.size())
        throw StructuralError("involution row has wrong length",
                              {{"p", K.obj_names_[static_cast<std::size_t>(p)]},
                               {"q", K.obj_names_[static_cast<std::size_t>(q)]}});
      for (int r = 0; r < m; ++r) {
        const auto& t = K.comp_[(K.oidx(p, q)) * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
        std::size_t want = static_cast<std::size_t>(K.homs_[K.oidx(q, r)].size()) *
                           static_cast<std::size_t>(h.size());
        if (t.size() != want)
          throw StructuralError("composition block has wrong size",
                                {{"p", p}, {"q", q}, {"r", r},
                                 {"expected", want}, {"got", t.size()}});
      }
    }
  return K;
}

Quantaloid Quantaloid::one_object(std::shared_ptr<const FiniteQuantale> base) {
  const int n = base->size();
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  HomSet h = HomSet::of(all);
  std::vector<int> comp(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    inv[static_cast<std::size_t>(e)] = base->inv(e);
    for (int d = 0; d < n; ++d)
      comp[static_cast<std::size_t>(e) * n + static_cast<std::size_t>(d)] = base->mul(e, d);
  }
  int unit = base->unit();
  return from_parts(std::move(base), {"*"}, {h}, {comp}, {unit}, {inv});
}

int Quantaloid::compose(int p, int q, int r, int e, int d) const {
  const auto& hqr = homs_[oidx(q, r)];
  const auto& hpq = homs_[oidx(p, q)];
  int ei = hqr.index_of(e), di = hpq.index_of(d);
  if (ei < 0 || di < 0)
    throw StructuralError("composition argument outside hom-set",
                          {{"e", base_->name(e)}, {"d", base_->name(d)}});
  return comp_[(oidx(p, q)) * static_cast<std::size_t>(nobj_) + static_cast<std::size_t>(r)]
              [static_cast<std::size_t>(ei) * static_cast<std::size_t>(hpq.size()) +
               static_cast<std::size_t>(di)];
}

int Quantaloid::inv_mor(int p, int q, int d) const {
  int di = homs_[oidx(p, q)].index_of(d);
  if (di < 0)
    throw StructuralError("involution argument outside hom-set", {{"d", base_->name(d)}});
  return inv_[oidx(p, q)][static_cast<std::size_t>(di)];
}

int Quantaloid::hom_bottom(int p, int q) const {
  const auto& h = homs_[oidx(p, q)];
  if (h.elems.empty()) throw StructuralError("empty hom-set has no bottom");
  int acc = h.elems[0];
  for (int e : h.elems)
    if (base_->leq(e, acc)) acc = e;
  return acc;
}

int Quantaloid::hom_top(int p, int q) const {
  const auto& h = homs_[oidx(p, q)];
  if (h.elems.empty()) throw StructuralError("empty hom-set has no top");
  int acc = h.elems[0];
  for (int e : h.elems)
    if (base_->leq(acc, e)) acc = e;
  return acc;
}

int Quantaloid::hom_join(int p, int q, int a, int b) const {
  int j = base_->join(a, b);
  if (!homs_[oidx(p, q)].contains(j))
    throw StructuralError("join of hom elements escapes the hom-set",
                          {{"p", obj_name(p)}, {"q", obj_name(q)},
                           {"a", base_->name(a)}, {"b", base_->name(b)},
                           {"join", base_->name(j)}});
  return j;
}

int Quantaloid::hom_meet(int p, int q, int a, int b) const {
  int mt = base_->meet(a, b);
  if (!homs_[oidx(p, q)].contains(mt))
    throw StructuralError("meet of hom elements escapes the hom-set",
                          {{"p", obj_name(p)}, {"q", obj_name(q)},
                           {"a", base_->name(a)}, {"b", base_->name(b)},
                           {"meet", base_->name(mt)}});
  return mt;
}

int Quantaloid::hom_imp_left(int p, int q, int r, int w, int u) const {
  int acc = hom_bottom(q, r);
  for (int v : homs_[oidx(q, r)].elems)
    if (base_->leq(compose(p, q, r, v, u), w)) acc = hom_join(q, r, acc, v);
  return acc;
}

int Quantaloid::hom_imp_right(int p, int q, int r, int v, int w) const {
  int acc = hom_bottom(p, q);
  for (int u : homs_[oidx(p, q)].elems)
    if (base_->leq(compose(p, q, r, v, u), w)) acc = hom_join(p, q, acc, u);
  return acc;
}

int Quantaloid::object_of_element(int e) const {
  if (elem_obj_.empty() || e < 0 || e >= static_cast<int>(elem_obj_.size())) return -1;
  return elem_obj_[static_cast<std::size_t>(e)];
}

Quantaloid build_dstar(std::shared_ptr<const FiniteQuantale> base) {
  if (!base->lattice_ok())
    throw StructuralError("arrow quantaloid needs a valid lattice order");
  const int n = base->size();
  if (n > 64) throw CapacityError("base quantale too large for hom bitmasks", n, 64);

  std::vector<int> objs = base->hermitian_elements();
  const int m = static_cast<int>(objs.size());
  std::vector<std::string> names;
  for (int o : objs) names.push_back(base->name(o));

  auto is_mor = [&](int p, int q, int d) {
    // d <= p /\ q, right-divisible by p, left-divisible by q
    if (!base->leq(d, base->meet(p, q))) return false;
    if (base->mul(base->left_imp(d, p), p) != d) return false;
    if (base->mul(q, base->right_imp(q, d)) != d) return false;
    return true;
  };

  std::vector<HomSet> homs(static_cast<std::size_t>(m) * m);
  std::vector<std::vector<int>> invs(static_cast<std::size_t>(m) * m);
  for (int pi = 0; pi < m; ++pi)
    for (int qi = 0; qi < m; ++qi) {
      std::vector<int> es;
      for (int d = 0; d < n; ++d)
        if (is_mor(objs[static_cast<std::size_t>(pi)], objs[static_cast<std::size_t>(qi)], d))
          es.push_back(d);
      homs[static_cast<std::size_t>(pi) * m + static_cast<std::size_t>(qi)] = HomSet::of(std::move(es));
    }

  std::vector<std::vector<int>> comp(static_cast<std::size_t>(m) * m * m);
  for (int pi = 0; pi < m; ++pi)
    for (int qi = 0; qi < m; ++qi) {
      const auto& hpq = homs[static_cast<std::size_t>(pi) * m + static_cast<std::size_t>(qi)];
      int q = objs[static_cast<std::size_t>(qi)];
      // involution sends hom(p,q) into hom(q,p)
      auto& inv_row = invs[static_cast<std::size_t>(pi) * m + static_cast<std::size_t>(qi)];
      const auto& hqp = homs[static_cast<std::size_t>(qi) * m + static_cast<std::size_t>(pi)];
      for (int d : hpq.elems) {
        int di = base->inv(d);
        if (!hqp.contains(di))
          throw StructuralError("involution image escapes the opposite hom-set",
                                {{"d", base->name(d)}, {"d°", base->name(di)}});
        inv_row.push_back(di);
      }
      for (int ri = 0; ri < m; ++ri) {
        const auto& hqr = homs[static_cast<std::size_t>(qi) * m + static_cast<std::size_t>(ri)];
        const auto& hpr = homs[static_cast<std::size_t>(pi) * m + static_cast<std::size_t>(ri)];
        auto& block = comp[(static_cast<std::size_t>(pi) * m + static_cast<std::size_t>(qi)) * m +
                           static_cast<std::size_t>(ri)];
        block.resize(static_cast<std::size_t>(hqr.size()) * static_cast<std::size_t>(hpq.size()));
        for (int ei = 0; ei < hqr.size(); ++ei)
          for (int di = 0; di < hpq.size(); ++di) {
            int e = hqr.elems[static_cast<std::size_t>(ei)];
            int d = hpq.elems[static_cast<std::size_t>(di)];
            int via_left = base->mul(base->left_imp(e, q), d);
            int via_right = base->mul(e, base->right_imp(q, d));
            if (via_left != via_right)
              throw StructuralError("the two composition formulas disagree",
                                    {{"e", base->name(e)}, {"q", base->name(q)},
                                     {"d", base->name(d)},
                                     {"(e/q)&d", base->name(via_left)},
                                     {"e&(q\\d)", base->name(via_right)}});
            if (!hpr.contains(via_left))
              throw StructuralError("composite escapes the target hom-set",
                                    {{"e", base->name(e)}, {"d", base->name(d)},
                                     {"composite", base->name(via_left)}});
            block[static_cast<std::size_t>(ei) * static_cast<std::size_t>(hpq.size()) +
                  static_cast<std::size_t>(di)] = via_left;
          }
      }
    }

  Quantaloid K = Quantaloid::from_parts(base, std::move(names), std::move(homs),
                                        std::move(comp), objs, std::move(invs));
  K.obj_elem_ = objs;
  K.elem_obj_.assign(static_cast<std::size_t>(n), -1);
  for (int oi = 0; oi < m; ++oi)
    K.elem_obj_[static_cast<std::size_t>(objs[static_cast<std::size_t>(oi)])] = oi;
  return K;
}

Reports validate_quantaloid(const Quantaloid& K) {
  Reports out;
  const auto& Q = K.base();
  const int m = K.objects();

  {
    LawReport r{.check = "homset.join_closed", .method = "exhaustive"};
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) {
        const auto& h = K.hom(p, q);
        if (h.elems.empty()) {
          r.add_witness({{"law", "nonempty"}, {"p", K.obj_name(p)}, {"q", K.obj_name(q)}});
          continue;
        }
        // bottom: join closure forces a least element; verify directly
        ++r.cases;
        int bot = h.elems[0];
        for (int e : h.elems)
          if (Q.leq(e, bot)) bot = e;
        for (int e : h.elems)
          if (!Q.leq(bot, e)) {
            r.add_witness({{"law", "bottom_exists"}, {"p", K.obj_name(p)}, {"q", K.obj_name(q)},
                           {"candidate", Q.name(bot)}, {"incomparable", Q.name(e)}});
            break;
          }
        for (int a : h.elems)
          for (int b : h.elems) {
            ++r.cases;
            int j = Q.join(a, b);
            if (j < 0 || !h.contains(j))
              r.add_witness({{"law", "binary_join_member"}, {"p", K.obj_name(p)},
                             {"q", K.obj_name(q)}, {"a", Q.name(a)}, {"b", Q.name(b)},
                             {"join", j < 0 ? "<undefined>" : Q.name(j)}});
          }
      }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "identity.laws", .method = "exhaustive"};
    for (int q = 0; q < m; ++q) {
      ++r.cases;
      if (!K.hom(q, q).contains(K.id(q))) {
        r.add_witness({{"law", "identity_member"}, {"q", K.obj_name(q)},
                       {"id", Q.name(K.id(q))}});
        continue;
      }
      for (int p = 0; p < m; ++p) {
        for (int d : K.hom(p, q).elems) {
          ++r.cases;
          int lhs = K.compose(p, q, q, K.id(q), d);
          if (lhs != d)
            r.add_witness({{"law", "left_identity"}, {"p", K.obj_name(p)}, {"q", K.obj_name(q)},
                           {"d", Q.name(d)}, {"id∘d", Q.name(lhs)}});
        }
        for (int e : K.hom(q, p).elems) {
          ++r.cases;
          int rhs = K.compose(q, q, p, e, K.id(q));
          if (rhs != e)
            r.add_witness({{"law", "right_identity"}, {"q", K.obj_name(q)}, {"p", K.obj_name(p)},
                           {"e", Q.name(e)}, {"e∘id", Q.name(rhs)}});
        }
      }
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "composition.closure", .method = "exhaustive"};
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int s = 0; s < m; ++s)
          for (int e : K.hom(q, s).elems)
            for (int d : K.hom(p, q).elems) {
              ++r.cases;
              int c = K.compose(p, q, s, e, d);
              if (!K.hom(p, s).contains(c))
                r.add_witness({{"p", K.obj_name(p)}, {"q", K.obj_name(q)}, {"r", K.obj_name(s)},
                               {"e", Q.name(e)}, {"d", Q.name(d)}, {"composite", Q.name(c)}});
            }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "composition.associativity", .method = "exhaustive"};
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int s = 0; s < m; ++s)
          for (int t = 0; t < m; ++t)
            for (int f : K.hom(s, t).elems)
              for (int e : K.hom(q, s).elems)
                for (int d : K.hom(p, q).elems) {
                  ++r.cases;
                  int left = K.compose(p, s, t, f, K.compose(p, q, s, e, d));
                  int right = K.compose(p, q, t, K.compose(q, s, t, f, e), d);
                  if (left != right)
                    r.add_witness({{"f", Q.name(f)}, {"e", Q.name(e)}, {"d", Q.name(d)},
                                   {"(f∘e)∘d", Q.name(right)}, {"f∘(e∘d)", Q.name(left)}});
                }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "composition.join_preservation", .method = "exhaustive"};
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int s = 0; s < m; ++s) {
          const auto& hpq = K.hom(p, q);
          const auto& hqs = K.hom(q, s);
          if (hpq.elems.empty() || hqs.elems.empty()) continue;
          int bpq = K.hom_bottom(p, q), bqs = K.hom_bottom(q, s), bps = K.hom_bottom(p, s);
          for (int e : hqs.elems) {
            ++r.cases;
            if (K.compose(p, q, s, e, bpq) != bps)
              r.add_witness({{"law", "e∘bottom=bottom"}, {"e", Q.name(e)}});
            for (int d1 : hpq.elems)
              for (int d2 : hpq.elems) {
                ++r.cases;
                int lhs = K.compose(p, q, s, e, Q.join(d1, d2));
                int rhs = Q.join(K.compose(p, q, s, e, d1), K.compose(p, q, s, e, d2));
                if (lhs != rhs)
                  r.add_witness({{"law", "right_join"}, {"e", Q.name(e)},
                                 {"d1", Q.name(d1)}, {"d2", Q.name(d2)}});
              }
          }
          for (int d : hpq.elems) {
            ++r.cases;
            if (K.compose(p, q, s, bqs, d) != bps)
              r.add_witness({{"law", "bottom∘d=bottom"}, {"d", Q.name(d)}});
            for (int e1 : hqs.elems)
              for (int e2 : hqs.elems) {
                ++r.cases;
                int lhs = K.compose(p, q, s, Q.join(e1, e2), d);
                int rhs = Q.join(K.compose(p, q, s, e1, d), K.compose(p, q, s, e2, d));
                if (lhs != rhs)
                  r.add_witness({{"law", "left_join"}, {"d", Q.name(d)},
                                 {"e1", Q.name(e1)}, {"e2", Q.name(e2)}});
              }
          }
        }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "involution.laws", .method = "exhaustive"};
    for (int q = 0; q < m; ++q) {
      ++r.cases;
      if (K.hom(q, q).contains(K.id(q)) && K.inv_mor(q, q, K.id(q)) != K.id(q))
        r.add_witness({{"law", "identity_fixed"}, {"q", K.obj_name(q)}});
    }
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int d : K.hom(p, q).elems) {
          ++r.cases;
          int di = K.inv_mor(p, q, d);
          if (!K.hom(q, p).contains(di)) {
            r.add_witness({{"law", "lands_in_opposite_hom"}, {"d", Q.name(d)},
                           {"d°", Q.name(di)}});
            continue;
          }
          if (K.inv_mor(q, p, di) != d)
            r.add_witness({{"law", "involutive"}, {"d", Q.name(d)}, {"d°°", Q.name(K.inv_mor(q, p, di))}});
          for (int d2 : K.hom(p, q).elems) {
            ++r.cases;
            if (Q.leq(d, d2) != Q.leq(di, K.inv_mor(p, q, d2)))
              r.add_witness({{"law", "order_preservation"}, {"d", Q.name(d)}, {"d2", Q.name(d2)}});
          }
        }
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int s = 0; s < m; ++s)
          for (int e : K.hom(q, s).elems)
            for (int d : K.hom(p, q).elems) {
              ++r.cases;
              int lhs = K.inv_mor(p, s, K.compose(p, q, s, e, d));
              int rhs = K.compose(s, q, p, K.inv_mor(p, q, d), K.inv_mor(q, s, e));
              if (lhs != rhs)
                r.add_witness({{"law", "antihomomorphism"}, {"e", Q.name(e)}, {"d", Q.name(d)},
                               {"(e∘d)°", Q.name(lhs)}, {"d°∘e°", Q.name(rhs)}});
            }
    out.push_back(std::move(r));
  }

  {
    // v∘u <= w iff v <= w over u iff u <= v under w
    LawReport r{.check = "implication.adjunction", .method = "exhaustive"};
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int s = 0; s < m; ++s) {
          if (K.hom(p, q).elems.empty() || K.hom(q, s).elems.empty() ||
              K.hom(p, s).elems.empty())
            continue;
          for (int u : K.hom(p, q).elems)
            for (int v : K.hom(q, s).elems)
              for (int w : K.hom(p, s).elems) {
                r.cases += 2;
                bool below = Q.leq(K.compose(p, q, s, v, u), w);
                if (below != Q.leq(v, K.hom_imp_left(p, q, s, w, u)))
                  r.add_witness({{"side", "left"}, {"u", Q.name(u)}, {"v", Q.name(v)},
                                 {"w", Q.name(w)}});
                if (below != Q.leq(u, K.hom_imp_right(p, q, s, v, w)))
                  r.add_witness({{"side", "right"}, {"u", Q.name(u)}, {"v", Q.name(v)},
                                 {"w", Q.name(w)}});
              }
        }
    out.push_back(std::move(r));
  }

  return out;
}

} // namespace qvs
