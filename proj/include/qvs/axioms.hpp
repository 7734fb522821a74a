#pragma once

#include <functional>
#include <string>

#include "qvs/quantale.hpp"
#include "qvs/report.hpp"

namespace qvs {

/// Adapter giving FiniteQuantale the same value-level signature as
/// CostQuantale, so the symmetric-set axiom checks below run over either.
struct FiniteBackend {
  const FiniteQuantale* q;
  using value = int;
  bool leq(int a, int b) const { return q->leq(a, b); }
  int mul(int a, int b) const { return q->mul(a, b); }
  int join(int a, int b) const { return q->join(a, b); }
  int meet(int a, int b) const { return q->meet(a, b); }
  int unit() const { return q->unit(); }
  int left_imp(int r, int b) const { return q->left_imp(r, b); }
  int right_imp(int a, int r) const { return q->right_imp(a, r); }
  int inv(int a) const { return q->inv(a); }
  bool eq(int a, int b) const { return a == b; }
  bool is_hermitian(int a) const { return q->is_hermitian(a); }
  std::string name(int a) const { return q->name(a); }
};

/// Axioms of a symmetric quantale-valued set, checked directly at value
/// level on a hom matrix alpha(i,j):
///   bound:          alpha(x,y) <= alpha(x,x) /\ alpha(y,y)
///   divisibility:   (alpha(x,y)/alpha(x,x)) & alpha(x,x)
///                     = alpha(x,y) = alpha(y,y) & (alpha(y,y)\alpha(x,y))
///   triangle:       both composite forms agree and are <= alpha(x,z)
///   symmetry:       alpha(y,x) = alpha(x,y)°
template <class B>
Reports check_valued_set_axioms(const B& Q, int n,
                                const std::function<typename B::value(int, int)>& alpha,
                                const std::function<std::string(int)>& label) {
  using V = typename B::value;
  Reports out;
  const std::int64_t n64 = n;

  LawReport bound{.check = "bound", .method = "exhaustive", .cases = n64 * n64};
  LawReport divis{.check = "divisibility", .method = "exhaustive", .cases = 2 * n64 * n64};
  LawReport tri{.check = "triangle", .method = "exhaustive", .cases = 2 * n64 * n64 * n64};
  LawReport sym{.check = "symmetry", .method = "exhaustive", .cases = n64 * n64};

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      V axy = alpha(x, y), axx = alpha(x, x), ayy = alpha(y, y);
      if (!Q.leq(axy, Q.meet(axx, ayy)))
        bound.add_witness({{"x", label(x)}, {"y", label(y)}, {"alpha(x,y)", Q.name(axy)},
                           {"alpha(x,x)/\\alpha(y,y)", Q.name(Q.meet(axx, ayy))}});
      V d1 = Q.mul(Q.left_imp(axy, axx), axx);
      if (!Q.eq(d1, axy))
        divis.add_witness({{"law", "(a/e)&e=a"}, {"x", label(x)}, {"y", label(y)},
                           {"got", Q.name(d1)}, {"alpha(x,y)", Q.name(axy)}});
      V d2 = Q.mul(ayy, Q.right_imp(ayy, axy));
      if (!Q.eq(d2, axy))
        divis.add_witness({{"law", "e&(e\\a)=a"}, {"x", label(x)}, {"y", label(y)},
                           {"got", Q.name(d2)}, {"alpha(x,y)", Q.name(axy)}});
      if (!Q.eq(Q.inv(alpha(y, x)), axy))
        sym.add_witness({{"x", label(x)}, {"y", label(y)},
                         {"alpha(y,x)°", Q.name(Q.inv(alpha(y, x)))},
                         {"alpha(x,y)", Q.name(axy)}});
      for (int z = 0; z < n; ++z) {
        V ayz = alpha(y, z), axz = alpha(x, z);
        V c1 = Q.mul(Q.left_imp(ayz, ayy), axy);
        V c2 = Q.mul(ayz, Q.right_imp(ayy, axy));
        if (!Q.eq(c1, c2))
          tri.add_witness({{"law", "composite_forms_agree"}, {"x", label(x)}, {"y", label(y)},
                           {"z", label(z)}, {"left_form", Q.name(c1)}, {"right_form", Q.name(c2)}});
        if (!Q.leq(c1, axz))
          tri.add_witness({{"law", "composite_below"}, {"x", label(x)}, {"y", label(y)},
                           {"z", label(z)}, {"composite", Q.name(c1)}, {"alpha(x,z)", Q.name(axz)}});
      }
    }

  out.push_back(std::move(bound));
  out.push_back(std::move(divis));
  out.push_back(std::move(tri));
  out.push_back(std::move(sym));
  return out;
}

/// Candidate-subset conditions for one (mu, q) against a symmetric valued
/// set: the extent q must be hermitian, every value bounded by extent and q,
/// divisible on both sides, and stable under the hom action.
template <class B>
Reports check_subset_candidate(const B& Q, int n,
                               const std::function<typename B::value(int, int)>& alpha,
                               const std::function<typename B::value(int)>& mu,
                               typename B::value q,
                               const std::function<std::string(int)>& label) {
  using V = typename B::value;
  Reports out;
  const std::int64_t n64 = n;

  LawReport herm{.check = "extent_hermitian", .method = "exhaustive", .cases = 1};
  if (!Q.is_hermitian(q))
    herm.add_witness({{"q", Q.name(q)}, {"q°", Q.name(Q.inv(q))}});
  out.push_back(std::move(herm));

  LawReport bound{.check = "bound", .method = "exhaustive", .cases = n64};
  LawReport divis{.check = "divisibility", .method = "exhaustive", .cases = 2 * n64};
  LawReport desc{.check = "descent", .method = "exhaustive", .cases = 2 * n64 * n64};
  for (int x = 0; x < n; ++x) {
    V mx = mu(x), axx = alpha(x, x);
    if (!Q.leq(mx, Q.meet(axx, q)))
      bound.add_witness({{"x", label(x)}, {"mu(x)", Q.name(mx)},
                         {"alpha(x,x)/\\q", Q.name(Q.meet(axx, q))}});
    V d1 = Q.mul(Q.left_imp(mx, axx), axx);
    if (!Q.eq(d1, mx))
      divis.add_witness({{"law", "(mu/e)&e=mu"}, {"x", label(x)}, {"got", Q.name(d1)},
                         {"mu(x)", Q.name(mx)}});
    V d2 = Q.mul(q, Q.right_imp(q, mx));
    if (!Q.eq(d2, mx))
      divis.add_witness({{"law", "q&(q\\mu)=mu"}, {"x", label(x)}, {"got", Q.name(d2)},
                         {"mu(x)", Q.name(mx)}});
    for (int y = 0; y < n; ++y) {
      V myv = mu(y), ayy = alpha(y, y), axy = alpha(x, y);
      V c1 = Q.mul(Q.left_imp(myv, ayy), axy);
      V c2 = Q.mul(myv, Q.right_imp(ayy, axy));
      if (!Q.eq(c1, c2))
        desc.add_witness({{"law", "action_forms_agree"}, {"x", label(x)}, {"y", label(y)},
                          {"left_form", Q.name(c1)}, {"right_form", Q.name(c2)}});
      if (!Q.leq(c1, mu(x)))
        desc.add_witness({{"law", "action_below"}, {"x", label(x)}, {"y", label(y)},
                          {"action", Q.name(c1)}, {"mu(x)", Q.name(mu(x))}});
    }
  }
  out.push_back(std::move(bound));
  out.push_back(std::move(divis));
  out.push_back(std::move(desc));
  return out;
}

} // namespace qvs
