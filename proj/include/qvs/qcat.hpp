#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qvs/quantaloid.hpp"
#include "qvs/report.hpp"

namespace qvs {

/// A finite set whose elements carry a type: an object of the enriching
/// quantaloid.
struct TypedSet {
  std::vector<std::string> labels;
  std::vector<int> types;

  int size() const { return static_cast<int>(labels.size()); }
  const std::string& label(int x) const { return labels[static_cast<std::size_t>(x)]; }
  int type(int x) const { return types[static_cast<std::size_t>(x)]; }
};

/// A relation between typed sets: entry(x,y) lives in hom(|x|, |y|).
/// Only shape-checked on construction; hom membership is a validation.
struct QRelation {
  std::shared_ptr<const Quantaloid> K;
  TypedSet src, dst;
  std::vector<int> entries; // row-major src.size() x dst.size()

  QRelation() = default;
  QRelation(std::shared_ptr<const Quantaloid> K_, TypedSet src_, TypedSet dst_,
            std::vector<int> entries_);
  int at(int x, int y) const {
    return entries[static_cast<std::size_t>(x) * static_cast<std::size_t>(dst.size()) +
                   static_cast<std::size_t>(y)];
  }
  int& at(int x, int y) {
    return entries[static_cast<std::size_t>(x) * static_cast<std::size_t>(dst.size()) +
                   static_cast<std::size_t>(y)];
  }
};

/// A category enriched in the quantaloid: a typed set with a hom matrix
/// satisfying identity and composition inequalities (checked by
/// validate_category, not the constructor).
class QCategory {
public:
  QCategory() = default;
  QCategory(std::shared_ptr<const Quantaloid> K, TypedSet elems, std::vector<int> alpha);

  const Quantaloid& quantaloid() const { return *K_; }
  const std::shared_ptr<const Quantaloid>& quantaloid_ptr() const { return K_; }
  const TypedSet& carrier() const { return elems_; }
  int size() const { return elems_.size(); }
  int type(int x) const { return elems_.type(x); }
  const std::string& label(int x) const { return elems_.label(x); }
  int hom(int x, int y) const {
    return alpha_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) +
                  static_cast<std::size_t>(y)];
  }
  const std::vector<int>& hom_matrix() const { return alpha_; }

  /// Underlying preorder: x <= y iff same type and the identity is below
  /// hom(x,y).
  bool leq_under(int x, int y) const;
  bool iso(int x, int y) const { return leq_under(x, y) && leq_under(y, x); }

  QRelation hom_relation() const;

private:
  std::shared_ptr<const Quantaloid> K_;
  TypedSet elems_;
  std::vector<int> alpha_;
};

// --- relation calculus ------------------------------------------------------

/// Identity relation on a typed set: id(|x|) on the diagonal, hom bottom off
/// it.
QRelation identity_rel(const std::shared_ptr<const Quantaloid>& K, const TypedSet& X);

/// (psi ∘ phi)(x,z) = join over y of psi(y,z) ∘ phi(x,y).
QRelation compose_rel(const QRelation& psi, const QRelation& phi);

/// Right adjoint to (- ∘ phi): (eta over phi)(y,z) = meet over x of
/// eta(x,z) over phi(x,y), for eta: X->Z, phi: X->Y. Meets escaping the
/// hom-set raise a structural error.
QRelation imp_left(const QRelation& eta, const QRelation& phi);

/// Right adjoint to (psi ∘ -): (psi under eta)(x,y) = meet over z of
/// psi(y,z) under eta(x,z), for psi: Y->Z, eta: X->Z.
QRelation imp_right(const QRelation& psi, const QRelation& eta);

bool rel_leq(const QRelation& a, const QRelation& b);
bool rel_eq(const QRelation& a, const QRelation& b);

// --- validation -------------------------------------------------------------

/// Hom membership of every entry, identity inequality, composition
/// inequality.
Reports validate_category(const QCategory& X);

/// Distributor conditions for phi: X -> Y between categories:
/// beta ∘ phi ∘ alpha <= phi (and entry membership).
Reports validate_distributor(const QRelation& phi, const QCategory& X, const QCategory& Y);

// --- functors and adjunctions -----------------------------------------------

/// Type preservation and hom inequality alpha(x,x') <= beta(fx,fx').
Reports check_functor(const QCategory& X, const QCategory& Y, const std::vector<int>& f);

/// Morphisms of symmetric valued sets additionally preserve extents:
/// alpha(x,x) = beta(fx,fx).
LawReport check_extent_preserving(const QCategory& X, const QCategory& Y,
                                  const std::vector<int>& f);

/// Adjunction f -| g checked two ways: the hom equality
/// beta(fx,y) = alpha(x,gy), and the unit/counit inequalities 1 <= gf,
/// fg <= 1. Reports both plus an agreement line.
Reports check_adjunction(const QCategory& X, const QCategory& Y,
                         const std::vector<int>& f, const std::vector<int>& g);

/// Graph of a functor: f_graph(x,y) = beta(fx,y); cograph: (y,x) = beta(y,fx).
QRelation graph(const QCategory& X, const QCategory& Y, const std::vector<int>& f);
QRelation cograph(const QCategory& X, const QCategory& Y, const std::vector<int>& f);

// --- symmetry ---------------------------------------------------------------

bool is_symmetric(const QCategory& X);
LawReport check_symmetric(const QCategory& X);

/// Largest symmetric structure below alpha:
/// alpha_s(x,y) = alpha(x,y) /\ alpha(y,x)°.
QCategory symmetrize(const QCategory& X);

// --- underlying order -------------------------------------------------------

LawReport check_separated(const QCategory& X);
bool is_separated(const QCategory& X);

/// Least-index least upper bound of a set of same-type elements in the
/// underlying preorder; nullopt when none exists.
std::optional<int> order_join(const QCategory& X, const std::vector<int>& xs, int type);
std::optional<int> order_meet(const QCategory& X, const std::vector<int>& xs, int type);

// --- enumeration helpers ----------------------------------------------------

/// All type-preserving maps X -> Y in lexicographic order (capped).
std::vector<std::vector<int>> enumerate_type_preserving_maps(const TypedSet& X,
                                                             const TypedSet& Y,
                                                             const EnumCaps& caps);

} // namespace qvs
