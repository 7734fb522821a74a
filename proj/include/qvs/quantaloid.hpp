#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qvs/quantale.hpp"
#include "qvs/report.hpp"

namespace qvs {

/// A hom-set: a subset of the base quantale's carrier, kept sorted, with a
/// membership bitmask (base carriers are capped at 64 elements here).
struct HomSet {
  std::vector<int> elems;
  std::uint64_t mask = 0;

  bool contains(int d) const { return d >= 0 && d < 64 && (mask >> d) & 1; }
  int index_of(int d) const;
  int size() const { return static_cast<int>(elems.size()); }
  static HomSet of(std::vector<int> es);
};

/// A small quantaloid whose hom-sets are subsets of one base quantale's
/// carrier, with explicit composition, identities, and an involution on
/// morphisms. Kept generic so categories can be enriched in any validated
/// instance; the arrow quantaloid of a quantale is one constructor among
/// others.
class Quantaloid {
public:
  /// Generic construction; shape-checks only. comp maps (p,q,r) and the
  /// hom-local indices of e in hom(q,r), d in hom(p,q) to an element.
  static Quantaloid from_parts(std::shared_ptr<const FiniteQuantale> base,
                               std::vector<std::string> obj_names,
                               std::vector<HomSet> homs,
                               std::vector<std::vector<int>> comp,
                               std::vector<int> identities,
                               std::vector<std::vector<int>> inv_tables);

  /// The base quantale as a one-object quantaloid.
  static Quantaloid one_object(std::shared_ptr<const FiniteQuantale> base);

  int objects() const { return nobj_; }
  const std::string& obj_name(int o) const { return obj_names_[static_cast<std::size_t>(o)]; }
  const HomSet& hom(int p, int q) const { return homs_[oidx(p, q)]; }
  int id(int q) const { return ids_[static_cast<std::size_t>(q)]; }

  /// Composition of e in hom(q,r) after d in hom(p,q), landing in hom(p,r).
  int compose(int p, int q, int r, int e, int d) const;
  /// Involution on morphisms: hom(p,q) -> hom(q,p).
  int inv_mor(int p, int q, int d) const;

  // Order structure within a hom-set (inherited from the base quantale).
  int hom_bottom(int p, int q) const;
  int hom_top(int p, int q) const;
  /// Base-quantale join/meet with a membership check: a join or meet of hom
  /// elements escaping the hom-set is a structural error.
  int hom_join(int p, int q, int a, int b) const;
  int hom_meet(int p, int q, int a, int b) const;

  /// w "over" u: the largest v in hom(q,r) with v∘u <= w,
  /// for u in hom(p,q), w in hom(p,r).
  int hom_imp_left(int p, int q, int r, int w, int u) const;
  /// v "under" w: the largest u in hom(p,q) with v∘u <= w,
  /// for v in hom(q,r), w in hom(p,r).
  int hom_imp_right(int p, int q, int r, int v, int w) const;

  const FiniteQuantale& base() const { return *base_; }
  const std::shared_ptr<const FiniteQuantale>& base_ptr() const { return base_; }

  /// Arrow-quantaloid bookkeeping: object <-> hermitian base element.
  bool objects_are_elements() const { return !obj_elem_.empty(); }
  int object_element(int o) const { return obj_elem_[static_cast<std::size_t>(o)]; }
  int object_of_element(int e) const; // -1 when e is not an object

private:
  friend Quantaloid build_dstar(std::shared_ptr<const FiniteQuantale>);
  Quantaloid() = default;
  std::size_t oidx(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(nobj_) +
           static_cast<std::size_t>(q);
  }

  std::shared_ptr<const FiniteQuantale> base_;
  int nobj_ = 0;
  std::vector<std::string> obj_names_;
  std::vector<HomSet> homs_;               // nobj*nobj
  std::vector<std::vector<int>> comp_;     // nobj^3 tables, (ei, di) -> element
  std::vector<int> ids_;
  std::vector<std::vector<int>> inv_;      // nobj*nobj tables, hom index -> element
  std::vector<int> obj_elem_;              // arrow quantaloid only
  std::vector<int> elem_obj_;
};

/// Builds the arrow quantaloid of an involutive quantale: objects are the
/// hermitian elements, hom(p,q) the elements d <= p /\ q divisible by p on
/// the right and by q on the left, composition (e/q)&d, identity on q is q
/// itself. Both composition formulas (e/q)&d and e&(q\d) are computed and a
/// disagreement is a structural error.
Quantaloid build_dstar(std::shared_ptr<const FiniteQuantale> base);

/// Checks every quantaloid axiom exhaustively: hom-sets closed under joins
/// with a bottom, identities present and neutral, composition closed,
/// associative and join-preserving in both arguments, involution involutive,
/// order-preserving and product-reversing, and the implication adjunctions.
Reports validate_quantaloid(const Quantaloid& K);

} // namespace qvs
