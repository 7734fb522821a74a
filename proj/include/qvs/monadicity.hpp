#pragma once

#include <string>
#include <vector>

#include "qvs/monad.hpp"

namespace qvs {

/// Outcome of lifting a separated complete structure along a type-preserving
/// retraction f: X ->> Yset whose joins and tensors factor through images.
struct SectionLift {
  bool conditions_hold = false; // the two factorization conditions (plus shape)
  QCategory lifted;             // (Y, beta), beta(y,y') = alpha(hy, hy'); only when conditions hold
  std::vector<int> section;     // h: Y -> X, h y = join of the fiber over y
  Reports reports;
};

/// Builds the candidate structure on the retract via fiber joins and checks
/// every claim: the join section is a section, (Y, beta) is a valid separated
/// complete category, f -| h, the induced closure operator hf has the lifted
/// category as its fixpoint subcategory, and every section of f is dominated
/// by h pointwise and hom-wise.
SectionLift section_lift(const QCategory& X, const TypedSet& Yset,
                         const std::vector<int>& f, const EnumCaps& caps);

/// A split fork: f, g are left adjoints between separated complete
/// categories; the splitting (t, h, s) lives between the symmetrizations and
/// the given symmetric quotient (Z, gamma):
///   hf = hg, hs = 1, gt = 1, ft = sh.
struct SplitFork {
  QCategory X, Y; // separated complete (not necessarily symmetric)
  QCategory Z;    // symmetric quotient carrying gamma
  std::vector<int> f, g; // X -> Y
  std::vector<int> t;    // Y -> X
  std::vector<int> h;    // Y -> Z
  std::vector<int> s;    // Z -> Y
};

/// A competing cocone for the universal-property check: a separated complete
/// W with a left-adjoint k: Y -> W satisfying kf = kg.
struct Cocone {
  QCategory W;
  std::vector<int> k;
  std::string name;
};

struct SplitLiftResult {
  bool ok = false;
  QCategory lifted;              // (Z, xi) from the fiber joins of h
  std::vector<int> join_section; // s': Z -> Y
  Reports reports;
  json detail;
};

/// Instance-level verification that the quotient of a split fork lifts
/// uniquely to a separated complete category:
///   step 1  fiber joins give (Z, xi) with h -| s' and gamma = symmetrized xi;
///   step 2  every competing cocone (supplied ones plus all qualifying maps
///           into every small complete category) factors uniquely through
///           (Z, xi) via a left-adjoint mediator k∘s';
///   step 3  any alternative separated complete structure on Z that
///           symmetrizes to gamma, receives h as a left adjoint, and admits
///           the identity as a left adjoint into (Z, xi), is (Z, xi) itself.
SplitLiftResult verify_split_lift(const SplitFork& in, const std::vector<Cocone>& supplied,
                                  const EnumCaps& caps);

/// All separated complete categories over K with 1..max_size elements, one
/// representative per type-preserving isomorphism class, in enumeration
/// order. Capacity error when the raw matrix count exceeds the map cap.
std::vector<QCategory> small_complete_categories(const std::shared_ptr<const Quantaloid>& K,
                                                 int max_size, const EnumCaps& caps);

/// The subset lattice of a finite crisp set over the two-element base,
/// ordered by inclusion, plus the one empty-extent point every complete
/// category over that base must carry. atom_names.size() <= 6.
QCategory subset_lattice(const std::shared_ptr<const Quantaloid>& K,
                         const std::vector<std::string>& atom_names);

/// Worked split forks over the two-element base: "identity" (trivial fork),
/// "closure" (quotient of the subset lattice by a closure operator), and
/// "collapse" (everything onto a point).
SplitFork builtin_split_fork(const std::string& name);
std::vector<std::string> builtin_split_fork_names();

} // namespace qvs
