#pragma once

#include <string>
#include <vector>

#include "qvs/qcat.hpp"

namespace qvs {

/// A contravariant weight on a category X: a type object q and one value per
/// element, values[x] in hom(|x|, q), stable under the homs of X acting on
/// the right. Equivalently a distributor from X to the one-element category
/// on q.
struct Presheaf {
  int type_obj = 0;
  std::vector<int> values;
};

bool operator==(const Presheaf& a, const Presheaf& b);
bool presheaf_less(const Presheaf& a, const Presheaf& b); // (type, values) lex

std::string weight_label(const QCategory& X, const Presheaf& mu);

/// Covariant counterpart: values[x] in hom(q, |x|), stable under the homs
/// acting on the left.
struct Copresheaf {
  int type_obj = 0;
  std::vector<int> values;
};

bool operator==(const Copresheaf& a, const Copresheaf& b);
bool copresheaf_less(const Copresheaf& a, const Copresheaf& b);

std::string weight_label(const QCategory& X, const Copresheaf& la);

/// One-element category on the object q; its only hom is the identity.
QCategory unit_category(const std::shared_ptr<const Quantaloid>& K, int q,
                        const std::string& label = "*");

QRelation presheaf_to_relation(const QCategory& X, const Presheaf& mu);
QRelation copresheaf_to_relation(const QCategory& X, const Copresheaf& la);

/// Distributor conditions via the one-element category.
Reports validate_presheaf(const QCategory& X, const Presheaf& mu);
Reports validate_copresheaf(const QCategory& X, const Copresheaf& la);
bool is_presheaf(const QCategory& X, const Presheaf& mu);
bool is_copresheaf(const QCategory& X, const Copresheaf& la);

/// Raw product-of-hom-sizes estimate (saturating) that the enumeration cap
/// is compared against. An upper bound on the true count.
std::int64_t presheaf_count_estimate(const QCategory& X);

/// Every weight, sorted by (type object, values). The capacity precheck
/// multiplies raw hom-set sizes per type object before any filtering, so the
/// estimate can exceed the true count by far; that is the point of the cap.
std::vector<Presheaf> enumerate_presheaves(const QCategory& X, const EnumCaps& caps);
std::vector<Copresheaf> enumerate_copresheaves(const QCategory& X, const EnumCaps& caps);

/// hom(mu, nu): the largest v with v ∘ mu(x) <= nu(x) for every x.
int presheaf_hom(const QCategory& X, const Presheaf& mu, const Presheaf& nu);
/// hom(la, ka): the largest u with ka(x) ∘ u <= la(x) for every x.
int copresheaf_hom(const QCategory& X, const Copresheaf& la, const Copresheaf& ka);

/// The category of all weights, elements in canonical order.
struct PresheafCat {
  QCategory cat;
  std::vector<Presheaf> objects;
  int index_of(const Presheaf& mu) const; // -1 when absent
};

struct CopresheafCat {
  QCategory cat;
  std::vector<Copresheaf> objects;
  int index_of(const Copresheaf& la) const;
};

PresheafCat presheaf_category(const QCategory& X, const EnumCaps& caps);
CopresheafCat copresheaf_category(const QCategory& X, const EnumCaps& caps);

/// Representable weights: yoneda(x) = hom(-, x), co_yoneda(x) = hom(x, -).
Presheaf yoneda(const QCategory& X, int x);
Copresheaf co_yoneda(const QCategory& X, int x);

/// x -> index of its representable inside the weight category.
std::vector<int> yoneda_map(const QCategory& X, const PresheafCat& PX);
std::vector<int> co_yoneda_map(const QCategory& X, const CopresheafCat& CX);

/// Representables are valid, the embedding is fully faithful, and homs out
/// of a representable evaluate the weight at its element.
Reports check_yoneda(const QCategory& X, const PresheafCat& PX);
Reports check_co_yoneda(const QCategory& X, const CopresheafCat& CX);

/// Image of a weight along a type-preserving map f: X -> Y, by composition
/// with the graph of f: (push mu)(y) = join over x of mu(x) ∘ beta(y, fx).
Presheaf push_presheaf(const QCategory& X, const QCategory& Y,
                       const std::vector<int>& f, const Presheaf& mu);
/// Restriction along f: (pull nu)(x) = join over y of nu(y) ∘ beta(fx, y),
/// which is nu(fx) when nu is a weight and f a functor.
Presheaf pull_presheaf(const QCategory& X, const QCategory& Y,
                       const std::vector<int>& f, const Presheaf& nu);

// --- weighted limits --------------------------------------------------------

/// Least-index element s of the weight's type whose rows match
/// alpha(s, x') = largest v with v ∘ mu(x) <= alpha(x, x'); -1 when absent.
int sup_presheaf(const QCategory& X, const Presheaf& mu);
/// Dual: alpha(x', i) = largest u with la(x) ∘ u <= alpha(x', x).
int inf_copresheaf(const QCategory& X, const Copresheaf& la);

/// Tensor of x by u in hom(|x|, q): least-index element t of type q with
/// alpha(t, x') = largest v with v ∘ u <= alpha(x, x'); -1 when absent.
int tensor(const QCategory& X, int x, int q, int u);
/// Cotensor of x by u in hom(q, |x|): least-index t of type q with
/// alpha(x', t) = largest w with u ∘ w <= alpha(x', x); -1 when absent.
int cotensor(const QCategory& X, int x, int q, int u);

/// sup of every weight, by index; entries -1 where no sup exists.
std::vector<int> sup_map(const QCategory& X, const PresheafCat& PX);

struct CompletenessInfo {
  bool tensored = false;
  bool cotensored = false;
  bool order_complete = false;
  bool complete = false; // conjunction of the three
  /// Internal consistency lines: the three-way characterization must agree
  /// with direct existence of all sups and all infs, and when complete the
  /// sup map must be a functor left adjoint to the representable embedding.
  Reports reports;
  json detail; // first failing instances of each predicate, for diagnosis
};

CompletenessInfo check_complete(const QCategory& X, const EnumCaps& caps);

// --- closure operators ------------------------------------------------------

/// c must be a functor X -> X with x <= cx and ccx iso cx.
Reports validate_closure_operator(const QCategory& X, const std::vector<int>& c);
/// Ascending indices of the elements with cx iso x.
std::vector<int> closure_fixpoints(const QCategory& X, const std::vector<int>& c);
/// Full subcategory on the given indices, in the given order.
QCategory sub_category(const QCategory& X, const std::vector<int>& keep);

// --- adjoint characterization -----------------------------------------------

/// Three independent routes to "f is a left adjoint", which must agree on
/// complete categories: an exhaustive search for a right adjoint, a search
/// for an order-theoretic right adjoint plus preservation of tensors up to
/// iso, and preservation of all sups of weights up to iso.
struct LeftAdjointInfo {
  bool by_right_adjoint = false;
  std::vector<int> right_adjoint; // lexicographically least witness, empty if none
  bool by_order_and_tensors = false;
  bool by_sup_preservation = false;
  bool agree = false;
  Reports reports;
  json detail;
};

LeftAdjointInfo check_left_adjoint(const QCategory& X, const QCategory& Y,
                                   const std::vector<int>& f, const EnumCaps& caps);

} // namespace qvs
