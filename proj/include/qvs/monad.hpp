#pragma once

#include <cstdint>
#include <random>

#include "qvs/presheaf.hpp"

namespace qvs {

/// Deterministic unbiased draw from {0,...,n-1}: mask to the next power of
/// two and reject. Same results on every platform, unlike the distribution
/// classes.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n);

/// The power object of a symmetric category: every weight, with the
/// symmetrized hom between weights. The object part of the powerset
/// construction.
struct PowerObject {
  QCategory cat;
  std::vector<Presheaf> objects;
  int index_of(const Presheaf& mu) const;
};

PowerObject power_object(const QCategory& X, const EnumCaps& caps);

/// x -> index of its representable weight. The unit.
std::vector<int> power_unit(const QCategory& X, const PowerObject& PX);

/// Flattening of a weight on the power object down to a weight on X:
/// (flatten Phi)(x) = join over mu of Phi(mu) ∘ mu(x).
Presheaf power_mult_eval(const QCategory& X, const PowerObject& PX, const Presheaf& Phi);

/// Flattening as an index map out of the double power object. Throws a
/// structural error if some flattened weight is missing from the power
/// object (check_monad_laws reports that as a witness instead).
std::vector<int> power_mult_map(const QCategory& X, const PowerObject& PX,
                                const PowerObject& PPX);

/// Functor action on a map f: X -> Y: each weight goes to its forward image,
/// by index into the power object of Y.
std::vector<int> power_map(const QCategory& X, const QCategory& Y, const std::vector<int>& f,
                           const PowerObject& PX, const PowerObject& PY);

/// Forward image computed at base-value level over an arrow quantaloid,
/// dividing out the source extent:
///   (push mu)(y) = join over x of (mu(x)/alpha(x,x)) & beta(y,fx).
/// No hom-set bookkeeping is involved; agreement with push_presheaf is a
/// separate check (check_power_map), so this does not enforce membership of
/// its output.
Presheaf push_presheaf_direct(const QCategory& X, const QCategory& Y,
                              const std::vector<int>& f, const Presheaf& mu);

/// The functor action is well formed and lands in the power object, agrees
/// with the base-level direct formula, is the identity on the identity map,
/// and is an extent-preserving functor between power objects.
Reports check_power_map(const QCategory& X, const QCategory& Y, const std::vector<int>& f,
                        const EnumCaps& caps);

struct SampleSpec {
  bool sampled = false; // sample the associativity layer instead of enumerating it
  std::uint64_t seed = 0;
  std::int64_t count = 1000;
};

/// Unit and flattening laws. The two unit laws run exhaustively over the
/// power object. Associativity always enumerates the double power object (a
/// capacity error if that alone exceeds the cap, sampled or not); the triple
/// layer is enumerated when spec.sampled is false (capacity error when its
/// raw estimate exceeds the cap) and otherwise replaced by spec.count seeded
/// weights built as joins of scaled representables, which are always valid
/// weights and can reach every weight.
Reports check_monad_laws(const QCategory& X, const EnumCaps& caps,
                         const SampleSpec& spec = {});

/// Naturality of unit and flattening along a morphism f: X -> Y.
Reports check_power_naturality(const QCategory& X, const QCategory& Y,
                               const std::vector<int>& f, const EnumCaps& caps);

/// Independent enumeration of the power object over an arrow quantaloid:
/// every (hermitian extent, value vector) pair over the full base carrier,
/// filtered by the candidate-subset conditions at base-value level. Never
/// consults hom-sets or the weight machinery.
std::vector<Presheaf> enumerate_potential_subsets(const QCategory& X, const EnumCaps& caps);

/// One line: the independent enumeration equals the weight enumeration.
LawReport check_power_paths_agree(const QCategory& X, const EnumCaps& caps);

} // namespace qvs
