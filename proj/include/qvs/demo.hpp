#pragma once

#include <ostream>

#include "qvs/monad.hpp"

namespace qvs {

/// Walkthrough on a crisp n-point set over the two-element base: prints
/// every candidate subset, then runs the full monad law suite (exhaustive
/// for n <= 2, fixed-seed sampling of the associativity layer above that).
Reports demo_crisp(int n, std::ostream& out);

/// The interval valued set over the extended-cost base:
/// alpha([a,b],[c,d]) = max(b,d) - min(a,c) on a rational sample, checked
/// against the symmetric-set axioms in exact arithmetic, plus one accepted
/// and one rejected subset candidate.
Reports demo_partial_metric(std::ostream& out);

} // namespace qvs
