#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "qvs/report.hpp"

namespace qvs {

/// One value of the extended-cost quantale on [0, oo]: exact nonnegative
/// rationals plus infinity, multiplication = addition, unit = 0. The quantale
/// order is REVERSED numeric order (0 is the top and unit, oo the bottom), so
/// joins are numeric minima and the residual is truncated subtraction.
struct CostVal {
  bool inf = false;
  boost::rational<long long> v{0};

  static CostVal infinity() { return {true, 0}; }
  static CostVal of(long long num, long long den = 1) { return {false, {num, den}}; }

  bool operator==(const CostVal& o) const {
    return inf == o.inf && (inf || v == o.v);
  }
  std::string str() const;
};

/// The operation signatures of FiniteQuantale at value level. No finite
/// carrier: any operation that needs "all elements" must reject this backend
/// with a capability error before reaching it.
struct CostQuantale {
  using value = CostVal;

  bool leq(CostVal a, CostVal b) const; // quantale order: numerically a >= b
  CostVal mul(CostVal a, CostVal b) const;
  CostVal join(CostVal a, CostVal b) const; // numeric min
  CostVal meet(CostVal a, CostVal b) const; // numeric max
  CostVal unit() const { return CostVal::of(0); }
  CostVal top() const { return CostVal::of(0); }
  CostVal bottom() const { return CostVal::infinity(); }
  /// Truncated subtraction r - b (clamped at 0), with oo - oo defined as 0.
  CostVal left_imp(CostVal r, CostVal b) const;
  CostVal right_imp(CostVal a, CostVal r) const { return left_imp(r, a); }
  CostVal inv(CostVal a) const { return a; }
  bool eq(CostVal a, CostVal b) const { return a == b; }
  bool is_hermitian(CostVal a) const { return eq(inv(a), a); }
  std::string name(CostVal a) const { return a.str(); }
};

/// Spot-checks the residuation adjunction and the involutive-quantale laws on
/// a finite grid of values (the backend has no carrier to sweep).
Reports validate_cost_grid(const std::vector<CostVal>& grid);

} // namespace qvs
