#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qvs/report.hpp"

namespace qvs {

/// A finite involutive quantale: a complete lattice with a join-preserving
/// monoid multiplication and an involution fixing the unit. Elements are
/// indices into a canonical carrier ordering; all structure is table-driven.
///
/// Construction only shape-checks its inputs (structural errors); the axioms
/// themselves are checked by validate_quantale so that broken tables can be
/// loaded deliberately and reported with witnesses.
class FiniteQuantale {
public:
  static FiniteQuantale from_tables(std::vector<std::string> names,
                                    std::vector<std::vector<bool>> leq,
                                    std::vector<std::vector<int>> mul,
                                    int unit,
                                    std::vector<int> involution);

  // Builtins. All use the identity involution; non-identity involutions are
  // expressible through from_tables / the file schema.
  static FiniteQuantale boolean2();
  static FiniteQuantale chain_lukasiewicz(int n);
  static FiniteQuantale chain_goedel(int n);
  static FiniteQuantale finite_frame(const std::vector<std::string>& points,
                                     const std::vector<std::vector<int>>& opens);
  static FiniteQuantale powerset_of_monoid(const std::vector<std::string>& elems,
                                           const std::vector<std::vector<int>>& table,
                                           int unit, const std::vector<int>& anti_auto);

  int size() const { return n_; }
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(int a, int b) const { return leq_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int unit() const { return unit_; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

  /// Binary join/meet. -1 when the bound does not exist (invalid lattice);
  /// lattice_ok() tells whether all of these are defined.
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  bool lattice_ok() const { return lattice_ok_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int join_all(const std::vector<int>& xs) const; // empty -> bottom
  int meet_all(const std::vector<int>& xs) const; // empty -> top

  /// Residuals: left_imp(r, b) is the largest p with p & b <= r,
  /// right_imp(a, r) the largest x with a & x <= r. Precomputed tables.
  int left_imp(int r, int b) const { return limp_[idx(r, b)]; }
  int right_imp(int a, int r) const { return rimp_[idx(a, r)]; }

  bool is_hermitian(int a) const { return inv(a) == a; }
  std::vector<int> hermitian_elements() const;

  bool eq(int a, int b) const { return a == b; }

private:
  FiniteQuantale() = default;
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }
  void derive_lattice();

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<int> mul_;
  int unit_ = 0;
  std::vector<int> inv_;

  std::vector<int> join_, meet_, limp_, rimp_;
  int bottom_ = -1, top_ = -1;
  bool lattice_ok_ = false;
};

/// Checks every quantale axiom exhaustively: partial order, completeness
/// (bottom, top, binary joins), associativity, unit laws, distribution of &
/// over joins and bottom in both arguments, involution laws, and the
/// residuation adjunction for the derived implication tables.
Reports validate_quantale(const FiniteQuantale& q);

} // namespace qvs
