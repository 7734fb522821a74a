#include "qvs/cost.hpp"

namespace qvs {

std::string CostVal::str() const {
  if (inf) return "inf";
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

bool CostQuantale::leq(CostVal a, CostVal b) const {
  // reversed order: smaller cost is larger in the quantale
  if (a.inf) return true;
  if (b.inf) return false;
  return a.v >= b.v;
}

CostVal CostQuantale::mul(CostVal a, CostVal b) const {
  if (a.inf || b.inf) return CostVal::infinity();
  return {false, a.v + b.v};
}

CostVal CostQuantale::join(CostVal a, CostVal b) const {
  return leq(a, b) ? b : a;
}

CostVal CostQuantale::meet(CostVal a, CostVal b) const {
  return leq(a, b) ? a : b;
}

CostVal CostQuantale::left_imp(CostVal r, CostVal b) const {
  if (r.inf) return b.inf ? CostVal::of(0) : CostVal::infinity();
  if (b.inf) return CostVal::of(0);
  if (r.v <= b.v) return CostVal::of(0);
  return {false, r.v - b.v};
}

Reports validate_cost_grid(const std::vector<CostVal>& grid) {
  CostQuantale Q;
  Reports out;
  const auto n = static_cast<std::int64_t>(grid.size());

  LawReport res{.check = "residuation.adjunction",
                .method = "grid(" + std::to_string(n) + ")",
                .cases = 2 * n * n * n};
  LawReport mon{.check = "monoid.laws",
                .method = "grid(" + std::to_string(n) + ")",
                .cases = n * n * n + 2 * n};
  LawReport inv{.check = "involution.laws",
                .method = "grid(" + std::to_string(n) + ")",
                .cases = 2 * n * n};
  for (auto a : grid) {
    if (!Q.eq(Q.mul(Q.unit(), a), a) || !Q.eq(Q.mul(a, Q.unit()), a))
      mon.add_witness({{"law", "unit"}, {"a", a.str()}});
    for (auto b : grid) {
      if (!Q.eq(Q.inv(Q.mul(a, b)), Q.mul(Q.inv(b), Q.inv(a))))
        inv.add_witness({{"law", "antihomomorphism"}, {"a", a.str()}, {"b", b.str()}});
      if (Q.leq(a, b) != Q.leq(Q.inv(a), Q.inv(b)))
        inv.add_witness({{"law", "order_preservation"}, {"a", a.str()}, {"b", b.str()}});
      for (auto c : grid) {
        if (!Q.eq(Q.mul(Q.mul(a, b), c), Q.mul(a, Q.mul(b, c))))
          mon.add_witness({{"law", "associativity"}, {"a", a.str()}, {"b", b.str()}, {"c", c.str()}});
        // p&b <= r iff p <= r/b; b&p <= r iff p <= b\r
        if (Q.leq(Q.mul(a, b), c) != Q.leq(a, Q.left_imp(c, b)))
          res.add_witness({{"side", "left"}, {"p", a.str()}, {"b", b.str()}, {"r", c.str()},
                           {"r/b", Q.left_imp(c, b).str()}});
        if (Q.leq(Q.mul(b, a), c) != Q.leq(a, Q.right_imp(b, c)))
          res.add_witness({{"side", "right"}, {"p", a.str()}, {"b", b.str()}, {"r", c.str()},
                           {"b\\r", Q.right_imp(b, c).str()}});
      }
    }
  }
  out.push_back(std::move(res));
  out.push_back(std::move(mon));
  out.push_back(std::move(inv));
  return out;
}

} // namespace qvs
