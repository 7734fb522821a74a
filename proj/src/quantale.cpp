#include "qvs/quantale.hpp"

#include <algorithm>
#include <numeric>

#include "qvs/parallel.hpp"

namespace qvs {

FiniteQuantale FiniteQuantale::from_tables(std::vector<std::string> names,
                                           std::vector<std::vector<bool>> leq,
                                           std::vector<std::vector<int>> mul,
                                           int unit,
                                           std::vector<int> involution) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw StructuralError("quantale carrier is empty");
  auto shape = [&](std::size_t rows, std::size_t want, const char* what) {
    if (rows != want)
      throw StructuralError(std::string(what) + " has wrong shape",
                            {{"expected", want}, {"got", rows}});
  };
  shape(leq.size(), static_cast<std::size_t>(n), "order table");
  shape(mul.size(), static_cast<std::size_t>(n), "multiplication table");
  shape(involution.size(), static_cast<std::size_t>(n), "involution table");
  if (unit < 0 || unit >= n)
    throw StructuralError("unit index out of range", {{"unit", unit}, {"size", n}});

  FiniteQuantale q;
  q.n_ = n;
  q.names_ = std::move(names);
  q.unit_ = unit;
  q.leq_.assign(static_cast<std::size_t>(n) * n, false);
  q.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    shape(leq[static_cast<std::size_t>(a)].size(), static_cast<std::size_t>(n), "order row");
    shape(mul[static_cast<std::size_t>(a)].size(), static_cast<std::size_t>(n), "multiplication row");
    for (int b = 0; b < n; ++b) {
      int m = mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (m < 0 || m >= n)
        throw StructuralError("multiplication entry out of range",
                              {{"row", a}, {"col", b}, {"value", m}});
      q.leq_[q.idx(a, b)] = leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      q.mul_[q.idx(a, b)] = m;
    }
    int i = involution[static_cast<std::size_t>(a)];
    if (i < 0 || i >= n)
      throw StructuralError("involution entry out of range", {{"at", a}, {"value", i}});
  }
  q.inv_ = std::move(involution);
  q.derive_lattice();
  return q;
}

void FiniteQuantale::derive_lattice() {
  const int n = n_;
  join_.assign(static_cast<std::size_t>(n) * n, -1);
  meet_.assign(static_cast<std::size_t>(n) * n, -1);
  lattice_ok_ = true;

  auto least_of = [&](const std::vector<int>& cands) -> int {
    for (int c : cands) {
      bool least = true;
      for (int d : cands)
        if (!leq(c, d)) { least = false; break; }
      if (least) return c;
    }
    return -1;
  };
  auto greatest_of = [&](const std::vector<int>& cands) -> int {
    for (int c : cands) {
      bool greatest = true;
      for (int d : cands)
        if (!leq(d, c)) { greatest = false; break; }
      if (greatest) return c;
    }
    return -1;
  };

  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  bottom_ = least_of(all);
  top_ = greatest_of(all);
  if (bottom_ < 0 || top_ < 0) lattice_ok_ = false;

  std::vector<int> ub;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ub.clear();
      for (int c = 0; c < n; ++c)
        if (leq(a, c) && leq(b, c)) ub.push_back(c);
      join_[idx(a, b)] = least_of(ub);
      ub.clear();
      for (int c = 0; c < n; ++c)
        if (leq(c, a) && leq(c, b)) ub.push_back(c);
      meet_[idx(a, b)] = greatest_of(ub);
      if (join_[idx(a, b)] < 0 || meet_[idx(a, b)] < 0) lattice_ok_ = false;
    }

  limp_.assign(static_cast<std::size_t>(n) * n, -1);
  rimp_.assign(static_cast<std::size_t>(n) * n, -1);
  if (!lattice_ok_) return;
  for (int r = 0; r < n; ++r)
    for (int b = 0; b < n; ++b) {
      int acc = bottom_;
      for (int p = 0; p < n; ++p)
        if (leq(mul(p, b), r)) acc = join(acc, p);
      limp_[idx(r, b)] = acc;
      acc = bottom_;
      for (int x = 0; x < n; ++x)
        if (leq(mul(b, x), r)) acc = join(acc, x);
      rimp_[idx(b, r)] = acc;
    }
}

int FiniteQuantale::join_all(const std::vector<int>& xs) const {
  if (!lattice_ok_) throw StructuralError("join undefined: order is not a lattice");
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FiniteQuantale::meet_all(const std::vector<int>& xs) const {
  if (!lattice_ok_) throw StructuralError("meet undefined: order is not a lattice");
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<int> FiniteQuantale::hermitian_elements() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (is_hermitian(a)) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------------------
// Builtins

FiniteQuantale FiniteQuantale::boolean2() {
  return from_tables({"0", "1"},
                     {{true, true}, {false, true}},
                     {{0, 0}, {0, 1}},
                     1, {0, 1});
}

namespace {

std::string chain_label(int i, int n) {
  // i/(n-1) as a reduced fraction
  if (i == 0) return "0";
  if (i == n - 1) return "1";
  int num = i, den = n - 1;
  int g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

FiniteQuantale make_chain(int n, const std::vector<std::vector<int>>& mul) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(chain_label(i, n));
    inv[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < n; ++j) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i <= j;
  }
  return FiniteQuantale::from_tables(std::move(names), std::move(leq), mul, n - 1, std::move(inv));
}

} // namespace

FiniteQuantale FiniteQuantale::chain_lukasiewicz(int n) {
  if (n < 2) throw StructuralError("chain needs at least 2 elements", {{"n", n}});
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::max(i + j - (n - 1), 0);
  return make_chain(n, mul);
}

FiniteQuantale FiniteQuantale::chain_goedel(int n) {
  if (n < 2) throw StructuralError("chain needs at least 2 elements", {{"n", n}});
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(i, j);
  return make_chain(n, mul);
}

FiniteQuantale FiniteQuantale::finite_frame(const std::vector<std::string>& points,
                                            const std::vector<std::vector<int>>& opens) {
  const int np = static_cast<int>(points.size());
  auto as_mask = [&](const std::vector<int>& open) {
    std::uint64_t m = 0;
    for (int p : open) {
      if (p < 0 || p >= np)
        throw StructuralError("open set refers to unknown point", {{"point", p}});
      m |= (1ull << p);
    }
    return m;
  };
  std::vector<std::uint64_t> masks;
  for (const auto& o : opens) masks.push_back(as_mask(o));
  std::sort(masks.begin(), masks.end());
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
    throw StructuralError("duplicate open set");
  auto find = [&](std::uint64_t m) {
    auto it = std::lower_bound(masks.begin(), masks.end(), m);
    return (it != masks.end() && *it == m) ? static_cast<int>(it - masks.begin()) : -1;
  };
  const std::uint64_t whole = np == 64 ? ~0ull : (1ull << np) - 1;
  if (find(0) < 0 || find(whole) < 0)
    throw StructuralError("topology must contain the empty set and the whole space");
  for (std::uint64_t a : masks)
    for (std::uint64_t b : masks)
      if (find(a | b) < 0 || find(a & b) < 0)
        throw StructuralError("topology not closed under union/intersection");

  const int n = static_cast<int>(masks.size());
  std::vector<std::string> names;
  for (std::uint64_t m : masks) {
    std::string s = "{";
    for (int p = 0; p < np; ++p)
      if (m & (1ull << p)) {
        if (s.size() > 1) s += ",";
        s += points[static_cast<std::size_t>(p)];
      }
    names.push_back(s + "}");
  }
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    inv[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < n; ++j) {
      leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (masks[static_cast<std::size_t>(i)] & ~masks[static_cast<std::size_t>(j)]) == 0;
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          find(masks[static_cast<std::size_t>(i)] & masks[static_cast<std::size_t>(j)]);
    }
  }
  return from_tables(std::move(names), std::move(leq), std::move(mul), find(whole), std::move(inv));
}

FiniteQuantale FiniteQuantale::powerset_of_monoid(const std::vector<std::string>& elems,
                                                  const std::vector<std::vector<int>>& table,
                                                  int unit, const std::vector<int>& anti_auto) {
  const int m = static_cast<int>(elems.size());
  if (m <= 0 || m > 16) throw StructuralError("monoid size out of range", {{"size", m}});
  if (table.size() != static_cast<std::size_t>(m) || anti_auto.size() != static_cast<std::size_t>(m))
    throw StructuralError("monoid table has wrong shape");
  if (unit < 0 || unit >= m) throw StructuralError("monoid unit out of range");
  auto at = [&](int a, int b) {
    int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (v < 0 || v >= m) throw StructuralError("monoid table entry out of range");
    return v;
  };
  // The product must be associative and unital, and anti_auto an involutive
  // anti-automorphism; without these the powerset would not be a quantale.
  for (int a = 0; a < m; ++a) {
    if (at(unit, a) != a || at(a, unit) != a)
      throw StructuralError("monoid unit law fails", {{"at", a}});
    int aa = anti_auto[static_cast<std::size_t>(a)];
    if (aa < 0 || aa >= m) throw StructuralError("anti-automorphism entry out of range");
    if (anti_auto[static_cast<std::size_t>(aa)] != a)
      throw StructuralError("anti-automorphism is not involutive", {{"at", a}});
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw StructuralError("monoid is not associative", {{"a", a}, {"b", b}, {"c", c}});
      if (anti_auto[static_cast<std::size_t>(at(a, b))] !=
          at(anti_auto[static_cast<std::size_t>(b)], anti_auto[static_cast<std::size_t>(a)]))
        throw StructuralError("anti-automorphism does not reverse products", {{"a", a}, {"b", b}});
    }
  }

  const int n = 1 << m;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int A = 0; A < n; ++A) {
    std::string s = "{";
    for (int x = 0; x < m; ++x)
      if (A & (1 << x)) {
        if (s.size() > 1) s += ",";
        s += elems[static_cast<std::size_t>(x)];
      }
    names.push_back(s + "}");
    int img = 0;
    for (int x = 0; x < m; ++x)
      if (A & (1 << x)) img |= 1 << anti_auto[static_cast<std::size_t>(x)];
    inv[static_cast<std::size_t>(A)] = img;
    for (int B = 0; B < n; ++B) {
      leq[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)] = (A & ~B) == 0;
      int prod = 0;
      for (int x = 0; x < m; ++x)
        if (A & (1 << x))
          for (int y = 0; y < m; ++y)
            if (B & (1 << y)) prod |= 1 << at(x, y);
      mul[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)] = prod;
    }
  }
  return from_tables(std::move(names), std::move(leq), std::move(mul), 1 << unit, std::move(inv));
}

// ---------------------------------------------------------------------------
// Validation

Reports validate_quantale(const FiniteQuantale& q) {
  Reports out;
  const int n = q.size();
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  const std::int64_t n3 = n2 * n;

  {
    LawReport r{.check = "order.partial_order", .method = "exhaustive", .cases = n + n2 + n3};
    for (int a = 0; a < n; ++a)
      if (!q.leq(a, a)) r.add_witness({{"law", "reflexivity"}, {"a", q.name(a)}});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && q.leq(a, b) && q.leq(b, a))
          r.add_witness({{"law", "antisymmetry"}, {"a", q.name(a)}, {"b", q.name(b)}});
    auto scan = par::scan_failures(n3, [&](std::int64_t i) {
      int a = static_cast<int>(i / n2), b = static_cast<int>((i / n) % n), c = static_cast<int>(i % n);
      return !(q.leq(a, b) && q.leq(b, c)) || q.leq(a, c);
    });
    for (auto i : scan.failures)
      r.add_witness({{"law", "transitivity"},
                     {"a", q.name(static_cast<int>(i / n2))},
                     {"b", q.name(static_cast<int>((i / n) % n))},
                     {"c", q.name(static_cast<int>(i % n))}});
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "order.complete_lattice", .method = "exhaustive", .cases = n2 + 2};
    if (q.bottom() < 0) r.add_witness({{"law", "bottom_exists"}});
    if (q.top() < 0) r.add_witness({{"law", "top_exists"}});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (q.join(a, b) < 0)
          r.add_witness({{"law", "binary_join_exists"}, {"a", q.name(a)}, {"b", q.name(b)}});
    out.push_back(std::move(r));
  }

  // The remaining laws presuppose joins; stop here if the order is broken.
  if (!q.lattice_ok() || !out[0].passed()) return out;

  {
    LawReport r{.check = "monoid.associativity", .method = "exhaustive", .cases = n3};
    auto scan = par::scan_failures(n3, [&](std::int64_t i) {
      int a = static_cast<int>(i / n2), b = static_cast<int>((i / n) % n), c = static_cast<int>(i % n);
      return q.mul(q.mul(a, b), c) == q.mul(a, q.mul(b, c));
    });
    for (auto i : scan.failures) {
      int a = static_cast<int>(i / n2), b = static_cast<int>((i / n) % n), c = static_cast<int>(i % n);
      r.add_witness({{"a", q.name(a)}, {"b", q.name(b)}, {"c", q.name(c)},
                     {"(a&b)&c", q.name(q.mul(q.mul(a, b), c))},
                     {"a&(b&c)", q.name(q.mul(a, q.mul(b, c)))}});
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "monoid.unit", .method = "exhaustive", .cases = 2 * n};
    for (int a = 0; a < n; ++a) {
      if (q.mul(q.unit(), a) != a)
        r.add_witness({{"law", "left_unit"}, {"a", q.name(a)}, {"k&a", q.name(q.mul(q.unit(), a))}});
      if (q.mul(a, q.unit()) != a)
        r.add_witness({{"law", "right_unit"}, {"a", q.name(a)}, {"a&k", q.name(q.mul(a, q.unit()))}});
    }
    out.push_back(std::move(r));
  }

  {
    // & must preserve all joins in each argument; for a finite lattice it is
    // enough to check binary joins and the bottom.
    LawReport r{.check = "monoid.join_preservation", .method = "exhaustive", .cases = 2 * n3 + 2 * n};
    for (int a = 0; a < n; ++a) {
      if (q.mul(a, q.bottom()) != q.bottom())
        r.add_witness({{"law", "a&bottom=bottom"}, {"a", q.name(a)},
                       {"got", q.name(q.mul(a, q.bottom()))}});
      if (q.mul(q.bottom(), a) != q.bottom())
        r.add_witness({{"law", "bottom&a=bottom"}, {"a", q.name(a)},
                       {"got", q.name(q.mul(q.bottom(), a))}});
    }
    auto scan = par::scan_failures(n3, [&](std::int64_t i) {
      int a = static_cast<int>(i / n2), b = static_cast<int>((i / n) % n), c = static_cast<int>(i % n);
      return q.mul(a, q.join(b, c)) == q.join(q.mul(a, b), q.mul(a, c)) &&
             q.mul(q.join(b, c), a) == q.join(q.mul(b, a), q.mul(c, a));
    });
    for (auto i : scan.failures) {
      int a = static_cast<int>(i / n2), b = static_cast<int>((i / n) % n), c = static_cast<int>(i % n);
      r.add_witness({{"a", q.name(a)}, {"b", q.name(b)}, {"c", q.name(c)}});
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.check = "involution.laws", .method = "exhaustive", .cases = 1 + n + 2 * n2};
    if (q.inv(q.unit()) != q.unit())
      r.add_witness({{"law", "unit_fixed"}, {"k°", q.name(q.inv(q.unit()))}});
    for (int a = 0; a < n; ++a)
      if (q.inv(q.inv(a)) != a)
        r.add_witness({{"law", "involutive"}, {"a", q.name(a)}, {"a°°", q.name(q.inv(q.inv(a)))}});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (q.inv(q.mul(a, b)) != q.mul(q.inv(b), q.inv(a)))
          r.add_witness({{"law", "antihomomorphism"}, {"a", q.name(a)}, {"b", q.name(b)},
                         {"(a&b)°", q.name(q.inv(q.mul(a, b)))},
                         {"b°&a°", q.name(q.mul(q.inv(b), q.inv(a)))}});
        // join preservation of the involution == order preservation here
        if (q.inv(q.join(a, b)) != q.join(q.inv(a), q.inv(b)))
          r.add_witness({{"law", "join_preservation"}, {"a", q.name(a)}, {"b", q.name(b)}});
      }
    out.push_back(std::move(r));
  }

  {
    // Residuation: p&b <= r iff p <= r/b, and b&x <= r iff x <= b\r.
    LawReport r{.check = "residuation.adjunction", .method = "exhaustive", .cases = 2 * n3};
    auto scan = par::scan_failures(n3, [&](std::int64_t i) {
      int p = static_cast<int>(i / n2), b = static_cast<int>((i / n) % n), rr = static_cast<int>(i % n);
      return (q.leq(q.mul(p, b), rr) == q.leq(p, q.left_imp(rr, b))) &&
             (q.leq(q.mul(b, p), rr) == q.leq(p, q.right_imp(b, rr)));
    });
    for (auto i : scan.failures) {
      int p = static_cast<int>(i / n2), b = static_cast<int>((i / n) % n), rr = static_cast<int>(i % n);
      r.add_witness({{"p", q.name(p)}, {"b", q.name(b)}, {"r", q.name(rr)},
                     {"r/b", q.name(q.left_imp(rr, b))}, {"b\\r", q.name(q.right_imp(b, rr))}});
    }
    out.push_back(std::move(r));
  }

  return out;
}

} // namespace qvs
