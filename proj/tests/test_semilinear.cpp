#include <doctest.h>

#include <random>

#include "grouppack/semilinear.hpp"

using namespace gp;

namespace {

bool brute_fits(const IntMat& periods, std::size_t i, IntVec rem) {
  bool zero = true;
  for (const BigInt& x : rem)
    if (x != 0) zero = false;
  if (zero) return true;
  if (i == periods.size()) return false;
  const IntVec& p = periods[i];
  bool pzero = true;
  for (const BigInt& x : p)
    if (x != 0) pzero = false;
  if (pzero) return brute_fits(periods, i + 1, rem);
  IntVec cur = rem;
  for (;;) {
    if (brute_fits(periods, i + 1, cur)) return true;
    bool ok = true;
    for (std::size_t j = 0; j < p.size(); j++) {
      cur[j] -= p[j];
      if (cur[j] < 0) ok = false;
    }
    if (!ok) return false;
  }
}

bool brute_member(const SemilinearSet& s, const IntVec& v) {
  for (const LinearSet& c : s.components) {
    IntVec rem(v.size());
    bool ok = true;
    for (std::size_t j = 0; j < v.size(); j++) {
      rem[j] = v[j] - c.base[j];
      if (rem[j] < 0) ok = false;
    }
    if (ok && brute_fits(c.periods, 0, rem)) return true;
  }
  return false;
}

template <typename F>
void for_box(int k, long bound, F&& f) {
  IntVec v(static_cast<std::size_t>(k), BigInt(0));
  for (;;) {
    f(v);
    int i = 0;
    while (i < k && v[static_cast<std::size_t>(i)] == bound) {
      v[static_cast<std::size_t>(i)] = 0;
      i++;
    }
    if (i == k) return;
    v[static_cast<std::size_t>(i)] += 1;
  }
}

LinearSet random_linear(std::mt19937& rng, int k, int max_periods,
                        long max_entry) {
  std::uniform_int_distribution<long> e(0, max_entry);
  std::uniform_int_distribution<int> np(0, max_periods);
  LinearSet c;
  for (int j = 0; j < k; j++) c.base.push_back(BigInt(e(rng)));
  int n = np(rng);
  for (int i = 0; i < n; i++) {
    IntVec p;
    for (int j = 0; j < k; j++) p.push_back(BigInt(e(rng)));
    c.periods.push_back(std::move(p));
  }
  return c;
}

SemilinearSet random_semilinear(std::mt19937& rng, int k, int max_comps,
                                int max_periods, long max_entry) {
  std::uniform_int_distribution<int> nc(0, max_comps);
  SemilinearSet s;
  s.k = k;
  int n = nc(rng);
  for (int i = 0; i < n; i++)
    s.components.push_back(random_linear(rng, k, max_periods, max_entry));
  return s;
}

SemilinearSet evens() {
  SemilinearSet s;
  s.k = 1;
  s.components.push_back({{BigInt(0)}, {{BigInt(2)}}});
  return s;
}

}  // namespace

TEST_CASE("semilinear json and validation") {
  SemilinearSet s;
  s.k = 2;
  s.components.push_back({{BigInt(1), BigInt(0)}, {{BigInt(2), BigInt(3)}}});
  s.components.push_back({{BigInt(0), BigInt(0)}, {}});
  SemilinearSet back = semilinear_from_json(semilinear_to_json(s));
  CHECK(back.k == 2);
  REQUIRE(back.components.size() == 2);
  CHECK(back.components[0].base == s.components[0].base);
  CHECK(back.components[0].periods == s.components[0].periods);

  CHECK_THROWS_AS((void)semilinear_from_json(Json{{"k", 1}}), Error);
  Json bad = semilinear_to_json(s);
  bad["components"][0]["base"][0] = -1;
  CHECK_THROWS_AS((void)semilinear_from_json(bad), Error);
  Json short_period = semilinear_to_json(s);
  short_period["components"][0]["periods"][0] = Json::array({1});
  CHECK_THROWS_AS((void)semilinear_from_json(short_period), Error);
}

TEST_CASE("membership matches direct enumeration") {
  std::mt19937 rng(101);
  for (int k = 1; k <= 3; k++) {
    long bound = k == 1 ? 12 : (k == 2 ? 8 : 5);
    for (int trial = 0; trial < 12; trial++) {
      SemilinearSet s = random_semilinear(rng, k, 3, 3, 3);
      for_box(k, bound, [&](const IntVec& v) {
        CHECK(semilinear_member(s, v) == brute_member(s, v));
      });
    }
  }
}

TEST_CASE("union and intersection agree with pointwise logic") {
  std::mt19937 rng(102);
  for (int k = 1; k <= 2; k++) {
    long bound = k == 1 ? 9 : 6;
    for (int trial = 0; trial < 10; trial++) {
      SemilinearSet a = random_semilinear(rng, k, 2, 2, 3);
      SemilinearSet b = random_semilinear(rng, k, 2, 2, 3);
      SemilinearSet u = semilinear_union(a, b);
      SemilinearSet i = semilinear_intersect(a, b);
      for_box(k, bound, [&](const IntVec& v) {
        bool ma = brute_member(a, v), mb = brute_member(b, v);
        CHECK(brute_member(u, v) == (ma || mb));
        CHECK(brute_member(i, v) == (ma && mb));
      });
    }
  }
}

TEST_CASE("intersection of arithmetic progressions") {
  SemilinearSet triples;
  triples.k = 1;
  triples.components.push_back({{BigInt(0)}, {{BigInt(3)}}});
  SemilinearSet i = semilinear_intersect(evens(), triples);
  for (long v = 0; v <= 24; v++)
    CHECK(semilinear_member(i, {BigInt(v)}) == (v % 6 == 0));
}

TEST_CASE("minkowski sums") {
  SemilinearSet odds;
  odds.k = 1;
  odds.components.push_back({{BigInt(1)}, {{BigInt(2)}}});
  SemilinearSet triples;
  triples.k = 1;
  triples.components.push_back({{BigInt(0)}, {{BigInt(3)}}});
  SemilinearSet sum = semilinear_sum(odds, triples);
  CHECK(semilinear_member(sum, {BigInt(1)}));
  CHECK(!semilinear_member(sum, {BigInt(2)}));
  CHECK(semilinear_member(sum, {BigInt(3)}));
  CHECK(semilinear_member(sum, {BigInt(4)}));
  CHECK(semilinear_member(sum, {BigInt(8)}));

  std::mt19937 rng(103);
  for (int trial = 0; trial < 12; trial++) {
    int k = 1 + trial % 2;
    long bound = k == 1 ? 9 : 6;
    SemilinearSet a = random_semilinear(rng, k, 2, 2, 2);
    SemilinearSet b = random_semilinear(rng, k, 2, 2, 2);
    SemilinearSet sm = semilinear_sum(a, b);
    for_box(k, bound, [&](const IntVec& v) {
      bool expect = false;
      for_box(k, bound, [&](const IntVec& x) {
        if (expect) return;
        IntVec y(v.size());
        bool ok = true;
        for (std::size_t j = 0; j < v.size(); j++) {
          y[j] = v[j] - x[j];
          if (y[j] < 0) ok = false;
        }
        if (ok && brute_member(a, x) && brute_member(b, y)) expect = true;
      });
      CHECK(brute_member(sm, v) == expect);
    });
  }
}

TEST_CASE("iterated sums cover the star") {
  SemilinearSet two = semilinear_singleton({BigInt(2)});
  SemilinearSet star2 = semilinear_star(two);
  for (long v = 0; v <= 9; v++)
    CHECK(semilinear_member(star2, {BigInt(v)}) == (v % 2 == 0));

  SemilinearSet twothree =
      semilinear_union(two, semilinear_singleton({BigInt(3)}));
  SemilinearSet star23 = semilinear_star(twothree);
  for (long v = 0; v <= 9; v++)
    CHECK(semilinear_member(star23, {BigInt(v)}) == (v != 1));

  CHECK(semilinear_universal(semilinear_star(semilinear_singleton({BigInt(1)}))));

  SemilinearSet none = semilinear_star(semilinear_empty(2));
  CHECK(semilinear_member(none, {BigInt(0), BigInt(0)}));
  CHECK(!semilinear_member(none, {BigInt(1), BigInt(0)}));

  std::mt19937 rng(104);
  for (int trial = 0; trial < 8; trial++) {
    int k = 1 + trial % 2;
    long bound = k == 1 ? 8 : 5;
    SemilinearSet s = random_semilinear(rng, k, 2, 1, 2);
    SemilinearSet st = semilinear_star(s);
    // reachable[v]: v is a finite sum of elements of s, computed bottom up
    std::vector<IntVec> pts;
    for_box(k, bound, [&](const IntVec& v) { pts.push_back(v); });
    std::vector<bool> reach(pts.size(), false);
    auto index_of = [&](const IntVec& v) -> long {
      long idx = 0, mult = 1;
      for (const BigInt& x : v) {
        idx += static_cast<long>(x) * mult;
        mult *= bound + 1;
      }
      return idx;
    };
    for (std::size_t pi = 0; pi < pts.size(); pi++) {
      const IntVec& v = pts[pi];
      bool zero = true;
      for (const BigInt& x : v)
        if (x != 0) zero = false;
      if (zero) {
        reach[pi] = true;
        continue;
      }
      bool got = false;
      for_box(k, bound, [&](const IntVec& m) {
        if (got) return;
        bool mzero = true, fits = true;
        IntVec rest(v.size());
        for (std::size_t j = 0; j < v.size(); j++) {
          if (m[j] != 0) mzero = false;
          rest[j] = v[j] - m[j];
          if (rest[j] < 0) fits = false;
        }
        if (mzero || !fits) return;
        if (brute_member(s, m) && reach[static_cast<std::size_t>(index_of(rest))])
          got = true;
      });
      reach[pi] = got;
    }
    for (std::size_t pi = 0; pi < pts.size(); pi++)
      CHECK(brute_member(st, pts[pi]) == reach[pi]);
  }
}

TEST_CASE("complement flips membership") {
  SemilinearSet codd = semilinear_complement(evens());
  for (long v = 0; v <= 15; v++)
    CHECK(semilinear_member(codd, {BigInt(v)}) == (v % 2 == 1));

  CHECK(semilinear_universal(semilinear_full(1)));
  CHECK(semilinear_complement(semilinear_full(2)).components.empty());
  CHECK(semilinear_universal(semilinear_complement(semilinear_empty(3))));

  SemilinearSet diag;
  diag.k = 2;
  diag.components.push_back({{BigInt(0), BigInt(0)}, {{BigInt(1), BigInt(1)}}});
  SemilinearSet cdiag = semilinear_complement(diag);
  CHECK(!semilinear_member(cdiag, {BigInt(0), BigInt(0)}));
  CHECK(!semilinear_member(cdiag, {BigInt(3), BigInt(3)}));
  CHECK(semilinear_member(cdiag, {BigInt(1), BigInt(0)}));
  CHECK(semilinear_member(cdiag, {BigInt(0), BigInt(1)}));
  CHECK(semilinear_member(cdiag, {BigInt(2), BigInt(1)}));

  SemilinearSet point = semilinear_singleton({BigInt(1), BigInt(2)});
  SemilinearSet cpoint = semilinear_complement(point);
  for_box(2, 4, [&](const IntVec& v) {
    bool is_point = v[0] == 1 && v[1] == 2;
    CHECK(semilinear_member(cpoint, v) == !is_point);
  });

  std::mt19937 rng(105);
  for (int trial = 0; trial < 12; trial++) {
    SemilinearSet s = random_semilinear(rng, 1, 2, 2, 3);
    SemilinearSet c = semilinear_complement(s);
    for (long v = 0; v <= 12; v++)
      CHECK(brute_member(c, {BigInt(v)}) == !brute_member(s, {BigInt(v)}));
    CHECK(semilinear_intersect(s, c).components.empty());
  }
  for (int trial = 0; trial < 8; trial++) {
    SemilinearSet s = random_semilinear(rng, 2, 2, 2, 2);
    SemilinearSet c = semilinear_complement(s);
    for_box(2, 6, [&](const IntVec& v) {
      CHECK(brute_member(c, v) == !brute_member(s, v));
    });
    CHECK(semilinear_intersect(s, c).components.empty());
  }
}

TEST_CASE("universality and outside witnesses") {
  SemilinearSet odds;
  odds.k = 1;
  odds.components.push_back({{BigInt(1)}, {{BigInt(2)}}});
  CHECK(semilinear_universal(semilinear_union(evens(), odds)));
  CHECK(!semilinear_universal(evens()));

  auto w = semilinear_witness_outside(evens());
  REQUIRE(w.has_value());
  CHECK(!brute_member(evens(), *w));
  CHECK((*w)[0] % 2 == 1);
  CHECK(!semilinear_witness_outside(semilinear_full(2)).has_value());

  std::mt19937 rng(106);
  for (int trial = 0; trial < 6; trial++) {
    SemilinearSet s = random_semilinear(rng, 1, 2, 1, 2);
    SemilinearSet c = semilinear_complement(s);
    CHECK(semilinear_universal(semilinear_union(s, c)));
  }
}

TEST_CASE("dependent period splitting") {
  LinearSet mixed;
  mixed.base = {BigInt(0)};
  mixed.periods = {{BigInt(2)}, {BigInt(3)}};
  CHECK(!periods_independent(mixed, 1));
  auto parts = decompose_independent_periods(mixed, 1);
  CHECK(parts.size() >= 2);
  for (const LinearSet& p : parts) CHECK(periods_independent(p, 1));
  SemilinearSet whole;
  whole.k = 1;
  whole.components.push_back(mixed);
  SemilinearSet split;
  split.k = 1;
  split.components = parts;
  for (long v = 0; v <= 15; v++)
    CHECK(brute_member(whole, {BigInt(v)}) == brute_member(split, {BigInt(v)}));

  LinearSet plane;
  plane.base = {BigInt(1), BigInt(0)};
  plane.periods = {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)},
                   {BigInt(1), BigInt(1)}};
  CHECK(!periods_independent(plane, 2));
  auto pparts = decompose_independent_periods(plane, 2);
  for (const LinearSet& p : pparts) CHECK(periods_independent(p, 2));
  SemilinearSet pwhole;
  pwhole.k = 2;
  pwhole.components.push_back(plane);
  SemilinearSet psplit;
  psplit.k = 2;
  psplit.components = pparts;
  for_box(2, 5, [&](const IntVec& v) {
    CHECK(brute_member(pwhole, v) == brute_member(psplit, v));
  });

  LinearSet messy;
  messy.base = {BigInt(0)};
  messy.periods = {{BigInt(0)}, {BigInt(2)}, {BigInt(2)}};
  auto mparts = decompose_independent_periods(messy, 1);
  REQUIRE(mparts.size() == 1);
  CHECK(mparts[0].periods == IntMat{{BigInt(2)}});

  LinearSet indep;
  indep.base = {BigInt(1), BigInt(2)};
  indep.periods = {{BigInt(1), BigInt(0)}};
  CHECK(periods_independent(indep, 2));
  auto iparts = decompose_independent_periods(indep, 2);
  REQUIRE(iparts.size() == 1);
  CHECK(iparts[0].base == indep.base);
}

TEST_CASE("pruning keeps the set") {
  SemilinearSet s;
  s.k = 1;
  s.components.push_back({{BigInt(0)}, {{BigInt(1)}}});
  s.components.push_back({{BigInt(3)}, {{BigInt(2)}}});
  SemilinearSet pruned = semilinear_simplify(s);
  CHECK(pruned.components.size() == 1);

  SemilinearSet dup;
  dup.k = 1;
  dup.components.push_back({{BigInt(2)}, {{BigInt(5)}}});
  dup.components.push_back({{BigInt(2)}, {{BigInt(5)}, {BigInt(0)}}});
  CHECK(semilinear_simplify(dup).components.size() == 1);

  std::mt19937 rng(107);
  for (int trial = 0; trial < 15; trial++) {
    int k = 1 + trial % 2;
    long bound = k == 1 ? 10 : 6;
    SemilinearSet a = random_semilinear(rng, k, 3, 2, 3);
    SemilinearSet b = semilinear_simplify(a);
    CHECK(b.components.size() <= a.components.size());
    for_box(k, bound, [&](const IntVec& v) {
      CHECK(brute_member(a, v) == brute_member(b, v));
    });
  }
}

TEST_CASE("degenerate dimension") {
  SemilinearSet e0 = semilinear_empty(0);
  SemilinearSet s0 = semilinear_singleton(IntVec{});
  CHECK(!semilinear_member(e0, {}));
  CHECK(semilinear_member(s0, {}));
  CHECK(semilinear_member(semilinear_complement(e0), {}));
  CHECK(!semilinear_member(semilinear_complement(s0), {}));
  CHECK(semilinear_universal(s0));
  CHECK(!semilinear_universal(e0));
  auto w = semilinear_witness_outside(e0);
  REQUIRE(w.has_value());
  CHECK(w->empty());
  CHECK(semilinear_member(semilinear_star(e0), {}));
  CHECK(semilinear_member(semilinear_sum(s0, s0), {}));
  CHECK(semilinear_member(semilinear_intersect(s0, s0), {}));
  CHECK(semilinear_intersect(s0, e0).components.empty());
}
