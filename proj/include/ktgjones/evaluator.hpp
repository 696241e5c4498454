#pragma once

// Exact and tropical evaluation of the colored Jones polynomial of C(r,s,t,u).
//
// Exponents are in w = v^{1/2}. Individual summands of the state sum are in
// general not Laurent polynomials, so summands are returned as fractions and
// the sums are accumulated over a common denominator that is divided out once.

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "ktgjones/errors.hpp"
#include "ktgjones/exactring.hpp"
#include "ktgjones/ktgcalc.hpp"
#include "ktgjones/params.hpp"
#include "ktgjones/qblocks.hpp"

namespace ktg {

struct LatticePoint {
  long a = 0, b = 0, c = 0, d = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + "," +
         std::to_string(p.d) + ")";
}

/// 0 <= a,b,c,d <= n and |a-b| <= c <= a+b.
inline bool in_polytope(const LatticePoint& p, long n) {
  auto box = [n](long x) { return 0 <= x && x <= n; };
  return box(p.a) && box(p.b) && box(p.c) && box(p.d) && std::abs(p.a - p.b) <= p.c && p.c <= p.a + p.b;
}

/// Lattice points of nP, d outermost, then a, b, c.
inline std::vector<LatticePoint> lattice_points(long n) {
  std::vector<LatticePoint> out;
  for (long d = 0; d <= n; ++d)
    for (long a = 0; a <= n; ++a)
      for (long b = 0; b <= n; ++b)
        for (long c = std::abs(a - b); c <= std::min(a + b, n); ++c) out.push_back({a, b, c, d});
  return out;
}

/// num / den with den a nonzero Laurent polynomial.
struct LaurentFraction {
  LaurentPoly num;
  LaurentPoly den{1};

  bool is_zero() const { return num.is_zero(); }

  /// Throws DivisionNotExact unless den divides num.
  LaurentPoly to_poly() const { return lp_exact_div(num, den); }

  DegreeLead degree_lead() const {
    auto n = lp_degree_lead(num);
    auto d = lp_degree_lead(den);
    return {n.wexp - d.wexp, exact_div(n.lead, d.lead)};
  }
};

inline void require_real(const LaurentPoly& p, const std::string& what) {
  if (!p.is_real()) throw RealnessViolation(what);
}

/// (v-exponent, coefficient) pairs; every w-exponent must be even.
inline std::vector<std::pair<Exponent, GaussInt>> to_v_exponents(const LaurentPoly& p) {
  std::vector<std::pair<Exponent, GaussInt>> out;
  for (const auto& t : p.terms()) {
    if (t.exp % 2 != 0) throw Error("evaluator", "odd w-exponent " + std::to_string(t.exp) + " in a knot value");
    out.emplace_back(t.exp / 2, t.coeff);
  }
  return out;
}

/// f(n)^{-2Wr-2r-2s-2t+2u}.
inline LaurentPoly closed_prefactor(const KnotParams& k, long n) { return f_twist_pow(n, k.prefactor_exponent()); }

/// One summand of the closed formula, without the prefactor. The numerator is
/// assembled first and then divided by each denominator theta in turn; a theta
/// that does not divide exactly stays in the denominator. Zero outside nP.
inline LaurentFraction term_value(const LatticePoint& p, const KnotParams& k, long n) {
  if (!in_polytope(p, n)) return {};
  const long A = 2 * p.a, B = 2 * p.b, C = 2 * p.c, D = 2 * p.d;
  const LaurentPoly& d1 = delta6(A, B, C, n, n, n);
  const LaurentPoly& d2 = delta6(B, n, n, D, n, n);
  const LaurentPoly& th = theta3(A, B, C);
  if (d1.is_zero() || d2.is_zero() || th.is_zero()) return {};

  LaurentPoly num = d1 * d1;
  num *= d2;
  num *= th;
  num *= o_loop(A) * o_loop(B) * o_loop(C) * o_loop(D);
  num *= f_twist_pow(A, k.r) * f_twist_pow(B, k.s) * f_twist_pow(C, k.t) * f_twist_pow(D, -k.u);

  LaurentFraction out{std::move(num), LaurentPoly(1)};
  for (long x : {A, B, C, D}) {
    const LaurentPoly& den = theta3(x, n, n);
    if (auto q = lp_try_exact_div(out.num, den))
      out.num = std::move(*q);
    else
      out.den *= den;
  }
  return out;
}

namespace detail {

// O^{2x} [2n+1]! / theta(2x,n,n), an exact Laurent polynomial.
inline LaurentPoly scaled_edge_weight(long x, long n) {
  return o_loop(2 * x) * lp_exact_div(qfact(2 * n + 1), theta3(2 * x, n, n));
}

template <class Work>
void run_indexed(long count, unsigned threads, Work&& work) {
  if (threads <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  const unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (long i = next++; i < count; i = next++) work(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// J_{C(r,s,t,u),n+1} from the closed formula. The d-sum and the (a,c)-sums
/// factor through b; each b-slice is independent and the slices are folded in
/// increasing b, so the result does not depend on `threads`.
inline LaurentPoly evaluate_closed(const KnotParams& k, long n, unsigned threads = 1) {
  if (n < 0) throw Error("evaluator", "n must be nonnegative");
  std::vector<LaurentPoly> weight;
  for (long x = 0; x <= n; ++x) weight.push_back(detail::scaled_edge_weight(x, n));

  // warm the block caches for the slices
  for (long x = 0; x <= n; ++x) theta3(2 * x, n, n);

  std::vector<LaurentPoly> slice(static_cast<std::size_t>(n + 1));
  detail::run_indexed(n + 1, threads, [&](long b) {
    const long B = 2 * b;
    LaurentPoly y;
    for (long d = 0; d <= n; ++d) {
      const LaurentPoly& dl = delta6(B, n, n, 2 * d, n, n);
      if (dl.is_zero()) continue;
      y += dl * f_twist_pow(2 * d, -k.u) * weight[d];
    }
    LaurentPoly z;
    for (long a = 0; a <= n; ++a) {
      LaurentPoly inner;
      for (long c = std::abs(a - b); c <= std::min(a + b, n); ++c) {
        const LaurentPoly& dl = delta6(2 * a, B, 2 * c, n, n, n);
        const LaurentPoly& th = theta3(2 * a, B, 2 * c);
        if (dl.is_zero() || th.is_zero()) continue;
        LaurentPoly term = dl * dl;
        term *= th;
        term *= weight[c] * f_twist_pow(2 * c, k.t);
        inner += term;
      }
      if (!inner.is_zero()) z += inner * weight[a] * f_twist_pow(2 * a, k.r);
    }
    slice[b] = weight[b] * f_twist_pow(B, k.s) * y * z;
  });

  LaurentPoly total;
  for (const auto& s : slice) total += s;
  const LaurentPoly denom = lp_pow(qfact(2 * n + 1), 4);
  LaurentPoly j = closed_prefactor(k, n) * lp_exact_div(total, denom);
  require_real(j, k.to_string() + " at n=" + std::to_string(n));
  return j;
}

/// The same sum taken term by term over the given points, in the given order.
inline LaurentPoly evaluate_closed_termwise(const KnotParams& k, long n, const std::vector<LatticePoint>& points) {
  const LaurentPoly denom = lp_pow(qfact(2 * n + 1), 4);
  LaurentPoly total;
  for (const auto& p : points) {
    LaurentFraction t = term_value(p, k, n);
    if (t.is_zero()) continue;
    total += t.num * lp_exact_div(denom, t.den);
  }
  LaurentPoly j = closed_prefactor(k, n) * lp_exact_div(total, denom);
  require_real(j, k.to_string() + " at n=" + std::to_string(n));
  return j;
}

// ---------------------------------------------------------------------------
// Plans

namespace detail {

inline const LaurentPoly& block_value(BlockKind kind, const std::vector<long>& v, long exponent, LaurentPoly& scratch) {
  switch (kind) {
    case BlockKind::Twist: return scratch = f_twist_pow(v[0], exponent);
    case BlockKind::Loop: return scratch = o_loop(v[0]);
    case BlockKind::Theta: return theta3(v[0], v[1], v[2]);
    case BlockKind::Delta: return delta6(v[0], v[1], v[2], v[3], v[4], v[5]);
    case BlockKind::ThetaInverse: break;
  }
  throw Error("evaluator", "theta inverse has no polynomial value");
}

template <class Visit>
void for_each_assignment(const StateSumPlan& plan, long n, std::vector<long>& values, std::size_t i, Visit&& visit) {
  if (i == plan.sumvars.size()) {
    visit();
    return;
  }
  const auto& sv = plan.sumvars[i];
  const long l = sv.left.eval(n, values), r = sv.right.eval(n, values);
  if (l < 0 || r < 0) return;
  for (long z = std::abs(l - r); z <= l + r; z += 2) {
    values[i] = z;
    for_each_assignment(plan, n, values, i + 1, visit);
  }
}

}  // namespace detail

/// Nested sum over the plan's variables. Each theta^{-1}(z,x,y) is replaced
/// by [M+1]!/theta(z,x,y), exact, with M the largest (z+x+y)/2 it takes; the
/// product of the [M+1]! is divided out at the end.
inline LaurentPoly evaluate_plan(const StateSumPlan& plan, long n) {
  if (n < 0) throw Error("evaluator", "n must be nonnegative");
  std::vector<long> values(plan.sumvars.size(), 0);
  auto eval_args = [&](const PlanFactor& f) {
    std::vector<long> v;
    for (const auto& a : f.args) v.push_back(a.eval(n, values));
    return v;
  };

  std::map<std::size_t, long> max_half;
  detail::for_each_assignment(plan, n, values, 0, [&] {
    for (std::size_t i = 0; i < plan.factors.size(); ++i) {
      if (plan.factors[i].kind != BlockKind::ThetaInverse) continue;
      auto v = eval_args(plan.factors[i]);
      long h = (v[0] + v[1] + v[2]) / 2;
      auto [it, fresh] = max_half.try_emplace(i, h);
      if (!fresh) it->second = std::max(it->second, h);
    }
  });

  LaurentPoly total;
  LaurentPoly scratch;
  detail::for_each_assignment(plan, n, values, 0, [&] {
    LaurentPoly term(1);
    for (std::size_t i = 0; i < plan.factors.size(); ++i) {
      const auto& f = plan.factors[i];
      auto v = eval_args(f);
      if (f.kind == BlockKind::ThetaInverse) {
        const LaurentPoly& th = theta3(v[0], v[1], v[2]);
        if (th.is_zero()) throw InadmissiblePoint("theta(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                                                  std::to_string(v[2]) + ") in a denominator");
        term *= lp_exact_div(qfact(max_half.at(i) + 1), th);
      } else {
        const LaurentPoly& b = detail::block_value(f.kind, v, f.exponent, scratch);
        if (b.is_zero()) return;
        term *= b;
      }
    }
    total += term;
  });

  LaurentPoly denom(1);
  for (const auto& [i, m] : max_half) denom *= qfact(m + 1);
  LaurentPoly j = lp_exact_div(total, denom);
  for (const auto& f : plan.prefactor) j *= detail::block_value(f.kind, eval_args(f), f.exponent, scratch);
  require_real(j, "plan value at n=" + std::to_string(n));
  return j;
}

// ---------------------------------------------------------------------------
// Tropical evaluation

inline TropTerm closed_prefactor_trop(const KnotParams& k, long n) { return trop_f(n, k.prefactor_exponent()); }

/// Top w-degree and leading coefficient of term_value(p,k,n), from the
/// leading-term formulas of the blocks alone.
inline TropTerm trop_term(const LatticePoint& p, const KnotParams& k, long n) {
  if (!in_polytope(p, n)) throw InadmissiblePoint(to_string(p) + " at n=" + std::to_string(n));
  const long A = 2 * p.a, B = 2 * p.b, C = 2 * p.c, D = 2 * p.d;
  TropTerm t = trop_delta(A, B, C, n, n, n).pow(2);
  t *= trop_delta(B, n, n, D, n, n);
  t *= trop_theta(A, B, C);
  for (long x : {A, B, C, D}) t *= trop_o(x);
  t *= trop_f(A, k.r) * trop_f(B, k.s) * trop_f(C, k.t) * trop_f(D, -k.u);
  for (long x : {A, B, C, D}) t /= trop_theta(x, n, n);
  return t;
}

struct DegreeLandscape {
  KnotParams knot;
  long n = 0;
  std::map<LatticePoint, TropTerm> terms;  // degrees include the prefactor
  Exponent max_wdeg = 0;
  std::vector<LatticePoint> maximizers;
  GaussInt maximizer_lead_sum{0};
};

inline DegreeLandscape degree_landscape(const KnotParams& k, long n) {
  if (n < 0) throw Error("evaluator", "n must be nonnegative");
  DegreeLandscape out;
  out.knot = k;
  out.n = n;
  const TropTerm pre = closed_prefactor_trop(k, n);
  bool first = true;
  for (const auto& p : lattice_points(n)) {
    TropTerm t = trop_term(p, k, n) * pre;
    out.terms.emplace(p, t);
    if (first || t.wdeg > out.max_wdeg) {
      out.max_wdeg = t.wdeg;
      first = false;
    }
  }
  for (const auto& [p, t] : out.terms) {
    if (t.wdeg != out.max_wdeg) continue;
    out.maximizers.push_back(p);
    out.maximizer_lead_sum += t.lead;
  }
  return out;
}

}  // namespace ktg
