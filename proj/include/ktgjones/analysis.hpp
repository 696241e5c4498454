#pragma once

// Leading-coefficient sequences, tail probes and degree laws.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktgjones/evaluator.hpp"

namespace ktg {

/// Spacing of the exponents of J_{C(r,s,t,u),n+1} in w.
inline constexpr Exponent kCoeffStride = 8;

struct CoeffRow {
  long n = 0;
  Exponent wdeg = 0;
  std::vector<mpz_class> coeffs;  // coeffs[i] is the coefficient of w^{wdeg - 8i}
};

struct CoeffTable {
  KnotParams knot;
  std::size_t width = 0;
  std::vector<CoeffRow> rows;  // increasing n
};

inline CoeffRow coeff_row(const LaurentPoly& j, long n, std::size_t width) {
  const auto dl = lp_degree_lead(j);
  CoeffRow row{n, dl.wexp, {}};
  for (std::size_t i = 0; i < width; ++i) row.coeffs.push_back(j.coeff(dl.wexp - kCoeffStride * static_cast<Exponent>(i)).re);
  return row;
}

/// Rows n = 1..nmax.
inline CoeffTable coeff_table(const KnotParams& k, long nmax, std::size_t width, unsigned threads = 1) {
  if (nmax < 1) throw Error("analysis", "nmax must be at least 1");
  if (width < 1) throw Error("analysis", "table width must be at least 1");
  CoeffTable t{k, width, {}};
  for (long n = 1; n <= nmax; ++n) t.rows.push_back(coeff_row(evaluate_closed(k, n, threads), n, width));
  return t;
}

/// (n, leading coefficient of J_{K,n+1}) for n = 1..nmax.
inline std::vector<std::pair<long, mpz_class>> lead_sequence(const CoeffTable& t) {
  std::vector<std::pair<long, mpz_class>> out;
  for (const auto& r : t.rows) out.emplace_back(r.n, r.coeffs.at(0));
  return out;
}

inline std::vector<std::pair<long, mpz_class>> lead_sequence(const KnotParams& k, long nmax, unsigned threads = 1) {
  return lead_sequence(coeff_table(k, nmax, 1, threads));
}

/// Number of leading top-aligned coefficients on which two rows agree.
inline std::size_t agreement(const CoeffRow& x, const CoeffRow& y) {
  std::size_t i = 0;
  while (i < x.coeffs.size() && i < y.coeffs.size() && x.coeffs[i] == y.coeffs[i]) ++i;
  return i;
}

enum class VerdictKind { Manx, Stable, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::size_t stable_depth = 0;  // k in STABLE-k

  std::string to_string() const {
    switch (kind) {
      case VerdictKind::Manx: return "MANX";
      case VerdictKind::Stable: return "STABLE-" + std::to_string(stable_depth);
      case VerdictKind::Inconclusive: break;
    }
    return "INCONCLUSIVE";
  }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// MANX: |lead| never decreases along the window and grows by at least 2.
/// STABLE-k: every consecutive pair of rows agrees on its top k >= 1 coefficients.
/// Anything else is INCONCLUSIVE. Verdicts speak for the window only.
inline Verdict classify(const CoeffTable& t) {
  if (t.rows.size() < 2) return {};
  bool monotone = true;
  for (std::size_t i = 1; i < t.rows.size(); ++i)
    if (abs(t.rows[i].coeffs.at(0)) < abs(t.rows[i - 1].coeffs.at(0))) monotone = false;
  const mpz_class growth = abs(t.rows.back().coeffs.at(0)) - abs(t.rows.front().coeffs.at(0));
  if (monotone && growth >= 2) return {VerdictKind::Manx, 0};

  std::size_t depth = t.width;
  for (std::size_t i = 1; i < t.rows.size(); ++i) depth = std::min(depth, agreement(t.rows[i - 1], t.rows[i]));
  if (depth >= 1) return {VerdictKind::Stable, depth};
  return {};
}

struct ManxReport {
  Verdict verdict;
  CoeffTable table;
};

inline ManxReport manx_check(const KnotParams& k, long nmax, std::size_t width = 3, unsigned threads = 1) {
  if (nmax < 3) throw Error("analysis", "nmax must be at least 3");
  CoeffTable t = coeff_table(k, nmax, width, threads);
  return {classify(t), std::move(t)};
}

struct TailReport {
  CoeffTable table;
  std::size_t depth = 0;
  std::vector<std::pair<long, std::size_t>> agreements;  // (n, agreement of rows n and n+1)
  bool tail_on_window = false;
};

inline TailReport tail_probe(const KnotParams& k, std::size_t depth, long nmax, unsigned threads = 1) {
  if (depth < 1) throw Error("analysis", "depth must be at least 1");
  if (nmax < 2) throw Error("analysis", "nmax must be at least 2");
  TailReport rep{coeff_table(k, nmax, depth, threads), depth, {}, true};
  for (std::size_t i = 1; i < rep.table.rows.size(); ++i) {
    const std::size_t a = agreement(rep.table.rows[i - 1], rep.table.rows[i]);
    rep.agreements.emplace_back(rep.table.rows[i - 1].n, a);
    if (a < depth) rep.tail_on_window = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Degree laws on the face b = a + c, d = 0 (v-degrees, prefactor included)

/// Specialization to (r,s,t) = (5,-3,5): -4(a-c)^2 + 2n(18 + 10n - (2+n)u).
inline long delta_closed(long a, long c, long n, long u) { return -4 * (a - c) * (a - c) + 2 * n * (18 + 10 * n - (2 + n) * u); }

/// The quadratic proposed for general (r,s,t):
/// b(r + 2c(1+r) + s - 1) - 2(b^2(1+r+s) + c(r+t-2) + c^2(r+t)) - 2n(-2r-u) - 2n^2(-r-u).
/// It disagrees with the summand degrees; face_degree is the measured law.
inline long delta_general_face(const KnotParams& k, long a, long c, long n) {
  const long r = k.r, s = k.s, t = k.t, u = k.u, b = a + c;
  return b * (r + 2 * c * (1 + r) + s - 1) - 2 * (b * b * (1 + r + s) + c * (r + t - 2) + c * c * (r + t)) -
         2 * n * (-2 * r - u) - 2 * n * n * (-r - u);
}

/// Summand v-degree on the face, fitted to the exact evaluator and reducing to
/// delta_closed at (r,s,t) = (5,-3,5).
inline long face_degree(const KnotParams& k, long a, long c, long n) {
  const long r = k.r, s = k.s, t = k.t, u = k.u, b = a + c;
  return -2 * b * b * (r + s) + 4 * b * c * (r - 1) - 2 * b * (r + s) + 4 * b - 2 * c * c * (r + t - 2) +
         2 * c * (r - t) + 2 * n * n * (r + t - u) + 4 * n * (r + t - u) - 4 * n;
}

struct MonotonicityViolation {
  LatticePoint p;
  std::string which;
};

/// delta(a+1,b,c,d) < delta(a,b,c,d), delta(a,b,c+1,d) < delta(a,b,c,d) < delta(a,b,c,d-1)
/// wherever both points lie in the landscape.
inline std::vector<MonotonicityViolation> monotonicity_violations(const DegreeLandscape& L) {
  std::vector<MonotonicityViolation> out;
  auto deg = [&](const LatticePoint& p) -> std::optional<Exponent> {
    auto it = L.terms.find(p);
    if (it == L.terms.end()) return std::nullopt;
    return it->second.wdeg;
  };
  for (const auto& [p, t] : L.terms) {
    if (auto x = deg({p.a + 1, p.b, p.c, p.d}); x && !(*x < t.wdeg)) out.push_back({p, "a+1"});
    if (auto x = deg({p.a, p.b, p.c + 1, p.d}); x && !(*x < t.wdeg)) out.push_back({p, "c+1"});
    if (auto x = deg({p.a, p.b, p.c, p.d - 1}); x && !(t.wdeg < *x)) out.push_back({p, "d-1"});
  }
  return out;
}

}  // namespace ktg
