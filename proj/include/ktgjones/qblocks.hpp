#pragma once

// Quantum building blocks: quantum integers and factorials, multinomials, the
// half-twist monomial f, loop values O, theta values and the normalised 6j
// symbol Delta, together with their leading-term (tropical) counterparts.
//
// Conventions: [k] = (v^{2k} - v^{-2k}) / (v^2 - v^{-2}); all exponents are in
// w = v^{1/2}, so [k] = sum_{j<k} w^{4k-4-8j}.

#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "ktgjones/exactring.hpp"

namespace ktg {

/// Small exact rational; the block functions only ever see integers and halves.
struct Rational {
  long num = 0;
  long den = 1;

  Rational(long n = 0) : num(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  /// The value as a natural number (>= 0), if it is one.
  std::optional<long> natural() const {
    if (den != 1 || num < 0) return std::nullopt;
    return num;
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

/// Thread-safe grow-only cache. Returned references stay valid for the
/// lifetime of the table (std::map nodes never move).
template <class Key, class Value>
class MemoTable {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

inline const LaurentPoly& zero_poly() {
  static const LaurentPoly zero;
  return zero;
}

// ---------------------------------------------------------------------------
// Exact blocks

/// [k]; [-k] = -[k], [0] = 0.
inline LaurentPoly qint(long k) {
  if (k == 0) return {};
  const long sign = k > 0 ? 1 : -1;
  const long m = k > 0 ? k : -k;
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(m));
  for (long j = m - 1; j >= 0; --j) terms.push_back({4 * (m - 1) - 8 * j, GaussInt(sign)});
  return LaurentPoly::from_terms(std::move(terms));
}

namespace detail {

inline MemoTable<long, LaurentPoly>& qfact_table() {
  static MemoTable<long, LaurentPoly> t;
  return t;
}
inline MemoTable<std::array<long, 2>, LaurentPoly>& binom_table() {
  static MemoTable<std::array<long, 2>, LaurentPoly> t;
  return t;
}
inline MemoTable<std::array<long, 3>, LaurentPoly>& theta_table() {
  static MemoTable<std::array<long, 3>, LaurentPoly> t;
  return t;
}
inline MemoTable<std::array<long, 6>, LaurentPoly>& delta_table() {
  static MemoTable<std::array<long, 6>, LaurentPoly> t;
  return t;
}

inline LaurentPoly qfact_direct(long k) {
  LaurentPoly r(1);
  for (long j = 2; j <= k; ++j) r *= qint(j);
  return r;
}

}  // namespace detail

/// [k]! for natural k, and 0 for every other rational.
inline const LaurentPoly& qfact(Rational k) {
  auto nat = k.natural();
  if (!nat) return zero_poly();
  const long m = *nat;
  return detail::qfact_table().get(m, [m] {
    if (m <= 1) return LaurentPoly(1);
    return qfact(m - 1) * qint(m);
  });
}

/// Quantum binomial [top; bottom], 0 unless 0 <= bottom <= top are integers.
inline const LaurentPoly& qbinomial(Rational top, Rational bottom) {
  auto n = top.natural();
  auto k = bottom.natural();
  if (!n || !k || *k > *n) return zero_poly();
  const long kk = std::min(*k, *n - *k);
  return detail::binom_table().get({*n, kk}, [n, kk] {
    return lp_exact_div(qfact(*n), qfact(kk) * qfact(*n - kk));
  });
}

/// [a_1+...+a_r]! / ([a_1]! ... [a_r]!); zero if any part is not a natural number.
inline LaurentPoly qmultinomial(std::span<const Rational> parts) {
  long total = 0;
  for (const auto& p : parts) {
    auto nat = p.natural();
    if (!nat) return {};
    total += *nat;
  }
  LaurentPoly r(1);
  long remaining = total;
  for (const auto& p : parts) {
    r *= qbinomial(remaining, p);
    remaining -= p.num;
  }
  return r;
}

inline LaurentPoly qmultinomial(std::initializer_list<Rational> parts) {
  return qmultinomial(std::span<const Rational>(parts.begin(), parts.size()));
}

/// f(a)^e = i^{-ae} v^{-a(a+2)e/2}, a monomial.
inline LaurentPoly f_twist_pow(long a, long e) {
  return LaurentPoly::monomial(GaussInt::unit_power(-a * e), -a * (a + 2) * e);
}

/// Half-twist eigenvalue f(a) = i^{-a} v^{-a(a+2)/2}.
inline LaurentPoly f_twist(long a) { return f_twist_pow(a, 1); }

/// Loop value O^k = (-1)^k [k+1].
inline LaurentPoly o_loop(long k) {
  LaurentPoly q = qint(k + 1);
  return (k % 2 == 0) ? q : -q;
}

/// Even sum and triangle inequality.
inline bool admissible(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

namespace detail {

inline LaurentPoly theta_direct(long a, long b, long c) {
  if ((a + b + c) % 2 != 0) return {};
  const long s = (a + b + c) / 2;
  LaurentPoly m = qmultinomial({Rational(s - a), Rational(s - b), Rational(s - c)});
  if (m.is_zero()) return {};
  return o_loop(s) * m;
}

// Sum over z of (-1)^{z-s} [z+1] times the four binomials; divided once by [s+1].
template <class Binomial>
LaurentPoly delta_direct(long a, long b, long c, long alpha, long beta, long gamma, Binomial&& binom) {
  const long s2 = a + b + c;
  const long t1 = a + beta + gamma, t2 = alpha + b + gamma, t3 = alpha + beta + c;
  if (s2 % 2 || t1 % 2 || t2 % 2 || t3 % 2) return {};
  const long s = s2 / 2;
  const long top1 = s - a, top2 = s - b, top3 = s - c;
  if (top1 < 0 || top2 < 0 || top3 < 0) return {};
  const long lo = std::max({s, t1 / 2, t2 / 2, t3 / 2});
  const long hi = std::min({t1 / 2 + top1, t2 / 2 + top2, t3 / 2 + top3});
  LaurentPoly acc;
  for (long z = lo; z <= hi; ++z) {
    LaurentPoly term = qint(z + 1) * binom(z, s);
    term *= binom(top1, z - t1 / 2);
    term *= binom(top2, z - t2 / 2);
    term *= binom(top3, z - t3 / 2);
    if ((z - s) % 2 != 0) term = -term;
    acc += term;
  }
  if (acc.is_zero()) return {};
  return lp_exact_div(acc, qint(s + 1));
}

}  // namespace detail

/// theta(a,b,c) = O^s [s; s-a, s-b, s-c] with s = (a+b+c)/2; zero unless admissible.
inline const LaurentPoly& theta3(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) return zero_poly();
  return detail::theta_table().get({a, b, c}, [=] { return detail::theta_direct(a, b, c); });
}

/// Delta(a,b,c,alpha,beta,gamma): the 6j symbol divided by theta(a,b,c).
/// (a,b,c) are the edges at the vertex being expanded; alpha is opposite a.
inline const LaurentPoly& delta6(long a, long b, long c, long alpha, long beta, long gamma) {
  if (a < 0 || b < 0 || c < 0 || alpha < 0 || beta < 0 || gamma < 0) return zero_poly();
  return detail::delta_table().get({a, b, c, alpha, beta, gamma}, [=] {
    return detail::delta_direct(a, b, c, alpha, beta, gamma,
                                [](long n, long k) -> const LaurentPoly& { return qbinomial(n, k); });
  });
}

/// Non-memoised evaluation paths, used to check that caching is transparent.
namespace uncached {

inline LaurentPoly qbinomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  return lp_exact_div(detail::qfact_direct(n), detail::qfact_direct(k) * detail::qfact_direct(n - k));
}

inline LaurentPoly theta3(long a, long b, long c) {
  if ((a + b + c) % 2 != 0 || a < 0 || b < 0 || c < 0) return {};
  const long s = (a + b + c) / 2;
  if (s < a || s < b || s < c) return {};
  LaurentPoly m = lp_exact_div(detail::qfact_direct(s), detail::qfact_direct(s - a) * detail::qfact_direct(s - b) *
                                                            detail::qfact_direct(s - c));
  return o_loop(s) * m;
}

inline LaurentPoly delta6(long a, long b, long c, long alpha, long beta, long gamma) {
  return detail::delta_direct(a, b, c, alpha, beta, gamma, [](long n, long k) { return qbinomial(n, k); });
}

}  // namespace uncached

// ---------------------------------------------------------------------------
// Tropical (leading-term) blocks

/// Top w-exponent and leading coefficient of a nonzero block value.
struct TropTerm {
  Exponent wdeg = 0;
  GaussInt lead{1};

  TropTerm& operator*=(const TropTerm& o) {
    wdeg += o.wdeg;
    lead *= o.lead;
    return *this;
  }
  TropTerm& operator/=(const TropTerm& o) {
    wdeg -= o.wdeg;
    lead = exact_div(lead, o.lead);
    return *this;
  }
  friend TropTerm operator*(TropTerm a, const TropTerm& b) { return a *= b; }
  friend TropTerm operator/(TropTerm a, const TropTerm& b) { return a /= b; }
  friend bool operator==(const TropTerm&, const TropTerm&) = default;

  TropTerm pow(long e) const {
    TropTerm r;
    if (e >= 0) {
      for (long i = 0; i < e; ++i) r *= *this;
    } else {
      for (long i = 0; i < -e; ++i) r /= *this;
    }
    return r;
  }

  DegreeLead as_degree_lead() const { return {wdeg, lead}; }
};

/// g(n,k) = 2k(n-k), a v-degree.
inline long g_quad(long n, long k) { return 2 * k * (n - k); }

/// m with 2m = a+b+c+alpha+beta+gamma - max(a+alpha, b+beta, c+gamma).
inline Rational m_of(long a, long b, long c, long alpha, long beta, long gamma) {
  return Rational(a + b + c + alpha + beta + gamma - std::max({a + alpha, b + beta, c + gamma}), 2);
}

inline TropTerm trop_f(long a, long e) { return {-a * (a + 2) * e, GaussInt::unit_power(-a * e)}; }

inline TropTerm trop_o(long k) { return {4 * k, GaussInt(k % 2 == 0 ? 1 : -1)}; }

inline TropTerm trop_theta(long a, long b, long c) {
  if (!admissible(a, b, c))
    throw InadmissibleTriple("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  const long s = (a + b + c) / 2;
  const long vdeg2 = 2 * (a + b + c + a * b + b * c + c * a) - (a * a + b * b + c * c);  // 2 * v-degree
  return {vdeg2, GaussInt(s % 2 == 0 ? 1 : -1)};
}

inline TropTerm trop_delta(long a, long b, long c, long alpha, long beta, long gamma) {
  const std::array<std::array<long, 3>, 4> faces{
      {{a, b, c}, {a, beta, gamma}, {alpha, b, gamma}, {alpha, beta, c}}};
  for (const auto& f : faces) {
    if (!admissible(f[0], f[1], f[2]))
      throw InadmissibleTriple("(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
                               std::to_string(f[2]) + ") in Delta");
  }
  const Rational m = m_of(a, b, c, alpha, beta, gamma);
  if (!m.is_integer()) throw InadmissibleTriple("non-integral m in Delta");
  const long mm = m.num;
  const long s = (a + b + c) / 2;
  const long vdeg = g_quad(mm + 1, s + 1) + g_quad(s - a, mm - (a + beta + gamma) / 2) +
                    g_quad(s - b, mm - (alpha + b + gamma) / 2) + g_quad(s - c, mm - (alpha + beta + c) / 2);
  return {2 * vdeg, GaussInt((mm - s) % 2 == 0 ? 1 : -1)};
}

}  // namespace ktg
