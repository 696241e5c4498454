#pragma once

// Exact Laurent polynomials in w = v^(1/2) with Gaussian-integer coefficients.
//
// Everything else in the library produces and consumes these values. All
// arithmetic is exact (GMP integers); every operation returns a polynomial in
// canonical form: terms sorted by ascending exponent, no zero coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ktgjones/errors.hpp"

namespace ktg {

using Exponent = std::int64_t;

/// re + im*i with arbitrary-precision parts.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  GaussInt() = default;
  GaussInt(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussInt(long r, long i) : re(r), im(i) {}
  GaussInt(mpz_class r, mpz_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  /// i^k for any integer k.
  static GaussInt unit_power(long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussInt times_i() const { return {-im, re}; }
  GaussInt conj() const { return {re, -im}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) {
    if (o.is_real()) {
      re *= o.re;
      im *= o.re;
      return *this;
    }
    mpz_class r = re * o.re - im * o.im;
    mpz_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

  std::string to_string() const {
    if (is_real()) return re.get_str();
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : im.get_str() + "i";
    if (sgn(re) == 0) return imag;
    return re.get_str() + (sgn(im) > 0 ? "+" : "") + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.to_string(); }
};

/// a / b in Z[i]; throws DivisionNotExact when the quotient is not a Gaussian integer.
inline std::optional<GaussInt> try_exact_div(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_real()) {
    if (!mpz_divisible_p(a.re.get_mpz_t(), b.re.get_mpz_t()) ||
        !mpz_divisible_p(a.im.get_mpz_t(), b.re.get_mpz_t()))
      return std::nullopt;
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  GaussInt num = a * b.conj();
  mpz_class norm = b.re * b.re + b.im * b.im;
  if (!mpz_divisible_p(num.re.get_mpz_t(), norm.get_mpz_t()) ||
      !mpz_divisible_p(num.im.get_mpz_t(), norm.get_mpz_t()))
    return std::nullopt;
  mpz_divexact(num.re.get_mpz_t(), num.re.get_mpz_t(), norm.get_mpz_t());
  mpz_divexact(num.im.get_mpz_t(), num.im.get_mpz_t(), norm.get_mpz_t());
  return num;
}

inline GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw DivisionNotExact(a.to_string() + " / " + b.to_string());
  return *std::move(q);
}

/// Top exponent and its coefficient.
struct DegreeLead {
  Exponent wexp = 0;
  GaussInt lead;

  friend bool operator==(const DegreeLead&, const DegreeLead&) = default;
};

class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    GaussInt coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.push_back({0, GaussInt(constant)});
  }

  static LaurentPoly monomial(GaussInt coeff, Exponent wexp) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_.push_back({wexp, std::move(coeff)});
    return p;
  }

  /// Builds a canonical polynomial from arbitrary (unsorted, repeated, zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    }
    return p;
  }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
  }
  bool is_monomial() const { return terms_.size() == 1; }

  Exponent degree() const {
    if (is_zero()) throw ZeroPolynomial("degree");
    return terms_.back().exp;
  }
  Exponent low_degree() const {
    if (is_zero()) throw ZeroPolynomial("low degree");
    return terms_.front().exp;
  }
  const GaussInt& lead() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient");
    return terms_.back().coeff;
  }

  GaussInt coeff(Exponent wexp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), wexp,
                               [](const Term& t, Exponent e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == wexp) return it->coeff;
    return {};
  }

  /// gcd of all exponent differences (0 for monomials and the zero polynomial).
  Exponent stride() const {
    Exponent g = 0;
    for (const auto& t : terms_) g = std::gcd(g, t.exp - terms_.front().exp);
    return g;
  }

  LaurentPoly shifted(Exponent by) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.exp += by;
    return p;
  }

  LaurentPoly scaled(const GaussInt& c) const {
    if (c.is_zero()) return {};
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = multiply(*this, o); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
  friend LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(GaussInt(-1)); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  static LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q);
  static std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q);

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].exp < a.terms_[i].exp) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        GaussInt c = a.terms_[i].coeff;
        if (subtract)
          c -= b.terms_[j].coeff;
        else
          c += b.terms_[j].coeff;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

namespace detail {

// Dense accumulator over the lattice lo + k*step back to canonical form.
inline LaurentPoly collect_dense(Exponent lo, Exponent step, std::vector<mpz_class>& re,
                                 std::vector<mpz_class>* im) {
  std::vector<LaurentPoly::Term> out;
  for (std::size_t k = 0; k < re.size(); ++k) {
    bool nz = sgn(re[k]) != 0 || (im && sgn((*im)[k]) != 0);
    if (!nz) continue;
    GaussInt c(std::move(re[k]), im ? std::move((*im)[k]) : mpz_class(0));
    out.push_back({lo + static_cast<Exponent>(k) * step, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace detail

inline LaurentPoly LaurentPoly::multiply(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.is_monomial()) return q.scaled(p.terms_[0].coeff).shifted(p.terms_[0].exp);
  if (q.is_monomial()) return p.scaled(q.terms_[0].coeff).shifted(q.terms_[0].exp);

  const Exponent step = std::gcd(p.stride(), q.stride());
  const Exponent plo = p.low_degree(), qlo = q.low_degree();
  const std::size_t n =
      static_cast<std::size_t>((p.degree() - plo) / step + (q.degree() - qlo) / step + 1);
  std::vector<std::size_t> qi(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) qi[j] = static_cast<std::size_t>((q.terms_[j].exp - qlo) / step);

  std::vector<mpz_class> re(n);
  const bool preal = p.is_real(), qreal = q.is_real();
  if (preal && qreal) {
    for (const auto& a : p.terms_) {
      auto base = static_cast<std::size_t>((a.exp - plo) / step);
      for (std::size_t j = 0; j < q.size(); ++j)
        mpz_addmul(re[base + qi[j]].get_mpz_t(), a.coeff.re.get_mpz_t(), q.terms_[j].coeff.re.get_mpz_t());
    }
    return detail::collect_dense(plo + qlo, step, re, nullptr);
  }
  std::vector<mpz_class> im(n);
  for (const auto& a : p.terms_) {
    auto base = static_cast<std::size_t>((a.exp - plo) / step);
    const bool a_has_im = sgn(a.coeff.im) != 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const auto& b = q.terms_[j].coeff;
      auto k = base + qi[j];
      mpz_addmul(re[k].get_mpz_t(), a.coeff.re.get_mpz_t(), b.re.get_mpz_t());
      if (!qreal) mpz_addmul(im[k].get_mpz_t(), a.coeff.re.get_mpz_t(), b.im.get_mpz_t());
      if (a_has_im) {
        mpz_addmul(im[k].get_mpz_t(), a.coeff.im.get_mpz_t(), b.re.get_mpz_t());
        if (!qreal) mpz_submul(re[k].get_mpz_t(), a.coeff.im.get_mpz_t(), b.im.get_mpz_t());
      }
    }
  }
  return detail::collect_dense(plo + qlo, step, re, &im);
}

// Schoolbook long division from the top on the common exponent lattice.
inline std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return LaurentPoly{};
  if (q.is_monomial()) {
    LaurentPoly r;
    const auto& [qe, qc] = q.terms_[0];
    for (const auto& t : p.terms_) {
      auto c = try_exact_div(t.coeff, qc);
      if (!c) return std::nullopt;
      r.terms_.push_back({t.exp - qe, std::move(*c)});
    }
    return r;
  }
  const Exponent step = std::gcd(p.stride(), q.stride());
  const Exponent plo = p.low_degree(), qlo = q.low_degree();
  const Exponent qhi = q.degree();
  const Exponent top = p.degree() - qhi;  // top quotient exponent
  const Exponent bottom = plo - qlo;      // lowest possible quotient exponent
  if (top < bottom) return std::nullopt;

  const auto nq = static_cast<std::size_t>((qhi - qlo) / step + 1);
  const auto nquot = static_cast<std::size_t>((top - bottom) / step + 1);
  const std::size_t nrem = nquot + nq - 1;
  // remainder index k corresponds to exponent plo + k*step
  std::vector<std::size_t> qi(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) qi[j] = static_cast<std::size_t>((q.terms_[j].exp - qlo) / step);

  const bool real = p.is_real() && q.is_real();
  std::vector<mpz_class> rre(nrem), rim(real ? 0 : nrem);
  for (const auto& t : p.terms_) {
    auto k = static_cast<std::size_t>((t.exp - plo) / step);
    rre[k] = t.coeff.re;
    if (!real) rim[k] = t.coeff.im;
  }

  std::vector<Term> quot;
  const GaussInt& lq = q.terms_.back().coeff;
  for (std::size_t kk = nquot; kk-- > 0;) {
    const std::size_t topk = kk + nq - 1;
    if (real) {
      if (sgn(rre[topk]) == 0) continue;
      mpz_class c;
      if (lq.re == 1) {
        c = rre[topk];
      } else if (lq.re == -1) {
        c = -rre[topk];
      } else {
        if (!mpz_divisible_p(rre[topk].get_mpz_t(), lq.re.get_mpz_t())) return std::nullopt;
        mpz_divexact(c.get_mpz_t(), rre[topk].get_mpz_t(), lq.re.get_mpz_t());
      }
      for (std::size_t j = 0; j < q.size(); ++j)
        mpz_submul(rre[kk + qi[j]].get_mpz_t(), c.get_mpz_t(), q.terms_[j].coeff.re.get_mpz_t());
      quot.push_back({bottom + static_cast<Exponent>(kk) * step, GaussInt(std::move(c))});
    } else {
      GaussInt r(rre[topk], rim[topk]);
      if (r.is_zero()) continue;
      auto c = try_exact_div(r, lq);
      if (!c) return std::nullopt;
      for (std::size_t j = 0; j < q.size(); ++j) {
        GaussInt prod = *c * q.terms_[j].coeff;
        rre[kk + qi[j]] -= prod.re;
        rim[kk + qi[j]] -= prod.im;
      }
      quot.push_back({bottom + static_cast<Exponent>(kk) * step, std::move(*c)});
    }
  }
  for (std::size_t k = 0; k < nrem; ++k) {
    if (sgn(rre[k]) != 0) return std::nullopt;
    if (!real && sgn(rim[k]) != 0) return std::nullopt;
  }
  std::reverse(quot.begin(), quot.end());
  LaurentPoly r;
  r.terms_ = std::move(quot);
  return r;
}

// Free-function surface.

inline LaurentPoly lp_monomial(const GaussInt& coeff, Exponent wexp) { return LaurentPoly::monomial(coeff, wexp); }
inline LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

inline std::optional<LaurentPoly> lp_try_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  return LaurentPoly::try_divide(p, q);
}

inline LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = LaurentPoly::try_divide(p, q);
  if (!r) throw DivisionNotExact("polynomial quotient has a nonzero remainder");
  return *std::move(r);
}

inline DegreeLead lp_degree_lead(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("degree of the zero polynomial is undefined");
  return {p.degree(), p.lead()};
}

inline LaurentPoly lp_pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly r(1), base = p;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

/// Human-readable form in w, highest exponent first.
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  auto ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    std::string c = it->coeff.to_string();
    if (!it->coeff.is_real() && sgn(it->coeff.re) != 0) c = "(" + c + ")";
    if (!s.empty()) s += " + ";
    s += c;
    if (it->exp != 0) s += "*w^" + std::to_string(it->exp);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace ktg
