#pragma once

// JSON and CSV emitters. Coefficients are written as bare JSON integers of
// any size, so the JSON is produced by hand rather than through a DOM.

#include <sstream>
#include <string>

#include "ktgjones/analysis.hpp"

namespace ktg {

inline std::string knot_json(const KnotParams& k) {
  std::ostringstream os;
  os << "{\"r\":" << k.r << ",\"s\":" << k.s << ",\"t\":" << k.t << ",\"u\":" << k.u << "}";
  return os.str();
}

/// [[wexp,re,im],...] in ascending w-exponent.
inline std::string terms_json(const LaurentPoly& p) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& t : p.terms()) {
    os << (first ? "" : ",") << "[" << t.exp << "," << t.coeff.re.get_str() << "," << t.coeff.im.get_str() << "]";
    first = false;
  }
  os << "]";
  return os.str();
}

inline std::string polynomial_json(const KnotParams& k, long n, const LaurentPoly& p) {
  return "{\"knot\":" + knot_json(k) + ",\"n\":" + std::to_string(n) + ",\"variable\":\"w=v^(1/2)\",\"terms\":" +
         terms_json(p) + "}\n";
}

inline std::string polynomial_csv(const LaurentPoly& p) {
  std::ostringstream os;
  os << "wexp,re,im\n";
  for (const auto& t : p.terms()) os << t.exp << "," << t.coeff.re.get_str() << "," << t.coeff.im.get_str() << "\n";
  return os.str();
}

/// n,wdeg,c0,...,c{k-1}
inline std::string coeff_table_csv(const CoeffTable& t) {
  std::ostringstream os;
  os << "n,wdeg";
  for (std::size_t i = 0; i < t.width; ++i) os << ",c" << i;
  os << "\n";
  for (const auto& r : t.rows) {
    os << r.n << "," << r.wdeg;
    for (const auto& c : r.coeffs) os << "," << c.get_str();
    os << "\n";
  }
  return os.str();
}

inline std::string coeff_table_json(const CoeffTable& t) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    os << (i ? "," : "") << "{\"n\":" << r.n << ",\"wdeg\":" << r.wdeg << ",\"coeffs\":[";
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) os << (j ? "," : "") << r.coeffs[j].get_str();
    os << "]}";
  }
  os << "]";
  return os.str();
}

inline std::string manx_json(const ManxReport& rep) {
  std::ostringstream os;
  os << "{\"knot\":" << knot_json(rep.table.knot) << ",\"verdict\":\"" << rep.verdict.to_string() << "\",\"leads\":[";
  bool first = true;
  for (const auto& [n, lead] : lead_sequence(rep.table)) {
    os << (first ? "" : ",") << "[" << n << "," << lead.get_str() << "]";
    first = false;
  }
  os << "],\"table\":" << coeff_table_json(rep.table) << "}\n";
  return os.str();
}

inline std::string tail_json(const TailReport& rep) {
  std::ostringstream os;
  os << "{\"knot\":" << knot_json(rep.table.knot) << ",\"depth\":" << rep.depth
     << ",\"tail_on_window\":" << (rep.tail_on_window ? "true" : "false") << ",\"agreements\":[";
  for (std::size_t i = 0; i < rep.agreements.size(); ++i)
    os << (i ? "," : "") << "{\"n\":" << rep.agreements[i].first << ",\"count\":" << rep.agreements[i].second << "}";
  os << "],\"table\":" << coeff_table_json(rep.table) << "}\n";
  return os.str();
}

/// a,b,c,d,wdeg,lead (lead as a real integer; degrees include the prefactor).
inline std::string landscape_csv(const DegreeLandscape& L) {
  std::ostringstream os;
  os << "a,b,c,d,wdeg,lead\n";
  for (const auto& [p, t] : L.terms) {
    os << p.a << "," << p.b << "," << p.c << "," << p.d << "," << t.wdeg << ",";
    if (t.lead.is_real())
      os << t.lead.re.get_str();
    else
      os << t.lead.to_string();
    os << "\n";
  }
  return os.str();
}

inline std::string landscape_json(const DegreeLandscape& L) {
  std::ostringstream os;
  os << "{\"knot\":" << knot_json(L.knot) << ",\"n\":" << L.n << ",\"max_wdeg\":" << L.max_wdeg
     << ",\"maximizer_lead_sum\":\"" << L.maximizer_lead_sum.to_string() << "\",\"maximizers\":[";
  for (std::size_t i = 0; i < L.maximizers.size(); ++i) {
    const auto& p = L.maximizers[i];
    os << (i ? "," : "") << "[" << p.a << "," << p.b << "," << p.c << "," << p.d << "]";
  }
  os << "]}\n";
  return os.str();
}

}  // namespace ktg
