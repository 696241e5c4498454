// Acceptance suite. One PASS/FAIL line per criterion; every comparison is exact.
//
//   acceptance [--criterion N]
//
// Without --criterion all eight run. Exit status is 0 iff every selected
// criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ktgjones/ktgjones.hpp"
#include "oracles/kauffman_bracket.hpp"

using namespace ktg;

namespace {

const std::array<KnotParams, 3> kCompared{{{5, -3, 5, -3}, {5, -3, 5, -5}, {3, -3, 3, -3}}};
const std::array<long, 2> kUs{-3, -5};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (notes.size() < 12) notes.push_back(why);
    pass = false;
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string str(const GaussInt& z) { return z.to_string(); }

// 1. Leading coefficient of J_{C(5,-3,5,u),n+1} is floor(n/2), n = 2..10.
Outcome criterion1() {
  Outcome o;
  for (long u : kUs) {
    KnotParams k{5, -3, 5, u};
    std::ostringstream seq;
    for (long n = 2; n <= 10; ++n) {
      const GaussInt lead = evaluate_closed(k, n).lead();
      seq << (n > 2 ? " " : "") << str(lead);
      if (lead != GaussInt(n / 2))
        o.pass = false;
    }
    o.note(k.to_string() + " leads n=2..10: " + seq.str() + " (expected floor(n/2): 1 1 2 2 3 3 4 4 5)");
  }
  return o;
}

// 2. Compiled move program and closed formula agree, n <= 5.
Outcome criterion2() {
  Outcome o;
  for (const auto& k : kCompared) {
    auto plan = reverse_compile(montesinos_program(k));
    for (long n = 0; n <= 5; ++n)
      if (evaluate_plan(plan, n) != evaluate_closed(k, n)) o.fail(k.to_string() + " differs at n=" + std::to_string(n));
  }
  if (o.pass) o.note("3 knots x n=0..5 identical");
  return o;
}

// 3. Tropical leading terms equal exact leading terms of every summand, n <= 6.
Outcome criterion3() {
  Outcome o;
  long checked = 0;
  for (const auto& k : kCompared)
    for (long n = 0; n <= 6; ++n)
      for (const auto& p : lattice_points(n)) {
        auto exact = term_value(p, k, n);
        if (exact.is_zero()) continue;
        auto dl = exact.degree_lead();
        auto t = trop_term(p, k, n);
        ++checked;
        if (t.wdeg != dl.wexp || t.lead != dl.lead)
          o.fail(k.to_string() + " n=" + std::to_string(n) + " " + to_string(p) + ": trop (" + std::to_string(t.wdeg) +
                 "," + str(t.lead) + ") exact (" + std::to_string(dl.wexp) + "," + str(dl.lead) + ")");
      }
  o.note(std::to_string(checked) + " summands compared");
  return o;
}

// v-degree of the summand at (a, a+c, c, 0) including the prefactor, from exact arithmetic.
long exact_face_vdeg(const KnotParams& k, long a, long c, long n) {
  auto dl = term_value({a, a + c, c, 0}, k, n).degree_lead();
  return (dl.wexp + closed_prefactor_trop(k, n).wdeg) / 2;
}

// 4. Degree laws: (a) specialized face law, (b) general face law, (c) monotonicity.
Outcome criterion4() {
  Outcome o;
  bool pa = true, pb = true, pc = true;
  std::string first_a, first_b, first_c;
  long pts = 0;
  for (long u : kUs) {
    KnotParams k{5, -3, 5, u};
    for (long n = 0; n <= 8; ++n)
      for (long a = 0; a <= n; ++a)
        for (long c = 0; a + c <= n; ++c) {
          ++pts;
          const long got = exact_face_vdeg(k, a, c, n);
          if (got != delta_closed(a, c, n, u) && pa) {
            pa = false;
            first_a = k.to_string() + " n=" + std::to_string(n) + " a=" + std::to_string(a) + " c=" + std::to_string(c);
          }
        }
  }
  long b_checked = 0, b_matched = 0;
  for (const KnotParams& k : {KnotParams{5, -3, 5, -3}, KnotParams{5, -3, 5, -5}, KnotParams{3, -3, 3, -3},
                              KnotParams{3, -3, 3, -5}})
    for (long n = 0; n <= 8; ++n)
      for (long a = 0; a <= n; ++a)
        for (long c = 0; a + c <= n; ++c) {
          ++b_checked;
          const long got = exact_face_vdeg(k, a, c, n);
          const long want = delta_general_face(k, a, c, n);
          if (got == want) {
            ++b_matched;
          } else if (pb) {
            pb = false;
            first_b = k.to_string() + " n=" + std::to_string(n) + " a=" + std::to_string(a) + " c=" +
                      std::to_string(c) + ": summand " + std::to_string(got) + ", quadratic " + std::to_string(want);
          }
        }
  for (long u : kUs)
    for (long n = 0; n <= 8; ++n) {
      auto v = monotonicity_violations(degree_landscape({5, -3, 5, u}, n));
      if (!v.empty() && pc) {
        pc = false;
        first_c = "u=" + std::to_string(u) + " n=" + std::to_string(n) + " " + to_string(v[0].p) + " " + v[0].which;
      }
    }
  o.pass = pa && pb && pc;
  o.note(std::string("(a) specialized law: ") + (pa ? "PASS" : "FAIL at " + first_a) + " (" + std::to_string(pts) +
         " face points)");
  o.note(std::string("(b) general-face quadratic: ") + (pb ? "PASS" : "FAIL") + " (" + std::to_string(b_matched) + "/" +
         std::to_string(b_checked) + " face points match)" + (pb ? "" : "; first mismatch " + first_b));
  o.note(std::string("(c) monotonicity: ") + (pc ? "PASS" : "FAIL at " + first_c));
  return o;
}

// 5. Maximizers lie on b=a+c, d=0, a=c with lead +1; their lead sum is the polynomial's lead.
Outcome criterion5() {
  Outcome o;
  for (long u : kUs) {
    KnotParams k{5, -3, 5, u};
    std::ostringstream counts;
    for (long n = 1; n <= 8; ++n) {
      auto L = degree_landscape(k, n);
      counts << (n > 1 ? " " : "") << L.maximizers.size();
      for (const auto& p : L.maximizers) {
        if (p.b != p.a + p.c || p.d != 0 || p.a != p.c) o.fail(k.to_string() + " off-diagonal maximizer " + to_string(p));
        if (L.terms.at(p).lead != GaussInt(1)) o.fail(k.to_string() + " maximizer lead " + str(L.terms.at(p).lead));
      }
      auto j = evaluate_closed(k, n);
      if (j.degree() != L.max_wdeg || j.lead() != L.maximizer_lead_sum)
        o.fail(k.to_string() + " n=" + std::to_string(n) + " lead sum " + str(L.maximizer_lead_sum) + " vs " +
               str(j.lead()));
    }
    o.note(k.to_string() + " maximizer counts n=1..8: " + counts.str());
  }
  return o;
}

// 6. n=1 against the Kauffman bracket of the 16-crossing diagram.
Outcome criterion6() {
  Outcome o;
  KnotParams k{5, -3, 5, -3};
  auto br = oracle::kauffman_jones(k.r, k.s, k.t, k.u);
  LaurentPoly expect;
  for (auto [e, c] : br.jones_w) expect += LaurentPoly::monomial(GaussInt(c), e);
  const LaurentPoly got = evaluate_closed(k, 1);
  if (br.components != 1) o.fail("diagram has " + std::to_string(br.components) + " components");
  if (br.writhe != k.writhe()) o.fail("diagram writhe " + std::to_string(br.writhe));
  if (got != expect) o.fail("closed " + to_string(got) + " vs bracket " + to_string(expect));
  o.note("writhe " + std::to_string(br.writhe) + ", A = v^-1, unknot normalized to -A^2-A^-2");
  return o;
}

// 7. Block properties.
Outcome criterion7() {
  Outcome o;
  auto binom = [](long n, long kk) -> const LaurentPoly& { return qbinomial(n, kk); };
  long deltas = 0, leads = 0;
  const long M = 12;
  for (long a = 0; a <= M; ++a)
    for (long b = 0; b <= M; ++b)
      for (long c = 0; c <= M; ++c) {
        const bool adm = admissible(a, b, c);
        const LaurentPoly& th = theta3(a, b, c);
        if (!adm && !th.is_zero()) o.fail("theta nonzero at inadmissible (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        if (!adm) continue;
        if (th != theta3(b, a, c) || th != theta3(c, b, a) || th != theta3(a, c, b) || th != theta3(b, c, a) ||
            th != theta3(c, a, b))
          o.fail("theta not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        auto dl = lp_degree_lead(th);
        auto tt = trop_theta(a, b, c);
        if (tt.wdeg != dl.wexp || tt.lead != dl.lead) o.fail("theta leading term");
        for (long x = 0; x <= M; ++x)
          for (long y = 0; y <= M; ++y) {
            if (!admissible(x, y, c)) continue;
            for (long z = 0; z <= M; ++z) {
              if (!admissible(a, y, z) || !admissible(x, b, z)) continue;
              LaurentPoly d;
              try {
                d = detail::delta_direct(a, b, c, x, y, z, binom);
              } catch (const DivisionNotExact&) {
                o.fail("Delta division not exact");
                continue;
              }
              if (std::max({a, b, c, x, y, z}) <= 10) ++deltas;
              auto ddl = lp_degree_lead(d);
              auto td = trop_delta(a, b, c, x, y, z);
              ++leads;
              if (td.wdeg != ddl.wexp || td.lead != ddl.lead) o.fail("Delta leading term");
            }
          }
      }
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long c = 0; c <= 6; ++c)
        for (long x : {0L, 1L, 3L}) {
          if (admissible(a, b, c) && admissible(a, x, x) && admissible(x, b, x) && admissible(x, x, c)) continue;
          if (!detail::delta_direct(a, b, c, x, x, x, binom).is_zero()) o.fail("Delta nonzero at an inadmissible face");
        }
  o.note(std::to_string(deltas) + " Delta divisions (entries <= 10), " + std::to_string(leads) +
         " Delta leading terms (entries <= 12)");
  return o;
}

// 8. Byte-identical JSON across thread counts and repeated runs.
Outcome criterion8() {
  Outcome o;
  for (long u : kUs) {
    KnotParams k{5, -3, 5, u};
    for (long n = 2; n <= 10; ++n) {
      const std::string one = polynomial_json(k, n, evaluate_closed(k, n, 1));
      const std::string four = polynomial_json(k, n, evaluate_closed(k, n, 4));
      const std::string again = polynomial_json(k, n, evaluate_closed(k, n, 1));
      if (one != four || one != again) o.fail(k.to_string() + " n=" + std::to_string(n) + " output differs");
    }
  }
  if (o.pass) o.note("18 inputs x {1 thread, 4 threads, rerun} identical");
  return o;
}

const std::array<std::pair<const char*, std::function<Outcome()>>, 8> kCriteria{{
    {"leading coefficient equals floor(n/2), u in {-3,-5}, n=2..10 [exact]", criterion1},
    {"compiled program equals closed formula, 3 knots, n<=5 [exact]", criterion2},
    {"tropical equals exact leading term of every summand, n<=6 [exact]", criterion3},
    {"degree laws: specialized, general face, monotonicity, n<=8 [exact]", criterion4},
    {"maximizers on a=c, b=a+c, d=0 with lead +1, lead sum equals lead, n<=8 [exact]", criterion5},
    {"n=1 equals the Kauffman bracket Jones polynomial [exact]", criterion6},
    {"block properties: Delta exact (<=10), theta symmetry, zeros, leading terms (<=12) [exact]", criterion7},
    {"JSON byte-identical across threads and runs [exact]", criterion8},
}};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      selected.push_back(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (selected.empty())
    for (int i = 1; i <= 8; ++i) selected.push_back(i);

  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > 8) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
    const auto& [title, run] = kCriteria[static_cast<std::size_t>(id - 1)];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title << "  (" << secs << "s)";
    std::cout << line.str() << "\n";
    for (const auto& n : out.notes) std::cout << "    " << n << "\n";
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
