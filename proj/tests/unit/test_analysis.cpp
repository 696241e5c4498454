#include <gtest/gtest.h>

#include "ktgjones/analysis.hpp"
#include "ktgjones/serialize.hpp"

using namespace ktg;

namespace {

const KnotParams kBase{5, -3, 5, -3};

CoeffTable table_of(std::vector<std::vector<long>> rows) {
  CoeffTable t{kBase, rows.at(0).size(), {}};
  long n = 1;
  for (const auto& r : rows) {
    CoeffRow row{n++, 0, {}};
    for (long c : r) row.coeffs.emplace_back(c);
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace

TEST(LeadSequence, MeasuredValues) {
  auto seq = lead_sequence(kBase, 6);
  const long expected[] = {1, 2, 2, 3, 3, 4};
  ASSERT_EQ(seq.size(), 6u);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EXPECT_EQ(seq[i].first, static_cast<long>(i) + 1);
    EXPECT_EQ(seq[i].second, expected[i]);
  }
}

TEST(Classify, DetectorSemantics) {
  EXPECT_EQ(classify(table_of({{1, 0}, {2, 5}, {2, 1}, {3, 4}})).kind, VerdictKind::Manx);
  EXPECT_EQ(classify(table_of({{1, 4}, {1, 4}, {1, 5}})), (Verdict{VerdictKind::Stable, 1}));
  EXPECT_EQ(classify(table_of({{-2, 4, 1}, {-2, 4, 1}})), (Verdict{VerdictKind::Stable, 3}));
  EXPECT_EQ(classify(table_of({{3, 4}, {1, 4}, {2, 5}})).kind, VerdictKind::Inconclusive);
  EXPECT_EQ(classify(table_of({{1, 0}, {2, 0}})).kind, VerdictKind::Inconclusive);
}

TEST(Classify, IsAFunctionOfTheTable) {
  auto t = table_of({{1, 0}, {1, 0}, {2, 0}, {2, 3}, {3, 1}});
  EXPECT_EQ(classify(t), classify(t));
  EXPECT_EQ(classify(t).to_string(), "MANX");
}

TEST(Manx, BaseKnot) {
  auto rep = manx_check(kBase, 6);
  EXPECT_EQ(rep.verdict.kind, VerdictKind::Manx);
  EXPECT_EQ(rep.table.rows.size(), 6u);
  EXPECT_THROW(manx_check(kBase, 2), Error);
}

TEST(Tail, AgreementCounts) {
  auto rep = tail_probe(kBase, 1, 6);
  ASSERT_EQ(rep.agreements.size(), 5u);
  // leads 1,2,2,3,3,4: equal exactly on the pairs (2,3) and (4,5)
  const std::size_t expected[] = {0, 1, 0, 1, 0};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(rep.agreements[i].second, expected[i]) << i;
  EXPECT_FALSE(rep.tail_on_window);
}

TEST(Tail, FullTableRegardlessOfVerdict) {
  auto rep = tail_probe(kBase, 3, 5);
  EXPECT_EQ(rep.table.rows.size(), 5u);
  for (const auto& r : rep.table.rows) {
    EXPECT_EQ(r.coeffs.size(), 3u);
    EXPECT_NE(r.coeffs[0], 0);
  }
  auto csv = coeff_table_csv(rep.table);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,wdeg,c0,c1,c2");
}

TEST(DegreeLaws, ClosedExamples) {
  EXPECT_EQ(delta_closed(0, 1, 2, -3), 196);
  EXPECT_EQ(delta_closed(1, 0, 2, -3), 196);
  for (long n = 0; n <= 5; ++n)
    for (long u : {-3, -5}) EXPECT_EQ(delta_closed(2, 2, n, u), 2 * n * (18 + 10 * n - (2 + n) * u));
}

TEST(DegreeLaws, FaceDegreeSpecialisesToClosedLaw) {
  for (long u : {-3, -5, -7})
    for (long n = 0; n <= 6; ++n)
      for (long a = 0; a <= n; ++a)
        for (long c = 0; a + c <= n; ++c) EXPECT_EQ(face_degree({5, -3, 5, u}, a, c, n), delta_closed(a, c, n, u));
}

TEST(DegreeLaws, FaceDegreeMatchesLandscape) {
  for (KnotParams k : {KnotParams{3, -3, 3, -3}, KnotParams{7, -5, 3, -3}})
    for (long n = 1; n <= 4; ++n) {
      auto L = degree_landscape(k, n);
      for (long a = 0; a <= n; ++a)
        for (long c = 0; a + c <= n; ++c) EXPECT_EQ(L.terms.at({a, a + c, c, 0}).wdeg, 2 * face_degree(k, a, c, n));
    }
}

TEST(DegreeLaws, Monotonicity) {
  for (long n = 1; n <= 5; ++n) EXPECT_TRUE(monotonicity_violations(degree_landscape(kBase, n)).empty()) << n;
}
