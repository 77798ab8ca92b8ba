#include <gtest/gtest.h>

#include <algorithm>

#include "c4ex/serialize.hpp"

namespace c4ex {
namespace {

const BigRational kEps = BigRational::parse("0.001");

TEST(Csv, HeaderAndRows) {
  EXPECT_EQ(bounds_csv_header(),
            "n,q,r,class,reiman,erdos_conj,thm3,thm5,eq8,brown_lower,deletion_lower,best_upper,best_lower,"
            "n1_member,n2_member");
  EXPECT_EQ(bounds_csv_row(best_bounds(21), kEps), "21,4,0,center,52,53.367045,,,,50,50,52,50,0,0");
  EXPECT_EQ(bounds_csv_row(best_bounds(5), kEps), "5,2,-2,minus,6,6.840170,,,,,5,6,5,0,0");

  const std::int64_t q = 1000;
  const auto row = bounds_csv_row(best_bounds(q * q + q + 1 - 8), kEps);
  EXPECT_NE(row.find(",minus,"), std::string::npos);
  EXPECT_EQ(row.substr(row.size() - 4), ",1,0");
}

TEST(Csv, FieldCountIsFixed) {
  const std::string header = bounds_csv_header();
  const auto header_fields = std::count(header.begin(), header.end(), ',');
  for (std::int64_t n : {1, 2, 7, 8, 13, 1000, 100000000}) {
    const auto row = bounds_csv_row(best_bounds(n), kEps);
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), header_fields) << n;
  }
}

TEST(Json, CertificateUsesFractionStrings) {
  const auto j = to_json(certify_point(Which::kF, 10000, 100));
  EXPECT_EQ(j.at("which"), "F");
  EXPECT_EQ(j.at("verdict"), "certified-negative");
  EXPECT_EQ(j.at("q"), 10000);
  EXPECT_EQ(j.at("k"), "309/1");
  for (const char* key : {"s_lo", "s_hi", "lead_coeff", "value_lo", "value_hi"}) {
    ASSERT_TRUE(j.contains(key)) << key;
    EXPECT_NE(j.at(key).get<std::string>().find('/'), std::string::npos) << key;
  }
  const auto bad = to_json(certify_point(Which::kG, 10, 100));
  EXPECT_EQ(bad.at("verdict"), "inapplicable");
  EXPECT_TRUE(bad.contains("reason"));
}

TEST(Json, SearchResult) {
  const auto j = to_json(ex_c4(7));
  EXPECT_EQ(j.at("n"), 7);
  EXPECT_EQ(j.at("value"), 9);
  EXPECT_EQ(j.at("status"), "exact");
  EXPECT_EQ(graph6_decode(j.at("witness_g6").get<std::string>()).edge_count(), 9);
  EXPECT_EQ(j.at("solver_version"), std::string(kSolverVersion));
}

TEST(Json, LemmaVerdicts) {
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  const auto j = to_json(check_lemma_fN(c5, 2, 0));
  EXPECT_EQ(j.at("margin"), "2/1");
  EXPECT_EQ(j.at("holds"), true);
  EXPECT_EQ(j.at("context").at("vertex"), 0);

  const std::vector<Vertex> I{1, 4};
  const auto t = to_json(check_2path_inequality(c5, 0, I));
  EXPECT_EQ(t.at("details").at("k"), 2);
  EXPECT_EQ(t.at("details").at("intermediates_hold"), true);
  EXPECT_EQ(t.at("context").at("set"), nlohmann::json::array({1, 4}));
}

TEST(Json, ChecksAndThreshold) {
  const auto e = to_json(fmax_expansion_check());
  EXPECT_EQ(e.at("matches"), true);
  EXPECT_TRUE(e.at("mismatches").empty());
  const auto l = to_json(leading_term_bound_check(Which::kG));
  EXPECT_EQ(l.at("tight"), true);
  EXPECT_EQ(l.at("bound"), "-3/5000");

  ThresholdResult none;
  none.which = Which::kG;
  const auto t = to_json(none);
  EXPECT_TRUE(t.at("q0").is_null());
  EXPECT_EQ(t.at("status"), "scan-exhausted");
}

}  // namespace
}  // namespace c4ex
