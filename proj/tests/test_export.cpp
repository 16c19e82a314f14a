#include <gtest/gtest.h>

#include <json.hpp>
#include <vector>

#include "partgraph/export.hpp"

namespace {

std::vector<partgraph::NSummary> summaries(int max_n) {
  std::vector<partgraph::NSummary> rows;
  for (int n = 1; n <= max_n; ++n) {
    const auto g = partgraph::build_graph(n);
    rows.push_back(partgraph::summarize(g, partgraph::thickness_profile(g)));
  }
  return rows;
}

}  // namespace

TEST(ProfileCsv, FourAndRoundTrip) {
  const auto g = partgraph::build_graph(4);
  const auto prof = partgraph::thickness_profile(g);
  const auto csv = partgraph::profile_csv(g, prof);
  EXPECT_EQ(csv, "partition,tau\n\"4\",1\n\"3,1\",2\n\"2,2\",2\n\"2,1,1\",2\n\"1,1,1,1\",1\n");
  const auto back = partgraph::parse_profile_csv(4, csv);
  EXPECT_EQ(back.tau, prof.tau);
  EXPECT_EQ(back.max_locus, prof.max_locus);
}

TEST(ProfileCsv, RejectsReorderedRows) {
  EXPECT_THROW(partgraph::parse_profile_csv(2, "partition,tau\n\"1,1\",1\n\"2\",1\n"), std::runtime_error);
  EXPECT_THROW(partgraph::parse_profile_csv(2, "partition,tau\n\"2\",1\n"), std::runtime_error);
  EXPECT_THROW(partgraph::parse_profile_csv(2, "tau\n"), std::runtime_error);
}

TEST(ProfileJson, Fields) {
  const auto g = partgraph::build_graph(4);
  const auto j = nlohmann::json::parse(partgraph::profile_json(g, partgraph::thickness_profile(g)));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["tau_max"], 2);
  EXPECT_EQ(j["max_locus"], nlohmann::json::array({"3,1", "2,2", "2,1,1"}));
  EXPECT_EQ(j["tau"]["2,2"], 2);
  EXPECT_EQ(j["tau"].size(), 5U);
}

TEST(ZoneJson, Fields) {
  const auto g = partgraph::build_graph(7);
  const auto fw = partgraph::boundary_framework(g);
  const auto z = partgraph::decompose(g, fw, partgraph::thickness_profile(g), 3);
  const auto text = partgraph::zone_json(g, z);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["r"], 3);
  EXPECT_EQ(j["core"].size(), 4U);
  EXPECT_EQ(j["components"][0]["boundary_attached"], false);
  // Keys appear in the documented order.
  EXPECT_LT(text.find("\"threshold\""), text.find("\"exact\""));
  EXPECT_LT(text.find("\"shell\""), text.find("\"core\""));
  EXPECT_LT(text.find("\"core\""), text.find("\"components\""));
}

TEST(FrameworkJson, Families) {
  const auto g = partgraph::build_graph(5);
  const auto j = nlohmann::json::parse(
      partgraph::framework_json(g, partgraph::boundary_framework(g), partgraph::self_conjugate_axis(5)));
  EXPECT_EQ(j["left_edge"], nlohmann::json::array({"4,1", "3,2"}));
  EXPECT_EQ(j["right_edge"], nlohmann::json::array({"2,1,1,1", "2,2,1"}));
  EXPECT_EQ(j["antennas"], nlohmann::json::array({"5", "1,1,1,1,1"}));
  EXPECT_EQ(j["self_conjugate_axis"], nlohmann::json::array({"3,1,1"}));
}

TEST(ExportTables, FullRange) {
  const auto rows = summaries(30);
  const auto t = partgraph::export_tables(rows);
  EXPECT_EQ(t.first_occurrences_csv, "r,n_r\n2,4\n3,7\n4,11\n5,16\n6,22\n7,29\n");
  EXPECT_NE(t.summary_csv.find("\n30,5604,7,15\n"), std::string::npos);
  EXPECT_EQ(t.summary_csv.rfind("n,p(n),tau_max,|M_n|\n", 0), 0U);

  const auto loci = nlohmann::json::parse(t.max_locus_json);
  ASSERT_EQ(loci.size(), 6U);
  const auto& at11 = loci[2];
  EXPECT_EQ(at11["n"], 11);
  EXPECT_EQ(at11["members"].size(), 5U);
  const auto members = at11["members"].get<std::vector<std::string>>();
  EXPECT_NE(std::find(members.begin(), members.end(), "5,3,2,1"), members.end());
  EXPECT_NE(std::find(members.begin(), members.end(), "4,4,2,1"), members.end());
}

TEST(ExportTables, ShortRanges) {
  EXPECT_EQ(partgraph::export_tables(summaries(6)).first_occurrences_csv, "r,n_r\n2,4\n");
  EXPECT_EQ(partgraph::export_tables(summaries(3)).first_occurrences_csv,
            "r,n_r\n# no regime of order r >= 2 occurs for 1 <= n <= 3\n");
}

TEST(ExportTables, IncompleteRangeRejected) {
  auto rows = summaries(5);
  rows.erase(rows.begin());
  EXPECT_THROW(partgraph::export_tables(rows), std::domain_error);
}

TEST(LocusStatsJson, Fields) {
  const auto g = partgraph::build_graph(7);
  const auto fw = partgraph::boundary_framework(g);
  const auto st = partgraph::locus_statistics(g, fw, partgraph::thickness_profile(g).max_locus);
  const auto j = nlohmann::json::parse(partgraph::locus_stats_json(st));
  EXPECT_EQ(j["antenna_distance"]["min"], 3);
  EXPECT_EQ(j["size"], 4);
}
