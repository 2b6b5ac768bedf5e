#include <string>

#include <catch2/catch.hpp>

#include "json.hpp"

#include "assortnet/assortnet.hpp"
#include "fixtures.hpp"

using namespace assortnet;

namespace {

ReportDocument assortative_report() {
  const ReciprocatedGraph graph =
      build_reciprocated_graph(fixtures::assortative_six());
  return build_report(graph, LabelMapping{}, kDefaultCValues, "edges");
}

ReportDocument dataset_report() {
  const std::vector<RawRecord> raw = {
      {"p1", {"F", "F", "M"}}, {"p2", {"M", "M"}}, {"p3", {"F"}},
      {"p4", {"F", "M"}}};
  const IngestResult ingest = to_paper_records(raw, LabelMapping{});
  const BuildResult built = build_network(ingest.records);
  return build_report(built.network, ingest.diagnostics, LabelMapping{},
                      kDefaultCValues, "dataset.csv");
}

std::string fixed4(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

}  // namespace

TEST_CASE("json report carries the metric fields") {
  const nlohmann::ordered_json json = report_json(assortative_report());

  CHECK(json["tool"]["name"] == "assortnet");
  CHECK(json["label_mapping"] == "F=positive,M=negative");
  CHECK(json["dataset"].is_null());
  CHECK(json["network"]["nodes"] == 6);
  CHECK(json["network"]["directed_edges"] == 14);
  CHECK(json["metrics"]["alpha"].get<double>() ==
        Approx(7.0 / 9.0).epsilon(0).margin(1e-12));
  CHECK(json["metrics"]["r_unit"].get<double>() ==
        Approx(5.0 / 7.0).epsilon(0).margin(1e-12));
  CHECK(json["metrics"]["undefined_reason"].is_null());
  CHECK(json["clique_counts"].is_null());
  CHECK(json["equivalence"]["certified"] == true);
  CHECK(json["equivalence"]["corollary_applies"] == false);
}

TEST_CASE("json report for a record dataset includes ingest diagnostics") {
  const nlohmann::ordered_json json = report_json(dataset_report());

  CHECK(json["dataset"]["total_records"] == 4);
  CHECK(json["dataset"]["surviving_records"] == 3);
  CHECK(json["dataset"]["dropped_single_author"] == 1);
  CHECK(json["dataset"]["papers_by_size"]["2"] == 2);
  CHECK(json["dataset"]["papers_by_size"]["3"] == 1);
  CHECK(json["clique_counts"]["total_cliques"] == 3);
  CHECK(json["clique_counts"]["k_star"] == 3);
}

TEST_CASE("report serialization is reproducible") {
  const std::string first = report_json(assortative_report()).dump(2);
  const std::string second = report_json(assortative_report()).dump(2);
  CHECK(first == second);

  const std::string text_first = report_text(dataset_report());
  const std::string text_second = report_text(dataset_report());
  CHECK(text_first == text_second);
}

TEST_CASE("text report prints the json values at four decimals") {
  const ReportDocument doc = assortative_report();
  const nlohmann::ordered_json json = report_json(doc);
  const std::string text = report_text(doc);

  for (const char* key : {"alpha", "p_risk", "q_risk", "r_unit",
                          "r_inverse_degree"}) {
    const double value = json["metrics"][key].get<double>();
    INFO(key);
    CHECK(text.find(fixed4(value)) != std::string::npos);
  }
  for (const char* key : {"e_pp", "e_pn", "a_p"}) {
    const double value = json["mixing_unit"][key].get<double>();
    INFO(key);
    CHECK(text.find(fixed4(value)) != std::string::npos);
  }
}

TEST_CASE("undefined metrics serialize as null with a reason") {
  const std::vector<RawRecord> raw = {{"p1", {"M", "M"}},
                                      {"p2", {"M", "M", "M"}}};
  const IngestResult ingest = to_paper_records(raw, LabelMapping{});
  const BuildResult built = build_network(ingest.records);
  const ReportDocument doc =
      build_report(built.network, ingest.diagnostics, LabelMapping{},
                   kDefaultCValues, "dataset.csv");
  const nlohmann::ordered_json json = report_json(doc);

  CHECK(json["metrics"]["alpha"].is_null());
  CHECK(json["metrics"]["r_unit"].is_null());
  CHECK(json["metrics"]["r_inverse_degree"].is_null());
  CHECK(json["metrics"]["undefined_reason"].is_string());
  CHECK(json["equivalence"].is_null());
  // The serialized document contains no NaN anywhere.
  CHECK(json.dump().find("nan") == std::string::npos);

  const std::string text = report_text(doc);
  CHECK(text.find("undefined") != std::string::npos);
}

TEST_CASE("equivalence text marks certification failures") {
  const ReciprocatedGraph graph =
      build_reciprocated_graph(fixtures::uncertifiable_three());
  const ReportDocument doc =
      build_report(graph, LabelMapping{}, kDefaultCValues, "edges");
  REQUIRE(doc.equivalence.has_value());
  CHECK_FALSE(doc.equivalence->certified());
  const std::string text = equivalence_text(*doc.equivalence);
  CHECK(text.find("certified            NO") != std::string::npos);
}
