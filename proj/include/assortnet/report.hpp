#pragma once

#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "assortnet/graph.hpp"
#include "assortnet/ingest.hpp"
#include "assortnet/metrics.hpp"

namespace assortnet {

inline constexpr std::string_view kToolName = "assortnet";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Default scale values certified by the check command.
inline const std::vector<double> kDefaultCValues = {0.5, 1.0, 3.0};

/// Everything one compute run reports. Every number here is a pure function
/// of the input dataset and flags, so reruns serialize byte-identically;
/// there are no timestamps or environment-dependent fields.
struct ReportDocument {
  std::string tool_version{kToolVersion};
  std::string label_orientation;
  std::string source;  // dataset path or "edge list"
  std::optional<IngestDiagnostics> ingest;  // record datasets only
  std::size_t node_count = 0;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
  std::int64_t directed_edge_count = 0;
  MetricReport metrics;
  std::optional<CliqueCountTable> clique_counts;  // clique networks only
  std::optional<EquivalenceReport> equivalence;   // absent when undefined
};

namespace detail {

inline std::optional<EquivalenceReport> try_equivalence(
    std::span<const AuthorNode> nodes, std::span<const double> c_values) {
  try {
    return equivalence_report(nodes, c_values);
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline ReportDocument build_report(const CliqueNetwork& network,
                                   const IngestDiagnostics& diagnostics,
                                   const LabelMapping& mapping,
                                   std::span<const double> c_values,
                                   std::string source) {
  ReportDocument doc;
  doc.label_orientation = mapping.orientation();
  doc.source = std::move(source);
  doc.ingest = diagnostics;
  doc.node_count = network.nodes().size();
  doc.positive_count = network.positive_count();
  doc.negative_count = network.negative_count();
  doc.directed_edge_count = network.directed_edge_count();
  doc.metrics = compute_metric_report(network.nodes());
  doc.clique_counts = clique_count_table(network);
  doc.equivalence = detail::try_equivalence(network.nodes(), c_values);
  return doc;
}

inline ReportDocument build_report(const ReciprocatedGraph& graph,
                                   const LabelMapping& mapping,
                                   std::span<const double> c_values,
                                   std::string source) {
  ReportDocument doc;
  doc.label_orientation = mapping.orientation();
  doc.source = std::move(source);
  doc.node_count = graph.nodes().size();
  doc.positive_count = graph.positive_count();
  doc.negative_count = graph.negative_count();
  doc.directed_edge_count = graph.directed_edge_count();
  doc.metrics = compute_metric_report(graph.nodes());
  doc.equivalence = detail::try_equivalence(graph.nodes(), c_values);
  return doc;
}

namespace detail {

inline nlohmann::ordered_json json_or_null(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

inline nlohmann::ordered_json mixing_json(const MixingMatrix& m) {
  nlohmann::ordered_json out;
  out["e_pp"] = m.e_pp;
  out["e_pn"] = m.e_pn;
  out["e_np"] = m.e_np;
  out["e_nn"] = m.e_nn;
  out["a_p"] = m.a_p;
  out["a_n"] = m.a_n;
  out["b_p"] = m.b_p;
  out["b_n"] = m.b_n;
  return out;
}

inline std::string fixed4(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

inline std::string fixed4(const std::optional<double>& value,
                          std::string_view fallback = "undefined") {
  return value ? fixed4(*value) : std::string(fallback);
}

inline std::string scientific3(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3e", value);
  return buffer;
}

}  // namespace detail

inline nlohmann::ordered_json equivalence_json(const EquivalenceReport& eq) {
  nlohmann::ordered_json out;
  out["c_values"] = eq.c_values;
  out["r_values"] = eq.r_values;
  out["gaps"] = eq.gaps;
  out["max_gap"] = eq.max_gap;
  out["tolerance"] = kEquivalenceTolerance;
  out["certified"] = eq.certified();
  out["corollary_applies"] = eq.corollary_applies;
  out["unit_gap"] = detail::json_or_null(eq.unit_gap);
  out["alpha"] = eq.alpha;
  return out;
}

inline nlohmann::ordered_json report_json(const ReportDocument& doc) {
  nlohmann::ordered_json out;
  out["tool"] = {{"name", kToolName}, {"version", doc.tool_version}};
  out["label_mapping"] = doc.label_orientation;
  out["source"] = doc.source;

  if (doc.ingest) {
    nlohmann::ordered_json dataset;
    dataset["total_records"] = doc.ingest->total_records;
    dataset["surviving_records"] = doc.ingest->surviving_records;
    dataset["dropped_single_author"] = doc.ingest->dropped_single_author;
    dataset["dropped_unknown_label"] = doc.ingest->dropped_unknown_label;
    nlohmann::ordered_json histogram;
    for (const auto& [size, count] : doc.ingest->papers_by_size) {
      histogram[std::to_string(size)] = count;
    }
    dataset["papers_by_size"] = histogram;
    dataset["authors"] = {{"positive", doc.ingest->positive_authors},
                          {"negative", doc.ingest->negative_authors}};
    out["dataset"] = dataset;
  } else {
    out["dataset"] = nullptr;
  }

  out["network"] = {{"nodes", doc.node_count},
                    {"positive", doc.positive_count},
                    {"negative", doc.negative_count},
                    {"directed_edges", doc.directed_edge_count}};

  nlohmann::ordered_json metrics;
  metrics["alpha"] = detail::json_or_null(doc.metrics.alpha);
  metrics["p_risk"] = detail::json_or_null(doc.metrics.p_risk);
  metrics["q_risk"] = detail::json_or_null(doc.metrics.q_risk);
  metrics["r_unit"] = detail::json_or_null(doc.metrics.r_unit);
  metrics["r_inverse_degree"] =
      detail::json_or_null(doc.metrics.r_inverse_degree);
  metrics["equivalence_gap"] = detail::json_or_null(doc.metrics.equivalence_gap);
  metrics["undefined_reason"] = doc.metrics.undefined_reason.empty()
                                    ? nlohmann::ordered_json(nullptr)
                                    : nlohmann::ordered_json(
                                          doc.metrics.undefined_reason);
  out["metrics"] = metrics;

  out["mixing_unit"] = detail::mixing_json(doc.metrics.mixing_unit);
  out["mixing_inverse_degree"] = detail::mixing_json(doc.metrics.mixing_weighted);

  if (doc.clique_counts) {
    nlohmann::ordered_json counts;
    counts["k_star"] = doc.clique_counts->k_star();
    counts["total_cliques"] = doc.clique_counts->clique_total();
    auto& cells = counts["cliques"] = nlohmann::json::array();
    for (const auto& [cell, count] : doc.clique_counts->cells()) {
      cells.push_back({{"positive", cell.first},
                       {"negative", cell.second},
                       {"count", count}});
    }
    out["clique_counts"] = counts;
  } else {
    out["clique_counts"] = nullptr;
  }

  if (doc.equivalence) {
    out["equivalence"] = equivalence_json(*doc.equivalence);
  } else {
    out["equivalence"] = nullptr;
  }
  return out;
}

inline std::string equivalence_text(const EquivalenceReport& eq) {
  std::string out;
  out += "equivalence (inverse-degree weighting vs alpha)\n";
  out += "  alpha                " + detail::fixed4(eq.alpha) + "\n";
  for (std::size_t i = 0; i < eq.c_values.size(); ++i) {
    out += "  c=" + detail::fixed4(eq.c_values[i]) +
           "  r=" + detail::fixed4(eq.r_values[i]) +
           "  gap=" + detail::scientific3(eq.gaps[i]) + "\n";
  }
  out += "  corollary applies    ";
  out += eq.corollary_applies ? "yes (all cliques share one size)" : "no";
  out += "\n";
  if (eq.unit_gap) {
    out += "  unit-weight gap      " + detail::scientific3(*eq.unit_gap) + "\n";
  }
  out += "  max gap              " + detail::scientific3(eq.max_gap) + "\n";
  out += "  certified            ";
  out += eq.certified() ? "yes" : "NO";
  out += "\n";
  return out;
}

namespace detail {

inline std::string mixing_text(const MixingMatrix& m, std::string_view title) {
  std::string out;
  out += "mixing matrix (";
  out += title;
  out += ")  rows: source label, cols: target label\n";
  out += "        +        -        a\n";
  out += "  +  " + fixed4(m.e_pp) + "   " + fixed4(m.e_pn) + "   " +
         fixed4(m.a_p) + "\n";
  out += "  -  " + fixed4(m.e_np) + "   " + fixed4(m.e_nn) + "   " +
         fixed4(m.a_n) + "\n";
  out += "  b  " + fixed4(m.b_p) + "   " + fixed4(m.b_n) + "\n";
  return out;
}

}  // namespace detail

inline std::string report_text(const ReportDocument& doc) {
  std::string out;
  out += std::string(kToolName) + " " + doc.tool_version + "\n";
  out += "label mapping: " + doc.label_orientation + "\n";
  out += "source: " + doc.source + "\n\n";

  if (doc.ingest) {
    const IngestDiagnostics& d = *doc.ingest;
    out += "dataset\n";
    out += "  records              " + std::to_string(d.total_records) +
           " total, " + std::to_string(d.surviving_records) + " surviving\n";
    out += "  dropped              " +
           std::to_string(d.dropped_single_author) + " single-author, " +
           std::to_string(d.dropped_unknown_label) + " unknown-label\n";
    out += "  papers by size      ";
    for (const auto& [size, count] : d.papers_by_size) {
      out += " " + std::to_string(size) + ":" + std::to_string(count);
    }
    out += "\n";
    out += "  authors              " + std::to_string(d.positive_authors) +
           " positive, " + std::to_string(d.negative_authors) +
           " negative\n\n";
  }

  out += "network\n";
  out += "  nodes                " + std::to_string(doc.node_count) + " (" +
         std::to_string(doc.positive_count) + " positive, " +
         std::to_string(doc.negative_count) + " negative)\n";
  out += "  directed edges       " + std::to_string(doc.directed_edge_count) +
         "\n\n";

  out += "metrics\n";
  if (doc.metrics.defined()) {
    out += "  alpha                " + detail::fixed4(doc.metrics.alpha) +
           "   (p_risk " + detail::fixed4(doc.metrics.p_risk) + ", q_risk " +
           detail::fixed4(doc.metrics.q_risk) + ")\n";
    out += "  r (unit weights)     " + detail::fixed4(doc.metrics.r_unit) +
           "\n";
    out += "  r (inverse degree)   " +
           detail::fixed4(doc.metrics.r_inverse_degree) + "\n";
    out += "  equivalence gap      " +
           detail::scientific3(*doc.metrics.equivalence_gap) + "\n";
  } else {
    out += "  alpha                undefined\n";
    out += "  r                    undefined\n";
    out += "  reason               " + doc.metrics.undefined_reason + "\n";
  }
  out += "\n";

  out += detail::mixing_text(doc.metrics.mixing_unit, "unit weights");
  out += detail::mixing_text(doc.metrics.mixing_weighted, "inverse degree");
  out += "\n";

  if (doc.clique_counts) {
    out += "clique counts (k_star " +
           std::to_string(doc.clique_counts->k_star()) + ", " +
           std::to_string(doc.clique_counts->clique_total()) + " cliques)\n";
    for (const auto& [cell, count] : doc.clique_counts->cells()) {
      out += "  (" + std::to_string(cell.first) + " positive, " +
             std::to_string(cell.second) + " negative): " +
             std::to_string(count) + "\n";
    }
    out += "\n";
  }

  if (doc.equivalence) {
    out += equivalence_text(*doc.equivalence);
  }
  return out;
}

}  // namespace assortnet
