// Command-line front end: ingest a co-authorship dataset (or a labeled edge
// list), report homophily/assortativity metrics, certify the inverse-degree
// equivalence, and generate synthetic datasets.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "assortnet/assortnet.hpp"

namespace {

using namespace assortnet;

// Exit codes: 0 success (including in-band undefined metrics), 1 I/O or
// parse errors, 2 validation errors, 3 certification failure.
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCertificationFailed = 3;

struct InputOptions {
  std::string dataset_path;
  std::string edges_path;
  std::string format = "csv";
  bool format_given = false;
  std::string mapping_spec;
};

DatasetFormat resolve_format(const InputOptions& opts,
                             const std::string& path) {
  if (!opts.format_given) {
    if (path.ends_with(".jsonl") || path.ends_with(".ndjson")) {
      return DatasetFormat::Jsonl;
    }
    return DatasetFormat::Csv;
  }
  return opts.format == "jsonl" ? DatasetFormat::Jsonl : DatasetFormat::Csv;
}

LabelMapping resolve_mapping(const InputOptions& opts) {
  return opts.mapping_spec.empty() ? LabelMapping{}
                                   : LabelMapping::parse(opts.mapping_spec);
}

std::vector<double> parse_c_values(const std::string& spec) {
  std::vector<double> values;
  std::string entry;
  std::istringstream stream(spec);
  while (std::getline(stream, entry, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(entry, &used);
      if (used != entry.size()) throw std::invalid_argument(entry);
      values.push_back(value);
    } catch (const std::exception&) {
      throw ValidationError("bad c value \"" + entry + "\"");
    }
    if (values.back() <= 0.0) {
      throw ValidationError("c values must be positive");
    }
  }
  if (values.empty()) {
    throw ValidationError("at least one c value is required");
  }
  return values;
}

// Loads either input mode and produces the report document.
ReportDocument load_report(const InputOptions& opts,
                           std::span<const double> c_values) {
  if (opts.dataset_path.empty() == opts.edges_path.empty()) {
    throw ValidationError(
        "provide exactly one input: a dataset path or --edges <path>");
  }
  const LabelMapping mapping = resolve_mapping(opts);

  if (!opts.edges_path.empty()) {
    const std::vector<LabeledEdge> edges =
        read_edge_list(std::filesystem::path(opts.edges_path), mapping);
    const ReciprocatedGraph graph = build_reciprocated_graph(edges);
    return build_report(graph, mapping, c_values, opts.edges_path);
  }

  const DatasetFormat format = resolve_format(opts, opts.dataset_path);
  const std::vector<RawRecord> raw =
      read_records(std::filesystem::path(opts.dataset_path), format);
  const IngestResult ingest = to_paper_records(raw, mapping);
  for (const std::string& warning : ingest.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  const BuildResult built = build_network(ingest.records);
  return build_report(built.network, ingest.diagnostics, mapping, c_values,
                      opts.dataset_path);
}

int run_compute(const InputOptions& opts, const std::string& out_format,
                const std::string& c_spec) {
  const std::vector<double> c_values = parse_c_values(c_spec);
  const ReportDocument doc = load_report(opts, c_values);
  if (out_format == "json") {
    std::cout << report_json(doc).dump(2) << "\n";
  } else {
    std::cout << report_text(doc);
  }
  return kExitOk;
}

int run_check(const InputOptions& opts, const std::string& out_format,
              const std::string& c_spec) {
  const std::vector<double> c_values = parse_c_values(c_spec);
  const ReportDocument doc = load_report(opts, c_values);
  if (!doc.equivalence) {
    // equivalence is absent exactly when the metrics are undefined
    throw ValidationError("cannot certify: " +
                          doc.metrics.undefined_reason);
  }
  if (out_format == "json") {
    std::cout << equivalence_json(*doc.equivalence).dump(2) << "\n";
  } else {
    std::cout << equivalence_text(*doc.equivalence);
  }
  return doc.equivalence->certified() ? kExitOk : kExitCertificationFailed;
}

struct SynthOptions {
  std::string output_path;
  std::size_t papers = 0;
  std::optional<int> size;
  std::string size_dist;
  double pfrac = 0.5;
  std::uint64_t seed = 0;
};

int run_synth(const SynthOptions& opts, const InputOptions& common) {
  SynthConfig config;
  config.num_papers = opts.papers;
  config.positive_fraction = opts.pfrac;
  config.seed = opts.seed;
  if (opts.size) {
    config.fixed_size = *opts.size;
  } else if (!opts.size_dist.empty()) {
    const auto colon = opts.size_dist.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(opts.size_dist);
      config.size_min = std::stoi(opts.size_dist.substr(0, colon));
      config.size_max = std::stoi(opts.size_dist.substr(colon + 1));
    } catch (const std::exception&) {
      throw ValidationError("bad --size-dist \"" + opts.size_dist +
                            "\" (expected lo:hi)");
    }
  }

  const std::vector<PaperRecord> records = generate(config);
  const LabelMapping mapping = resolve_mapping(common);
  const DatasetFormat format = resolve_format(common, opts.output_path);
  write_records(std::filesystem::path(opts.output_path), records, format,
                mapping);
  std::cerr << "wrote " << records.size() << " records to "
            << opts.output_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homophily (alpha) and assortativity (r) metrics for "
               "co-authorship networks of disjoint cliques"};
  app.require_subcommand(1);

  InputOptions compute_in, check_in, synth_in;
  std::string compute_out = "text", check_out = "text";
  std::string compute_c = "0.5,1,3", check_c = "0.5,1,3";
  SynthOptions synth_opts;

  auto add_input_flags = [](CLI::App* cmd, InputOptions& in,
                            bool with_dataset) {
    if (with_dataset) {
      cmd->add_option("input", in.dataset_path,
                      "dataset file (csv or jsonl)");
      cmd->add_option("--edges", in.edges_path,
                      "labeled undirected edge list "
                      "(csv: src,dst,label_src,label_dst)");
    }
    cmd->add_option("--format", in.format, "dataset format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->each([&in](const std::string&) { in.format_given = true; });
    cmd->add_option("--mapping", in.mapping_spec,
                    "label token mapping, e.g. F=+,M=-");
  };

  CLI::App* compute =
      app.add_subcommand("compute", "compute the full metric report");
  add_input_flags(compute, compute_in, true);
  compute->add_option("--out", compute_out, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--c-values", compute_c,
                      "comma-separated inverse-degree scales");

  CLI::App* check = app.add_subcommand(
      "check", "certify that inverse-degree weighting makes r equal alpha");
  add_input_flags(check, check_in, true);
  check->add_option("--out", check_out, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--c-values", check_c,
                    "comma-separated inverse-degree scales");

  CLI::App* synth =
      app.add_subcommand("synth", "generate a random clique dataset");
  synth->add_option("output", synth_opts.output_path, "output dataset path")
      ->required();
  synth->add_option("--papers", synth_opts.papers, "number of records")
      ->required();
  CLI::Option* size_opt =
      synth->add_option("--size", synth_opts.size, "fixed clique size");
  synth->add_option("--size-dist", synth_opts.size_dist,
                    "uniform clique size range lo:hi (default 2:12)")
      ->excludes(size_opt);
  synth->add_option("--pfrac", synth_opts.pfrac,
                    "per-author probability of a Positive label");
  synth->add_option("--seed", synth_opts.seed, "generator seed");
  add_input_flags(synth, synth_in, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (compute->parsed()) {
      return run_compute(compute_in, compute_out, compute_c);
    }
    if (check->parsed()) {
      return run_check(check_in, check_out, check_c);
    }
    return run_synth(synth_opts, synth_in);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UndefinedMetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
