#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "assortnet/errors.hpp"
#include "assortnet/graph.hpp"

namespace assortnet {

enum class DatasetFormat { Csv, Jsonl };

inline std::string_view format_name(DatasetFormat format) noexcept {
  return format == DatasetFormat::Csv ? "csv" : "jsonl";
}

/// Token -> label assignment applied when raw datasets are read. The bare
/// tokens "+" and "-" always map to themselves; by default "F" is Positive
/// and "M" is Negative, so reported alpha is oriented as the woman-coauthor
/// risk difference. Which real-world category counts as Positive is pure
/// configuration and is echoed in every report header.
class LabelMapping {
public:
  LabelMapping() {
    tokens_ = {{"+", GenderLabel::Positive},
               {"-", GenderLabel::Negative},
               {"F", GenderLabel::Positive},
               {"M", GenderLabel::Negative}};
    positive_token_ = "F";
    negative_token_ = "M";
  }

  /// Parses a spec like "F=+,M=-". Each entry assigns one token to one side;
  /// at least one token per side is required, and a token may not be
  /// assigned to both. The first token named per side becomes the canonical
  /// token used when writing datasets.
  static LabelMapping parse(std::string_view spec) {
    LabelMapping mapping;
    mapping.tokens_ = {{"+", GenderLabel::Positive},
                       {"-", GenderLabel::Negative}};
    mapping.positive_token_.clear();
    mapping.negative_token_.clear();

    std::string entry;
    std::istringstream stream{std::string(spec)};
    bool saw_entry = false;
    while (std::getline(stream, entry, ',')) {
      saw_entry = true;
      const auto eq = entry.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 2 != entry.size()) {
        throw ValidationError("bad mapping entry \"" + entry +
                              "\" (expected token=+ or token=-)");
      }
      const std::string token = entry.substr(0, eq);
      const char side = entry[eq + 1];
      if (side != '+' && side != '-') {
        throw ValidationError("bad mapping side in \"" + entry +
                              "\" (expected + or -)");
      }
      const GenderLabel label =
          side == '+' ? GenderLabel::Positive : GenderLabel::Negative;
      const auto it = mapping.tokens_.find(token);
      if (it != mapping.tokens_.end() && it->second != label) {
        throw ValidationError("token \"" + token +
                              "\" mapped to both sides");
      }
      mapping.tokens_.insert_or_assign(token, label);
      std::string& canonical = label == GenderLabel::Positive
                                   ? mapping.positive_token_
                                   : mapping.negative_token_;
      if (canonical.empty()) canonical = token;
    }

    if (!saw_entry) {
      throw ValidationError("empty label mapping");
    }
    if (mapping.positive_token_.empty() || mapping.negative_token_.empty()) {
      throw ValidationError(
          "label mapping must assign at least one token per side");
    }
    return mapping;
  }

  /// nullopt means the token is unknown to this mapping.
  std::optional<GenderLabel> map(std::string_view token) const {
    const auto it = tokens_.find(token);
    if (it == tokens_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& token_for(GenderLabel label) const noexcept {
    return label == GenderLabel::Positive ? positive_token_ : negative_token_;
  }

  std::string orientation() const {
    return positive_token_ + "=positive," + negative_token_ + "=negative";
  }

private:
  std::map<std::string, GenderLabel, std::less<>> tokens_;
  std::string positive_token_;
  std::string negative_token_;
};

/// One dataset row as read from disk, before labels are interpreted.
struct RawRecord {
  std::string paper_id;
  std::vector<std::string> label_tokens;  // one per author
};

namespace detail {

inline void strip_trailing_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline std::vector<RawRecord> read_csv_records(std::istream& in) {
  std::vector<RawRecord> records;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    strip_trailing_cr(line);
    if (line.empty()) continue;

    if (!saw_header) {
      if (line != "paper_id,labels") {
        throw ParseError("expected header \"paper_id,labels\"", line_no);
      }
      saw_header = true;
      continue;
    }

    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("expected two comma-separated fields", line_no);
    }
    if (line.find(',', comma + 1) != std::string::npos) {
      throw ParseError("too many fields (paper_id must not contain commas)",
                       line_no);
    }

    RawRecord record;
    record.paper_id = line.substr(0, comma);
    const std::string labels = line.substr(comma + 1);
    if (record.paper_id.empty()) {
      throw ParseError("empty paper_id", line_no);
    }
    if (labels.empty()) {
      throw ParseError("empty labels field", line_no);
    }
    for (const char token : labels) {
      record.label_tokens.emplace_back(1, token);
    }

    if (!seen_ids.insert(record.paper_id).second) {
      throw DuplicatePaperIdError(record.paper_id, line_no);
    }
    records.push_back(std::move(record));
  }

  if (!saw_header) {
    throw ParseError("missing header \"paper_id,labels\"");
  }
  return records;
}

inline std::vector<RawRecord> read_jsonl_records(std::istream& in) {
  std::vector<RawRecord> records;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    strip_trailing_cr(line);
    if (line.empty()) continue;

    nlohmann::json object;
    try {
      object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }

    if (!object.is_object() || !object.contains("paper_id") ||
        !object.contains("genders")) {
      throw ParseError(
          "expected an object with \"paper_id\" and \"genders\" keys",
          line_no);
    }
    if (!object["paper_id"].is_string()) {
      throw ParseError("\"paper_id\" must be a string", line_no);
    }
    if (!object["genders"].is_array() || object["genders"].empty()) {
      throw ParseError("\"genders\" must be a non-empty array", line_no);
    }

    RawRecord record;
    record.paper_id = object["paper_id"].get<std::string>();
    if (record.paper_id.empty()) {
      throw ParseError("empty paper_id", line_no);
    }
    for (const auto& token : object["genders"]) {
      if (!token.is_string() || token.get<std::string>().empty()) {
        throw ParseError("\"genders\" entries must be non-empty strings",
                         line_no);
      }
      record.label_tokens.push_back(token.get<std::string>());
    }

    if (!seen_ids.insert(record.paper_id).second) {
      throw DuplicatePaperIdError(record.paper_id, line_no);
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace detail

/// Reads raw dataset rows from a stream. Performs syntax checks only; label
/// interpretation happens in to_paper_records.
inline std::vector<RawRecord> read_records(std::istream& in,
                                           DatasetFormat format) {
  return format == DatasetFormat::Csv ? detail::read_csv_records(in)
                                      : detail::read_jsonl_records(in);
}

inline std::vector<RawRecord> read_records(const std::filesystem::path& path,
                                           DatasetFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open \"" + path.string() + "\" for reading");
  }
  return read_records(in, format);
}

/// Counters describing what ingest did with each input record. The dropped
/// counts plus the survivors always add back up to total_records; the
/// histogram and label totals describe the surviving records only.
struct IngestDiagnostics {
  std::size_t total_records = 0;
  std::size_t surviving_records = 0;
  std::size_t dropped_single_author = 0;
  std::size_t dropped_unknown_label = 0;
  std::map<std::size_t, std::size_t> papers_by_size;
  std::size_t positive_authors = 0;
  std::size_t negative_authors = 0;
};

struct IngestResult {
  std::vector<PaperRecord> records;
  IngestDiagnostics diagnostics;
  std::vector<std::string> warnings;
};

/// Interprets raw rows under a label mapping and the validation policy.
/// Records containing an unknown token are dropped whole (or, under
/// RejectDataset, abort the run): removing one author silently would change
/// every co-author's degree. Single-author records are dropped as well.
/// Throws AllRecordsDroppedError when nothing survives.
inline IngestResult to_paper_records(std::span<const RawRecord> raw,
                                     const LabelMapping& mapping,
                                     const ValidationPolicy& policy = {}) {
  IngestResult result;
  result.diagnostics.total_records = raw.size();

  for (const RawRecord& record : raw) {
    PaperRecord paper;
    paper.paper_id = record.paper_id;
    paper.author_labels.reserve(record.label_tokens.size());

    std::optional<std::string> unknown_token;
    for (const std::string& token : record.label_tokens) {
      const std::optional<GenderLabel> label = mapping.map(token);
      if (!label) {
        unknown_token = token;
        break;
      }
      paper.author_labels.push_back(*label);
    }

    if (unknown_token) {
      if (policy.on_unknown_label ==
          ValidationPolicy::UnknownLabel::RejectDataset) {
        throw ValidationError("paper \"" + record.paper_id +
                              "\" has unknown label token \"" +
                              *unknown_token + "\"");
      }
      ++result.diagnostics.dropped_unknown_label;
      result.warnings.push_back("dropped paper \"" + record.paper_id +
                                "\": unknown label token \"" +
                                *unknown_token + "\"");
      continue;
    }

    if (paper.author_labels.size() < 2) {
      ++result.diagnostics.dropped_single_author;
      result.warnings.push_back("dropped paper \"" + record.paper_id +
                                "\": single-author papers form no ties");
      continue;
    }

    ++result.diagnostics.surviving_records;
    ++result.diagnostics.papers_by_size[paper.author_labels.size()];
    for (const GenderLabel label : paper.author_labels) {
      if (label == GenderLabel::Positive) {
        ++result.diagnostics.positive_authors;
      } else {
        ++result.diagnostics.negative_authors;
      }
    }
    result.records.push_back(std::move(paper));
  }

  if (result.records.empty()) {
    throw AllRecordsDroppedError(
        raw.empty() ? "dataset contains no records"
                    : "every record was dropped during validation");
  }
  return result;
}

/// Writes paper records in either dataset format using the mapping's
/// canonical tokens. CSV packs one token character per author, so it
/// requires single-character tokens; JSONL has no such restriction.
inline void write_records(std::ostream& out,
                          std::span<const PaperRecord> records,
                          DatasetFormat format, const LabelMapping& mapping) {
  if (format == DatasetFormat::Csv) {
    if (mapping.token_for(GenderLabel::Positive).size() != 1 ||
        mapping.token_for(GenderLabel::Negative).size() != 1) {
      throw ValidationError("csv output requires single-character tokens");
    }
    out << "paper_id,labels\n";
    for (const PaperRecord& record : records) {
      out << record.paper_id << ',';
      for (const GenderLabel label : record.author_labels) {
        out << mapping.token_for(label);
      }
      out << '\n';
    }
  } else {
    for (const PaperRecord& record : records) {
      nlohmann::ordered_json object;
      object["paper_id"] = record.paper_id;
      auto& genders = object["genders"] = nlohmann::json::array();
      for (const GenderLabel label : record.author_labels) {
        genders.push_back(mapping.token_for(label));
      }
      out << object.dump() << '\n';
    }
  }
}

inline void write_records(const std::filesystem::path& path,
                          std::span<const PaperRecord> records,
                          DatasetFormat format, const LabelMapping& mapping) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open \"" + path.string() + "\" for writing");
  }
  write_records(out, records, format, mapping);
  if (!out) {
    throw IoError("failed writing \"" + path.string() + "\"");
  }
}

/// Reads an undirected labeled edge list: header "src,dst,label_src,
/// label_dst", one edge per row, labels interpreted under the mapping.
/// This is the input mode for graphs that are not unions of cliques.
inline std::vector<LabeledEdge> read_edge_list(std::istream& in,
                                               const LabelMapping& mapping) {
  std::vector<LabeledEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_trailing_cr(line);
    if (line.empty()) continue;

    if (!saw_header) {
      if (line != "src,dst,label_src,label_dst") {
        throw ParseError("expected header \"src,dst,label_src,label_dst\"",
                         line_no);
      }
      saw_header = true;
      continue;
    }

    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      throw ParseError("expected four comma-separated fields", line_no);
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError("empty node name", line_no);
    }

    auto to_label = [&](const std::string& token) {
      const std::optional<GenderLabel> label = mapping.map(token);
      if (!label) {
        throw ParseError("unknown label token \"" + token + "\"", line_no);
      }
      return *label;
    };

    LabeledEdge edge;
    edge.src = fields[0];
    edge.dst = fields[1];
    edge.src_label = to_label(fields[2]);
    edge.dst_label = to_label(fields[3]);
    edges.push_back(std::move(edge));
  }

  if (!saw_header) {
    throw ParseError("missing header \"src,dst,label_src,label_dst\"");
  }
  return edges;
}

inline std::vector<LabeledEdge> read_edge_list(
    const std::filesystem::path& path, const LabelMapping& mapping) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open \"" + path.string() + "\" for reading");
  }
  return read_edge_list(in, mapping);
}

}  // namespace assortnet
