#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "assortnet/errors.hpp"

namespace assortnet {

/// Binary characteristic carried by every individual. In the co-authorship
/// application Positive conventionally stands for women authors, but nothing
/// in the math depends on that orientation.
enum class GenderLabel : std::uint8_t { Positive, Negative };

constexpr GenderLabel opposite(GenderLabel label) noexcept {
  return label == GenderLabel::Positive ? GenderLabel::Negative
                                        : GenderLabel::Positive;
}

constexpr char label_symbol(GenderLabel label) noexcept {
  return label == GenderLabel::Positive ? '+' : '-';
}

/// One publication: an identifier plus the labels of its authors in author
/// order. Single-author records are representable but are dropped by network
/// construction, since an isolated individual has no ties to measure.
struct PaperRecord {
  std::string paper_id;
  std::vector<GenderLabel> author_labels;
};

/// A network node together with its tie counts: `pi` edges to Positive
/// individuals, `nu` edges to Negative ones. The out-degree is their sum.
struct AuthorNode {
  std::size_t node_id = 0;
  GenderLabel label = GenderLabel::Positive;
  std::int64_t pi = 0;
  std::int64_t nu = 0;

  constexpr std::int64_t degree() const noexcept { return pi + nu; }
};

/// Dataset validation knobs. Single-author records are always dropped; the
/// only configurable part is what to do when a label token is unknown.
/// Rejecting the whole record (default) keeps the remaining co-author
/// degrees intact; silently removing one author would bias every metric.
struct ValidationPolicy {
  enum class UnknownLabel { RejectRecord, RejectDataset };
  UnknownLabel on_unknown_label = UnknownLabel::RejectRecord;
};

/// Author counts of one clique: i positive members, j negative members.
struct CliqueComposition {
  int positive = 0;
  int negative = 0;

  constexpr int size() const noexcept { return positive + negative; }

  friend constexpr bool operator==(const CliqueComposition&,
                                   const CliqueComposition&) = default;
  friend constexpr auto operator<=>(const CliqueComposition&,
                                    const CliqueComposition&) = default;
};

struct BuildResult;

/// Immutable disjoint union of cliques, one clique per paper. Every pair of
/// authors on a paper is tied by a reciprocated (two-way) edge, so a member
/// of a clique with composition (i, j) has degree i + j - 1.
class CliqueNetwork {
public:
  struct Clique {
    std::string paper_id;
    CliqueComposition composition;
    std::vector<std::size_t> members;  // node ids, in author order
  };

  std::span<const AuthorNode> nodes() const noexcept { return nodes_; }
  std::span<const Clique> cliques() const noexcept { return cliques_; }

  std::size_t positive_count() const noexcept { return n_positive_; }
  std::size_t negative_count() const noexcept { return n_negative_; }

  /// Total number of directed edges, i.e. the sum of all out-degrees.
  std::int64_t directed_edge_count() const noexcept {
    std::int64_t total = 0;
    for (const AuthorNode& node : nodes_) total += node.degree();
    return total;
  }

  /// True when every clique has the same number of members.
  bool uniform_clique_size() const noexcept {
    if (cliques_.empty()) return true;
    const int first = cliques_.front().composition.size();
    return std::all_of(cliques_.begin(), cliques_.end(),
                       [first](const Clique& c) {
                         return c.composition.size() == first;
                       });
  }

private:
  friend BuildResult build_network(std::span<const PaperRecord> records,
                                   const ValidationPolicy& policy);

  std::vector<AuthorNode> nodes_;
  std::vector<Clique> cliques_;
  std::size_t n_positive_ = 0;
  std::size_t n_negative_ = 0;
};

struct BuildResult {
  CliqueNetwork network;
  std::vector<std::string> warnings;  // one entry per dropped record
};

/// Builds the disjoint-clique network for a set of paper records. Dropped
/// records are reported as warnings; throws EmptyNetworkError when nothing
/// survives. The record order and the author order within a record do not
/// affect any downstream metric, which depend only on clique compositions.
inline BuildResult build_network(std::span<const PaperRecord> records,
                                 [[maybe_unused]] const ValidationPolicy&
                                     policy = {}) {
  BuildResult result;
  CliqueNetwork& net = result.network;

  for (const PaperRecord& record : records) {
    if (record.author_labels.empty()) {
      throw ValidationError("record \"" + record.paper_id +
                            "\" has no authors");
    }
    if (record.author_labels.size() < 2) {
      result.warnings.push_back("dropped paper \"" + record.paper_id +
                                "\": single-author papers form no ties");
      continue;
    }

    CliqueComposition comp;
    for (GenderLabel label : record.author_labels) {
      if (label == GenderLabel::Positive) {
        ++comp.positive;
      } else {
        ++comp.negative;
      }
    }

    CliqueNetwork::Clique clique;
    clique.paper_id = record.paper_id;
    clique.composition = comp;
    clique.members.reserve(record.author_labels.size());

    for (GenderLabel label : record.author_labels) {
      AuthorNode node;
      node.node_id = net.nodes_.size();
      node.label = label;
      // Within a clique of composition (i, j), a positive member ties to the
      // i - 1 other positives and all j negatives; mirrored for negatives.
      if (label == GenderLabel::Positive) {
        node.pi = comp.positive - 1;
        node.nu = comp.negative;
        ++net.n_positive_;
      } else {
        node.pi = comp.positive;
        node.nu = comp.negative - 1;
        ++net.n_negative_;
      }
      clique.members.push_back(node.node_id);
      net.nodes_.push_back(node);
    }
    net.cliques_.push_back(std::move(clique));
  }

  if (net.nodes_.empty()) {
    throw EmptyNetworkError("no record survived validation");
  }
  return result;
}

/// One undirected labeled edge of a general reciprocated graph.
struct LabeledEdge {
  std::string src;
  std::string dst;
  GenderLabel src_label = GenderLabel::Positive;
  GenderLabel dst_label = GenderLabel::Positive;
};

/// A labeled graph in which every tie is reciprocated. More general than
/// CliqueNetwork: connected components need not be cliques. Constructed from
/// an undirected edge list; metrics consume the node table it exposes.
class ReciprocatedGraph {
public:
  std::span<const AuthorNode> nodes() const noexcept { return nodes_; }

  /// Node names parallel to nodes(), in first-appearance order.
  std::span<const std::string> node_names() const noexcept { return names_; }

  std::size_t positive_count() const noexcept { return n_positive_; }
  std::size_t negative_count() const noexcept { return n_negative_; }

  std::int64_t directed_edge_count() const noexcept {
    std::int64_t total = 0;
    for (const AuthorNode& node : nodes_) total += node.degree();
    return total;
  }

private:
  friend ReciprocatedGraph build_reciprocated_graph(
      std::span<const LabeledEdge> edges);

  std::vector<AuthorNode> nodes_;
  std::vector<std::string> names_;
  std::size_t n_positive_ = 0;
  std::size_t n_negative_ = 0;
};

/// Builds a reciprocated graph from undirected labeled edges. Rejects
/// self-loops, repeated edges, and nodes that appear with conflicting
/// labels. Every named node has at least one tie by construction.
inline ReciprocatedGraph build_reciprocated_graph(
    std::span<const LabeledEdge> edges) {
  if (edges.empty()) {
    throw EmptyNetworkError("edge list is empty");
  }

  ReciprocatedGraph graph;
  std::map<std::string, std::size_t, std::less<>> index_of;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;

  auto intern = [&](const std::string& name, GenderLabel label) {
    auto [it, inserted] = index_of.try_emplace(name, graph.nodes_.size());
    if (inserted) {
      AuthorNode node;
      node.node_id = it->second;
      node.label = label;
      graph.nodes_.push_back(node);
      graph.names_.push_back(name);
      if (label == GenderLabel::Positive) {
        ++graph.n_positive_;
      } else {
        ++graph.n_negative_;
      }
    } else if (graph.nodes_[it->second].label != label) {
      throw ValidationError("node \"" + name +
                            "\" appears with conflicting labels");
    }
    return it->second;
  };

  for (const LabeledEdge& edge : edges) {
    if (edge.src == edge.dst) {
      throw ValidationError("self-loop on node \"" + edge.src + "\"");
    }
    const std::size_t a = intern(edge.src, edge.src_label);
    const std::size_t b = intern(edge.dst, edge.dst_label);

    const auto key = std::minmax(a, b);
    if (!seen.emplace(std::pair{key.first, key.second}, true).second) {
      throw ValidationError("repeated edge between \"" + edge.src +
                            "\" and \"" + edge.dst + "\"");
    }

    auto count_tie = [&](std::size_t node, std::size_t other) {
      if (graph.nodes_[other].label == GenderLabel::Positive) {
        ++graph.nodes_[node].pi;
      } else {
        ++graph.nodes_[node].nu;
      }
    };
    count_tie(a, b);
    count_tie(b, a);
  }

  return graph;
}

/// Per-node outgoing edge weight scheme. Unit gives every edge weight 1;
/// InverseDegree gives each outgoing edge of node s weight c / degree(s).
class EdgeWeighting {
public:
  enum class Scheme { Unit, InverseDegree };

  static EdgeWeighting unit() noexcept { return EdgeWeighting{}; }

  static EdgeWeighting inverse_degree(double c = 1.0) {
    if (!(c > 0.0)) {
      throw ValidationError("inverse-degree scale c must be positive");
    }
    EdgeWeighting w;
    w.scheme_ = Scheme::InverseDegree;
    w.scale_c_ = c;
    return w;
  }

  Scheme scheme() const noexcept { return scheme_; }
  double scale_c() const noexcept { return scale_c_; }

private:
  Scheme scheme_ = Scheme::Unit;
  double scale_c_ = 1.0;
};

/// Weight carried by each outgoing edge of `node` under `weighting`.
inline double node_out_weight(const AuthorNode& node,
                              const EdgeWeighting& weighting) {
  if (node.degree() < 1) {
    throw ZeroDegreeError("node " + std::to_string(node.node_id) +
                          " has no ties");
  }
  if (weighting.scheme() == EdgeWeighting::Scheme::Unit) {
    return 1.0;
  }
  return weighting.scale_c() / static_cast<double>(node.degree());
}

/// True when every node has the same degree. For a clique network this is
/// exactly the all-cliques-one-size condition.
inline bool uniform_degree(std::span<const AuthorNode> nodes) noexcept {
  if (nodes.empty()) return true;
  const std::int64_t first = nodes.front().degree();
  return std::all_of(nodes.begin(), nodes.end(), [first](const AuthorNode& n) {
    return n.degree() == first;
  });
}

}  // namespace assortnet
