#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "assortnet/errors.hpp"
#include "assortnet/graph.hpp"

namespace assortnet {

/// Certification tolerance: |r - alpha| below this counts as equal. The
/// identity is exact in real arithmetic; the slack covers floating-point
/// summation order at desk scale.
inline constexpr double kEquivalenceTolerance = 1e-10;

/// 2x2 weighted edge-proportion table. e_xy is the weighted share of
/// directed edges pointing from an x-labeled node to a y-labeled node;
/// a_* are row sums (source shares) and b_* are column sums (target shares).
struct MixingMatrix {
  double e_pp = 0.0;
  double e_pn = 0.0;
  double e_np = 0.0;
  double e_nn = 0.0;
  double a_p = 0.0;
  double a_n = 0.0;
  double b_p = 0.0;
  double b_n = 0.0;

  double diagonal_sum() const noexcept { return e_pp + e_nn; }
  double marginal_product_sum() const noexcept {
    return a_p * b_p + a_n * b_n;
  }
};

/// Tallies the weighted mixing matrix for a node table. Each of node s's
/// outgoing edges carries weight Z_s = node_out_weight(s, weighting), so the
/// weighted count of x -> y edges is the sum of Z_s times s's tie count to
/// label y over all x-labeled nodes, normalized by the total weight of all
/// directed edges. Under InverseDegree the result does not depend on the
/// scale c (it cancels in the normalization). Contributions accumulate in
/// node-id order, which pins the floating-point result for a given input.
inline MixingMatrix build_mixing_matrix(std::span<const AuthorNode> nodes,
                                        const EdgeWeighting& weighting) {
  if (nodes.empty()) {
    throw EmptyNetworkError("cannot build a mixing matrix with no nodes");
  }

  double w_pp = 0.0, w_pn = 0.0, w_np = 0.0, w_nn = 0.0;
  for (const AuthorNode& node : nodes) {
    const double z = node_out_weight(node, weighting);
    if (node.label == GenderLabel::Positive) {
      w_pp += z * static_cast<double>(node.pi);
      w_pn += z * static_cast<double>(node.nu);
    } else {
      w_np += z * static_cast<double>(node.pi);
      w_nn += z * static_cast<double>(node.nu);
    }
  }

  const double total = w_pp + w_pn + w_np + w_nn;

  MixingMatrix m;
  m.e_pp = w_pp / total;
  m.e_pn = w_pn / total;
  m.e_np = w_np / total;
  m.e_nn = w_nn / total;
  m.a_p = m.e_pp + m.e_pn;
  m.a_n = m.e_np + m.e_nn;
  m.b_p = m.e_pp + m.e_np;
  m.b_n = m.e_pn + m.e_nn;
  return m;
}

/// Categorical assortativity coefficient of a mixing matrix:
///
///   r = (sum_i e_ii - sum_i a_i b_i) / (1 - sum_i a_i b_i)
///
/// r is 0 when edges mix as the marginals predict, 1 when every edge stays
/// within its label class, and negative (bounded below by -1 for symmetric
/// tables) when edges prefer the opposite class. Throws when the denominator
/// vanishes, which on validated inputs happens exactly when only one label
/// class is present.
inline double newman_r(const MixingMatrix& m) {
  const double product = m.marginal_product_sum();
  if (product >= 1.0) {
    throw DegenerateMixingError();
  }
  return (m.diagonal_sum() - product) / (1.0 - product);
}

/// The two class risks and their difference. p is the probability that a
/// randomly selected tie of a randomly selected Positive individual connects
/// to a Positive individual; q is the same probability for a Negative
/// individual. alpha = p - q, always within [-1, 1].
struct RiskDecomposition {
  double p_risk = 0.0;
  double q_risk = 0.0;
  double alpha = 0.0;
};

/// Homophily coefficient from the per-individual definition: the mean of
/// pi_s / degree_s over each label class, differenced. Every individual
/// counts equally regardless of degree. Accumulates in node-id order.
/// Throws OneSidedPopulationError when either class is empty.
inline RiskDecomposition alpha_from_individuals(
    std::span<const AuthorNode> nodes) {
  double positive_risk_sum = 0.0;
  double negative_risk_sum = 0.0;
  std::int64_t n_positive = 0;
  std::int64_t n_negative = 0;

  for (const AuthorNode& node : nodes) {
    if (node.degree() < 1) {
      throw ZeroDegreeError("node " + std::to_string(node.node_id) +
                            " has no ties");
    }
    const double risk =
        static_cast<double>(node.pi) / static_cast<double>(node.degree());
    if (node.label == GenderLabel::Positive) {
      positive_risk_sum += risk;
      ++n_positive;
    } else {
      negative_risk_sum += risk;
      ++n_negative;
    }
  }

  if (n_positive == 0 || n_negative == 0) {
    throw OneSidedPopulationError();
  }

  RiskDecomposition out;
  out.p_risk = positive_risk_sum / static_cast<double>(n_positive);
  out.q_risk = negative_risk_sum / static_cast<double>(n_negative);
  out.alpha = out.p_risk - out.q_risk;
  return out;
}

/// Sufficient statistics for alpha on a disjoint-clique network: n_ij counts
/// the cliques with i positive and j negative members; k_star is the largest
/// clique size seen. Cells with i + j < 2 are rejected outright.
class CliqueCountTable {
public:
  using Cell = std::pair<int, int>;  // (positive members, negative members)

  void add(CliqueComposition comp, std::int64_t count = 1) {
    if (comp.positive < 0 || comp.negative < 0 || comp.size() < 2) {
      throw InconsistentTableError(
          "clique composition must have at least two members");
    }
    if (count < 0) {
      throw InconsistentTableError("clique count must be nonnegative");
    }
    if (count == 0) return;
    counts_[Cell{comp.positive, comp.negative}] += count;
    k_star_ = std::max(k_star_, comp.size());
  }

  std::int64_t count(int positive, int negative) const noexcept {
    const auto it = counts_.find(Cell{positive, negative});
    return it == counts_.end() ? 0 : it->second;
  }

  int k_star() const noexcept { return k_star_; }

  std::int64_t clique_total() const noexcept {
    std::int64_t total = 0;
    for (const auto& [cell, count] : counts_) total += count;
    return total;
  }

  /// Number of positive individuals implied by the table: sum of i * n_ij.
  std::int64_t positive_total() const noexcept {
    std::int64_t total = 0;
    for (const auto& [cell, count] : counts_) total += cell.first * count;
    return total;
  }

  /// Number of negative individuals implied by the table: sum of j * n_ij.
  std::int64_t negative_total() const noexcept {
    std::int64_t total = 0;
    for (const auto& [cell, count] : counts_) total += cell.second * count;
    return total;
  }

  const std::map<Cell, std::int64_t>& cells() const noexcept {
    return counts_;
  }

private:
  std::map<Cell, std::int64_t> counts_;
  int k_star_ = 0;
};

inline CliqueCountTable clique_count_table(const CliqueNetwork& network) {
  CliqueCountTable table;
  for (const CliqueNetwork::Clique& clique : network.cliques()) {
    table.add(clique.composition);
  }
  return table;
}

/// Homophily coefficient from clique counts alone. Every member of a clique
/// with composition (i, j) has degree i + j - 1; its i positive members each
/// carry risk (i - 1) / (i + j - 1) and its j negative members each carry
/// risk i / (i + j - 1), so
///
///   alpha = (1/n_pos) sum_ij n_ij * i * (i - 1) / (i + j - 1)
///         - (1/n_neg) sum_ij n_ij * j *  i      / (i + j - 1).
///
/// The per-member multiplicities i and j make this identical to the
/// per-individual form; the caller-supplied population sizes are checked
/// against the table's own totals.
inline double alpha_from_clique_counts(const CliqueCountTable& table,
                                       std::int64_t n_positive,
                                       std::int64_t n_negative) {
  if (n_positive != table.positive_total() ||
      n_negative != table.negative_total()) {
    throw InconsistentTableError(
        "population sizes disagree with the clique-count table");
  }
  if (n_positive == 0 || n_negative == 0) {
    throw OneSidedPopulationError();
  }

  double positive_sum = 0.0;
  double negative_sum = 0.0;
  for (const auto& [cell, count] : table.cells()) {
    const auto [i, j] = cell;
    const double shared_degree = static_cast<double>(i + j - 1);
    const double n_ij = static_cast<double>(count);
    positive_sum += n_ij * static_cast<double>(i) *
                    static_cast<double>(i - 1) / shared_degree;
    negative_sum += n_ij * static_cast<double>(j) * static_cast<double>(i) /
                    shared_degree;
  }

  return positive_sum / static_cast<double>(n_positive) -
         negative_sum / static_cast<double>(n_negative);
}

/// Outcome of certifying that inverse-degree weighting makes r coincide with
/// alpha, plus the equal-clique-size special case where unit weights already
/// do. unit_gap is filled only when every node has the same degree.
struct EquivalenceReport {
  double alpha = 0.0;
  std::vector<double> c_values;
  std::vector<double> r_values;  // r under InverseDegree(c), same order
  std::vector<double> gaps;      // |r - alpha|, same order
  double max_gap = 0.0;
  bool corollary_applies = false;
  std::optional<double> unit_gap;

  bool certified() const noexcept { return max_gap < kEquivalenceTolerance; }
};

/// Evaluates r under InverseDegree(c) for each requested c and reports the
/// largest |r - alpha|. When all degrees are equal the unit-weighted gap is
/// included in the certification as well. Propagates the undefined-metric
/// errors of the underlying computations.
inline EquivalenceReport equivalence_report(std::span<const AuthorNode> nodes,
                                            std::span<const double> c_values) {
  EquivalenceReport report;
  report.alpha = alpha_from_individuals(nodes).alpha;

  for (const double c : c_values) {
    const double r =
        newman_r(build_mixing_matrix(nodes, EdgeWeighting::inverse_degree(c)));
    const double gap = std::abs(r - report.alpha);
    report.c_values.push_back(c);
    report.r_values.push_back(r);
    report.gaps.push_back(gap);
    report.max_gap = std::max(report.max_gap, gap);
  }

  report.corollary_applies = uniform_degree(nodes);
  if (report.corollary_applies) {
    const double r_unit =
        newman_r(build_mixing_matrix(nodes, EdgeWeighting::unit()));
    report.unit_gap = std::abs(r_unit - report.alpha);
    report.max_gap = std::max(report.max_gap, *report.unit_gap);
  }
  return report;
}

/// Full metric bundle for one network. Values are absent when the metrics
/// are undefined (only one label class present); the reason is carried
/// in-band so reports never contain NaN. The weighted mixing matrix uses
/// InverseDegree with c = 1, which is representative because the matrix is
/// invariant to c.
struct MetricReport {
  std::optional<double> p_risk;
  std::optional<double> q_risk;
  std::optional<double> alpha;
  std::optional<double> r_unit;
  std::optional<double> r_inverse_degree;
  std::optional<double> equivalence_gap;  // |r_inverse_degree - alpha|
  MixingMatrix mixing_unit;
  MixingMatrix mixing_weighted;
  std::string undefined_reason;  // empty when all values are present

  bool defined() const noexcept { return alpha.has_value(); }
};

inline MetricReport compute_metric_report(std::span<const AuthorNode> nodes) {
  MetricReport report;
  report.mixing_unit = build_mixing_matrix(nodes, EdgeWeighting::unit());
  report.mixing_weighted =
      build_mixing_matrix(nodes, EdgeWeighting::inverse_degree(1.0));

  try {
    const RiskDecomposition risks = alpha_from_individuals(nodes);
    report.p_risk = risks.p_risk;
    report.q_risk = risks.q_risk;
    report.alpha = risks.alpha;
    report.r_unit = newman_r(report.mixing_unit);
    report.r_inverse_degree = newman_r(report.mixing_weighted);
    report.equivalence_gap =
        std::abs(*report.r_inverse_degree - *report.alpha);
  } catch (const UndefinedMetricError& e) {
    report.p_risk.reset();
    report.q_risk.reset();
    report.alpha.reset();
    report.r_unit.reset();
    report.r_inverse_degree.reset();
    report.equivalence_gap.reset();
    report.undefined_reason = e.what();
  }
  return report;
}

}  // namespace assortnet
