#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bss/partition.hpp"
#include "bss/soft_set.hpp"
#include "bss/tabular.hpp"

namespace bss {

/// Absolute tolerance used to decide whether two weighted decision values tie.
inline constexpr double kDecisionTolerance = 1e-9;

/// sigma(e): the partition of U into the non-empty members of
/// {F(e), G(not e), H(e)}. Throws UnknownParameter when e is not in A.
Partition sigma(const BipolarSoftSet& s, const std::string& parameter);

/// IND over a set of parameters: the meet of sigma(e). The empty parameter
/// set yields the universal partition.
Partition ind(const BipolarSoftSet& s, const std::vector<std::string>& parameters);

/// IND over table columns: rows related iff equal on every listed column.
Partition ind(const TriTable& table, std::span<const std::size_t> columns);

/// IND(D): objects grouped by decision value. Weighted values closer than
/// `tolerance` (chained through sorted order) fall into one class.
Partition ind_decision(std::span<const double> decisions,
                       double tolerance = kDecisionTolerance);
Partition ind_decision(std::span<const int> decisions);

/// Row sums of a tri-valued table.
std::vector<int> decision_values(const TriTable& table);

/// A tri-table restricted to the choice parameters plus its d column.
struct DecisionTable {
  TriTable table;
  std::vector<int> decisions;

  /// Computes the d column from the table.
  static DecisionTable of(TriTable table);
};

/// b_ij = w_j for a_ij = 1, 0 for a_ij = 0, -(1 - w_j) for a_ij = -1.
struct WeightedDecisionTable {
  TriTable table;
  std::vector<double> weights;  // one per column
  std::vector<double> cells;    // b_ij, row-major
  std::vector<double> decisions;

  double at(std::size_t row, std::size_t col) const { return cells[row * table.cols() + col]; }
};

/// Throws WeightCountMismatch unless there is one weight per column and
/// WeightOutOfRange for weights outside [0, 1].
WeightedDecisionTable weighted_entries(const TriTable& table, std::span<const double> weights);

/// Decision table of `s` over the choice parameters, columns in domain order.
/// Throws UnknownParameter for parameters outside the domain and
/// DuplicateIdentifier for repeated choices.
DecisionTable make_decision_table(const BipolarSoftSet& s, const std::vector<std::string>& choice);

/// IND(C) refines IND(D).
bool is_consistent(const DecisionTable& t);
bool is_consistent(const WeightedDecisionTable& t);

/// Column `gamma` is dispensable when dropping it keeps the table consistent
/// (IND(C - gamma) refines IND(D_gamma)) and leaves IND(D) unchanged.
bool dispensable(const DecisionTable& t, const std::string& gamma);
bool dispensable(const WeightedDecisionTable& t, const std::string& gamma);

struct Elimination {
  std::string parameter;
  /// IND(C - gamma) = IND(D_gamma) held with equality, not just inclusion.
  bool ind_equal = false;
};

struct ReductionReport {
  std::vector<Elimination> eliminated;  // in elimination order
  std::vector<std::string> core;        // surviving columns, table order
  bool consistent = true;

  std::vector<std::string> eliminated_labels() const;
};

/// Removes dispensable columns one at a time. Each pass scans left to right;
/// after a removal the scan restarts, until no column is dispensable.
/// Throws InconsistentTable for an inconsistent input.
ReductionReport reduce(const DecisionTable& t);
ReductionReport reduce(const WeightedDecisionTable& t);

struct RankEntry {
  std::string object;
  std::size_t row = 0;  // position in the universe
  double value = 0.0;
};

/// Everything the decision procedures produce. Rankings always use the d
/// column of the full choice set; the reduction is reported alongside.
struct DecisionResult {
  DecisionTable table;
  std::optional<WeightedDecisionTable> weighted;
  std::vector<double> decisions;
  Partition ind_parameters;  // IND(C)
  Partition ind_decisions;   // IND(D)
  bool consistent = true;
  std::optional<ReductionReport> reduction;  // absent when inconsistent
  std::vector<RankEntry> ranking;            // descending d, ties in universe order
  std::vector<std::string> maximizers;
};

/// Unweighted selection: decision table, consistency check, reduction,
/// ranking and the set of maximizers.
DecisionResult decide(const BipolarSoftSet& s, const std::vector<std::string>& choice);

/// Weighted selection. `weights` maps positive labels to weights; every
/// choice parameter needs one (WeightCountMismatch). Extra keys for
/// parameters of the space are ignored, unknown keys are rejected
/// (WeightCountMismatch).
DecisionResult decide_weighted(const BipolarSoftSet& s, const std::vector<std::string>& choice,
                               const std::map<std::string, double>& weights);

}  // namespace bss
