#include "bss/decision.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "bss/error.hpp"

namespace bss {

namespace {

// Per-column value of each tri entry, indexed by a_ij + 1.
struct Scoring {
  const TriTable& table;
  std::vector<std::array<double, 3>> value;

  std::vector<double> decisions(std::span<const std::size_t> columns) const {
    std::vector<double> d(table.rows(), 0.0);
    for (std::size_t r = 0; r < table.rows(); ++r)
      for (auto c : columns) d[r] += value[c][table.at(r, c) + 1];
    return d;
  }
};

Scoring unit_scoring(const TriTable& t) {
  return {t, std::vector<std::array<double, 3>>(t.cols(), {-1.0, 0.0, 1.0})};
}

Scoring weighted_scoring(const WeightedDecisionTable& t) {
  std::vector<std::array<double, 3>> v;
  v.reserve(t.weights.size());
  for (double w : t.weights) v.push_back({-(1.0 - w), 0.0, w});
  return {t.table, std::move(v)};
}

std::vector<std::size_t> all_columns(const TriTable& t) {
  std::vector<std::size_t> cols(t.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return cols;
}

[[noreturn]] void throw_inconsistent() {
  throw InconsistentTable("IND(C) does not refine IND(D); reduction is undefined");
}

struct DispensableCheck {
  bool dispensable = false;
  bool ind_equal = false;
};

DispensableCheck check_dispensable(const Scoring& s, const std::vector<std::size_t>& columns,
                                   std::size_t gamma) {
  std::vector<std::size_t> rest;
  rest.reserve(columns.size());
  for (auto c : columns)
    if (c != gamma) rest.push_back(c);

  const auto ind_d = ind_decision(s.decisions(columns));
  const auto ind_d_gamma = ind_decision(s.decisions(rest));
  const auto ind_rest = ind(s.table, rest);
  return {ind_rest.refines(ind_d_gamma) && ind_d == ind_d_gamma, ind_rest == ind_d_gamma};
}

std::size_t column_of(const TriTable& t, const std::string& label) {
  const auto& labels = t.column_labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw UnknownParameter("'" + label + "' is not a table column");
  return static_cast<std::size_t>(it - labels.begin());
}

ReductionReport reduce_with(const Scoring& s) {
  auto columns = all_columns(s.table);
  ReductionReport report;
  bool removed = true;
  while (removed) {
    removed = false;
    for (auto c : columns) {
      auto check = check_dispensable(s, columns, c);
      if (!check.dispensable) continue;
      report.eliminated.push_back({s.table.column_labels()[c], check.ind_equal});
      columns.erase(std::find(columns.begin(), columns.end(), c));
      removed = true;
      break;
    }
  }
  for (auto c : columns) report.core.push_back(s.table.column_labels()[c]);
  return report;
}

std::vector<std::string> choice_in_domain_order(const BipolarSoftSet& s,
                                                const std::vector<std::string>& choice) {
  std::unordered_set<std::string> wanted;
  for (const auto& c : choice) {
    s.at(c);  // UnknownParameter when outside A
    if (!wanted.insert(c).second) throw DuplicateIdentifier("choice parameter '" + c + "'");
  }
  std::vector<std::string> ordered;
  for (const auto& l : s.domain_labels())
    if (wanted.contains(l)) ordered.push_back(l);
  return ordered;
}

void rank(DecisionResult& r) {
  const auto& rows = r.table.table.row_labels();
  const auto& groups = r.ind_decisions.blocks();
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.decisions[groups[a].front()] > r.decisions[groups[b].front()];
  });
  for (auto g : order)
    for (auto i : groups[g]) r.ranking.push_back({rows[i], i, r.decisions[i]});
  if (!order.empty())
    for (auto i : groups[order.front()]) r.maximizers.push_back(rows[i]);
}

}  // namespace

Partition sigma(const BipolarSoftSet& s, const std::string& parameter) {
  const auto& e = s.at(parameter);
  std::vector<std::size_t> keys(s.universe().size(), 0);
  for (auto i : e.positive.members()) keys[i] = 1;
  for (auto i : e.negative.members()) keys[i] = 2;
  return Partition::from_keys(keys);
}

Partition ind(const BipolarSoftSet& s, const std::vector<std::string>& parameters) {
  auto p = Partition::universal(s.universe().size());
  for (const auto& e : parameters) p = p.meet(sigma(s, e));
  return p;
}

Partition ind(const TriTable& table, std::span<const std::size_t> columns) {
  std::vector<std::size_t> keys(table.rows());
  std::vector<std::vector<int>> seen;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    std::vector<int> sig;
    sig.reserve(columns.size());
    for (auto c : columns) sig.push_back(table.at(r, c));
    auto it = std::find(seen.begin(), seen.end(), sig);
    keys[r] = static_cast<std::size_t>(it - seen.begin());
    if (it == seen.end()) seen.push_back(std::move(sig));
  }
  return Partition::from_keys(keys);
}

Partition ind_decision(std::span<const double> decisions, double tolerance) {
  std::vector<std::size_t> order(decisions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return decisions[a] < decisions[b]; });
  std::vector<std::size_t> keys(decisions.size());
  std::size_t cls = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && decisions[order[k]] - decisions[order[k - 1]] > tolerance) ++cls;
    keys[order[k]] = cls;
  }
  return Partition::from_keys(keys);
}

Partition ind_decision(std::span<const int> decisions) {
  std::vector<double> d(decisions.begin(), decisions.end());
  return ind_decision(d, 0.0);
}

std::vector<int> decision_values(const TriTable& table) {
  std::vector<int> d(table.rows(), 0);
  for (std::size_t r = 0; r < table.rows(); ++r)
    for (std::size_t c = 0; c < table.cols(); ++c) d[r] += table.at(r, c);
  return d;
}

DecisionTable DecisionTable::of(TriTable table) {
  auto d = decision_values(table);
  return {std::move(table), std::move(d)};
}

WeightedDecisionTable weighted_entries(const TriTable& table, std::span<const double> weights) {
  if (weights.size() != table.cols())
    throw WeightCountMismatch("got " + std::to_string(weights.size()) + " weights for " +
                              std::to_string(table.cols()) + " columns");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double w = weights[j];
    if (!(w >= 0.0 && w <= 1.0))
      throw WeightOutOfRange("weight of '" + table.column_labels()[j] + "' is " +
                             std::to_string(w));
  }
  WeightedDecisionTable out{table, {weights.begin(), weights.end()}, {}, {}};
  out.cells.resize(table.rows() * table.cols());
  out.decisions.assign(table.rows(), 0.0);
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      const int a = table.at(i, j);
      const double b = a == 1 ? weights[j] : a == -1 ? -(1.0 - weights[j]) : 0.0;
      out.cells[i * table.cols() + j] = b;
      out.decisions[i] += b;
    }
  }
  return out;
}

DecisionTable make_decision_table(const BipolarSoftSet& s, const std::vector<std::string>& choice) {
  return DecisionTable::of(to_tri_table(s).select_columns(choice_in_domain_order(s, choice)));
}

bool is_consistent(const DecisionTable& t) {
  return ind(t.table, all_columns(t.table)).refines(ind_decision(t.decisions));
}

bool is_consistent(const WeightedDecisionTable& t) {
  return ind(t.table, all_columns(t.table)).refines(ind_decision(t.decisions));
}

bool dispensable(const DecisionTable& t, const std::string& gamma) {
  const auto c = column_of(t.table, gamma);
  return check_dispensable(unit_scoring(t.table), all_columns(t.table), c).dispensable;
}

bool dispensable(const WeightedDecisionTable& t, const std::string& gamma) {
  const auto c = column_of(t.table, gamma);
  return check_dispensable(weighted_scoring(t), all_columns(t.table), c).dispensable;
}

std::vector<std::string> ReductionReport::eliminated_labels() const {
  std::vector<std::string> out;
  for (const auto& e : eliminated) out.push_back(e.parameter);
  return out;
}

ReductionReport reduce(const DecisionTable& t) {
  if (!is_consistent(t)) throw_inconsistent();
  return reduce_with(unit_scoring(t.table));
}

ReductionReport reduce(const WeightedDecisionTable& t) {
  if (!is_consistent(t)) throw_inconsistent();
  return reduce_with(weighted_scoring(t));
}

DecisionResult decide(const BipolarSoftSet& s, const std::vector<std::string>& choice) {
  DecisionResult r;
  r.table = make_decision_table(s, choice);
  r.decisions.assign(r.table.decisions.begin(), r.table.decisions.end());
  r.ind_parameters = ind(r.table.table, all_columns(r.table.table));
  r.ind_decisions = ind_decision(r.decisions);
  r.consistent = r.ind_parameters.refines(r.ind_decisions);
  if (r.consistent) r.reduction = reduce(r.table);
  rank(r);
  return r;
}

DecisionResult decide_weighted(const BipolarSoftSet& s, const std::vector<std::string>& choice,
                               const std::map<std::string, double>& weights) {
  for (const auto& [label, w] : weights)
    if (!s.space().find(label))
      throw WeightCountMismatch("weight given for unknown parameter '" + label + "'");

  DecisionResult r;
  r.table = make_decision_table(s, choice);
  std::vector<double> w;
  for (const auto& label : r.table.table.column_labels()) {
    auto it = weights.find(label);
    if (it == weights.end()) throw WeightCountMismatch("no weight for '" + label + "'");
    w.push_back(it->second);
  }
  r.weighted = weighted_entries(r.table.table, w);
  r.decisions = r.weighted->decisions;
  r.ind_parameters = ind(r.table.table, all_columns(r.table.table));
  r.ind_decisions = ind_decision(r.decisions);
  r.consistent = r.ind_parameters.refines(r.ind_decisions);
  if (r.consistent) r.reduction = reduce(*r.weighted);
  rank(r);
  return r;
}

}  // namespace bss
