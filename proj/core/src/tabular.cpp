#include "bss/tabular.hpp"

#include <algorithm>
#include <unordered_set>

#include "bss/error.hpp"

namespace bss {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw DuplicateIdentifier(std::string(what) + " '" + l + "' listed twice");
}

}  // namespace

TriTable::TriTable(std::vector<std::string> row_labels, std::vector<std::string> column_labels,
                   std::vector<std::int8_t> entries)
    : row_labels_(std::move(row_labels)),
      column_labels_(std::move(column_labels)),
      entries_(std::move(entries)) {
  if (entries_.size() != row_labels_.size() * column_labels_.size())
    throw SizeMismatch("table has " + std::to_string(entries_.size()) + " cells, expected " +
                       std::to_string(row_labels_.size()) + " x " +
                       std::to_string(column_labels_.size()));
  for (auto v : entries_)
    if (v < -1 || v > 1) throw BadEntry("value " + std::to_string(v) + " is not in {-1,0,1}");
}

TriTable::TriTable(std::vector<std::string> row_labels, std::vector<std::string> column_labels,
                   const std::vector<std::vector<int>>& rows)
    : row_labels_(std::move(row_labels)), column_labels_(std::move(column_labels)) {
  if (rows.size() != row_labels_.size())
    throw SizeMismatch("expected " + std::to_string(row_labels_.size()) + " rows, got " +
                       std::to_string(rows.size()));
  entries_.reserve(rows.size() * column_labels_.size());
  for (const auto& r : rows) {
    if (r.size() != column_labels_.size())
      throw SizeMismatch("row has " + std::to_string(r.size()) + " entries, expected " +
                         std::to_string(column_labels_.size()));
    for (int v : r) {
      if (v < -1 || v > 1) throw BadEntry("value " + std::to_string(v) + " is not in {-1,0,1}");
      entries_.push_back(static_cast<std::int8_t>(v));
    }
  }
}

std::vector<int> TriTable::row(std::size_t r) const {
  std::vector<int> out(cols());
  for (std::size_t c = 0; c < cols(); ++c) out[c] = at(r, c);
  return out;
}

TriTable TriTable::select_columns(const std::vector<std::string>& labels) const {
  std::vector<std::size_t> picks;
  picks.reserve(labels.size());
  for (const auto& l : labels) {
    auto it = std::find(column_labels_.begin(), column_labels_.end(), l);
    if (it == column_labels_.end()) throw UnknownParameter("'" + l + "' is not a table column");
    picks.push_back(static_cast<std::size_t>(it - column_labels_.begin()));
  }
  std::vector<std::int8_t> out;
  out.reserve(rows() * picks.size());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto c : picks) out.push_back(entries_[r * cols() + c]);
  return TriTable(row_labels_, labels, std::move(out));
}

TriTable to_tri_table(const BipolarSoftSet& s) {
  const auto& u = s.universe();
  const auto& es = s.entries();
  std::vector<std::int8_t> cells(u.size() * es.size(), 0);
  for (std::size_t j = 0; j < es.size(); ++j) {
    for (auto i : es[j].positive.members()) cells[i * es.size() + j] = 1;
    for (auto i : es[j].negative.members()) cells[i * es.size() + j] = -1;
  }
  return TriTable(u.ids(), s.domain_labels(), std::move(cells));
}

BipolarSoftSet from_tri_table(const TriTable& table, ParameterSpacePtr space) {
  require_unique(table.column_labels(), "column");
  auto universe = make_universe(table.row_labels());
  const std::size_t n = universe->size();
  std::vector<BipolarSoftSet::Entry> entries;
  entries.reserve(table.cols());
  for (std::size_t c = 0; c < table.cols(); ++c) {
    BipolarSoftSet::Entry e{space->index_of(table.column_labels()[c]), ObjectSet(n),
                            ObjectSet(n)};
    for (std::size_t r = 0; r < n; ++r) {
      if (table.at(r, c) == 1) e.positive.insert(r);
      if (table.at(r, c) == -1) e.negative.insert(r);
    }
    entries.push_back(std::move(e));
  }
  return BipolarSoftSet(std::move(universe), std::move(space), std::move(entries));
}

BipolarSoftSet from_tri_table(const TriTable& table) {
  require_unique(table.column_labels(), "column");
  return from_tri_table(
      table, std::make_shared<const ParameterSpace>(
                 ParameterSpace::from_labels(table.column_labels())));
}

PairTable to_pair_table(const BipolarSoftSet& s) {
  PairTable t;
  t.row_labels = s.universe().ids();
  for (const auto& e : s.entries()) {
    t.f_labels.push_back(s.space()[e.parameter].positive);
    t.g_labels.push_back(s.space()[e.parameter].negation);
  }
  const std::size_t rows = t.row_labels.size();
  const std::size_t cols = t.f_labels.size();
  t.f.assign(rows * cols, 0);
  t.g.assign(rows * cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto& e = s.entries()[j];
    for (auto i : e.positive.members()) t.f[i * cols + j] = 1;
    for (auto i : e.negative.members()) t.g[i * cols + j] = 1;
  }
  return t;
}

BipolarSoftSet from_pair_table(const PairTable& table, ParameterSpacePtr space) {
  const std::size_t rows = table.rows();
  const std::size_t cols = table.cols();
  if (table.g_labels.size() != cols || table.f.size() != rows * cols ||
      table.g.size() != rows * cols)
    throw SizeMismatch("F and G tables must have identical dimensions");
  require_unique(table.f_labels, "column");

  auto universe = make_universe(table.row_labels);
  std::vector<BipolarSoftSet::Entry> entries;
  entries.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto idx = space->index_of(table.f_labels[c]);
    auto neg = space->find_negation(table.g_labels[c]);
    if (!neg) throw UnknownParameter("'" + table.g_labels[c] + "' is not a negation label");
    if (*neg != idx)
      throw DomainMismatch("G column '" + table.g_labels[c] + "' does not negate '" +
                           table.f_labels[c] + "'");
    BipolarSoftSet::Entry e{idx, ObjectSet(rows), ObjectSet(rows)};
    for (std::size_t r = 0; r < rows; ++r) {
      const int f = table.f_at(r, c);
      const int g = table.g_at(r, c);
      if (f > 1 || g > 1) throw BadEntry("indicator tables admit only 0 and 1");
      if (f && g)
        throw ConsistencyViolation(table.f_labels[c],
                                   "object '" + table.row_labels[r] + "' marked in both tables");
      if (f) e.positive.insert(r);
      if (g) e.negative.insert(r);
    }
    entries.push_back(std::move(e));
  }
  return BipolarSoftSet(std::move(universe), std::move(space), std::move(entries));
}

TriTable tri_from_pair(const PairTable& table) {
  std::vector<std::int8_t> cells(table.f.size());
  for (std::size_t k = 0; k < cells.size(); ++k)
    cells[k] = static_cast<std::int8_t>(int(table.f[k]) - int(table.g[k]));
  return TriTable(table.row_labels, table.f_labels, std::move(cells));
}

}  // namespace bss
