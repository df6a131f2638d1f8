#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bss/soft_set.hpp"

namespace bss {

/// Single-table encoding: rows are objects, columns are domain parameters,
/// entry 1 when the object is in F(e), -1 when in G(not e), 0 otherwise.
class TriTable {
 public:
  TriTable() = default;
  /// `entries` is row-major. Throws SizeMismatch on wrong dimensions and
  /// BadEntry on values outside {-1, 0, 1}.
  TriTable(std::vector<std::string> row_labels, std::vector<std::string> column_labels,
           std::vector<std::int8_t> entries);
  TriTable(std::vector<std::string> row_labels, std::vector<std::string> column_labels,
           const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return column_labels_.size(); }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& column_labels() const noexcept { return column_labels_; }
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

  int at(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  std::vector<int> row(std::size_t r) const;

  /// Keeps only the named columns, in the given order. Throws UnknownParameter.
  TriTable select_columns(const std::vector<std::string>& labels) const;

  friend bool operator==(const TriTable&, const TriTable&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> column_labels_;
  std::vector<std::int8_t> entries_;
};

/// Pair-of-tables encoding: indicator matrices of F (columns labelled by
/// positive labels) and of G (columns labelled by negation labels).
struct PairTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> f_labels;
  std::vector<std::string> g_labels;
  std::vector<std::uint8_t> f;  // row-major 0/1
  std::vector<std::uint8_t> g;

  std::size_t rows() const noexcept { return row_labels.size(); }
  std::size_t cols() const noexcept { return f_labels.size(); }
  int f_at(std::size_t r, std::size_t c) const { return f[r * cols() + c]; }
  int g_at(std::size_t r, std::size_t c) const { return g[r * cols() + c]; }

  friend bool operator==(const PairTable&, const PairTable&) = default;
};

TriTable to_tri_table(const BipolarSoftSet& s);

/// Inverse of to_tri_table(). Row labels become the universe; column labels
/// must name parameters of `space` (UnknownParameter otherwise).
BipolarSoftSet from_tri_table(const TriTable& table, ParameterSpacePtr space);
/// As above with the space taken from the column labels ("not_<label>"
/// negations).
BipolarSoftSet from_tri_table(const TriTable& table);

PairTable to_pair_table(const BipolarSoftSet& s);

/// Throws ConsistencyViolation when both indicators are set in one cell,
/// BadEntry for values other than 0/1, UnknownParameter for unresolved
/// labels and DomainMismatch when an f column and its g column disagree on
/// the parameter.
BipolarSoftSet from_pair_table(const PairTable& table, ParameterSpacePtr space);

/// Elementwise f - g.
TriTable tri_from_pair(const PairTable& table);

}  // namespace bss
