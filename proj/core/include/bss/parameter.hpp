#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bss {

/// A parameter e paired with its NOT-parameter. Negating twice returns the
/// original parameter.
struct Parameter {
  std::string positive;
  std::string negation;

  /// Label pair with the roles swapped, i.e. not e.
  Parameter negated() const { return {negation, positive}; }

  /// Default negation label for a bare positive label: "not_<label>".
  static Parameter with_default_negation(std::string label);

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// Element (a,b) of a product parameter set A x B. Its negation is
/// (not a, not b).
struct ProductParameter {
  Parameter left;
  Parameter right;

  ProductParameter negated() const { return {left.negated(), right.negated()}; }

  /// Flattened to a plain parameter labelled "(a,b)" / "(not_a,not_b)", so
  /// products of products nest textually.
  Parameter rendered() const;

  friend bool operator==(const ProductParameter&, const ProductParameter&) = default;
};

/// The ambient parameter set E, in a fixed order. The NOT set is carried by
/// the negation labels.
class ParameterSpace {
 public:
  ParameterSpace() = default;
  /// Throws DuplicateIdentifier when labels collide (positive vs positive,
  /// negation vs negation, or across the two sets) and DomainMismatch when a
  /// parameter's two labels are equal.
  explicit ParameterSpace(std::vector<Parameter> parameters);
  ParameterSpace(std::initializer_list<Parameter> parameters)
      : ParameterSpace(std::vector<Parameter>(parameters)) {}

  /// Space of positive labels only, each negated as "not_<label>".
  static ParameterSpace from_labels(const std::vector<std::string>& labels);

  /// E_left x E_right in row-major order. Position i * |right| + j holds
  /// (left[i], right[j]).
  static ParameterSpace product(const ParameterSpace& left, const ParameterSpace& right);

  std::size_t size() const noexcept { return parameters_.size(); }
  const Parameter& operator[](std::size_t i) const { return parameters_[i]; }
  const std::vector<Parameter>& parameters() const noexcept { return parameters_; }

  std::optional<std::size_t> find(const std::string& positive_label) const;
  std::optional<std::size_t> find_negation(const std::string& negation_label) const;
  /// Throws UnknownParameter.
  std::size_t index_of(const std::string& positive_label) const;

  friend bool operator==(const ParameterSpace& a, const ParameterSpace& b) {
    return a.parameters_ == b.parameters_;
  }

 private:
  std::vector<Parameter> parameters_;
  std::unordered_map<std::string, std::size_t> by_positive_;
  std::unordered_map<std::string, std::size_t> by_negation_;
};

using ParameterSpacePtr = std::shared_ptr<const ParameterSpace>;

inline ParameterSpacePtr make_space(std::vector<Parameter> parameters) {
  return std::make_shared<const ParameterSpace>(std::move(parameters));
}

inline bool same_space(const ParameterSpacePtr& a, const ParameterSpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace bss
