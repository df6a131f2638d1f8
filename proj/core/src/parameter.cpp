#include "bss/parameter.hpp"

#include "bss/error.hpp"

namespace bss {

Parameter Parameter::with_default_negation(std::string label) {
  std::string negation = "not_" + label;
  return {std::move(label), std::move(negation)};
}

Parameter ProductParameter::rendered() const {
  return {"(" + left.positive + "," + right.positive + ")",
          "(" + left.negation + "," + right.negation + ")"};
}

ParameterSpace::ParameterSpace(std::vector<Parameter> parameters)
    : parameters_(std::move(parameters)) {
  by_positive_.reserve(parameters_.size());
  by_negation_.reserve(parameters_.size());
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    const auto& p = parameters_[i];
    if (p.positive.empty() || p.negation.empty())
      throw ParseError("parameter labels must be non-empty");
    if (p.positive == p.negation)
      throw DomainMismatch("parameter '" + p.positive + "' is its own negation");
    if (!by_positive_.emplace(p.positive, i).second)
      throw DuplicateIdentifier("parameter '" + p.positive + "' listed twice");
    if (!by_negation_.emplace(p.negation, i).second)
      throw DuplicateIdentifier("negation label '" + p.negation + "' listed twice");
  }
  for (const auto& p : parameters_) {
    if (by_negation_.contains(p.positive))
      throw DuplicateIdentifier("label '" + p.positive +
                                "' used both as a parameter and as a negation");
  }
}

ParameterSpace ParameterSpace::from_labels(const std::vector<std::string>& labels) {
  std::vector<Parameter> ps;
  ps.reserve(labels.size());
  for (const auto& l : labels) ps.push_back(Parameter::with_default_negation(l));
  return ParameterSpace(std::move(ps));
}

ParameterSpace ParameterSpace::product(const ParameterSpace& left,
                                       const ParameterSpace& right) {
  std::vector<Parameter> ps;
  ps.reserve(left.size() * right.size());
  for (const auto& a : left.parameters_)
    for (const auto& b : right.parameters_) ps.push_back(ProductParameter{a, b}.rendered());
  return ParameterSpace(std::move(ps));
}

std::optional<std::size_t> ParameterSpace::find(const std::string& positive_label) const {
  auto it = by_positive_.find(positive_label);
  if (it == by_positive_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ParameterSpace::find_negation(
    const std::string& negation_label) const {
  auto it = by_negation_.find(negation_label);
  if (it == by_negation_.end()) return std::nullopt;
  return it->second;
}

std::size_t ParameterSpace::index_of(const std::string& positive_label) const {
  if (auto i = find(positive_label)) return *i;
  throw UnknownParameter("'" + positive_label + "'");
}

}  // namespace bss
