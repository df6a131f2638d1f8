#include "bss/soft_set.hpp"

#include <algorithm>
#include <sstream>

#include "bss/error.hpp"

namespace bss {

using Entry = BipolarSoftSet::Entry;

// Builds operation results without re-running validation; every operation
// below preserves consistency on its own.
class AlgebraAccess {
 public:
  static BipolarSoftSet make(UniversePtr u, ParameterSpacePtr e, std::vector<Entry> entries) {
    return BipolarSoftSet(BipolarSoftSet::Trusted{}, std::move(u), std::move(e),
                          std::move(entries));
  }
};

BipolarSoftSet::BipolarSoftSet(Trusted, UniversePtr universe, ParameterSpacePtr space,
                               std::vector<Entry> entries)
    : universe_(std::move(universe)), space_(std::move(space)), entries_(std::move(entries)) {}

BipolarSoftSet::BipolarSoftSet(UniversePtr universe, ParameterSpacePtr space,
                               std::vector<Entry> entries)
    : universe_(std::move(universe)), space_(std::move(space)), entries_(std::move(entries)) {
  if (!universe_) universe_ = std::make_shared<const Universe>();
  if (!space_) space_ = std::make_shared<const ParameterSpace>();

  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.parameter < b.parameter; });
  const std::size_t n = universe_->size();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& en = entries_[i];
    if (en.parameter >= space_->size())
      throw DomainMismatch("parameter index " + std::to_string(en.parameter) +
                           " outside the parameter space");
    const auto& label = (*space_)[en.parameter].positive;
    if (i > 0 && entries_[i - 1].parameter == en.parameter)
      throw DomainMismatch("parameter '" + label + "' appears twice in the domain");
    if (en.positive.universe_size() != n || en.negative.universe_size() != n)
      throw SizeMismatch("approximations of '" + label + "' are not sized to |U| = " +
                         std::to_string(n));
    if (en.positive.intersects(en.negative))
      throw ConsistencyViolation(label, "F(" + label + ") n G(" +
                                            (*space_)[en.parameter].negation + ") = " +
                                            (en.positive & en.negative).to_string(*universe_));
  }
}

BipolarSoftSet BipolarSoftSet::create(UniversePtr universe, ParameterSpacePtr space,
                                      const std::vector<std::string>& domain,
                                      const std::map<std::string, ObjectSet>& positive,
                                      const std::map<std::string, ObjectSet>& negative) {
  std::vector<Entry> entries;
  entries.reserve(domain.size());
  std::vector<bool> in_domain(space->size(), false);
  for (const auto& label : domain) {
    auto idx = space->find(label);
    if (!idx) throw UnknownParameter("'" + label + "' is not a parameter of the space");
    in_domain[*idx] = true;
  }
  for (const auto& [label, set] : positive) {
    auto idx = space->find(label);
    if (!idx || !in_domain[*idx])
      throw DomainMismatch("positive map has key '" + label + "' outside the domain");
  }
  for (const auto& [label, set] : negative) {
    auto idx = space->find_negation(label);
    if (!idx || !in_domain[*idx])
      throw DomainMismatch("negative map has key '" + label + "' outside the NOT domain");
  }
  for (const auto& label : domain) {
    const auto idx = *space->find(label);
    const auto& p = (*space)[idx];
    auto f = positive.find(p.positive);
    auto g = negative.find(p.negation);
    const ObjectSet none(universe->size());
    entries.push_back({idx, f == positive.end() ? none : f->second,
                       g == negative.end() ? none : g->second});
  }
  return BipolarSoftSet(std::move(universe), std::move(space), std::move(entries));
}

std::vector<std::size_t> BipolarSoftSet::domain() const {
  std::vector<std::size_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.parameter);
  return out;
}

std::vector<std::string> BipolarSoftSet::domain_labels() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back((*space_)[e.parameter].positive);
  return out;
}

const Entry* BipolarSoftSet::find(std::size_t parameter) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), parameter,
      [](const Entry& e, std::size_t p) { return e.parameter < p; });
  if (it == entries_.end() || it->parameter != parameter) return nullptr;
  return &*it;
}

const Entry& BipolarSoftSet::at(const std::string& label) const {
  auto idx = space_->find(label);
  const Entry* e = idx ? find(*idx) : nullptr;
  if (!e) throw UnknownParameter("'" + label + "' is not in the domain");
  return *e;
}

bool operator==(const BipolarSoftSet& a, const BipolarSoftSet& b) {
  return same_universe(a.universe_, b.universe_) && same_space(a.space_, b.space_) &&
         a.entries_ == b.entries_;
}

namespace {

void require_compatible(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  if (!same_universe(x.universe_ptr(), y.universe_ptr()))
    throw UniverseMismatch("operands are defined over different universes");
  if (!same_space(x.space_ptr(), y.space_ptr()))
    throw UniverseMismatch("operands are defined over different parameter spaces");
}

enum class Lattice { Union, Intersection };

// Union: positives unite, negatives intersect. Intersection is the dual.
Entry combine(std::size_t parameter, const Entry& a, const Entry& b, Lattice op) {
  if (op == Lattice::Union) return {parameter, a.positive | b.positive, a.negative & b.negative};
  return {parameter, a.positive & b.positive, a.negative | b.negative};
}

BipolarSoftSet extended(const BipolarSoftSet& x, const BipolarSoftSet& y, Lattice op) {
  require_compatible(x, y);
  const auto& xs = x.entries();
  const auto& ys = y.entries();
  std::vector<Entry> out;
  out.reserve(xs.size() + ys.size());
  auto i = xs.begin();
  auto j = ys.begin();
  while (i != xs.end() || j != ys.end()) {
    if (j == ys.end() || (i != xs.end() && i->parameter < j->parameter)) {
      out.push_back(*i++);
    } else if (i == xs.end() || j->parameter < i->parameter) {
      out.push_back(*j++);
    } else {
      out.push_back(combine(i->parameter, *i, *j, op));
      ++i;
      ++j;
    }
  }
  return AlgebraAccess::make(x.universe_ptr(), x.space_ptr(), std::move(out));
}

BipolarSoftSet restricted(const BipolarSoftSet& x, const BipolarSoftSet& y, Lattice op) {
  require_compatible(x, y);
  std::vector<Entry> out;
  for (const auto& a : x.entries()) {
    if (const Entry* b = y.find(a.parameter)) out.push_back(combine(a.parameter, a, *b, op));
  }
  if (out.empty())
    throw EmptyCommonDomain("restricted operations need A n B to be non-empty");
  return AlgebraAccess::make(x.universe_ptr(), x.space_ptr(), std::move(out));
}

BipolarSoftSet product(const BipolarSoftSet& x, const BipolarSoftSet& y, Lattice op) {
  if (!same_universe(x.universe_ptr(), y.universe_ptr()))
    throw UniverseMismatch("operands are defined over different universes");
  auto space = std::make_shared<const ParameterSpace>(
      ParameterSpace::product(x.space(), y.space()));
  const std::size_t width = y.space().size();
  std::vector<Entry> out;
  out.reserve(x.domain_size() * y.domain_size());
  for (const auto& a : x.entries())
    for (const auto& b : y.entries())
      out.push_back(combine(a.parameter * width + b.parameter, a, b, op));
  return AlgebraAccess::make(x.universe_ptr(), std::move(space), std::move(out));
}

BipolarSoftSet uniform(UniversePtr universe, ParameterSpacePtr space,
                       const std::vector<std::size_t>& domain, bool absolute) {
  const std::size_t n = universe->size();
  std::vector<Entry> entries;
  entries.reserve(domain.size());
  for (auto p : domain) {
    auto full = ObjectSet::full_of(n);
    auto none = ObjectSet::empty_of(n);
    if (absolute)
      entries.push_back({p, std::move(full), std::move(none)});
    else
      entries.push_back({p, std::move(none), std::move(full)});
  }
  return BipolarSoftSet(std::move(universe), std::move(space), std::move(entries));
}

}  // namespace

std::vector<std::pair<std::size_t, ObjectSet>> hesitation(const BipolarSoftSet& s) {
  std::vector<std::pair<std::size_t, ObjectSet>> out;
  out.reserve(s.domain_size());
  for (const auto& e : s.entries()) out.emplace_back(e.parameter, ~(e.positive | e.negative));
  return out;
}

bool is_subset(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  require_compatible(x, y);
  for (const auto& a : x.entries()) {
    const Entry* b = y.find(a.parameter);
    if (!b) return false;
    if (!a.positive.is_subset_of(b->positive)) return false;
    if (!b->negative.is_subset_of(a.negative)) return false;
  }
  return true;
}

bool equals(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  return is_subset(x, y) && is_subset(y, x);
}

BipolarSoftSet complement(const BipolarSoftSet& s) {
  std::vector<Entry> out;
  out.reserve(s.domain_size());
  for (const auto& e : s.entries()) out.push_back({e.parameter, e.negative, e.positive});
  return AlgebraAccess::make(s.universe_ptr(), s.space_ptr(), std::move(out));
}

BipolarSoftSet relative_null(UniversePtr universe, ParameterSpacePtr space,
                             const std::vector<std::size_t>& domain) {
  return uniform(std::move(universe), std::move(space), domain, false);
}

BipolarSoftSet relative_absolute(UniversePtr universe, ParameterSpacePtr space,
                                 const std::vector<std::size_t>& domain) {
  return uniform(std::move(universe), std::move(space), domain, true);
}

BipolarSoftSet union_extended(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  return extended(x, y, Lattice::Union);
}

BipolarSoftSet intersection_extended(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  return extended(x, y, Lattice::Intersection);
}

BipolarSoftSet union_restricted(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  return restricted(x, y, Lattice::Union);
}

BipolarSoftSet intersection_restricted(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  return restricted(x, y, Lattice::Intersection);
}

BipolarSoftSet and_product(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  return product(x, y, Lattice::Intersection);
}

BipolarSoftSet or_product(const BipolarSoftSet& x, const BipolarSoftSet& y) {
  return product(x, y, Lattice::Union);
}

std::string to_string(const BipolarSoftSet& s) {
  std::ostringstream os;
  for (const auto& e : s.entries()) {
    const auto& p = s.space()[e.parameter];
    os << p.positive << ": F=" << e.positive.to_string(s.universe()) << " G(" << p.negation
       << ")=" << e.negative.to_string(s.universe()) << '\n';
  }
  return os.str();
}

}  // namespace bss
