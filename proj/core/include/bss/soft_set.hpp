#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bss/parameter.hpp"
#include "bss/universe.hpp"

namespace bss {

/// A bipolar soft set (F, G, A) over U: for each e in A a positive
/// approximation F(e) and a negative approximation G(not e), with
/// F(e) and G(not e) disjoint. Immutable once constructed.
///
/// The domain A is kept in the order of the ambient ParameterSpace. An empty
/// domain is allowed and is vacuously consistent.
class BipolarSoftSet {
 public:
  /// One parameter of the domain with both of its approximations.
  struct Entry {
    std::size_t parameter;  // index into the ParameterSpace
    ObjectSet positive;     // F(e)
    ObjectSet negative;     // G(not e)

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Validating constructor. Entries may come in any order.
  ///
  /// Throws DomainMismatch for parameter indices outside the space or listed
  /// twice, SizeMismatch for approximations not sized to the universe and
  /// ConsistencyViolation when F(e) and G(not e) intersect.
  BipolarSoftSet(UniversePtr universe, ParameterSpacePtr space, std::vector<Entry> entries);

  /// Builds (F, G, A) from label-keyed maps. `positive` is keyed by the
  /// positive labels of A and `negative` by their negation labels. A missing
  /// key means the empty set; keys outside A raise DomainMismatch and domain
  /// labels outside the space raise UnknownParameter.
  static BipolarSoftSet create(UniversePtr universe, ParameterSpacePtr space,
                               const std::vector<std::string>& domain,
                               const std::map<std::string, ObjectSet>& positive,
                               const std::map<std::string, ObjectSet>& negative);

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const ParameterSpacePtr& space_ptr() const noexcept { return space_; }
  const Universe& universe() const noexcept { return *universe_; }
  const ParameterSpace& space() const noexcept { return *space_; }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t domain_size() const noexcept { return entries_.size(); }
  std::vector<std::size_t> domain() const;
  std::vector<std::string> domain_labels() const;

  /// Entry for a space index, or nullptr when the parameter is outside A.
  const Entry* find(std::size_t parameter) const;
  /// Entry by positive label. Throws UnknownParameter when not in A.
  const Entry& at(const std::string& label) const;

  const ObjectSet& positive(const std::string& label) const { return at(label).positive; }
  const ObjectSet& negative(const std::string& label) const { return at(label).negative; }

  /// Structural equality; never throws. See equals() for the checked form.
  friend bool operator==(const BipolarSoftSet& a, const BipolarSoftSet& b);

 private:
  struct Trusted {};
  BipolarSoftSet(Trusted, UniversePtr universe, ParameterSpacePtr space,
                 std::vector<Entry> entries);

  UniversePtr universe_;
  ParameterSpacePtr space_;
  std::vector<Entry> entries_;  // sorted by parameter

  friend class AlgebraAccess;
};

/// H(e) = U - (F(e) u G(not e)) for every e in A, in domain order.
std::vector<std::pair<std::size_t, ObjectSet>> hesitation(const BipolarSoftSet& s);

/// (F,G,A) is a bipolar soft subset of (F1,G1,B): A within B, F(e) within
/// F1(e) and G1(not e) within G(not e). Throws UniverseMismatch when the sets
/// live over different universes or parameter spaces.
bool is_subset(const BipolarSoftSet& x, const BipolarSoftSet& y);

/// Mutual inclusion. Throws UniverseMismatch like is_subset().
bool equals(const BipolarSoftSet& x, const BipolarSoftSet& y);

/// Swaps the two approximations pointwise.
BipolarSoftSet complement(const BipolarSoftSet& s);

/// (Phi, U, A): F empty and G = U on every e in A.
BipolarSoftSet relative_null(UniversePtr universe, ParameterSpacePtr space,
                             const std::vector<std::size_t>& domain);
/// (U, Phi, A): F = U and G empty on every e in A.
BipolarSoftSet relative_absolute(UniversePtr universe, ParameterSpacePtr space,
                                 const std::vector<std::size_t>& domain);

/// Domain A u B. Copies x on A - B and y on B - A; on A n B the positive
/// sides are united and the negative sides intersected.
BipolarSoftSet union_extended(const BipolarSoftSet& x, const BipolarSoftSet& y);
/// Domain A u B. On A n B positives intersect and negatives unite.
BipolarSoftSet intersection_extended(const BipolarSoftSet& x, const BipolarSoftSet& y);
/// Domain A n B, which must be non-empty (EmptyCommonDomain).
BipolarSoftSet union_restricted(const BipolarSoftSet& x, const BipolarSoftSet& y);
BipolarSoftSet intersection_restricted(const BipolarSoftSet& x, const BipolarSoftSet& y);

/// AND product over A x B: H(a,b) = F(a) n F1(b), I(not a,not b) =
/// G(not a) u G1(not b). The result lives in ParameterSpace::product(E, E').
BipolarSoftSet and_product(const BipolarSoftSet& x, const BipolarSoftSet& y);
/// OR product over A x B: H(a,b) = F(a) u F1(b), I = G(not a) n G1(not b).
BipolarSoftSet or_product(const BipolarSoftSet& x, const BipolarSoftSet& y);

/// Multi-line human readable dump: one "e: F=... G(not_e)=..." line per entry.
std::string to_string(const BipolarSoftSet& s);

}  // namespace bss
