#include "bss/universe.hpp"

#include "bss/error.hpp"

namespace bss {

Universe::Universe(std::vector<std::string> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second)
      throw DuplicateIdentifier("object '" + ids_[i] + "' listed twice in universe");
  }
}

std::optional<std::size_t> Universe::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw ParseError("unknown object '" + id + "'");
}

ObjectSet ObjectSet::of(std::size_t n, std::initializer_list<std::size_t> members) {
  return of(n, std::span<const std::size_t>(members.begin(), members.size()));
}

ObjectSet ObjectSet::of(std::size_t n, std::span<const std::size_t> members) {
  ObjectSet s(n);
  for (auto m : members) s.insert(m);
  return s;
}

ObjectSet ObjectSet::named(const Universe& u, std::span<const std::string> ids) {
  ObjectSet s(u.size());
  for (const auto& id : ids) s.insert(u.index_of(id));
  return s;
}

ObjectSet ObjectSet::named(const Universe& u, std::initializer_list<std::string> ids) {
  return named(u, std::span<const std::string>(ids.begin(), ids.size()));
}

std::vector<std::size_t> ObjectSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bits_.find_next(i))
    out.push_back(i);
  return out;
}

std::vector<std::string> ObjectSet::names(const Universe& u) const {
  std::vector<std::string> out;
  for (auto i : members()) out.push_back(u[i]);
  return out;
}

std::string ObjectSet::to_string(const Universe& u) const {
  std::string out = "{";
  bool first = true;
  for (auto i : members()) {
    if (!first) out += ',';
    out += u[i];
    first = false;
  }
  return out + "}";
}

}  // namespace bss
