#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bss/soft_set.hpp"
#include "bss/tabular.hpp"

namespace gen {

inline constexpr std::uint32_t kSeed = 0x5eedb55u;

struct Shape {
  std::size_t max_objects = 8;
  std::size_t max_parameters = 6;
};

class Generator {
 public:
  explicit Generator(std::uint32_t seed = kSeed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  int tri() { return static_cast<int>(uniform(0, 2)) - 1; }

  bss::UniversePtr universe(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("u" + std::to_string(i + 1));
    return bss::make_universe(std::move(ids));
  }

  bss::ParameterSpacePtr space(std::size_t n) {
    std::vector<bss::Parameter> ps;
    for (std::size_t i = 0; i < n; ++i)
      ps.push_back(bss::Parameter::with_default_negation("e" + std::to_string(i + 1)));
    return bss::make_space(std::move(ps));
  }

  std::vector<std::size_t> domain(std::size_t space_size) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < space_size; ++i)
      if (coin()) d.push_back(i);
    return d;
  }

  // Each object lands in F(e), G(not e) or H(e) with equal probability.
  bss::BipolarSoftSet soft_set(const bss::UniversePtr& u, const bss::ParameterSpacePtr& e,
                               const std::vector<std::size_t>& domain) {
    std::vector<bss::BipolarSoftSet::Entry> entries;
    for (auto p : domain) {
      bss::BipolarSoftSet::Entry entry{p, bss::ObjectSet(u->size()), bss::ObjectSet(u->size())};
      for (std::size_t i = 0; i < u->size(); ++i) {
        const int t = tri();
        if (t == 1) entry.positive.insert(i);
        if (t == -1) entry.negative.insert(i);
      }
      entries.push_back(std::move(entry));
    }
    return bss::BipolarSoftSet(u, e, std::move(entries));
  }

  bss::BipolarSoftSet soft_set(const bss::UniversePtr& u, const bss::ParameterSpacePtr& e) {
    return soft_set(u, e, domain(e->size()));
  }

  bss::TriTable tri_table(std::size_t rows, std::size_t cols) {
    std::vector<std::string> r;
    std::vector<std::string> c;
    for (std::size_t i = 0; i < rows; ++i) r.push_back("m" + std::to_string(i + 1));
    for (std::size_t j = 0; j < cols; ++j) c.push_back("e" + std::to_string(j + 1));
    std::vector<std::int8_t> entries(rows * cols);
    for (auto& x : entries) x = static_cast<std::int8_t>(tri());
    return bss::TriTable(std::move(r), std::move(c), std::move(entries));
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Sets sharing one universe and one parameter space.
struct Family {
  bss::UniversePtr universe;
  bss::ParameterSpacePtr space;
  std::vector<bss::BipolarSoftSet> sets;
};

inline Family family(Generator& g, std::size_t count, Shape shape = {}) {
  Family f;
  f.universe = g.universe(g.uniform(1, shape.max_objects));
  f.space = g.space(g.uniform(1, shape.max_parameters));
  for (std::size_t k = 0; k < count; ++k) f.sets.push_back(g.soft_set(f.universe, f.space));
  return f;
}

}  // namespace gen
