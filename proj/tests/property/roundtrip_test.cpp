#include <gtest/gtest.h>

#include "bss/dataset_io.hpp"
#include "bss/tabular.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace bss;

namespace {

constexpr int kCases = 200;

const DatasetFormat kFormats[] = {DatasetFormat::Json, DatasetFormat::Table};

void expect_round_trip(const BipolarSoftSet& s) {
  for (auto fmt : kFormats) {
    const auto text = format_dataset(s, fmt);
    const auto back = parse_dataset(text, fmt);
    EXPECT_TRUE(oracle::from(back) == oracle::from(s)) << text;
    EXPECT_EQ(back.domain_labels(), s.domain_labels()) << text;
    EXPECT_EQ(back.space().parameters(), s.space().parameters()) << text;
    EXPECT_EQ(format_dataset(back, fmt), text);
  }
}

}  // namespace

TEST(RoundTrip, Fixtures) {
  for (const auto* name : {"houses_x.json", "houses_y.json", "mood_chart.csv", "candidates.csv"})
    expect_round_trip(fixtures::load(name));
  const auto x = fixtures::load("houses_x.json");
  const auto y = fixtures::load("houses_y.json");
  expect_round_trip(and_product(x, y));
  expect_round_trip(or_product(x, y));
}

TEST(RoundTrip, RandomSets) {
  gen::Generator g;
  for (int k = 0; k < kCases; ++k) {
    auto f = gen::family(g, 2);
    expect_round_trip(f.sets[0]);
    if (k % 10 == 0) expect_round_trip(and_product(f.sets[0], f.sets[1]));
  }
}

TEST(RoundTrip, TablesAreMutualInverses) {
  gen::Generator g;
  for (int k = 0; k < kCases; ++k) {
    const auto s = gen::family(g, 1).sets[0];
    EXPECT_TRUE(equals(from_tri_table(to_tri_table(s), s.space_ptr()), s));
    EXPECT_TRUE(equals(from_pair_table(to_pair_table(s), s.space_ptr()), s));
    EXPECT_EQ(tri_from_pair(to_pair_table(s)), to_tri_table(s));
  }
}
