#include <random>

#include "doctest.h"
#include "stripforge/validate.hpp"

using namespace stripforge;

namespace {

Instance make(Len W, std::vector<std::pair<Len, Len>> dims) {
  Instance inst;
  inst.strip_width = W;
  int k = 0;
  for (auto [w, h] : dims)
    inst.items.push_back({"i" + std::to_string(k++), w, h});
  return inst;
}

}  // namespace

TEST_CASE("validate_packing basics") {
  Instance inst = make(10, {{10, 5}});
  Packing p;
  p.placements = {{"i0", 0, 0, false}};
  p.height = 5;
  CHECK(validate_packing(inst, p).ok());

  SUBCASE("two identical placements overlap") {
    Instance two = make(10, {{5, 5}, {5, 5}});
    Packing q;
    q.placements = {{"i0", 0, 0, false}, {"i1", 0, 0, false}};
    q.height = 5;
    auto rep = validate_packing(two, q);
    CHECK(rep.count(ViolationKind::Overlap) == 1);
  }

  SUBCASE("out of bounds on the right") {
    Instance one = make(10, {{6, 1}});
    Packing q;
    q.placements = {{"i0", 5, 0, false}};
    q.height = 1;
    auto rep = validate_packing(one, q);
    CHECK(rep.count(ViolationKind::OutOfBounds) == 1);
  }

  SUBCASE("edge sharing is not an overlap") {
    Instance two = make(10, {{5, 5}, {5, 5}});
    Packing q;
    q.placements = {{"i0", 0, 0, false}, {"i1", 5, 0, false}};
    q.height = 5;
    CHECK(validate_packing(two, q).ok());
  }

  SUBCASE("missing, duplicate, height mismatch") {
    Instance two = make(10, {{2, 2}, {3, 3}});
    Packing q;
    q.placements = {{"i0", 0, 0, false}, {"i0", 5, 0, false}};
    q.height = 2;
    auto rep = validate_packing(two, q);
    CHECK(rep.count(ViolationKind::Duplicate) == 1);
    CHECK(rep.count(ViolationKind::Missing) == 1);
  }

  SUBCASE("rotation flag needs allow_rotation") {
    Instance one = make(10, {{2, 7}});
    Packing q;
    q.placements = {{"i0", 0, 0, true}};
    q.height = 2;
    CHECK(validate_packing(one, q, false)
              .count(ViolationKind::RotationDisallowed) == 1);
    CHECK(validate_packing(one, q, true).ok());
  }
}

TEST_CASE("packing_height") {
  Instance inst = make(10, {{2, 7}, {2, 4}, {2, 2}});
  Packing p;
  CHECK(packing_height(inst, p) == 0);
  p.placements = {{"i0", 0, 3, false}};
  CHECK(packing_height(inst, p) == 10);
  Packing q;
  q.placements = {{"i1", 0, 0, false}, {"i2", 0, 4, false}};
  CHECK(packing_height(inst, q) == 6);
}

TEST_CASE("total_area") {
  CHECK(total_area({}) == 0);
  CHECK(total_area({{"a", 3, 4}}) == 12);
  CHECK(total_area({{"a", 3, 4}, {"b", 2, 5}}) == 22);
}

TEST_CASE("lower_bound") {
  CHECK(lower_bound(make(10, {{10, 5}})) == 5);
  CHECK(lower_bound(make(10, {{5, 4}, {5, 4}, {5, 4}, {5, 4}})) == 8);
  CHECK(lower_bound(make(2, {{1, 3}, {1, 1}})) == 3);
  CHECK(lower_bound(Instance{7, {}}) == 0);
}

TEST_CASE("mutation of a tight packing is detected") {
  // 2x2 grid of 5x5 items in a 10-wide strip; any +-1 nudge that creates
  // intersection must be reported.
  Instance inst = make(10, {{5, 5}, {5, 5}, {5, 5}, {5, 5}});
  Packing base;
  base.placements = {{"i0", 0, 0, false},
                     {"i1", 5, 0, false},
                     {"i2", 0, 5, false},
                     {"i3", 5, 5, false}};
  base.height = 10;
  REQUIRE(validate_packing(inst, base).ok());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Packing mut = base;
    auto& pl = mut.placements[rng() % mut.placements.size()];
    int axis = rng() % 2;
    int dir = (rng() % 2) ? 1 : -1;
    (axis ? pl.y : pl.x) += dir;
    mut.height = packing_height(inst, mut);

    // reference: does the mutation actually break geometry?
    bool broken = false;
    for (size_t i = 0; i < mut.placements.size() && !broken; ++i) {
      const auto& a = mut.placements[i];
      if (a.x < 0 || a.y < 0 || a.x + 5 > 10) broken = true;
      for (size_t j = i + 1; j < mut.placements.size() && !broken; ++j) {
        const auto& b = mut.placements[j];
        broken = rects_overlap(a.x, a.y, 5, 5, b.x, b.y, 5, 5);
      }
    }
    auto rep = validate_packing(inst, mut);
    if (broken) CHECK_FALSE(rep.ok());
  }
}
