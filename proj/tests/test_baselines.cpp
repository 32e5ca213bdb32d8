#include <random>

#include "doctest.h"
#include "stripforge/baselines.hpp"
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

Instance random_instance(std::mt19937& rng, int n, Len W, Len hmax) {
  Instance inst;
  inst.strip_width = W;
  for (int i = 0; i < n; ++i) {
    Len w = 1 + static_cast<Len>(rng() % W);
    Len h = 1 + static_cast<Len>(rng() % hmax);
    inst.items.push_back({"r" + std::to_string(i), w, h});
  }
  return inst;
}

}  // namespace

TEST_CASE("nfdh examples") {
  auto p1 = nfdh(make(10, {{10, 3}}));
  CHECK(p1.height == 3);

  auto p2 = nfdh(make(10, {{5, 4}, {5, 4}, {6, 2}, {4, 2}}));
  CHECK(p2.height == 6);

  auto p3 = nfdh(make(10, {{7, 2}, {7, 2}}));
  CHECK(p3.height == 4);
}

TEST_CASE("ffdh examples") {
  CHECK(ffdh(make(10, {{7, 2}, {7, 2}})).height == 4);
  CHECK(ffdh(make(10, {{7, 2}, {3, 2}, {7, 2}})).height == 4);
  CHECK(ffdh(make(10, {{10, 1}, {10, 1}, {10, 1}})).height == 3);
}

TEST_CASE("nfdh bound and validity, randomized") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    Instance inst = random_instance(rng, 1 + rng() % 25, 2 + rng() % 60,
                                    1 + rng() % 50);
    Len hmax = 0, area = 0;
    for (const auto& it : inst.items) {
      hmax = std::max(hmax, it.height);
      area += it.area();
    }
    for (auto* algo : {&nfdh, &ffdh}) {
      Packing p = (*algo)(inst);
      CHECK(validate_packing(inst, p).ok());
      // integer form of height <= 2*area/W + h_max
      CHECK(p.height * inst.strip_width <= 2 * area + hmax * inst.strip_width);
    }
  }
}

TEST_CASE("steinberg examples") {
  SUBCASE("identity") {
    auto r = steinberg(make(4, {{4, 4}}), 4);
    REQUIRE(r.feasible);
    CHECK(r.packing.placements[0].x == 0);
    CHECK(r.packing.placements[0].y == 0);
  }
  SUBCASE("area violation named") {
    auto r = steinberg(make(4, {{2, 2}, {2, 2}, {2, 2}, {2, 2}}), 4);
    REQUIRE_FALSE(r.feasible);
    CHECK(r.violated == SteinbergCondition::AreaBound);
  }
  SUBCASE("two quarters fit") {
    Instance inst = make(4, {{2, 2}, {2, 2}});
    auto r = steinberg(inst, 4);
    REQUIRE(r.feasible);
    CHECK(validate_packing(inst, r.packing).ok());
    CHECK(r.packing.height <= 4);
  }
  SUBCASE("height violation named") {
    auto r = steinberg(make(10, {{1, 9}}), 8);
    REQUIRE_FALSE(r.feasible);
    CHECK(r.violated == SteinbergCondition::HeightBound);
  }
  SUBCASE("width violation named") {
    auto r = steinberg_pack({{"a", 9, 1}}, 8, 10);
    REQUIRE_FALSE(r.feasible);
    CHECK(r.violated == SteinbergCondition::WidthBound);
  }
}

TEST_CASE("steinberg fuzz: conditions imply a valid packing") {
  std::mt19937 rng(1234);
  int packed = 0;
  for (int t = 0; t < 4000; ++t) {
    Len W = 2 + rng() % 40;
    Len H = 2 + rng() % 40;
    int n = 1 + rng() % 14;
    std::vector<Item> items;
    Len wmax = 0, hmax = 0, area2 = 0;
    for (int i = 0; i < n; ++i) {
      Len w = 1 + static_cast<Len>(rng() % W);
      Len h = 1 + static_cast<Len>(rng() % H);
      // keep the area bound alive by rejecting oversized additions
      Len nw = std::max(wmax, w), nh = std::max(hmax, h);
      Len na2 = area2 + 2 * w * h;
      Len slack_w = std::max<Len>(0, 2 * nw - W);
      Len slack_h = std::max<Len>(0, 2 * nh - H);
      if (na2 > W * H - slack_w * slack_h) continue;
      items.push_back({"f" + std::to_string(i), w, h});
      wmax = nw;
      hmax = nh;
      area2 = na2;
    }
    if (items.empty()) continue;
    auto r = steinberg_pack(items, W, H);
    REQUIRE_MESSAGE(r.feasible, "t=", t, " W=", W, " H=", H);
    Instance inst;
    inst.strip_width = W;
    inst.items = items;
    auto rep = validate_packing(inst, r.packing);
    REQUIRE_MESSAGE(rep.ok(), "t=", t);
    REQUIRE(r.packing.height <= H);
    ++packed;
  }
  CHECK(packed > 3000);
}

TEST_CASE("upper_bound_pack") {
  std::mt19937 rng(99);
  SUBCASE("examples") {
    auto [p1, b1] = upper_bound_pack(make(10, {{10, 5}}));
    CHECK(b1 == 10);
    CHECK(p1.height == 5);
    auto [p2, b2] = upper_bound_pack(make(10, {{5, 4}, {5, 4}, {5, 4}, {5, 4}}));
    CHECK(b2 <= 16);
    CHECK(p2.height <= 16);
    auto [p3, b3] = upper_bound_pack(make(2, {{1, 3}, {1, 1}}));
    CHECK(b3 <= 6);
    CHECK(p3.height <= 6);
  }
  SUBCASE("randomized contract") {
    for (int t = 0; t < 300; ++t) {
      Instance inst = random_instance(rng, 1 + rng() % 20, 2 + rng() % 30,
                                      1 + rng() % 40);
      auto [p, bound] = upper_bound_pack(inst);
      CHECK(validate_packing(inst, p).ok());
      CHECK(p.height <= bound);
      CHECK(bound <= 2 * lower_bound(inst) + 1);
    }
  }
}
