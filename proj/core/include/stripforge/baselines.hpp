#ifndef STRIPFORGE_BASELINES_HPP
#define STRIPFORGE_BASELINES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stripforge/geometry.hpp"

namespace stripforge {

/// Next-Fit Decreasing Height. Items sorted by nonincreasing height, ties by
/// decreasing width then id. Guarantee: height <= 2*area/W + h_max.
Packing nfdh(const Instance& inst);

/// First-Fit Decreasing Height: same order, each item goes to the lowest
/// shelf whose residual width admits it.
Packing ffdh(const Instance& inst);

enum class SteinbergCondition { WidthBound, HeightBound, AreaBound };

struct SteinbergResult {
  bool feasible = false;
  Packing packing;  // valid iff feasible
  // set when infeasible: the first violated inequality
  SteinbergCondition violated = SteinbergCondition::AreaBound;
  std::string detail;
};

/// Packs `items` into a width x height rectangle whenever the three
/// inequalities hold:
///   w_max <= width,  h_max <= height,
///   2*area <= width*height - (2*w_max - width)_+ * (2*h_max - height)_+
/// Otherwise reports the violated inequality. Placements use the items'
/// positions in `items` as ids (caller maps back).
SteinbergResult steinberg_pack(const std::vector<Item>& items, Len width,
                               Len height);

/// Instance-level wrapper: items keep their ids.
SteinbergResult steinberg(const Instance& inst, Len target_height);

/// Packs the whole instance within 2*lower_bound(inst) via Steinberg.
std::pair<Packing, Len> upper_bound_pack(const Instance& inst);

std::string to_string(SteinbergCondition c);

}  // namespace stripforge

#endif
