#ifndef STRIPFORGE_REORDER_INTERNAL_HPP
#define STRIPFORGE_REORDER_INTERNAL_HPP

#include <set>
#include <vector>

#include "stripforge/reorder.hpp"

namespace stripforge::reorder_detail {

struct Unit {
  Len x = 0, y = 0, w = 0, h = 0;
  std::vector<int> talls;
  std::vector<int> slices;
  bool frozen = false;
  Len tall_key = 0;
  bool full_height = false;
};

struct Work {
  Len W = 0;
  Len hB = 0;
  Len H = 0;
  Len N = 0;
  Len Q = 0;
  Len U = 0;
  Len sky = 0;
  Len M = 0;
  std::vector<TallPlaced> tall;
  std::vector<Slice> slices;
  std::vector<Unit> units;

  bool crosses_low(Len y, Len h) const { return 4 * y < H && 4 * (y + h) > H; }
  bool crosses_upper(Len y, Len h) const {
    return 4 * y < 4 * hB - H && 4 * (y + h) > 4 * hB - H;
  }
  bool crosses_mid(Len y, Len h) const {
    return 2 * y < hB && 2 * (y + h) > hB;
  }
};

void move_unit(Work& wk, Unit& u, Len dx, Len dy);
void first_shift(Work& wk, const std::set<int>& frozen_talls);

struct EngineResult {
  std::vector<Box> tall_boxes;
  std::vector<Box> sliced_boxes;
  Len height = 0;
};

EngineResult run_engine(Work& wk, const std::set<int>& frozen_talls);

}  // namespace stripforge::reorder_detail

#endif
