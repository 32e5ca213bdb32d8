#include "stripforge/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace stripforge {

namespace {

struct Shelf {
  Len y = 0;
  Len height = 0;      // height of the first item opened on this shelf
  Len used_width = 0;
};

std::vector<const Item*> sorted_by_height(const Instance& inst) {
  std::vector<const Item*> order;
  order.reserve(inst.items.size());
  for (const auto& it : inst.items) order.push_back(&it);
  std::sort(order.begin(), order.end(), [](const Item* a, const Item* b) {
    if (a->height != b->height) return a->height > b->height;
    if (a->width != b->width) return a->width > b->width;
    return a->id < b->id;
  });
  return order;
}

}  // namespace

Packing nfdh(const Instance& inst) {
  Packing out;
  Shelf cur;
  bool open = false;
  for (const Item* it : sorted_by_height(inst)) {
    if (!open || cur.used_width + it->width > inst.strip_width) {
      Len next_y = open ? cur.y + cur.height : 0;
      cur = Shelf{next_y, it->height, 0};
      open = true;
    }
    out.placements.push_back({it->id, cur.used_width, cur.y, false});
    cur.used_width += it->width;
    out.height = std::max(out.height, cur.y + it->height);
  }
  return out;
}

Packing ffdh(const Instance& inst) {
  Packing out;
  std::vector<Shelf> shelves;
  for (const Item* it : sorted_by_height(inst)) {
    Shelf* target = nullptr;
    for (auto& s : shelves) {
      if (s.used_width + it->width <= inst.strip_width) {
        target = &s;
        break;
      }
    }
    if (!target) {
      Len y = shelves.empty() ? 0 : shelves.back().y + shelves.back().height;
      shelves.push_back(Shelf{y, it->height, 0});
      target = &shelves.back();
    }
    out.placements.push_back({it->id, target->used_width, target->y, false});
    target->used_width += it->width;
    out.height = std::max(out.height, target->y + it->height);
  }
  return out;
}

SteinbergResult steinberg(const Instance& inst, Len target_height) {
  return steinberg_pack(inst.items, inst.strip_width, target_height);
}

std::pair<Packing, Len> upper_bound_pack(const Instance& inst) {
  Len bound = 2 * lower_bound(inst);
  SteinbergResult r = steinberg(inst, bound);
  if (!r.feasible) {
    // Integrality slack: ceil(area/W) truncation can in principle leave the
    // area inequality one unit short.
    r = steinberg(inst, bound + 1);
    if (!r.feasible)
      throw std::logic_error("upper_bound_pack: Steinberg preconditions must "
                             "hold at 2*lower_bound: " + r.detail);
    bound += 1;
  }
  return {std::move(r.packing), bound};
}

std::string to_string(SteinbergCondition c) {
  switch (c) {
    case SteinbergCondition::WidthBound: return "w_max<=W";
    case SteinbergCondition::HeightBound: return "h_max<=H";
    case SteinbergCondition::AreaBound: return "2*area<=W*H-(2w-W)+(2h-H)+";
  }
  return "?";
}

}  // namespace stripforge
