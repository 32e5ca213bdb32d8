#ifndef STRIPFORGE_GEOMETRY_HPP
#define STRIPFORGE_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace stripforge {

using Len = long long;

/// Axis-parallel rectangle to pack. Width counts strip columns, height is in
/// integral height units. All geometry in this library is exact integer.
struct Item {
  std::string id;
  Len width = 0;
  Len height = 0;

  Len area() const { return width * height; }
};

struct Instance {
  Len strip_width = 0;
  std::vector<Item> items;

  const Item* find(const std::string& id) const {
    for (const auto& it : items)
      if (it.id == id) return &it;
    return nullptr;
  }
};

/// Lower-left corner of one item. When `rotated` is set the item's width and
/// height swap roles.
struct Placement {
  std::string item_id;
  Len x = 0;
  Len y = 0;
  bool rotated = false;
};

struct Packing {
  std::vector<Placement> placements;
  Len height = 0;
};

inline Len effective_width(const Item& it, const Placement& p) {
  return p.rotated ? it.height : it.width;
}
inline Len effective_height(const Item& it, const Placement& p) {
  return p.rotated ? it.width : it.height;
}

/// max(y + effective height) over all placements; 0 for an empty packing.
/// Requires the packing's placements to be resolvable against `inst`.
Len packing_height(const Instance& inst, const Packing& packing);

/// Height recomputed from placements only, trusting per-placement heights
/// stored alongside. Used internally where items are already resolved.
inline Len total_area(const std::vector<Item>& items) {
  Len s = 0;
  for (const auto& it : items) s += it.area();
  return s;
}

/// max{ceil(area/W), max height}; 0 for an empty instance. Never exceeds OPT.
Len lower_bound(const Instance& inst);

}  // namespace stripforge

#endif
