#include "stripforge/validate.hpp"

#include <algorithm>
#include <map>

namespace stripforge {

Len packing_height(const Instance& inst, const Packing& packing) {
  Len h = 0;
  for (const auto& p : packing.placements) {
    const Item* it = inst.find(p.item_id);
    if (!it) continue;
    h = std::max(h, p.y + effective_height(*it, p));
  }
  return h;
}

Len lower_bound(const Instance& inst) {
  if (inst.items.empty()) return 0;
  Len area = total_area(inst.items);
  Len by_area = (area + inst.strip_width - 1) / inst.strip_width;
  Len by_height = 0;
  for (const auto& it : inst.items) by_height = std::max(by_height, it.height);
  return std::max(by_area, by_height);
}

bool rects_overlap(Len x1, Len y1, Len w1, Len h1, Len x2, Len y2, Len w2,
                   Len h2) {
  return x1 < x2 + w2 && x2 < x1 + w1 && y1 < y2 + h2 && y2 < y1 + h1;
}

ValidationReport validate_packing(const Instance& inst, const Packing& packing,
                                  bool allow_rotation) {
  ValidationReport report;
  std::map<std::string, int> seen;

  struct Placed {
    const Placement* p;
    const Item* item;
    Len w, h;
  };
  std::vector<Placed> placed;
  placed.reserve(packing.placements.size());

  for (const auto& p : packing.placements) {
    const Item* it = inst.find(p.item_id);
    if (!it) {
      report.violations.push_back({ViolationKind::UnknownItem, p.item_id, "",
                                   "placement references no instance item"});
      continue;
    }
    if (++seen[p.item_id] > 1) {
      report.violations.push_back(
          {ViolationKind::Duplicate, p.item_id, "", "placed more than once"});
      continue;
    }
    if (p.rotated && !allow_rotation) {
      report.violations.push_back({ViolationKind::RotationDisallowed,
                                   p.item_id, "",
                                   "rotated placement without --rotations"});
    }
    Len w = effective_width(*it, p);
    Len h = effective_height(*it, p);
    if (p.x < 0 || p.y < 0 || p.x + w > inst.strip_width) {
      report.violations.push_back(
          {ViolationKind::OutOfBounds, p.item_id, "",
           "x=" + std::to_string(p.x) + " w=" + std::to_string(w) +
               " W=" + std::to_string(inst.strip_width)});
    }
    placed.push_back({&p, it, w, h});
  }

  for (const auto& it : inst.items) {
    if (!seen.count(it.id))
      report.violations.push_back(
          {ViolationKind::Missing, it.id, "", "item never placed"});
  }

  for (size_t i = 0; i < placed.size(); ++i) {
    for (size_t j = i + 1; j < placed.size(); ++j) {
      const auto& a = placed[i];
      const auto& b = placed[j];
      if (rects_overlap(a.p->x, a.p->y, a.w, a.h, b.p->x, b.p->y, b.w, b.h)) {
        report.violations.push_back({ViolationKind::Overlap, a.p->item_id,
                                     b.p->item_id, "inner points shared"});
      }
    }
  }

  Len actual = 0;
  for (const auto& pl : placed) actual = std::max(actual, pl.p->y + pl.h);
  if (actual != packing.height) {
    report.violations.push_back(
        {ViolationKind::HeightMismatch, "", "",
         "cached=" + std::to_string(packing.height) +
             " actual=" + std::to_string(actual)});
  }
  return report;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Overlap: return "Overlap";
    case ViolationKind::OutOfBounds: return "OutOfBounds";
    case ViolationKind::Missing: return "Missing";
    case ViolationKind::Duplicate: return "Duplicate";
    case ViolationKind::UnknownItem: return "UnknownItem";
    case ViolationKind::HeightMismatch: return "HeightMismatch";
    case ViolationKind::RotationDisallowed: return "RotationDisallowed";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  std::string s = to_string(v.kind);
  if (!v.a.empty()) s += " " + v.a;
  if (!v.b.empty()) s += "," + v.b;
  if (!v.detail.empty()) s += " (" + v.detail + ")";
  return s;
}

}  // namespace stripforge
