#include "stripforge/grid.hpp"

#include <algorithm>
#include <map>

#include "stripforge/validate.hpp"

namespace stripforge {

GridPacking make_grid_packing(const Instance& inst, const Packing& packing,
                              Len H, Len N) {
  if (N <= 0 || H % N != 0)
    throw std::invalid_argument("make_grid_packing: N must divide H");
  GridPacking gp;
  gp.strip_width = inst.strip_width;
  gp.H = H;
  gp.N = N;
  const Len g = gp.pitch();

  for (const auto& p : packing.placements) {
    int idx = -1;
    for (size_t i = 0; i < inst.items.size(); ++i)
      if (inst.items[i].id == p.item_id) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0)
      throw std::invalid_argument("make_grid_packing: unknown item " +
                                  p.item_id);
    const Item& it = inst.items[idx];
    Len w = effective_width(it, p);
    Len h = effective_height(it, p);
    if (4 * h > H) {
      if (p.y % g != 0 || (p.y + h) % g != 0) throw AlignmentError(it.id);
      gp.tall.push_back({idx, it.id, w, h, p.x, p.y});
    } else {
      for (Len c = 0; c < w; ++c)
        gp.slices.push_back({idx, h, p.x + c, p.y});
    }
  }
  return gp;
}

std::vector<std::string> grid_packing_violations(const GridPacking& gp,
                                                 Len height_limit) {
  std::vector<std::string> out;
  for (const auto& t : gp.tall) {
    if (t.x < 0 || t.x + t.width > gp.strip_width || t.y < 0 ||
        t.y + t.height > height_limit)
      out.push_back("tall out of bounds: " + t.id);
  }
  for (const auto& s : gp.slices) {
    if (s.x < 0 || s.x >= gp.strip_width || s.y < 0 ||
        s.y + s.height > height_limit)
      out.push_back("slice out of bounds at x=" + std::to_string(s.x));
  }
  for (size_t i = 0; i < gp.tall.size(); ++i)
    for (size_t j = i + 1; j < gp.tall.size(); ++j) {
      const auto &a = gp.tall[i], &b = gp.tall[j];
      if (rects_overlap(a.x, a.y, a.width, a.height, b.x, b.y, b.width,
                        b.height))
        out.push_back("tall overlap: " + a.id + "," + b.id);
    }
  // slice-vs-tall and slice-vs-slice per column
  std::map<Len, std::vector<std::pair<Len, Len>>> columns;
  for (const auto& s : gp.slices)
    columns[s.x].push_back({s.y, s.y + s.height});
  for (auto& [x, spans] : columns) {
    std::sort(spans.begin(), spans.end());
    for (size_t i = 0; i + 1 < spans.size(); ++i)
      if (spans[i].second > spans[i + 1].first)
        out.push_back("slice overlap in column " + std::to_string(x));
    for (const auto& t : gp.tall) {
      if (t.x <= x && x < t.x + t.width) {
        for (auto& [lo, hi] : spans)
          if (lo < t.y + t.height && t.y < hi)
            out.push_back("slice under tall " + t.id + " in column " +
                          std::to_string(x));
      }
    }
  }
  return out;
}

std::vector<std::pair<int, Len>> slice_inventory(const GridPacking& gp) {
  std::map<int, Len> acc;
  for (const auto& s : gp.slices) acc[s.origin] += s.height;
  return {acc.begin(), acc.end()};
}

}  // namespace stripforge
