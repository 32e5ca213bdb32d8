#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "stripforge/baselines.hpp"

// Packs items into a u x v rectangle whenever
//   w_max <= u, h_max <= v, 2S <= uv - (2w_max-u)_+ (2h_max-v)_+ .
// The recursion maintains these three inequalities as an invariant:
//  - peel-widest: a widest item q (2w >= u) moves to the top-left corner and
//    the rest recurses into u x (v - h(q)), provided no other item is taller
//    than v - h(q). The area inequality survives because
//    2a(q) = (u + X) h(q) covers the budget shift X'Y' - XY <= X h(q).
//  - peel-tallest: mirror image with a vertical cut.
//    At most one of the two guards can fail unless a "big" item
//    (2w > u and 2h > v) exists; two bigs always violate the area bound.
//  - big item: placed bottom-left; other wide items stack in the top-left
//    corner by nonincreasing width, other tall ones line up bottom-right by
//    nonincreasing height. A crossing pair (q, t) would force
//    2S > uv - (2w(q)-u)(2h(t)-v) >= 2S. Remaining calm items go into the two
//    free arms; an item too large for both arms again contradicts the bound.
//  - calm sets (2w <= u, 2h <= v): stack the two widest in one column and cut
//    (two-stack), or cut at a width-sorted prefix with a balanced budget
//    (split); both keep the invariant because the product term vanishes.
// Transposed variants widen the calm coverage; a direct shelf packing is
// accepted whenever it already fits.

namespace stripforge {

namespace {

struct Rect {
  Len w, h;
};

struct Ctx {
  const std::vector<Rect>* dims;
  std::vector<std::pair<Len, Len>>* pos;  // by item index
  int depth_guard = 0;
};

Len pos_part(Len x) { return x > 0 ? x : 0; }

bool conditions_hold(const std::vector<Rect>& dims,
                     const std::vector<int>& idxs, Len u, Len v) {
  Len wmax = 0, hmax = 0, s2 = 0;
  for (int i : idxs) {
    wmax = std::max(wmax, dims[i].w);
    hmax = std::max(hmax, dims[i].h);
    s2 += 2 * dims[i].w * dims[i].h;
  }
  if (wmax > u || hmax > v) return false;
  return s2 <= u * v - pos_part(2 * wmax - u) * pos_part(2 * hmax - v);
}

bool pack_region(Ctx& ctx, std::vector<int> idxs, Len x0, Len y0, Len u, Len v);

bool try_row(Ctx& ctx, const std::vector<int>& idxs, Len x0, Len y0, Len u,
             Len v) {
  const auto& d = *ctx.dims;
  Len total = 0;
  for (int i : idxs) {
    if (d[i].h > v) return false;
    total += d[i].w;
  }
  if (total > u) return false;
  Len x = x0;
  for (int i : idxs) {
    (*ctx.pos)[i] = {x, y0};
    x += d[i].w;
  }
  return true;
}

bool try_column(Ctx& ctx, const std::vector<int>& idxs, Len x0, Len y0, Len u,
                Len v) {
  const auto& d = *ctx.dims;
  Len total = 0;
  for (int i : idxs) {
    if (d[i].w > u) return false;
    total += d[i].h;
  }
  if (total > v) return false;
  Len y = y0;
  for (int i : idxs) {
    (*ctx.pos)[i] = {x0, y};
    y += d[i].h;
  }
  return true;
}

// Shelf packing by nonincreasing height; succeeds iff it stays below v.
bool try_shelves(Ctx& ctx, const std::vector<int>& idxs, Len x0, Len y0, Len u,
                 Len v) {
  const auto& d = *ctx.dims;
  std::vector<int> order = idxs;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (d[a].h != d[b].h) return d[a].h > d[b].h;
    return d[a].w > d[b].w;
  });
  Len shelf_y = 0, shelf_h = 0, used = 0;
  std::vector<std::pair<Len, Len>> tentative(order.size());
  for (size_t k = 0; k < order.size(); ++k) {
    int i = order[k];
    if (d[i].w > u) return false;
    if (k == 0 || used + d[i].w > u) {
      shelf_y = (k == 0) ? 0 : shelf_y + shelf_h;
      shelf_h = d[i].h;
      used = 0;
    }
    if (shelf_y + d[i].h > v) return false;
    tentative[k] = {used, shelf_y};
    used += d[i].w;
  }
  for (size_t k = 0; k < order.size(); ++k)
    (*ctx.pos)[order[k]] = {x0 + tentative[k].first, y0 + tentative[k].second};
  return true;
}

// Calm-case cut: sort by nonincreasing width, try every prefix/suffix split
// with a budget-balanced vertical cut. All items must satisfy 2h <= v so the
// product term vanishes on both sides.
bool try_split(Ctx& ctx, const std::vector<int>& idxs, Len x0, Len y0, Len u,
               Len v) {
  const auto& d = *ctx.dims;
  for (int i : idxs)
    if (2 * d[i].w > u || 2 * d[i].h > v) return false;
  std::vector<int> order = idxs;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[a].w > d[b].w; });
  Len total2 = 0;
  for (int i : order) total2 += 2 * d[i].w * d[i].h;
  Len prefix2 = 0;
  for (size_t m = 1; m < order.size(); ++m) {
    prefix2 += 2 * d[order[m - 1]].w * d[order[m - 1]].h;
    Len suffix2 = total2 - prefix2;
    Len need_a = std::max(d[order[0]].w, (prefix2 + v - 1) / v);
    Len need_b = std::max(d[order[m]].w, (suffix2 + v - 1) / v);
    if (need_a + need_b > u) continue;
    std::vector<int> a(order.begin(), order.begin() + m);
    std::vector<int> b(order.begin() + m, order.end());
    Len u_a = need_a;
    Len u_b = u - u_a;
    if (pack_region(ctx, a, x0, y0, u_a, v) &&
        pack_region(ctx, b, x0 + u_a, y0, u_b, v))
      return true;
  }
  return false;
}

// Calm-case pair stack: the two widest items share one column, the rest gets
// the remaining width.
bool try_two_stack(Ctx& ctx, const std::vector<int>& idxs, Len x0, Len y0,
                   Len u, Len v) {
  const auto& d = *ctx.dims;
  if (idxs.size() < 2) return false;
  for (int i : idxs)
    if (2 * d[i].w > u || 2 * d[i].h > v) return false;
  std::vector<int> order = idxs;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[a].w > d[b].w; });
  int i1 = order[0], i2 = order[1];
  Len u1 = std::max(d[i1].w, d[i2].w);
  Len rest2 = 0;
  for (size_t k = 2; k < order.size(); ++k)
    rest2 += 2 * d[order[k]].w * d[order[k]].h;
  if (rest2 > (u - u1) * v) return false;
  if (d[i1].h + d[i2].h > v) return false;
  (*ctx.pos)[i1] = {x0, y0};
  (*ctx.pos)[i2] = {x0, y0 + d[i1].h};
  std::vector<int> rest(order.begin() + 2, order.end());
  return pack_region(ctx, rest, x0 + u1, y0, u - u1, v);
}

bool transposed(Ctx& ctx, const std::vector<int>& idxs, Len x0, Len y0, Len u,
                Len v,
                bool (*fn)(Ctx&, const std::vector<int>&, Len, Len, Len, Len)) {
  const auto& d = *ctx.dims;
  std::vector<Rect> tdims(d.size());
  for (size_t i = 0; i < d.size(); ++i) tdims[i] = {d[i].h, d[i].w};
  std::vector<std::pair<Len, Len>> tpos(d.size(), {-1, -1});
  Ctx tctx{&tdims, &tpos, ctx.depth_guard};
  if (!fn(tctx, idxs, 0, 0, v, u)) return false;
  for (int i : idxs) {
    // mirror the transposed placement back: (x,y) in (v,u) -> (y,x) in (u,v)
    (*ctx.pos)[i] = {x0 + tpos[i].second, y0 + tpos[i].first};
  }
  return true;
}

// Big-item case. Exactly one item c has 2w > u and 2h > v. Stairs for the
// other wide and tall items, calm leftovers into the two free arms.
bool pack_big(Ctx& ctx, const std::vector<int>& idxs, int big, Len x0, Len y0,
              Len u, Len v) {
  const auto& d = *ctx.dims;
  (*ctx.pos)[big] = {x0, y0};
  std::vector<int> wides, talls, calms;
  for (int i : idxs) {
    if (i == big) continue;
    if (2 * d[i].w > u)
      wides.push_back(i);
    else if (2 * d[i].h > v)
      talls.push_back(i);
    else
      calms.push_back(i);
  }
  std::sort(wides.begin(), wides.end(),
            [&](int a, int b) { return d[a].w > d[b].w; });
  std::sort(talls.begin(), talls.end(),
            [&](int a, int b) { return d[a].h > d[b].h; });
  Len ytop = y0 + v;
  for (int i : wides) {
    ytop -= d[i].h;
    (*ctx.pos)[i] = {x0, ytop};
  }
  Len xright = x0 + u;
  for (int i : talls) {
    xright -= d[i].w;
    (*ctx.pos)[i] = {xright, y0};
  }
  Len h0 = (y0 + v) - ytop;   // wide stack height
  Len w0 = (x0 + u) - xright; // tall row width
  if (ytop < y0 || xright < x0) return false;

  // arm 1: right of c, below the wide stack; arm 2: above c, left of talls
  Len a1w = u - d[big].w - w0, a1h = v - h0;
  Len a2w = u - w0, a2h = v - d[big].h - h0;
  std::vector<int> arm1, arm2, both;
  for (int i : calms) {
    bool f1 = d[i].w <= a1w && d[i].h <= a1h;
    bool f2 = d[i].w <= a2w && d[i].h <= a2h;
    if (f1 && f2)
      both.push_back(i);
    else if (f1)
      arm1.push_back(i);
    else if (f2)
      arm2.push_back(i);
    else
      return false;  // contradicts the area bound; see header comment
  }
  std::sort(both.begin(), both.end(), [&](int a, int b) {
    return d[a].w * d[a].h > d[b].w * d[b].h;
  });
  for (int i : both) {
    auto with = [&](std::vector<int>& arm, Len aw, Len ah) {
      arm.push_back(i);
      bool ok = conditions_hold(d, arm, aw, ah);
      if (!ok) arm.pop_back();
      return ok;
    };
    Len s1 = 0, s2 = 0;
    for (int k : arm1) s1 += 2 * d[k].w * d[k].h;
    for (int k : arm2) s2 += 2 * d[k].w * d[k].h;
    bool prefer1 = a1w * a1h - s1 >= a2w * a2h - s2;
    if (prefer1 ? with(arm1, a1w, a1h) || with(arm2, a2w, a2h)
                : with(arm2, a2w, a2h) || with(arm1, a1w, a1h))
      continue;
    return false;
  }
  if (!conditions_hold(d, arm1, a1w, a1h) ||
      !conditions_hold(d, arm2, a2w, a2h))
    return false;
  return pack_region(ctx, arm1, x0 + d[big].w, y0, a1w, a1h) &&
         pack_region(ctx, arm2, x0, y0 + d[big].h, a2w, a2h);
}

bool pack_region(Ctx& ctx, std::vector<int> idxs, Len x0, Len y0, Len u,
                 Len v) {
  const auto& d = *ctx.dims;
  if (idxs.empty()) return true;
  if (++ctx.depth_guard > 100000)
    throw std::logic_error("steinberg: runaway recursion");

  if (try_row(ctx, idxs, x0, y0, u, v)) return true;
  if (try_column(ctx, idxs, x0, y0, u, v)) return true;

  int widest = idxs[0], tallest = idxs[0];
  for (int i : idxs) {
    if (d[i].w > d[widest].w) widest = i;
    if (d[i].h > d[tallest].h) tallest = i;
  }

  // peel-widest
  if (2 * d[widest].w >= u) {
    bool guard = true;
    for (int i : idxs)
      if (i != widest && d[i].h > v - d[widest].h) {
        guard = false;
        break;
      }
    if (guard) {
      (*ctx.pos)[widest] = {x0, y0 + v - d[widest].h};
      std::vector<int> rest;
      for (int i : idxs)
        if (i != widest) rest.push_back(i);
      return pack_region(ctx, rest, x0, y0, u, v - d[widest].h);
    }
  }
  // peel-tallest
  if (2 * d[tallest].h >= v) {
    bool guard = true;
    for (int i : idxs)
      if (i != tallest && d[i].w > u - d[tallest].w) {
        guard = false;
        break;
      }
    if (guard) {
      (*ctx.pos)[tallest] = {x0 + u - d[tallest].w, y0};
      std::vector<int> rest;
      for (int i : idxs)
        if (i != tallest) rest.push_back(i);
      return pack_region(ctx, rest, x0, y0, u - d[tallest].w, v);
    }
  }

  // both peels blocked: a big item must exist
  int big = -1;
  for (int i : idxs)
    if (2 * d[i].w > u && 2 * d[i].h > v) {
      big = i;
      break;
    }
  if (big >= 0 && pack_big(ctx, idxs, big, x0, y0, u, v)) return true;

  if (try_two_stack(ctx, idxs, x0, y0, u, v)) return true;
  if (try_split(ctx, idxs, x0, y0, u, v)) return true;
  if (transposed(ctx, idxs, x0, y0, u, v, try_two_stack)) return true;
  if (transposed(ctx, idxs, x0, y0, u, v, try_split)) return true;
  if (try_shelves(ctx, idxs, x0, y0, u, v)) return true;
  if (transposed(ctx, idxs, x0, y0, u, v, try_shelves)) return true;
  return false;
}

}  // namespace

namespace {

// Degenerate escape hatch: the inequalities are sufficient, not necessary.
// A set that fits in one row or one column packs regardless (e.g. a single
// item filling the whole target rectangle).
bool trivial_pack(const std::vector<Item>& items, Len width, Len height,
                  Packing* out) {
  Len tw = 0, th = 0, wmax = 0, hmax = 0;
  for (const auto& it : items) {
    tw += it.width;
    th += it.height;
    wmax = std::max(wmax, it.width);
    hmax = std::max(hmax, it.height);
  }
  if (tw <= width && hmax <= height) {
    Len x = 0;
    for (const auto& it : items) {
      out->placements.push_back({it.id, x, 0, false});
      x += it.width;
      out->height = std::max(out->height, it.height);
    }
    return true;
  }
  if (th <= height && wmax <= width) {
    Len y = 0;
    for (const auto& it : items) {
      out->placements.push_back({it.id, 0, y, false});
      y += it.height;
    }
    out->height = th;
    return true;
  }
  return false;
}

}  // namespace

SteinbergResult steinberg_pack(const std::vector<Item>& items, Len width,
                               Len height) {
  SteinbergResult res;
  Len wmax = 0, hmax = 0, area2 = 0;
  for (const auto& it : items) {
    wmax = std::max(wmax, it.width);
    hmax = std::max(hmax, it.height);
    area2 += 2 * it.area();
  }
  if (wmax > width) {
    res.violated = SteinbergCondition::WidthBound;
    res.detail = "w_max=" + std::to_string(wmax) + " > W=" +
                 std::to_string(width);
    return res;
  }
  if (hmax > height) {
    res.violated = SteinbergCondition::HeightBound;
    res.detail = "h_max=" + std::to_string(hmax) + " > H=" +
                 std::to_string(height);
    return res;
  }
  Len budget = width * height -
               pos_part(2 * wmax - width) * pos_part(2 * hmax - height);
  if (area2 > budget) {
    if (trivial_pack(items, width, height, &res.packing)) {
      res.feasible = true;
      return res;
    }
    res.packing = Packing{};
    res.violated = SteinbergCondition::AreaBound;
    res.detail = "2*area=" + std::to_string(area2) + " > " +
                 std::to_string(budget);
    return res;
  }

  std::vector<Rect> dims(items.size());
  for (size_t i = 0; i < items.size(); ++i)
    dims[i] = {items[i].width, items[i].height};
  std::vector<std::pair<Len, Len>> pos(items.size(), {-1, -1});
  Ctx ctx{&dims, &pos};
  std::vector<int> idxs(items.size());
  std::iota(idxs.begin(), idxs.end(), 0);
  if (!pack_region(ctx, idxs, 0, 0, width, height))
    throw std::logic_error(
        "steinberg: inequalities hold but the recursion found no packing");

  res.feasible = true;
  for (size_t i = 0; i < items.size(); ++i) {
    res.packing.placements.push_back({items[i].id, pos[i].first, pos[i].second,
                                      false});
    res.packing.height = std::max(res.packing.height,
                                  pos[i].second + items[i].height);
  }
  return res;
}

}  // namespace stripforge
