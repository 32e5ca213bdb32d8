#include "stripforge/reorder.hpp"

#include "reorder_internal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

// Shifting-and-reordering engine. The simplified whole-strip case and the
// tall-box case share one pipeline, parameterized by the box height hB and
// the grid height H:
//   1. first shift: movable tall items crossing the line H/4 drop to the
//      bottom (the sliced stock below swaps above them); movable tall items
//      crossing hB - H/4 rise to the box top (stock above swaps below).
//   2. pseudo items: per-column gaps bounded by tall items or the borders
//      become movable containers; a tall item higher than (3/4)hB is wrapped
//      into a full-height pseudo together with the stock above it.
//   3. second shift: units crossing hB - H/4 (not H/4) rise by exactly
//      Q = ceil(H/4) + slack; pseudo units inside [hB/2, hB - H/4] stand on
//      the line U = hB - Q; units crossing hB/2 (nothing else) hang from U.
//   4. fusing: pseudo units still anchored nowhere move next to anchored
//      content (the three cases of the simplified-case proof); tall items
//      higher than hB/2 touching the sky line are wrapped down to ceil(hB/2).
//   5. permutation: anchored composites are sorted per line (full-height
//      block, sky/anchored-desc, bottom-asc, hanging/standing shelves) and
//      replaced left to right around frozen columns with skyline checks.
// Every stage leaves the multiset of tall items and slices intact; the caller
// re-validates geometry after each stage boundary.

namespace stripforge {

std::string to_string(BoxKind k) {
  switch (k) {
    case BoxKind::LargeItem: return "large";
    case BoxKind::Horizontal: return "horizontal";
    case BoxKind::TallVertical: return "tall_vertical";
    case BoxKind::TallSub: return "tall";
    case BoxKind::VerticalSub: return "vertical";
    case BoxKind::SmallEmpty: return "small_empty";
    case BoxKind::ExtraVertical: return "extra_vertical";
  }
  return "?";
}

namespace reorder_detail {

void move_unit(Work& wk, Unit& u, Len dx, Len dy) {
  u.x += dx;
  u.y += dy;
  for (int t : u.talls) {
    wk.tall[t].x += dx;
    wk.tall[t].y += dy;
  }
  for (int s : u.slices) {
    wk.slices[s].x += dx;
    wk.slices[s].y += dy;
  }
}

// --- stage 1: vertical shifts of tall items with slice swapping -----------

void first_shift(Work& wk, const std::set<int>& frozen_talls) {
  // crossers of H/4 drop to the bottom
  for (size_t i = 0; i < wk.tall.size(); ++i) {
    auto& t = wk.tall[i];
    if (frozen_talls.count(static_cast<int>(i))) continue;
    if (!wk.crosses_low(t.y, t.height)) continue;
    for (auto& s : wk.slices)
      if (s.x >= t.x && s.x < t.x + t.width && s.y + s.height <= t.y)
        s.y += t.height;
    t.y = 0;
  }
  // crossers of hB - H/4 (not H/4) rise to the box top
  for (size_t i = 0; i < wk.tall.size(); ++i) {
    auto& t = wk.tall[i];
    if (frozen_talls.count(static_cast<int>(i))) continue;
    if (wk.crosses_low(t.y, t.height)) continue;
    if (!wk.crosses_upper(t.y, t.height)) continue;
    for (auto& s : wk.slices)
      if (s.x >= t.x && s.x < t.x + t.width && s.y >= t.y + t.height)
        s.y -= t.height;
    t.y = wk.hB - t.height;
  }
}

// --- stage 2: per-column gap -> pseudo units -------------------------------

void build_units(Work& wk, const std::set<int>& frozen_talls) {
  wk.units.clear();
  std::vector<bool> in_full(wk.tall.size(), false);

  // full-height pseudos around talls higher than (3/4)hB
  for (size_t i = 0; i < wk.tall.size(); ++i) {
    const auto& t = wk.tall[i];
    if (4 * t.height <= 3 * wk.hB) continue;
    if (frozen_talls.count(static_cast<int>(i))) continue;
    Unit u;
    u.x = t.x;
    u.y = 0;
    u.w = t.width;
    u.h = wk.hB;
    u.talls = {static_cast<int>(i)};
    u.tall_key = t.height;
    u.full_height = true;
    for (size_t s = 0; s < wk.slices.size(); ++s)
      if (wk.slices[s].x >= t.x && wk.slices[s].x < t.x + t.width)
        u.slices.push_back(static_cast<int>(s));
    in_full[i] = true;
    wk.units.push_back(std::move(u));
  }

  // bare tall units
  for (size_t i = 0; i < wk.tall.size(); ++i) {
    if (in_full[i]) continue;
    const auto& t = wk.tall[i];
    Unit u;
    u.x = t.x;
    u.y = t.y;
    u.w = t.width;
    u.h = t.height;
    u.talls = {static_cast<int>(i)};
    u.tall_key = t.height;
    u.frozen = frozen_talls.count(static_cast<int>(i)) > 0;
    wk.units.push_back(std::move(u));
  }

  // slice units: per-column gaps bounded by tall items or borders, merged
  // over maximal column runs with identical bounds
  std::vector<char> slice_taken(wk.slices.size(), 0);
  for (const auto& u : wk.units)
    for (int s : u.slices) slice_taken[s] = 1;

  std::map<Len, std::vector<std::pair<Len, Len>>> col_bounds;  // tall spans
  for (size_t i = 0; i < wk.tall.size(); ++i) {
    const auto& t = wk.tall[i];
    bool covered = in_full[i];
    for (Len c = t.x; c < t.x + t.width; ++c) {
      if (covered)
        col_bounds[c].push_back({0, wk.hB});  // full column blocked
      else
        col_bounds[c].push_back({t.y, t.y + t.height});
    }
  }
  struct GapRef {
    Len lo, hi;
    std::vector<int> slices;
  };
  std::map<Len, std::vector<GapRef>> gaps;
  for (Len c = 0; c < wk.W; ++c) {
    auto spans = col_bounds.count(c) ? col_bounds[c]
                                     : std::vector<std::pair<Len, Len>>{};
    std::sort(spans.begin(), spans.end());
    Len cur = 0;
    std::vector<GapRef> col;
    for (auto& [lo, hi] : spans) {
      if (lo > cur) col.push_back({cur, lo, {}});
      cur = std::max(cur, hi);
    }
    if (cur < wk.hB) col.push_back({cur, wk.hB, {}});
    gaps[c] = std::move(col);
  }
  for (size_t s = 0; s < wk.slices.size(); ++s) {
    if (slice_taken[s]) continue;
    auto& sl = wk.slices[s];
    for (auto& g : gaps[sl.x])
      if (g.lo <= sl.y && sl.y + sl.height <= g.hi) {
        g.slices.push_back(static_cast<int>(s));
        break;
      }
  }
  // merge adjacent columns with identical bounds into one pseudo unit
  for (Len c = 0; c < wk.W; ++c) {
    for (auto& g : gaps[c]) {
      if (g.slices.empty() && !(g.lo == 0 && g.hi == wk.hB)) continue;
      if (g.slices.empty()) continue;
      Unit u;
      u.x = c;
      u.y = g.lo;
      u.w = 1;
      u.h = g.hi - g.lo;
      u.slices = g.slices;
      u.full_height = (g.lo == 0 && g.hi == wk.hB);
      // try to extend over following columns with the same bounds
      Len cc = c + 1;
      while (cc < wk.W) {
        GapRef* match = nullptr;
        for (auto& g2 : gaps[cc])
          if (g2.lo == g.lo && g2.hi == g.hi) {
            match = &g2;
            break;
          }
        if (!match) break;
        u.w += 1;
        for (int s : match->slices) u.slices.push_back(s);
        match->slices.clear();
        match->lo = -1;  // consumed
        match->hi = -1;
        ++cc;
      }
      g.slices.clear();
      wk.units.push_back(std::move(u));
    }
  }
}

// --- stage 3: second shift --------------------------------------------------

void second_shift(Work& wk) {
  // (i) crossers of hB - H/4 (not H/4) rise exactly Q
  for (auto& u : wk.units) {
    if (u.frozen || u.full_height) continue;
    if (wk.crosses_low(u.y, u.h)) continue;
    if (wk.crosses_upper(u.y, u.h)) move_unit(wk, u, 0, wk.Q);
  }
  // (ii) pseudo units inside [hB/2, hB - H/4] stand on the line U
  for (auto& u : wk.units) {
    if (u.frozen || u.full_height || !u.talls.empty()) continue;
    if (2 * u.y >= wk.hB && 4 * (u.y + u.h) <= 4 * wk.hB - wk.H && u.y < wk.U)
      move_unit(wk, u, 0, wk.U - u.y);
  }
  // (iii) remaining crossers of hB/2 hang from U
  for (auto& u : wk.units) {
    if (u.frozen || u.full_height) continue;
    if (wk.crosses_low(u.y, u.h) || wk.crosses_upper(u.y, u.h)) continue;
    if (wk.crosses_mid(u.y, u.h) && u.y + u.h < wk.U)
      move_unit(wk, u, 0, wk.U - (u.y + u.h));
  }
}

bool anchored(const Work& wk, const Unit& u) {
  return u.y == 0 || u.y == wk.U || u.y + u.h == wk.U || u.y + u.h == wk.sky ||
         u.full_height;
}

bool columns_overlap(const Unit& a, const Unit& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w;
}

bool units_collide(const Unit& a, const Unit& b) {
  return columns_overlap(a, b) && a.y < b.y + b.h && b.y < a.y + a.h;
}

// --- stage 4: fusing --------------------------------------------------------

void fuse(Work& wk) {
  // bottom talls higher than hB/2 extend their rect to the line U; the band
  // above them is free after the second shift
  for (auto& u : wk.units) {
    if (u.frozen || u.full_height || u.talls.empty()) continue;
    if (u.y == 0 && 2 * u.h > wk.hB && u.y + u.h < wk.U) u.h = wk.U - u.y;
  }

  for (auto& p : wk.units) {
    if (p.frozen || p.full_height || !p.talls.empty()) continue;
    if (anchored(wk, p)) continue;
    // case 2: a tall higher than hB/2 hanging from the sky line above this
    // pseudo -> stand on the mid line (the wrapper absorbs it later)
    bool wrap_tall_above = false;
    for (const auto& t : wk.units) {
      if (&t == &p || t.talls.empty()) continue;
      if (columns_overlap(p, t) && t.y + t.h == wk.sky && 2 * t.h > wk.hB)
        wrap_tall_above = true;
    }
    std::vector<Len> candidates;
    if (wrap_tall_above) candidates.push_back(wk.M);
    // atop standing content at U / below hanging content / atop bottom stock
    Len stand_top = wk.U;
    Len hang_bottom = wk.sky;
    Len bottom_top = 0;
    for (const auto& o : wk.units) {
      if (&o == &p || !columns_overlap(p, o)) continue;
      if (o.y >= wk.U && o.y + o.h <= wk.sky)
        stand_top = std::max(stand_top, o.y + o.h);
      if (o.y + o.h == wk.sky) hang_bottom = std::min(hang_bottom, o.y);
      if (o.y == 0) bottom_top = std::max(bottom_top, o.y + o.h);
    }
    candidates.push_back(stand_top);
    candidates.push_back(hang_bottom - p.h);
    candidates.push_back(bottom_top);
    bool placed = false;
    for (Len cand : candidates) {
      if (cand < 0) continue;
      Unit probe = p;
      probe.y = cand;
      bool clash = probe.y + probe.h > wk.sky;
      for (const auto& o : wk.units) {
        if (clash) break;
        if (&o == &p) continue;
        clash = units_collide(probe, o);
      }
      if (!clash) {
        move_unit(wk, p, 0, cand - p.y);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::logic_error("reorder: fusing found no slot for a pseudo");
  }

  // wrap: tall items higher than hB/2 hanging from the sky line grow down to
  // M so the standing pseudos beneath them ride along in the permutation
  for (auto& u : wk.units) {
    if (u.frozen || u.full_height || u.talls.empty()) continue;
    if (u.y + u.h == wk.sky && 2 * u.h > wk.hB && u.y > wk.M) {
      u.h = wk.sky - wk.M;
      u.y = wk.M;
    }
  }
}

// --- stage 5: composites, permutation, extraction ---------------------------

struct Composite {
  std::vector<int> members;  // unit indices; members[0] is the anchor
  Len x = 0, w = 0, lo = 0, hi = 0;
  Len key = 0;       // sort key (tall height or unit height)
  int group = 0;     // 1..6 per area system
  bool frozen = false;
};

constexpr int kGroupFull = 1;      // full-height block
constexpr int kGroupSkyBig = 2;    // touching sky, height >= hB/2 (wrapped)
constexpr int kGroupBottomBig = 3; // bottom, height >= hB/2
constexpr int kGroupSkyHang = 4;   // touching sky, height < hB/2
constexpr int kGroupStand = 5;     // standing on U
constexpr int kGroupBottom = 6;    // bottom, height < hB/2
constexpr int kGroupHangU = 7;     // hanging below U

std::vector<Composite> build_composites(Work& wk) {
  const size_t n = wk.units.size();
  std::vector<int> owner(n, -1);
  std::vector<Composite> comps;

  auto unit_group = [&](const Unit& u) -> int {
    if (u.full_height) return kGroupFull;
    if (u.y + u.h == wk.sky) return 2 * u.h >= wk.hB ? kGroupSkyBig : kGroupSkyHang;
    if (u.y == 0) return 2 * u.h >= wk.hB ? kGroupBottomBig : kGroupBottom;
    if (u.y == wk.U) return kGroupStand;
    if (u.y + u.h == wk.U) return kGroupHangU;
    return 0;
  };

  // anchored units open composites
  for (size_t i = 0; i < n; ++i) {
    const Unit& u = wk.units[i];
    int g = unit_group(u);
    if (g == 0) continue;
    Composite c;
    c.members = {static_cast<int>(i)};
    c.x = u.x;
    c.w = u.w;
    c.lo = u.y;
    c.hi = u.y + u.h;
    c.key = u.tall_key ? u.tall_key : u.h;
    c.group = g;
    c.frozen = u.frozen;
    owner[i] = static_cast<int>(comps.size());
    comps.push_back(std::move(c));
  }
  // riders attach to an anchored composite covering their columns, either
  // touching its rect or contained in it (wrapped pseudos)
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < n; ++i) {
      if (owner[i] >= 0) continue;
      const Unit& u = wk.units[i];
      for (size_t k = 0; k < comps.size(); ++k) {
        auto& c = comps[k];
        if (!(u.x >= c.x && u.x + u.w <= c.x + c.w)) continue;
        bool touches = (u.y == c.hi || u.y + u.h == c.lo);
        bool inside = (u.y >= c.lo && u.y + u.h <= c.hi);
        if (touches || inside) {
          owner[i] = static_cast<int>(k);
          c.lo = std::min(c.lo, u.y);
          c.hi = std::max(c.hi, u.y + u.h);
          c.members.push_back(static_cast<int>(i));
          progress = true;
          break;
        }
      }
    }
  }
  for (size_t i = 0; i < n; ++i)
    if (owner[i] < 0)
      throw std::logic_error("reorder: unanchored unit after fusing");
  return comps;
}

void shift_composite(Work& wk, Composite& c, Len dx) {
  for (int m : c.members) move_unit(wk, wk.units[m], dx, 0);
  c.x += dx;
}

// frozen x-intervals the permutation must route around
struct Obstacle {
  Len x0, x1, lo, hi;
};

bool comp_fits_at(const Work& wk, const std::vector<Obstacle>& obs,
                  const Composite& c, Len x,
                  const std::vector<Composite>& placed) {
  if (x < 0 || x + c.w > wk.W) return false;
  for (const auto& o : obs) {
    if (x < o.x1 && o.x0 < x + c.w && c.lo < o.hi && o.lo < c.hi) return false;
  }
  for (const auto& p : placed) {
    if (p.frozen) continue;
    if (x < p.x + p.w && p.x < x + c.w && c.lo < p.hi && p.lo < c.hi)
      return false;
  }
  return true;
}

// Places composites of one group left to right starting at x_from, skipping
// frozen obstacles and previously placed composites.
void place_group(Work& wk, std::vector<Composite>& comps,
                 const std::vector<Obstacle>& obs, std::vector<int> order,
                 Len x_from, std::vector<Composite>& placed) {
  Len cursor = x_from;
  for (int ci : order) {
    Composite& c = comps[ci];
    if (c.frozen) {
      placed.push_back(c);
      continue;
    }
    Len x = std::max<Len>(cursor, 0);
    while (!comp_fits_at(wk, obs, c, x, placed)) {
      ++x;
      if (x + c.w > wk.W)
        throw std::logic_error("reorder: no slot during permutation");
    }
    shift_composite(wk, c, x - c.x);
    placed.push_back(c);
    cursor = x + c.w;
  }
}

// shared driver: runs the pipeline on a Work and extracts containers
EngineResult run_engine(Work& wk, const std::set<int>& frozen_talls) {
  first_shift(wk, frozen_talls);
  build_units(wk, frozen_talls);
  second_shift(wk);
  fuse(wk);
  auto comps = build_composites(wk);

  std::vector<Obstacle> obs;
  for (const auto& c : comps)
    if (c.frozen) obs.push_back({c.x, c.x + c.w, c.lo, c.hi});

  auto order_of = [&](int group, bool asc) {
    std::vector<int> idx;
    for (size_t i = 0; i < comps.size(); ++i)
      if (comps[i].group == group && !comps[i].frozen)
        idx.push_back(static_cast<int>(i));
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      if (comps[a].key != comps[b].key)
        return asc ? comps[a].key < comps[b].key : comps[a].key > comps[b].key;
      return comps[a].x < comps[b].x;
    });
    return idx;
  };

  std::vector<Composite> placed;
  for (const auto& c : comps)
    if (c.frozen) placed.push_back(c);

  // full-height block: at the right end, unless an existing full-height or
  // frozen unit pins it elsewhere
  {
    auto full = order_of(kGroupFull, false);
    Len total = 0;
    for (int ci : full) total += comps[ci].w;
    place_group(wk, comps, obs, full, wk.W - total, placed);
  }
  // sky-big block at the left, keys descending
  place_group(wk, comps, obs, order_of(kGroupSkyBig, false), 0, placed);
  // bottom-big block right, ascending, left of the full block
  {
    auto big = order_of(kGroupBottomBig, true);
    Len total = 0;
    for (int ci : big) total += comps[ci].w;
    Len right = wk.W;
    for (const auto& p : placed)
      if (!p.frozen && p.lo == 0 && p.hi == wk.hB) right = std::min(right, p.x);
    place_group(wk, comps, obs, big, std::max<Len>(0, right - total), placed);
  }
  // the two shelf systems fill the remaining room
  place_group(wk, comps, obs, order_of(kGroupSkyHang, false), 0, placed);
  place_group(wk, comps, obs, order_of(kGroupStand, true), 0, placed);
  place_group(wk, comps, obs, order_of(kGroupBottom, false), 0, placed);
  place_group(wk, comps, obs, order_of(kGroupHangU, true), 0, placed);

  // container extraction: per line, maximal runs of equal height
  EngineResult out;
  struct Entry {
    Len x, w, h;
    bool tall;
    Len line;
    bool hanging;
    bool full;
  };
  std::vector<Entry> entries;
  for (const auto& u : wk.units) {
    if (u.full_height) continue;  // handled as one block below
    bool is_tall = !u.talls.empty();
    Len line, h = u.h;
    bool hang;
    if (u.y == 0) {
      line = 0;
      hang = false;
    } else if (u.y == wk.U || u.y == wk.M) {
      line = u.y;
      hang = false;
    } else if (u.y + u.h == wk.sky || u.y + u.h == wk.U) {
      line = u.y + u.h;
      hang = true;
    } else {
      line = u.y;  // rider: its own container
      hang = false;
    }
    Len key_h = is_tall ? wk.tall[u.talls[0]].height : u.h;
    entries.push_back({u.x, u.w, key_h, is_tall, line, hang, false});
    (void)h;
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.tall != b.tall) return a.tall > b.tall;
    if (a.line != b.line) return a.line < b.line;
    if (a.hanging != b.hanging) return a.hanging < b.hanging;
    return a.x < b.x;
  });
  auto flush = [&](std::vector<Box>& dst, BoxKind kind, Len x0, Len x1, Len h,
                   Len line, bool hang) {
    Box b;
    b.kind = kind;
    b.x = x0;
    b.w = x1 - x0;
    b.h = h;
    b.y = hang ? line - h : line;
    b.uniform_height = h;
    dst.push_back(b);
  };
  for (size_t i = 0; i < entries.size();) {
    size_t j = i;
    Len x1 = entries[i].x + entries[i].w;
    while (j + 1 < entries.size() && entries[j + 1].tall == entries[i].tall &&
           entries[j + 1].line == entries[i].line &&
           entries[j + 1].hanging == entries[i].hanging &&
           entries[j + 1].h == entries[i].h && entries[j + 1].x <= x1) {
      ++j;
      x1 = std::max(x1, entries[j].x + entries[j].w);
    }
    flush(entries[i].tall ? out.tall_boxes : out.sliced_boxes,
          entries[i].tall ? BoxKind::TallSub : BoxKind::VerticalSub,
          entries[i].x, x1, entries[i].h, entries[i].line, entries[i].hanging);
    i = j + 1;
  }
  // the full-height block: one sliced container; inner talls per height run
  {
    std::vector<const Unit*> full;
    for (const auto& u : wk.units)
      if (u.full_height) full.push_back(&u);
    if (!full.empty()) {
      std::sort(full.begin(), full.end(),
                [](const Unit* a, const Unit* b) { return a->x < b->x; });
      Len x0 = full.front()->x, x1 = 0;
      for (auto* u : full) x1 = std::max(x1, u->x + u->w);
      out.sliced_boxes.push_back(
          {BoxKind::VerticalSub, x0, 0, x1 - x0, wk.hB, 0});
      for (size_t i = 0; i < full.size();) {
        size_t j = i;
        while (j + 1 < full.size() &&
               full[j + 1]->tall_key == full[i]->tall_key &&
               full[i]->tall_key != 0)
          ++j;
        if (full[i]->tall_key != 0) {
          Len fx0 = full[i]->x, fx1 = 0;
          for (size_t k = i; k <= j; ++k)
            fx1 = std::max(fx1, full[k]->x + full[k]->w);
          out.tall_boxes.push_back({BoxKind::TallSub, fx0, 0, fx1 - fx0,
                                    full[i]->tall_key, full[i]->tall_key});
        }
        i = j + 1;
      }
    }
  }

  Len height = 0;
  for (const auto& t : wk.tall) height = std::max(height, t.y + t.height);
  for (const auto& s : wk.slices) height = std::max(height, s.y + s.height);
  out.height = height;
  return out;
}

}  // namespace reorder_detail

using namespace reorder_detail;

SimpleReorderResult simple_reorder(const GridPacking& gp) {
  Work wk;
  wk.W = gp.strip_width;
  wk.H = gp.H;
  wk.hB = gp.H;
  wk.N = gp.N;
  wk.Q = (gp.H + 3) / 4;
  wk.U = wk.hB - wk.Q;
  wk.sky = wk.hB + wk.Q;
  wk.M = (wk.hB + 1) / 2;
  wk.tall = gp.tall;
  wk.slices = gp.slices;
  for (const auto& t : wk.tall)
    if (4 * t.height <= wk.H)
      throw std::invalid_argument("simple_reorder: non-tall item in tall set");

  EngineResult er = run_engine(wk, {});

  SimpleReorderResult out;
  out.containers.tall_containers = std::move(er.tall_boxes);
  out.containers.sliced_containers = std::move(er.sliced_boxes);
  out.containers.height = er.height;
  out.reordered.strip_width = gp.strip_width;
  out.reordered.H = gp.H;
  out.reordered.N = gp.N;
  out.reordered.tall = std::move(wk.tall);
  out.reordered.slices = std::move(wk.slices);
  return out;
}

BoxReorderResult reorder_tall_box(const BoxContent& box, Len extra_slack) {
  if (4 * box.height <= 3 * box.H)
    throw std::invalid_argument("reorder_tall_box: box height <= (3/4)H");
  Work wk;
  wk.W = box.width;
  wk.H = box.H;
  wk.hB = box.height;
  wk.N = box.N;
  wk.Q = (box.H + 3) / 4 + extra_slack;
  wk.U = wk.hB - (box.H + 3) / 4;
  wk.sky = wk.hB + wk.Q;
  wk.M = (wk.hB + 1) / 2;
  wk.tall = box.tall;
  wk.slices = box.slices;

  std::set<int> frozen(box.unmovable.begin(), box.unmovable.end());
  for (int i : box.unmovable) {
    const auto& t = box.tall[i];
    if (4 * (t.y + t.height) > 4 * wk.hB - box.H &&
        (t.x < 0 || t.x + t.width > box.width))
      throw BorderViolation("unmovable item crosses the border at or above "
                            "hB - H/4: " + t.id);
  }

  EngineResult er = run_engine(wk, frozen);

  BoxReorderResult out;
  out.tall_boxes = std::move(er.tall_boxes);
  out.vertical_boxes = std::move(er.sliced_boxes);
  out.height_extension = std::max<Len>(0, er.height - box.height);
  out.content.width = box.width;
  out.content.height = box.height;
  out.content.H = box.H;
  out.content.N = box.N;
  out.content.tall = std::move(wk.tall);
  out.content.slices = std::move(wk.slices);
  out.content.unmovable = box.unmovable;
  return out;
}

}  // namespace stripforge
