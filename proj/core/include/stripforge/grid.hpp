#ifndef STRIPFORGE_GRID_HPP
#define STRIPFORGE_GRID_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "stripforge/geometry.hpp"

namespace stripforge {

/// Unit-width vertical slice of a non-tall item.
struct Slice {
  int origin = -1;  // index into the source instance's items
  Len height = 0;
  Len x = 0;
  Len y = 0;
};

/// A tall item carried whole through the reordering transforms.
struct TallPlaced {
  int item = -1;  // index into the source instance's items; -1 for synthetic
  std::string id;
  Len width = 0;
  Len height = 0;
  Len x = 0;
  Len y = 0;
};

/// Packing on the arithmetic grid: tall items (height > H/4) start and end on
/// grid lines (pitch H/N); everything else is sliced into unit-width columns.
struct GridPacking {
  Len strip_width = 0;
  Len H = 0;
  Len N = 0;
  std::vector<TallPlaced> tall;
  std::vector<Slice> slices;

  Len pitch() const { return H / N; }
};

struct AlignmentError : std::runtime_error {
  explicit AlignmentError(const std::string& id)
      : std::runtime_error("tall item off the grid: " + id), item_id(id) {}
  std::string item_id;
};

/// Slices non-tall items of a valid packing into w(i) unit columns and carries
/// tall items over. Throws AlignmentError when a tall item is off-grid and
/// std::invalid_argument when N does not divide H.
GridPacking make_grid_packing(const Instance& inst, const Packing& packing,
                              Len H, Len N);

/// Overlap/bounds audit over tall items and slices; empty vector when clean.
std::vector<std::string> grid_packing_violations(const GridPacking& gp,
                                                 Len height_limit);

/// Per-origin total sliced height; used for conservation checks.
std::vector<std::pair<int, Len>> slice_inventory(const GridPacking& gp);

}  // namespace stripforge

#endif
