#ifndef STRIPFORGE_REORDER_HPP
#define STRIPFORGE_REORDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "stripforge/grid.hpp"

namespace stripforge {

enum class BoxKind {
  LargeItem,
  Horizontal,
  TallVertical,
  TallSub,
  VerticalSub,
  SmallEmpty,
  ExtraVertical,
};

struct Box {
  BoxKind kind = BoxKind::TallSub;
  Len x = 0, y = 0, w = 0, h = 0;
  Len uniform_height = 0;  // TallSub/VerticalSub: the single content height
};

std::string to_string(BoxKind k);

struct ContainerSet {
  std::vector<Box> tall_containers;    // uniform tall height each
  std::vector<Box> sliced_containers;  // hold sliced/pseudo content
  Len height = 0;                      // resulting packing height
};

/// Shifting-and-reordering for the simplified case: at the cost of H/4 extra
/// height, tall items land in at most (3/2)N same-height containers and the
/// sliced stock in at most (9/4)N+1 containers.
struct SimpleReorderResult {
  ContainerSet containers;
  GridPacking reordered;
};
SimpleReorderResult simple_reorder(const GridPacking& gp);

/// Movable content of a box-local reordering problem. Coordinates are local
/// to the box (bottom-left at (0,0)).
struct BoxContent {
  Len width = 0;   // box width
  Len height = 0;  // box height
  Len H = 0;       // the global grid height H (pitch reference)
  Len N = 0;
  std::vector<TallPlaced> tall;
  std::vector<Slice> slices;
  // indices into `tall` that are unmovable (cross the box borders)
  std::vector<int> unmovable;
};

struct BorderViolation : std::runtime_error {
  explicit BorderViolation(const std::string& what)
      : std::runtime_error(what) {}
};
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct BoxReorderResult {
  std::vector<Box> tall_boxes;      // TallSub, uniform height
  std::vector<Box> vertical_boxes;  // VerticalSub areas holding slices
  BoxContent content;               // rearranged content, same multiset
  Len height_extension = 0;         // <= H/4 (+ optional technical slack)
};

/// Lemma-4-style region: every item touches the bottom or the top of the
/// region; at most two unmovable tall items overlap each side border.
/// Bottom items are sorted by nonincreasing height, top items by
/// nondecreasing depth; pseudo stock may be cut, tall items never are.
BoxReorderResult two_shelf_reorder(const BoxContent& region);

/// Box of height > (3/4)H: three tall layers. Adds at most H/4 (plus
/// `extra_slack`) to the height and emits O(N^2) sub-boxes per kind without
/// moving the unmovable items.
BoxReorderResult reorder_tall_box(const BoxContent& box, Len extra_slack = 0);

/// Box of height in ((1/2)H, (3/4)H]: two tall layers. No height extension;
/// displaced middle stock is returned as an extra box request of height H/4
/// and width at most (1-1/N) w(B).
struct MediumBoxResult {
  BoxReorderResult reorder;
  std::optional<Box> extra_box;     // displaced pseudo stock destination
  std::vector<Slice> extra_slices;  // content for the extra box (local coords)
};
MediumBoxResult reorder_medium_box(const BoxContent& box);

/// Box of height <= (1/2)H: single tall layer, at most N/4+1 sub-boxes per
/// kind, no height extension.
BoxReorderResult reorder_small_box(const BoxContent& box);

}  // namespace stripforge

#endif
