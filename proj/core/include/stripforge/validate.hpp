#ifndef STRIPFORGE_VALIDATE_HPP
#define STRIPFORGE_VALIDATE_HPP

#include <string>
#include <vector>

#include "stripforge/geometry.hpp"

namespace stripforge {

enum class ViolationKind {
  Overlap,
  OutOfBounds,
  Missing,
  Duplicate,
  UnknownItem,
  HeightMismatch,
  RotationDisallowed,
};

struct Violation {
  ViolationKind kind;
  std::string a;  // item id (first id for Overlap)
  std::string b;  // second id for Overlap, empty otherwise
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  size_t count(ViolationKind k) const {
    size_t n = 0;
    for (const auto& v : violations)
      if (v.kind == k) ++n;
    return n;
  }
};

/// Checks a packing against its instance. Violations are data, not failures:
/// overlap uses open-rectangle semantics (shared edges are fine), every item
/// must be placed exactly once, x + effective width must stay within the
/// strip, and the cached packing height must equal the recomputed one.
ValidationReport validate_packing(const Instance& inst, const Packing& packing,
                                  bool allow_rotation = false);

/// Open-rectangle intersection test on two placed rectangles.
bool rects_overlap(Len x1, Len y1, Len w1, Len h1, Len x2, Len y2, Len w2,
                   Len h2);

std::string to_string(ViolationKind k);
std::string to_string(const Violation& v);

}  // namespace stripforge

#endif
