#ifndef STRIPFORGE_CLASSIFY_HPP
#define STRIPFORGE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "stripforge/geometry.hpp"
#include "stripforge/rational.hpp"

namespace stripforge {

/// The (epsilon, delta, mu, T, H, N, f) bundle steering classification,
/// rounding and the grids. epsilon is reciprocal-integral, delta a power of
/// epsilon, mu < delta. H = (1+2*epsilon)*T defines the reorder grid.
struct Params {
  Rational epsilon;           // 1/epsilon integral
  Rational delta;             // epsilon^x after adjustment
  Rational mu;                // (pre-adjustment delta)^2 * f(epsilon)
  Len T = 0;                  // current OPT guess, scaled units
  unsigned f_exponent = 13;   // f(eps) = eps^f_exponent / f_divisor
  unsigned f_divisor = 1;
  Len N = 0;                  // grid line count, H/N = pitch

  Rational f() const {
    return epsilon.pow(f_exponent) / Rational(BigInt(f_divisor));
  }
  Rational H() const { return (Rational(1) + Rational(2) * epsilon) * Rational(T); }

  /// Integer H when (1+2e)T is integral; throws otherwise.
  Len H_int() const { return static_cast<long long>(H().num() / H().den()); }

  /// Default N = ceil((1+3e)/e^2).
  static Len default_grid_lines(const Rational& eps);

  void validate() const;  // throws std::invalid_argument on bad combinations
};

enum class ItemClass {
  Large,
  Tall,
  Vertical,
  MediumVertical,
  Horizontal,
  Small,
  Medium,
};

std::string to_string(ItemClass c);

/// The ordered threshold chain; total for every (item, params, W).
ItemClass classify(const Item& item, const Params& p, Len W);

struct ClassifiedInstance {
  std::vector<ItemClass> classes;  // parallel to instance items
  Len area(const Instance& inst, ItemClass c) const;
  std::vector<int> indices(ItemClass c) const;
};

ClassifiedInstance classify_all(const Instance& inst, const Params& p);

struct DeltaMu {
  Rational delta;      // adjusted: largest eps^x <= sigma_i
  Rational mu;         // sigma_{i+1} = sigma_i^2 * f
  Rational raw_delta;  // sigma_i before the eps-power adjustment
  int index = 0;       // i in the sigma sequence
};

/// Lemma-6 pigeonhole search: first i whose (sigma_i, sigma_{i+1}) makes
/// area(Medium u MediumVertical) <= f * W * T, delta then lowered to a power
/// of epsilon (re-verified). Throws std::logic_error on exhaustion.
DeltaMu find_delta_mu(const Instance& inst, const Rational& epsilon,
                      unsigned f_exponent, unsigned f_divisor, Len T);

struct RoundedItem {
  int item_index = -1;
  Len rounded_height = 0;
  int level = 0;   // l with eps^l T <= rounded < eps^(l-1) T
  Len multiplier = 0;  // k_i in [1/eps, 1/eps^2 - 1]
};

/// Geometric height rounding (heights in (delta*T, T]): smallest multiple of
/// eps^(l+1) T at or above h, re-leveling on the band boundary.
/// Requires every involved eps^(l+1)*T to be integral.
std::vector<RoundedItem> round_tall_heights(const std::vector<Item>& items,
                                            const std::vector<int>& indices,
                                            const Params& p);
RoundedItem round_tall_height(Len h, const Params& p);

struct ScaleInfo {
  Rational unit;  // eps*T/n; original = ceil(scaled * unit) per coordinate
  Len scaled_max = 0;  // ceil(n/eps)
};

/// Arithmetic rounding: heights up to multiples of eps*T/n, then divided by
/// the unit; widths untouched. Mapping a scaled packing back with
/// y -> ceil(y*unit) keeps it overlap-free and inflates height < eps*T + 1.
std::pair<Instance, ScaleInfo> arithmetic_round(const Instance& inst,
                                                const Rational& epsilon,
                                                Len T);

/// Maps a packing of the scaled instance back to original units.
Packing scale_back(const Packing& scaled, const ScaleInfo& info,
                   const Instance& original);

}  // namespace stripforge

#endif
