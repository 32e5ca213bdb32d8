#include "stripforge/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace stripforge {

Len Params::default_grid_lines(const Rational& eps) {
  Rational n = (Rational(1) + Rational(3) * eps) / (eps * eps);
  return static_cast<long long>(n.ceil());
}

void Params::validate() const {
  if (epsilon.is_zero() || Rational(1) / epsilon != Rational((Rational(1) / epsilon).num()))
    throw std::invalid_argument("Params: 1/epsilon must be integral");
  if (epsilon > Rational(1, 4)) throw std::invalid_argument("Params: epsilon <= 1/4 required");
  if (!(mu < delta)) throw std::invalid_argument("Params: mu < delta required");
  if (!(delta <= epsilon)) throw std::invalid_argument("Params: delta <= epsilon required");
  // delta must be a power of epsilon
  Rational d = delta;
  Rational probe(1);
  bool match = false;
  for (int x = 0; x < 4096; ++x) {
    if (probe == d) { match = true; break; }
    if (probe < d) break;
    probe *= epsilon;
  }
  if (!match) throw std::invalid_argument("Params: delta must equal epsilon^x");
  if (T <= 0) throw std::invalid_argument("Params: T must be positive");
  if (!H().is_integer())
    throw std::invalid_argument("Params: (1+2*epsilon)*T must be integral");
}

std::string to_string(ItemClass c) {
  switch (c) {
    case ItemClass::Large: return "Large";
    case ItemClass::Tall: return "Tall";
    case ItemClass::Vertical: return "Vertical";
    case ItemClass::MediumVertical: return "MediumVertical";
    case ItemClass::Horizontal: return "Horizontal";
    case ItemClass::Small: return "Small";
    case ItemClass::Medium: return "Medium";
  }
  return "?";
}

namespace {

ItemClass classify_thresholds(Len w, Len h, const Rational& eps,
                              const Rational& delta, const Rational& mu, Len T,
                              Len W) {
  const Rational hh(h), ww(w);
  const Rational dT = delta * Rational(T);
  const Rational dW = delta * Rational(W);
  const Rational mT = mu * Rational(T);
  const Rational mW = mu * Rational(W);
  const Rational quarter = (Rational(1, 4) + eps) * Rational(T);
  const Rational eT = eps * Rational(T);

  if (hh > dT && ww >= dW) return ItemClass::Large;
  if (hh >= quarter && ww < dW) return ItemClass::Tall;
  if (dT <= hh && hh < quarter && ww <= mW) return ItemClass::Vertical;
  if (eT <= hh && hh < quarter && mW < ww && ww <= dW)
    return ItemClass::MediumVertical;
  if (hh <= mT && ww >= dW) return ItemClass::Horizontal;
  if (hh <= mT && ww <= mW) return ItemClass::Small;
  return ItemClass::Medium;
}

}  // namespace

ItemClass classify(const Item& item, const Params& p, Len W) {
  return classify_thresholds(item.width, item.height, p.epsilon, p.delta, p.mu,
                             p.T, W);
}

ClassifiedInstance classify_all(const Instance& inst, const Params& p) {
  ClassifiedInstance out;
  out.classes.reserve(inst.items.size());
  for (const auto& it : inst.items)
    out.classes.push_back(classify(it, p, inst.strip_width));
  return out;
}

Len ClassifiedInstance::area(const Instance& inst, ItemClass c) const {
  Len s = 0;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) s += inst.items[i].area();
  return s;
}

std::vector<int> ClassifiedInstance::indices(ItemClass c) const {
  std::vector<int> out;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) out.push_back(static_cast<int>(i));
  return out;
}

DeltaMu find_delta_mu(const Instance& inst, const Rational& epsilon,
                      unsigned f_exponent, unsigned f_divisor, Len T) {
  const Rational f = epsilon.pow(f_exponent) / Rational(BigInt(f_divisor));
  if ((Rational(1) / f).den() != 1)
    throw std::invalid_argument("find_delta_mu: 1/f(epsilon) must be integral");
  const Rational budget = f * Rational(inst.strip_width) * Rational(T);

  BigInt rounds_big = (Rational(2) / f).num();  // 2/f, integral
  long long rounds = rounds_big > 1000000 ? 1000000
                                          : static_cast<long long>(rounds_big);

  Rational sigma = f;
  for (long long i = 0; i < rounds; ++i) {
    Rational sigma_next = sigma * sigma * f;
    // medium area under (delta=sigma, mu=sigma_next)
    Rational medium_area(0);
    for (const auto& it : inst.items) {
      ItemClass c = classify_thresholds(it.width, it.height, epsilon, sigma,
                                        sigma_next, T, inst.strip_width);
      if (c == ItemClass::Medium || c == ItemClass::MediumVertical)
        medium_area += Rational(it.area());
    }
    if (medium_area <= budget) {
      // lower delta to the largest eps^x <= sigma
      Rational adj(1);
      while (adj > sigma) adj *= epsilon;
      // medium set only shrinks when delta shrinks with mu fixed, but
      // re-verify as the contract demands
      Rational re_area(0);
      for (const auto& it : inst.items) {
        ItemClass c = classify_thresholds(it.width, it.height, epsilon, adj,
                                          sigma_next, T, inst.strip_width);
        if (c == ItemClass::Medium || c == ItemClass::MediumVertical)
          re_area += Rational(it.area());
      }
      if (re_area <= budget)
        return DeltaMu{adj, sigma_next, sigma, static_cast<int>(i)};
    }
    sigma = sigma_next;
  }
  throw std::logic_error(
      "find_delta_mu: pigeonhole range exhausted (cannot happen)");
}

RoundedItem round_tall_height(Len h, const Params& p) {
  if (Rational(h) > Rational(p.T))
    throw std::invalid_argument("round_tall_height: h exceeds the OPT guess");
  if (!(Rational(h) >= p.delta * Rational(p.T)))
    throw std::invalid_argument("round_tall_height: h < delta*T");
  // find level l >= 1 with eps^l T <= h < eps^(l-1) T
  int l = 0;
  Rational lo = Rational(p.T);
  while (!(lo <= Rational(h))) {
    lo *= p.epsilon;
    ++l;
  }
  // pitch eps^(l+1) T must be integral at this scale
  Rational pitch = p.epsilon.pow(static_cast<unsigned>(l) + 1) * Rational(p.T);
  if (!pitch.is_integer())
    throw std::invalid_argument("round_tall_height: eps^(l+1)*T not integral");
  Len pitch_i = pitch.to_ll();
  Len rounded = ((h + pitch_i - 1) / pitch_i) * pitch_i;
  if (l >= 1) {
    Rational upper =
        p.epsilon.pow(static_cast<unsigned>(l) - 1) * Rational(p.T);
    // crossing the band boundary re-levels the item with k = 1/eps
    if (Rational(rounded) == upper) --l;
  }
  Rational k = Rational(rounded) /
               (p.epsilon.pow(static_cast<unsigned>(l) + 1) * Rational(p.T));
  RoundedItem out;
  out.rounded_height = rounded;
  out.level = l;
  out.multiplier = k.to_ll();
  return out;
}

std::vector<RoundedItem> round_tall_heights(const std::vector<Item>& items,
                                            const std::vector<int>& indices,
                                            const Params& p) {
  std::vector<RoundedItem> out;
  out.reserve(indices.size());
  for (int idx : indices) {
    RoundedItem r = round_tall_height(items[idx].height, p);
    r.item_index = idx;
    out.push_back(r);
  }
  return out;
}

std::pair<Instance, ScaleInfo> arithmetic_round(const Instance& inst,
                                                const Rational& epsilon,
                                                Len T) {
  if (inst.items.empty())
    throw std::invalid_argument("arithmetic_round: empty instance");
  Len n = static_cast<Len>(inst.items.size());
  ScaleInfo info;
  info.unit = epsilon * Rational(T) / Rational(n);
  info.scaled_max = static_cast<long long>((Rational(n) / epsilon).ceil());

  Instance scaled;
  scaled.strip_width = inst.strip_width;
  scaled.items.reserve(inst.items.size());
  for (const auto& it : inst.items) {
    Rational q = Rational(it.height) / info.unit;
    Len h = static_cast<long long>(q.ceil());
    scaled.items.push_back({it.id, it.width, h});
  }
  return {std::move(scaled), info};
}

Packing scale_back(const Packing& scaled, const ScaleInfo& info,
                   const Instance& original) {
  Packing out;
  for (const auto& p : scaled.placements) {
    Rational y = Rational(p.y) * info.unit;
    Placement q = p;
    q.y = static_cast<long long>(y.ceil());
    out.placements.push_back(q);
  }
  out.height = packing_height(original, out);
  return out;
}

}  // namespace stripforge
