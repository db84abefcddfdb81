#include "f2units/oracle.hpp"

#include <algorithm>
#include <bit>

#include "f2units/errors.hpp"

namespace f2units {

namespace {

constexpr std::uint32_t kScanCap = 16;

void check_cap(const GroupAlgebra& alg) {
  if (alg.dimension() > kScanCap) {
    throw CapExceeded("brute-force scan needs |G| <= 16, got " + std::to_string(alg.dimension()));
  }
}

ElementSet normalize(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

ElementSet oracle_units(const GroupAlgebra& alg, const SubgroupOfG& k) {
  check_cap(alg);
  std::uint64_t support = 0;
  for (GroupElement g : k.elements()) support |= std::uint64_t{1} << g.index;
  ElementSet out;
  for (std::uint64_t b = 0; b <= alg.full_mask(); ++b) {
    if ((b & ~support) == 0 && (std::popcount(b) & 1)) out.push_back(alg.from_bits(b));
  }
  return out;
}

ElementSet oracle_units(const GroupAlgebra& alg) {
  return oracle_units(alg, SubgroupOfG::whole(alg.group()));
}

ElementSet oracle_filter_symmetric(const GroupAlgebra& alg, const Involution& inv) {
  ElementSet out;
  for (const auto& x : oracle_units(alg)) {
    if (alg.eta(x, inv) == x) out.push_back(x);
  }
  return out;
}

ElementSet oracle_filter_unitary(const GroupAlgebra& alg, const Involution& inv) {
  ElementSet out;
  for (const auto& x : oracle_units(alg)) {
    if (alg.mul(alg.eta(x, inv), x) == alg.one()) out.push_back(x);
  }
  return out;
}

ElementSet oracle_image_psi1(const GroupAlgebra& alg, const Involution& inv,
                             const SubgroupOfG& k) {
  ElementSet out;
  for (const auto& x : oracle_units(alg, k)) {
    out.push_back(alg.mul(alg.eta(x, inv), alg.unit_inverse(x)));
  }
  return normalize(std::move(out));
}

ElementSet oracle_image_psi1(const GroupAlgebra& alg, const Involution& inv) {
  return oracle_image_psi1(alg, inv, SubgroupOfG::whole(alg.group()));
}

ElementSet oracle_kernel_psi1(const GroupAlgebra& alg, const Involution& inv) {
  ElementSet out;
  for (const auto& x : oracle_units(alg)) {
    if (alg.mul(alg.eta(x, inv), alg.unit_inverse(x)) == alg.one()) out.push_back(x);
  }
  return out;
}

ElementSet oracle_squares(const GroupAlgebra& alg, const ElementSet& a) {
  check_cap(alg);
  ElementSet out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(alg.square(x));
  return normalize(std::move(out));
}

ElementSet oracle_two_torsion(const GroupAlgebra& alg, const ElementSet& a) {
  check_cap(alg);
  ElementSet out;
  for (const auto& x : a) {
    if (alg.square(x) == alg.one()) out.push_back(x);
  }
  return out;
}

ElementSet oracle_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet oracle_product(const GroupAlgebra& alg, const ElementSet& a, const ElementSet& b) {
  check_cap(alg);
  ElementSet out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(alg.mul(x, y));
  }
  return normalize(std::move(out));
}

ElementSet oracle_group_elements(const GroupAlgebra& alg, const SubgroupOfG& k) {
  ElementSet out;
  for (GroupElement g : k.elements()) out.push_back(alg.element(g));
  return normalize(std::move(out));
}

}  // namespace f2units
