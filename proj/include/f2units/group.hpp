#pragma once

// Finite abelian 2-groups G = <a_1> x ... x <a_t>, the involutory
// automorphism eta, and the subgroup machinery used on the group level.
//
// Elements are stored by mixed-radix index with factor 1 least significant.
// Because every factor order is a power of two, the index is the bitwise
// concatenation of the exponent fields, which keeps index <-> exponent
// conversion to shifts and masks.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace f2units {

struct GroupElement {
  std::uint32_t index = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class AbelianTwoGroup {
 public:
  // Largest order accepted for group-level operations.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Trivial group (no cyclic factors).
  AbelianTwoGroup() = default;

  // Every order must be a power of two >= 2; throws std::invalid_argument.
  explicit AbelianTwoGroup(std::vector<std::uint32_t> factor_orders);

  std::span<const std::uint32_t> factor_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint32_t order() const { return order_; }
  std::uint32_t factor_order(std::size_t i) const { return orders_.at(i); }

  // n with 2^n = exp(G).
  int exponent_log() const;
  std::uint32_t exponent() const { return 1u << exponent_log(); }
  // log2 |G|, i.e. the number of index bits.
  int order_log() const { return total_bits_; }

  GroupElement identity() const { return {0}; }
  GroupElement generator(std::size_t i) const;
  GroupElement element(std::span<const std::uint32_t> exponents) const;
  std::vector<std::uint32_t> exponents(GroupElement x) const;
  std::uint32_t exponent_at(GroupElement x, std::size_t i) const;
  bool contains(GroupElement x) const { return x.index < order_; }

  GroupElement mul(GroupElement x, GroupElement y) const;
  GroupElement inverse(GroupElement x) const;
  GroupElement pow(GroupElement x, std::uint64_t k) const;
  std::uint32_t element_order(GroupElement x) const;

  // Bit offset and width of factor i inside an element index.
  int field_shift(std::size_t i) const { return shifts_.at(i); }
  int field_bits(std::size_t i) const { return bits_.at(i); }

  // "4x2", or "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianTwoGroup& a, const AbelianTwoGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  void check(GroupElement x) const;

  std::vector<std::uint32_t> orders_;
  std::vector<int> shifts_;
  std::vector<int> bits_;
  std::uint32_t order_ = 1;
  int total_bits_ = 0;
};

// The involutory automorphism eta: it inverts the generators in h_block and
// fixes those in d_block. Canonicalization moves inverted generators of
// order 2 to the fixed block (inversion is trivial on them), so after it
// h_block only holds generators of order >= 4. h_block then splits into
// d1_block (order exactly 4) and h1_block (order >= 8).
class Involution {
 public:
  // Canonicalized involution from user-marked inverted positions (0-based).
  static Involution canonicalized(const AbelianTwoGroup& group,
                                  std::vector<std::size_t> raw_inverted);
  // Keeps order-2 positions in the inverted block. The induced map on G is
  // the same as for the canonicalized involution; only the H/D bookkeeping
  // differs. Used to exhibit formulas that depend on the convention.
  static Involution uncanonicalized(const AbelianTwoGroup& group,
                                    std::vector<std::size_t> raw_inverted);
  // eta(g) = g^-1 for all g.
  static Involution canonical(const AbelianTwoGroup& group);
  static Involution identity(const AbelianTwoGroup& group);

  const AbelianTwoGroup& group() const { return group_; }
  const std::vector<std::size_t>& raw_inverted() const { return raw_; }
  const std::vector<std::size_t>& h_block() const { return h_; }
  const std::vector<std::size_t>& d_block() const { return d_; }
  const std::vector<std::size_t>& h1_block() const { return h1_; }
  const std::vector<std::size_t>& d1_block() const { return d1_; }

  bool is_canonicalized() const { return canonicalized_; }
  // True when the induced map is inversion on all of G.
  bool is_canonical_involution() const;

  GroupElement apply(GroupElement x) const;

 private:
  Involution(const AbelianTwoGroup& group, std::vector<std::size_t> raw,
             bool canonicalize);

  AbelianTwoGroup group_;
  std::vector<std::size_t> raw_, h_, d_, h1_, d1_;
  bool canonicalized_ = true;
  // Bits of the index that belong to inverted fields.
  std::uint32_t inverted_fields_mask_ = 0;
};

// Subgroup of G stored as a sorted explicit index set.
class SubgroupOfG {
 public:
  // Validates closure; throws StructuralError otherwise.
  static SubgroupOfG from_elements(const AbelianTwoGroup& group,
                                   std::vector<GroupElement> elements);
  static SubgroupOfG generated_by(const AbelianTwoGroup& group,
                                  std::span<const GroupElement> generators);
  static SubgroupOfG whole(const AbelianTwoGroup& group);
  static SubgroupOfG trivial(const AbelianTwoGroup& group);
  // Product of the cyclic factors at the given positions.
  static SubgroupOfG coordinate(const AbelianTwoGroup& group,
                                std::span<const std::size_t> positions);

  const AbelianTwoGroup& ambient() const { return group_; }
  std::span<const GroupElement> elements() const { return elements_; }
  std::span<const GroupElement> generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(GroupElement x) const;
  bool is_subgroup_of(const SubgroupOfG& other) const;

  friend bool operator==(const SubgroupOfG& a, const SubgroupOfG& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  SubgroupOfG(const AbelianTwoGroup& group, std::vector<GroupElement> elements,
              std::vector<GroupElement> generators);

  AbelianTwoGroup group_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
};

// Group-level operations.
GroupElement group_mul(const AbelianTwoGroup& g, GroupElement x,
                       GroupElement y);
std::uint32_t element_order(const AbelianTwoGroup& g, GroupElement x);
GroupElement apply_eta(const Involution& eta, GroupElement x);
Involution canonicalize_involution(const AbelianTwoGroup& g,
                                   std::vector<std::size_t> raw_inverted);

SubgroupOfG fixed_subgroup(const Involution& eta);
// {x in K : x^(2^n) = 1}
SubgroupOfG torsion_subgroup(const SubgroupOfG& k, int n);
// {x^(2^i) : x in K}
SubgroupOfG power_subgroup(const SubgroupOfG& k, int i);
// H x K for subgroups meeting trivially, or HK in general.
SubgroupOfG subgroup_join(const SubgroupOfG& a, const SubgroupOfG& b);

// One representative per coset xH of H in K, the minimal index of each coset,
// listed in increasing order (so the identity represents H itself). Throws
// StructuralError when H is not contained in K.
std::vector<GroupElement> left_transversal(const SubgroupOfG& k,
                                           const SubgroupOfG& h);
std::vector<GroupElement> left_transversal(const AbelianTwoGroup& g,
                                           const SubgroupOfG& h);

enum class XiClass { kXi0, kXi1 };

// One unordered pair {g, eta(g)} of non-fixed elements. rep is the member of
// smaller index.
struct XiPair {
  GroupElement rep;
  GroupElement image;
  XiClass cls = XiClass::kXi1;
};

struct XiSets {
  std::vector<XiPair> pairs;            // ordered by rep index
  std::vector<std::size_t> orbit_of;    // per pair: orbit id, or npos for Xi0
  std::vector<std::size_t> orbit_reps;  // per orbit: index into pairs
  std::size_t xi = 0;
  std::size_t xi0 = 0;
  std::size_t xi1 = 0;
  std::size_t orbits = 0;  // G[2]-orbits on Xi1

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

XiSets xi_sets(const Involution& eta);

struct QuotientGroup {
  AbelianTwoGroup group;                 // cyclic decomposition of G/H
  std::vector<std::uint32_t> projection;  // element index of G -> index of G/H
};

QuotientGroup quotient_group(const AbelianTwoGroup& g, const SubgroupOfG& h);

}  // namespace f2units
