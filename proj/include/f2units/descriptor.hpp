#pragma once

// Group/involution descriptors: "q1xq2x...xqt:inv=i,j,...".
//
//   "4x2:inv=1"  C4 x C2 with the first generator inverted
//   "4x2"        all generators inverted (the canonical involution)
//   "4x2:inv="   eta is the identity
//   "1"          the trivial group
//
// Positions in the text are 1-based; GroupDescriptor stores them 0-based.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "f2units/group.hpp"

namespace f2units {

struct GroupDescriptor {
  AbelianTwoGroup group;
  std::vector<std::size_t> raw_inverted;  // sorted, 0-based

  Involution involution() const { return Involution::canonicalized(group, raw_inverted); }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// Throws ParseError on malformed text.
GroupDescriptor parse_descriptor(std::string_view text);
std::string format_descriptor(const GroupDescriptor& d);
std::string format_descriptor(const Involution& eta);

}  // namespace f2units
