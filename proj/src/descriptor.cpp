#include "f2units/descriptor.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "f2units/errors.hpp"

namespace f2units {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

GroupDescriptor parse_descriptor(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty group descriptor");

  std::string_view orders_part = text;
  std::string_view inv_part;
  bool has_inv = false;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    orders_part = text.substr(0, colon);
    std::string_view rest = trim(text.substr(colon + 1));
    if (rest.substr(0, 4) != "inv=") {
      throw ParseError("expected 'inv=' after ':' in '" + std::string(text) + "'");
    }
    inv_part = trim(rest.substr(4));
    has_inv = true;
  }

  std::vector<std::uint32_t> orders;
  if (trim(orders_part) != "1") {
    for (std::string_view p : split(orders_part, 'x')) {
      orders.push_back(parse_uint(p, "factor order"));
    }
  }
  GroupDescriptor d;
  try {
    d.group = AbelianTwoGroup(orders);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  if (!has_inv) {
    for (std::size_t i = 0; i < d.group.rank(); ++i) d.raw_inverted.push_back(i);
    return d;
  }
  if (!inv_part.empty()) {
    for (std::string_view p : split(inv_part, ',')) {
      const std::uint32_t pos = parse_uint(p, "generator position");
      if (pos < 1 || pos > d.group.rank()) {
        throw ParseError("generator position " + std::to_string(pos) + " outside 1.." +
                         std::to_string(d.group.rank()));
      }
      d.raw_inverted.push_back(pos - 1);
    }
  }
  std::sort(d.raw_inverted.begin(), d.raw_inverted.end());
  d.raw_inverted.erase(std::unique(d.raw_inverted.begin(), d.raw_inverted.end()),
                       d.raw_inverted.end());
  return d;
}

std::string format_descriptor(const GroupDescriptor& d) {
  std::string s = d.group.to_string() + ":inv=";
  for (std::size_t i = 0; i < d.raw_inverted.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.raw_inverted[i] + 1);
  }
  return s;
}

std::string format_descriptor(const Involution& eta) {
  return format_descriptor(GroupDescriptor{eta.group(), eta.raw_inverted()});
}

}  // namespace f2units
