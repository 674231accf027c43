#include "twocycle/vertex.h"

#include <string>

namespace twocycle {

std::string_view TagName(Tag tag) {
  switch (tag) {
    case Tag::kZero:
      return "0";
    case Tag::kOne:
      return "1";
    case Tag::kZeroOne:
      return "01";
    case Tag::kOneOne:
      return "11";
  }
  return "?";
}

std::optional<Tag> ParseTag(std::string_view name) {
  for (Tag t : kAllTags) {
    if (TagName(t) == name) return t;
  }
  return std::nullopt;
}

std::string ToString(const Vertex& v) {
  return "(" + std::to_string(v.layer) + "," + std::string(TagName(v.tag)) + ")";
}

}  // namespace twocycle
