#ifndef TWOCYCLE_VERTEX_H_
#define TWOCYCLE_VERTEX_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace twocycle {

// Second coordinate of a vertex (i, z), z in {0, 1, 01, 11}. The ordinal
// fixes the linear index layout.
enum class Tag : std::uint8_t { kZero = 0, kOne = 1, kZeroOne = 2, kOneOne = 3 };

inline constexpr int kTagsPerLayer = 4;
inline constexpr std::array<Tag, 4> kAllTags = {Tag::kZero, Tag::kOne,
                                                Tag::kZeroOne, Tag::kOneOne};

std::string_view TagName(Tag tag);
std::optional<Tag> ParseTag(std::string_view name);

// Layer arithmetic modulo n, returning a layer in [1, n]. Every +-1 on a
// layer index goes through here.
constexpr int WrapIndex(int i, int n) {
  int r = (i - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

struct Vertex {
  int layer = 1;  // in [1, n]
  Tag tag = Tag::kZero;

  // 4 * (layer - 1) + ordinal(tag), in [0, 4n).
  constexpr int index() const {
    return kTagsPerLayer * (layer - 1) + static_cast<int>(tag);
  }
  static constexpr Vertex FromIndex(int index) {
    return Vertex{index / kTagsPerLayer + 1,
                  static_cast<Tag>(index % kTagsPerLayer)};
  }

  friend constexpr auto operator<=>(const Vertex& a, const Vertex& b) {
    return a.index() <=> b.index();
  }
  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
};

// "(2,01)"
std::string ToString(const Vertex& v);

// Tag carrying a single bit: 0 -> kZero, 1 -> kOne.
constexpr Tag BitTag(int bit) { return bit ? Tag::kOne : Tag::kZero; }

}  // namespace twocycle

#endif  // TWOCYCLE_VERTEX_H_
