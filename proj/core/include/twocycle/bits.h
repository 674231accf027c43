#ifndef TWOCYCLE_BITS_H_
#define TWOCYCLE_BITS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twocycle {

// Smallest string length the game construction accepts.
inline constexpr int kMinStringLength = 3;

// An n-bit string with 1-based access, x_1 ... x_n.
class BitVector {
 public:
  BitVector() = default;
  // Throws InvalidInput on characters other than '0'/'1' or length < 3.
  explicit BitVector(std::string_view bits);
  explicit BitVector(std::vector<std::uint8_t> bits);

  int size() const { return static_cast<int>(bits_.size()); }
  // i in [1, n].
  int operator[](int i) const { return bits_[i - 1]; }
  // Wrapped access: any integer index, reduced into [1, n].
  int at_wrapped(int i) const;

  // Bits [first, first + length) with 1-based first.
  BitVector slice(int first, int length) const;
  BitVector negated() const;
  std::string str() const;

  bool operator==(const BitVector&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// { i : x_i = 1 and y_i = 0 }, ascending. Throws InvalidInput on length
// mismatch.
std::vector<int> DisputedIndices(const BitVector& x, const BitVector& y);

// ceil(log2(value)) for value >= 1.
int CeilLog2(std::int64_t value);

}  // namespace twocycle

#endif  // TWOCYCLE_BITS_H_
