#include "twocycle/bits.h"

#include <string>

#include "twocycle/errors.h"
#include "twocycle/vertex.h"

namespace twocycle {
namespace {

void CheckLength(std::size_t n) {
  if (n < static_cast<std::size_t>(kMinStringLength)) {
    throw InvalidInput("bit string length " + std::to_string(n) +
                       " is below the minimum of " +
                       std::to_string(kMinStringLength));
  }
}

}  // namespace

BitVector::BitVector(std::string_view bits) {
  CheckLength(bits.size());
  bits_.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InvalidInput("bit string contains '" + std::string(1, c) + "'");
    }
    bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  CheckLength(bits_.size());
  for (auto& b : bits_) {
    if (b > 1) throw InvalidInput("bit value out of range");
  }
}

int BitVector::at_wrapped(int i) const { return (*this)[WrapIndex(i, size())]; }

BitVector BitVector::slice(int first, int length) const {
  if (first < 1 || length < 0 || first - 1 + length > size()) {
    throw InvalidInput("slice out of range");
  }
  return BitVector(std::vector<std::uint8_t>(bits_.begin() + (first - 1),
                                             bits_.begin() + (first - 1 + length)));
}

BitVector BitVector::negated() const {
  std::vector<std::uint8_t> out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = 1 - bits_[i];
  return BitVector(std::move(out));
}

std::string BitVector::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::vector<int> DisputedIndices(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) {
    throw InvalidInput("strings differ in length: " + std::to_string(x.size()) +
                       " vs " + std::to_string(y.size()));
  }
  std::vector<int> out;
  for (int i = 1; i <= x.size(); ++i) {
    if (x[i] == 1 && y[i] == 0) out.push_back(i);
  }
  return out;
}

int CeilLog2(std::int64_t value) {
  int bits = 0;
  while ((std::int64_t{1} << bits) < value) ++bits;
  return bits;
}

}  // namespace twocycle
