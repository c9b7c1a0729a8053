#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pgame {

// Fixed-width vector of booleans, at most 64 wide. Index 0 is printed first,
// so str() of a vector with bit 3 set (width 4) is "0001".
class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(int size, std::uint64_t bits = 0) : size_(size), bits_(bits) {
    if (size < 0 || size > 64) throw std::invalid_argument("BitVector width out of range");
    if (size < 64) bits_ &= (std::uint64_t{1} << size) - 1;
  }

  static BitVector parse(std::string_view s) {
    BitVector r(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        r.set(static_cast<int>(i), true);
      else if (s[i] != '0')
        throw std::invalid_argument("BitVector::parse: expected only 0/1");
    }
    return r;
  }

  static BitVector zeros(int size) { return BitVector(size); }
  static BitVector ones(int size) { return BitVector(size, ~std::uint64_t{0}); }

  int size() const { return size_; }

  bool get(int i) const {
    check(i);
    return (bits_ >> i) & 1;
  }

  BitVector& set(int i, bool v) {
    check(i);
    if (v)
      bits_ |= std::uint64_t{1} << i;
    else
      bits_ &= ~(std::uint64_t{1} << i);
    return *this;
  }

  std::uint64_t bits() const { return bits_; }

  // componentwise order; vectors of different width are incomparable
  bool leq(const BitVector& o) const { return size_ == o.size_ && (bits_ & ~o.bits_) == 0; }

  std::string str() const {
    std::string s(size_, '0');
    for (int i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void check(int i) const {
    if (i < 0 || i >= size_) throw std::out_of_range("BitVector index");
  }

  int size_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace pgame
