#pragma once

// Towers of twos: E(m) = 2^2^...^2 (m twos, E(0) = 1) and the iterated
// exponential 2^2^...^x. Values that fit under a bit cap are kept exactly;
// larger ones are kept symbolically as exp2^height(top).

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bptk {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultTowerCapBits = std::uint64_t{1} << 20;

class TowerValue {
 public:
  // Throws DomainError for negative values or values wider than cap_bits.
  static TowerValue exact(BigInt value, std::uint64_t cap_bits = kDefaultTowerCapBits);
  // exp2 applied `height` times to `top`, normalized: materialized while the
  // result stays within cap_bits.
  static TowerValue tower(std::uint64_t height, BigInt top,
                          std::uint64_t cap_bits = kDefaultTowerCapBits);

  bool is_exact() const noexcept { return height_ == 0; }
  // Exact value; throws std::logic_error on symbolic values.
  const BigInt& value() const;
  // Symbolic height (0 for exact values).
  std::uint64_t height() const noexcept { return height_; }
  // For symbolic values the exact top of the tower; for exact, the value.
  const BigInt& top() const noexcept { return top_; }
  std::uint64_t cap_bits() const noexcept { return cap_bits_; }

  // Decimal for exact values, "2↑↑h (top=k)" for symbolic ones.
  std::string to_string() const;

  friend bool operator==(const TowerValue& a, const TowerValue& b);
  friend std::strong_ordering operator<=>(const TowerValue& a, const TowerValue& b);

 private:
  TowerValue(std::uint64_t height, BigInt top, std::uint64_t cap_bits)
      : height_(height), top_(std::move(top)), cap_bits_(cap_bits) {}

  std::uint64_t height_ = 0;
  BigInt top_;
  std::uint64_t cap_bits_ = kDefaultTowerCapBits;
};

// E(0) = 1, E(m+1) = 2^E(m).
TowerValue E(std::uint64_t m, std::uint64_t cap_bits = kDefaultTowerCapBits);
TowerValue exp2_tower(std::uint64_t height, BigInt x, std::uint64_t cap_bits = kDefaultTowerCapBits);

std::strong_ordering compare(const TowerValue& a, const TowerValue& b);

// Exact floor(log2 a). Throws DomainError when a == 0.
TowerValue floor_log2(const TowerValue& a);

// Parses "65536", "E5", "E(5)", or "2^k".
TowerValue parse_tower(const std::string& text, std::uint64_t cap_bits = kDefaultTowerCapBits);

}  // namespace bptk
