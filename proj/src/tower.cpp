#include "bptk/tower.hpp"

#include <cctype>
#include <stdexcept>

#include "bptk/errors.hpp"

namespace bptk {

namespace {

std::uint64_t bit_size(const BigInt& v) { return v == 0 ? 0 : boost::multiprecision::msb(v) + 1; }

bool is_power_of_two(const BigInt& v) { return v > 0 && boost::multiprecision::lsb(v) == boost::multiprecision::msb(v); }

void require_same_cap(const TowerValue& a, const TowerValue& b) {
  if (a.cap_bits() != b.cap_bits()) throw std::invalid_argument("TowerValue: comparing values with different caps");
}

}  // namespace

TowerValue TowerValue::exact(BigInt value, std::uint64_t cap_bits) {
  if (value < 0) throw DomainError("TowerValue: negative value");
  if (bit_size(value) > cap_bits) throw DomainError("TowerValue: exact value wider than the bit cap");
  return TowerValue(0, std::move(value), cap_bits);
}

TowerValue TowerValue::tower(std::uint64_t height, BigInt top, std::uint64_t cap_bits) {
  if (top < 0) throw DomainError("TowerValue: negative tower top");
  if (bit_size(top) > cap_bits) throw DomainError("TowerValue: tower top wider than the bit cap");
  // 2^top has top+1 bits, so it can be materialized iff top < cap_bits.
  while (height > 0 && top < cap_bits) {
    top = BigInt(1) << static_cast<std::size_t>(top);
    --height;
  }
  return TowerValue(height, std::move(top), cap_bits);
}

const BigInt& TowerValue::value() const {
  if (!is_exact()) throw std::logic_error("TowerValue::value: value is symbolic");
  return top_;
}

std::string TowerValue::to_string() const {
  if (is_exact()) return top_.str();
  std::string top;
  if (is_power_of_two(top_)) {
    top = "2^" + std::to_string(boost::multiprecision::msb(top_));
  } else {
    top = top_.str();
  }
  return "2↑↑" + std::to_string(height_) + " (top=" + top + ")";
}

bool operator==(const TowerValue& a, const TowerValue& b) { return compare(a, b) == 0; }

std::strong_ordering operator<=>(const TowerValue& a, const TowerValue& b) { return compare(a, b); }

std::strong_ordering compare(const TowerValue& a, const TowerValue& b) {
  require_same_cap(a, b);
  // Normalized symbolic values exceed every exact value, and a taller
  // symbolic tower exceeds a shorter one because its top is >= cap.
  if (a.height() != b.height()) return a.height() <=> b.height();
  if (a.top() < b.top()) return std::strong_ordering::less;
  if (b.top() < a.top()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TowerValue E(std::uint64_t m, std::uint64_t cap_bits) { return TowerValue::tower(m, BigInt(1), cap_bits); }

TowerValue exp2_tower(std::uint64_t height, BigInt x, std::uint64_t cap_bits) {
  return TowerValue::tower(height, std::move(x), cap_bits);
}

TowerValue floor_log2(const TowerValue& a) {
  if (a.is_exact()) {
    if (a.value() == 0) throw DomainError("floor_log2: argument is zero");
    return TowerValue::exact(BigInt(boost::multiprecision::msb(a.value())), a.cap_bits());
  }
  return TowerValue::tower(a.height() - 1, a.top(), a.cap_bits());
}

TowerValue parse_tower(const std::string& text, std::uint64_t cap_bits) {
  auto digits = [&](const std::string& s) {
    if (s.empty()) throw ParseError("empty number in tower expression \"" + text + "\"");
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("bad tower expression \"" + text + "\" (expected N, E<m>, E(<m>) or 2^<k>)");
      }
    }
    return s;
  };
  if (!text.empty() && (text[0] == 'E' || text[0] == 'e')) {
    std::string m = text.substr(1);
    if (m.size() >= 2 && m.front() == '(' && m.back() == ')') m = m.substr(1, m.size() - 2);
    return E(std::stoull(digits(m)), cap_bits);
  }
  if (text.rfind("2^", 0) == 0) {
    return exp2_tower(1, BigInt(digits(text.substr(2))), cap_bits);
  }
  return TowerValue::exact(BigInt(digits(text)), cap_bits);
}

}  // namespace bptk
