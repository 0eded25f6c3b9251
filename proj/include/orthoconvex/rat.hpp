#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace oc {

struct BigRat;

/// Exact rational number. Values whose numerator and denominator fit in a
/// signed 64-bit word are stored inline; anything larger spills to a GMP
/// rational that is shared between copies. Always kept in lowest terms with a
/// positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : Rat(static_cast<std::int64_t>(v), 1) {}  // NOLINT
  Rat(long long v) : Rat(static_cast<std::int64_t>(v), 1) {}  // NOLINT
  Rat(std::int64_t num, std::int64_t den);

  /// Parses "p/q", "p", or a finite decimal such as "-1.25".
  static Rat parse(std::string_view text);

  bool is_small() const { return big_ == nullptr; }
  bool is_integer() const;
  int sign() const;

  /// Numerator and denominator as decimal strings.
  std::string num_str() const;
  std::string den_str() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const;

  /// Largest integer <= value, returned as a Rat.
  Rat floor() const;
  Rat ceil() const;
  /// Throws std::overflow_error when the value is not an integer in int64 range.
  std::int64_t to_int64() const;

  Rat operator-() const;
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  /// Throws std::domain_error on division by zero.
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  std::size_t hash() const;

  // Access for the GMP-backed slow paths in rat.cpp and sqrt helpers.
  const BigRat* big() const { return big_.get(); }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }
  static Rat from_big(BigRat&& v);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRat> big_;
};

Rat abs(const Rat& r);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace oc

template <>
struct std::hash<oc::Rat> {
  std::size_t operator()(const oc::Rat& r) const noexcept { return r.hash(); }
};
