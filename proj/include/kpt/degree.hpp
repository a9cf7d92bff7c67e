#pragma once

// Multi-degrees of paths (elements of N^k) and grading indices (Z^k).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpt {

/// An element of N^k. Colors are 1-based in the public API.
class Degree {
 public:
  Degree() = default;
  explicit Degree(int k) : c_(static_cast<std::size_t>(k), 0) {}
  Degree(std::initializer_list<std::int64_t> coords);
  explicit Degree(std::vector<std::int64_t> coords);

  static Degree zero(int k) { return Degree(k); }
  /// The standard basis vector e_color.
  static Degree unit(int k, int color);
  /// (1,...,1)
  static Degree ones(int k);

  int k() const { return static_cast<int>(c_.size()); }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  /// Coordinate of a 1-based color.
  std::int64_t at_color(int color) const { return c_.at(static_cast<std::size_t>(color - 1)); }
  const std::vector<std::int64_t>& coords() const { return c_; }

  std::int64_t total() const;
  bool is_zero() const;

  Degree& operator+=(const Degree& o);
  /// Throws std::domain_error unless o <= *this.
  Degree& operator-=(const Degree& o);

  friend Degree operator+(Degree a, const Degree& b) { return a += b; }
  friend Degree operator-(Degree a, const Degree& b) { return a -= b; }

  friend bool operator==(const Degree&, const Degree&) = default;
  /// Lexicographic; used only for ordering containers.
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) { return a.c_ <=> b.c_; }

  /// Componentwise partial order.
  bool leq(const Degree& o) const;

  std::string str() const;
  /// Parses "1,0,2" (or "3" when k == 1).
  static Degree parse(const std::string& text);

 private:
  std::vector<std::int64_t> c_;
};

Degree join(const Degree& a, const Degree& b);
Degree meet(const Degree& a, const Degree& b);

/// An element of Z^k, used as a grading index.
class DegreeDelta {
 public:
  DegreeDelta() = default;
  explicit DegreeDelta(int k) : c_(static_cast<std::size_t>(k), 0) {}
  DegreeDelta(std::initializer_list<std::int64_t> coords) : c_(coords) {}
  explicit DegreeDelta(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}
  explicit DegreeDelta(const Degree& d) : c_(d.coords()) {}

  int k() const { return static_cast<int>(c_.size()); }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& coords() const { return c_; }
  bool is_zero() const;

  DegreeDelta& operator+=(const DegreeDelta& o);
  DegreeDelta& operator-=(const DegreeDelta& o);
  friend DegreeDelta operator+(DegreeDelta a, const DegreeDelta& b) { return a += b; }
  friend DegreeDelta operator-(DegreeDelta a, const DegreeDelta& b) { return a -= b; }
  DegreeDelta operator-() const;

  friend bool operator==(const DegreeDelta&, const DegreeDelta&) = default;
  friend std::strong_ordering operator<=>(const DegreeDelta& a, const DegreeDelta& b) { return a.c_ <=> b.c_; }

  std::string str() const;
  static DegreeDelta parse(const std::string& text);

 private:
  std::vector<std::int64_t> c_;
};

/// d(mu) - d(nu)
inline DegreeDelta difference(const Degree& a, const Degree& b) {
  return DegreeDelta(a) - DegreeDelta(b);
}

}  // namespace kpt
