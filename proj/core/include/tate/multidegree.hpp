#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tate {

/**
 * An element of Z^t.
 *
 * Comparison with `leq`/`geq` is the termwise partial order.  `operator==`
 * is equality; maps keyed by degree use `LexLess`.
 */
class Multidegree {
public:
  Multidegree() = default;
  explicit Multidegree(std::size_t t, int fill = 0) : c_(t, fill) {}
  Multidegree(std::initializer_list<int> values) : c_(values) {}
  explicit Multidegree(std::vector<int> values) : c_(std::move(values)) {}

  static Multidegree unit(std::size_t t, std::size_t i) {
    Multidegree d(t);
    d.c_.at(i) = 1;
    return d;
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& components() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  /// |a| = a_1 + ... + a_t
  int total() const;
  bool isZero() const;

  Multidegree& operator+=(const Multidegree& o);
  Multidegree& operator-=(const Multidegree& o);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }
  friend Multidegree operator-(Multidegree a);
  friend bool operator==(const Multidegree&, const Multidegree&) = default;

  std::string toString() const; // "(1,-2)"

private:
  std::vector<int> c_;
};

/// a <= b termwise
bool leq(const Multidegree& a, const Multidegree& b);
inline bool geq(const Multidegree& a, const Multidegree& b) { return leq(b, a); }
Multidegree componentwiseMax(const Multidegree& a, const Multidegree& b);
Multidegree componentwiseMin(const Multidegree& a, const Multidegree& b);
/// (k, k, ..., k)
inline Multidegree constantDegree(std::size_t t, int k) { return Multidegree(t, k); }

struct LexLess {
  bool operator()(const Multidegree& a, const Multidegree& b) const {
    return a.components() < b.components();
  }
};

/// All d with low <= d <= high, in lexicographic order (first coordinate
/// slowest).  Empty when low is not <= high.
std::vector<Multidegree> degreeBox(const Multidegree& low, const Multidegree& high);

/// Parses "1,-2,3" (no spaces required, none allowed inside numbers).
Multidegree parseMultidegree(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Multidegree& d);

} // namespace tate
