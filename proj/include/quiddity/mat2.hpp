#pragma once

#include <ostream>

#include "quiddity/ring.hpp"

namespace quiddity {

// 2x2 matrix over any element type with ring operations.
template <class E>
struct Mat2 {
  E a11, a12, a21, a22;

  static Mat2 identity(const E& like) { return {one_like(like), zero_like(like), zero_like(like), one_like(like)}; }
  static Mat2 scalar(const E& s) { return {s, zero_like(s), zero_like(s), s}; }
  static Mat2 diag(const E& x, const E& y) { return {x, zero_like(x), zero_like(x), y}; }

  E det() const { return a11 * a22 - a12 * a21; }

  Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  Mat2& operator*=(const Mat2& y) { return *this = *this * y; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }

  bool is_scalar(const E& s) const { return a11 == s && a22 == s && is_zero(a12) && is_zero(a21); }

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a11 << ", " << m.a12 << "], [" << m.a21 << ", " << m.a22 << "]]";
  }
};

using Matrix = Mat2<RingElement>;

// eta(c) = [[c, -1], [1, 0]]
template <class E>
Mat2<E> eta(const E& c) {
  return {c, -one_like(c), one_like(c), zero_like(c)};
}

// First row of a running product, right-multiplied by eta(c):
// [p, q] * eta(c) = [p*c + q, -p].
template <class E>
void step_row(E& p, E& q, const E& c) {
  E next = p * c + q;
  q = -p;
  p = std::move(next);
}

}  // namespace quiddity
