#pragma once

// Permutations on a fixed finite point set, with cycle-notation I/O.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sublat {

using Point = std::uint16_t;

class Perm {
 public:
  Perm() = default;
  // Takes the image table; throws Error unless it is a bijection.
  explicit Perm(std::vector<Point> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }
  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<Point> img_;
};

// Applies q first, then p: compose(p, q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

// 1-based cycle notation, e.g. "(1,4,9,8)(2,5,3,6)"; "()" is the identity.
// Points absent from the text are fixed. Throws ParseError on malformed text,
// out-of-range points and repeated points.
Perm parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace sublat
