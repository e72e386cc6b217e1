#include "sublat/perm.hpp"

#include <algorithm>
#include <cctype>

#include "sublat/error.hpp"

namespace sublat {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw Error("permutation image table is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<Point> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[x] = p(q(static_cast<Point>(x)));
  return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<Point> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[p(static_cast<Point>(x))] = static_cast<Point>(x);
  return Perm(std::move(img));
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<Point> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");

  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1 << 20) throw ParseError("point number out of range");
        ++i;
      }
      if (v < 1 || v > degree) throw ParseError("point out of range for degree");
      if (used[v - 1]) throw ParseError("repeated point in cycle notation");
      used[v - 1] = 1;
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] == ')')
          throw ParseError("trailing comma in cycle notation");
      }
    }
    if (i == text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    any_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  if (!any_cycle) throw ParseError("empty permutation text");
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (int s = 0; s < p.degree(); ++s) {
    if (done[s] || p(static_cast<Point>(s)) == s) continue;
    out += '(';
    int x = s;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(x + 1);
      done[x] = 1;
      x = p(static_cast<Point>(x));
      first = false;
    } while (x != s);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sublat
