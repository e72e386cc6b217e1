#include "sublat/gf.hpp"

#include <algorithm>

#include "sublat/error.hpp"

namespace sublat {

namespace {

// Polynomials are coefficient vectors over Z/p, lowest degree first,
// normalized so the top coefficient is nonzero (empty = zero polynomial).
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a mod b (b monic-normalizable, nonzero).
Poly poly_mod(Poly a, const Poly& b, int p) {
  a = trim(std::move(a));
  const int db = static_cast<int>(b.size()) - 1;
  int lead_inv = 0;
  for (int i = 1; i < p; ++i)
    if (b.back() * i % p == 1) lead_inv = i;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i)
      a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
    a = trim(std::move(a));
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, int p) { return poly_mod(a, d, p).empty(); }

// Full factor check: no monic divisor of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    // enumerate monic candidates of degree d
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Poly cand(d + 1, 0);
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(v % p);
        v /= p;
      }
      cand[d] = 1;
      if (divides(cand, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool GF::is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int GF::inv(int a) const {
  if (a == 0) throw Error("GF: zero has no multiplicative inverse");
  return inv_t[a];
}

int GF::pow(int a, int e) const {
  int acc = 1;
  for (int i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

int GF::mul_order(int a) const {
  if (a == 0) throw Error("GF: zero has no multiplicative order");
  int acc = a;
  int n = 1;
  while (acc != 1) {
    acc = mul(acc, a);
    ++n;
  }
  return n;
}

std::vector<int> GF::elements() const {
  std::vector<int> out(q);
  for (int i = 0; i < q; ++i) out[i] = i;
  return out;
}

std::vector<int> GF::coefficients(int a) const {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int GF::from_coefficients(const std::vector<int>& c) const {
  int a = 0;
  for (int i = k - 1; i >= 0; --i) a = a * p + ((c[i] % p) + p) % p;
  return a;
}

int GF::primitive() const {
  for (int a = 1; a < q; ++a)
    if (mul_order(a) == q - 1) return a;
  throw Error("GF: no primitive element found");
}

void GF::build_tables() {
  add_t.assign(q * q, 0);
  mul_t.assign(q * q, 0);
  neg_t.assign(q, 0);
  inv_t.assign(q, 0);

  Poly mod(modulus);
  mod.push_back(1);  // monic x^k term

  for (int a = 0; a < q; ++a) {
    auto ca = coefficients(a);
    for (int b = 0; b < q; ++b) {
      auto cb = coefficients(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
      add_t[a * q + b] = from_coefficients(s);

      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      Poly r = poly_mod(prod, mod, p);
      r.resize(k, 0);
      mul_t[a * q + b] = from_coefficients(r);
    }
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - ca[i]) % p;
    neg_t[a] = from_coefficients(n);
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_t[a * q + b] == 1) inv_t[a] = b;
}

GF GF::make(int p, int k, std::vector<int> modulus) {
  if (!is_prime(p)) throw Error("GF: p must be prime");
  if (k < 1) throw Error("GF: extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 256) throw Error("GF: field size above 256 is unsupported");
  if (static_cast<int>(modulus.size()) != k) throw Error("GF: modulus must have k coefficients");
  for (int& c : modulus) c = ((c % p) + p) % p;

  Poly f(modulus);
  f.push_back(1);
  if (!is_irreducible(f, p)) throw Error("GF: supplied modulus is reducible");

  GF gf;
  gf.p = p;
  gf.k = k;
  gf.q = static_cast<int>(q);
  gf.modulus = std::move(modulus);
  gf.build_tables();
  return gf;
}

GF GF::make(int p, int k) {
  if (!is_prime(p)) throw Error("GF: p must be prime");
  if (k == 1) return make(p, 1, {0});
  // Fixed models for the fields the named constructions depend on.
  if (p == 2 && k == 3) return make(2, 3, {1, 1, 0});  // x^3 + x + 1
  if (p == 3 && k == 2) return make(3, 2, {1, 0});     // x^2 + 1
  if (p == 3 && k == 3) return make(3, 3, {1, 2, 0});  // x^3 + 2x + 1
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 256) throw Error("GF: field size above 256 is unsupported");
  for (long long idx = 1; idx < q; ++idx) {
    std::vector<int> c(k);
    long long v = idx;
    for (int i = 0; i < k; ++i) {
      c[i] = static_cast<int>(v % p);
      v /= p;
    }
    Poly f(c);
    f.push_back(1);
    if (is_irreducible(f, p)) return make(p, k, std::move(c));
  }
  throw Error("GF: no irreducible modulus found");  // unreachable
}

}  // namespace sublat
