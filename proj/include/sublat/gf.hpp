#pragma once

// Table-driven arithmetic for GF(p^k), p^k <= 256. Elements are indices
// 0..q-1 whose base-p digits are the coefficients of the polynomial residue,
// so 0 and 1 are the additive and multiplicative identities.

#include <vector>

namespace sublat {

struct GF {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;  // c0..c_{k-1} of the monic modulus x^k + ... + c0

  int add(int a, int b) const { return add_t[a * q + b]; }
  int sub(int a, int b) const { return add_t[a * q + neg_t[b]]; }
  int mul(int a, int b) const { return mul_t[a * q + b]; }
  int neg(int a) const { return neg_t[a]; }
  int inv(int a) const;  // throws Error for a = 0
  int pow(int a, int e) const;
  int mul_order(int a) const;  // multiplicative order of a nonzero element

  std::vector<int> elements() const;          // 0..q-1
  std::vector<int> coefficients(int a) const;  // base-p digits, length k
  int from_coefficients(const std::vector<int>& c) const;

  // Primitive element: least index of multiplicative order q-1.
  int primitive() const;

  // Fixed moduli for GF(8), GF(9), GF(27); the lexicographically least
  // irreducible monic polynomial otherwise. Throws on non-prime p, k < 1
  // or p^k > 256.
  static GF make(int p, int k);
  // Same but with a caller-supplied modulus; throws if it is reducible.
  static GF make(int p, int k, std::vector<int> modulus);

  static bool is_prime(int n);

 private:
  void build_tables();
  std::vector<int> add_t, mul_t, neg_t, inv_t;
};

}  // namespace sublat
