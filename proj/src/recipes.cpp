#include "sublat/recipes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sublat/error.hpp"
#include "sublat/gf.hpp"

namespace sublat {

namespace {

void check_order(const GroupTable& t, long long expected, const char* what) {
  if (t.order() != expected)
    throw Error(std::string(what) + ": generated order " + std::to_string(t.order()) +
                " does not match expected " + std::to_string(expected));
}

Perm perm_from_images(std::vector<int> v) {
  std::vector<Point> img(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) img[i] = static_cast<Point>(v[i]);
  return Perm(std::move(img));
}

// k x k matrices over Z/p, row-major.
using Matrix = std::vector<int>;

Matrix mat_mul(const Matrix& a, const Matrix& b, int k, int p) {
  Matrix c(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l)
      for (int j = 0; j < k; ++j) c[i * k + j] = (c[i * k + j] + a[i * k + l] * b[l * k + j]) % p;
  return c;
}

bool mat_invertible(Matrix m, int k, int p) {
  // Gaussian elimination over Z/p.
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (m[r * k + col] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < k; ++j) std::swap(m[pivot * k + j], m[col * k + j]);
    int inv = 0;
    for (int i = 1; i < p; ++i)
      if (m[col * k + col] * i % p == 1) inv = i;
    for (int j = 0; j < k; ++j) m[col * k + j] = m[col * k + j] * inv % p;
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      int f = m[r * k + col] % p;
      for (int j = 0; j < k; ++j)
        m[r * k + j] = ((m[r * k + j] - f * m[col * k + j]) % p + p) % p;
    }
  }
  return true;
}

std::size_t matrix_group_order(const std::vector<Matrix>& gens, int k, int p, std::size_t cap) {
  Matrix id(k * k, 0);
  for (int i = 0; i < k; ++i) id[i * k + i] = 1;
  std::map<Matrix, int> seen;
  std::vector<Matrix> elems{id};
  seen.emplace(id, 0);
  for (std::size_t qi = 0; qi < elems.size(); ++qi)
    for (const Matrix& g : gens) {
      Matrix f = mat_mul(elems[qi], g, k, p);
      if (seen.emplace(f, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(f));
        if (elems.size() > cap) throw BudgetError("matrix_semidirect: element cap exceeded");
      }
    }
  return elems.size();
}

int vector_index(const std::vector<int>& v, int p) {
  int idx = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) idx = idx * p + v[i];
  return idx;
}

std::vector<int> vector_digits(int idx, int k, int p) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) {
    v[i] = idx % p;
    idx /= p;
  }
  return v;
}

}  // namespace

GroupTable cyclic_group(int n, int cap) {
  if (n < 1) throw ParseError("cyclic: order must be >= 1");
  std::vector<int> img(std::max(n, 1));
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  if (n == 1) img = {0};
  GroupTable t = generate_elements({perm_from_images(img)}, cap);
  check_order(t, n, "cyclic");
  return t;
}

GroupTable dihedral_group(int n, int cap) {
  if (n < 2 || n % 2 != 0) throw ParseError("dihedral: order must be even and >= 2");
  const int m = n / 2;
  std::vector<Perm> gens;
  if (m == 1) {
    gens = {parse_cycles("(1,2)", 2)};
  } else if (m == 2) {
    gens = {parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)};
  } else {
    std::vector<int> rot(m), flip(m);
    for (int i = 0; i < m; ++i) {
      rot[i] = (i + 1) % m;
      flip[i] = (m - i) % m;
    }
    gens = {perm_from_images(rot), perm_from_images(flip)};
  }
  GroupTable t = generate_elements(gens, cap);
  check_order(t, n, "dihedral");
  return t;
}

GroupTable symmetric_group(int n, int cap) {
  if (n < 1) throw ParseError("symmetric: degree must be >= 1");
  if (n == 1) return cyclic_group(1, cap);
  std::vector<int> cyc(n), swap01(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swap01[i] = i;
  }
  std::swap(swap01[0], swap01[1]);
  GroupTable t = generate_elements({perm_from_images(swap01), perm_from_images(cyc)}, cap);
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  check_order(t, f, "symmetric");
  return t;
}

GroupTable alternating_group(int n, int cap) {
  if (n < 1) throw ParseError("alternating: degree must be >= 1");
  if (n <= 2) {
    GroupTable t = generate_elements({Perm::identity(std::max(n, 1))}, cap);
    check_order(t, 1, "alternating");
    return t;
  }
  std::vector<Perm> gens{parse_cycles("(1,2,3)", n)};
  if (n > 3) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;  // n-cycle, even
    } else {
      for (int i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;  // (n-1)-cycle on 2..n
    }
    gens.push_back(perm_from_images(img));
  }
  GroupTable t = generate_elements(gens, cap);
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  check_order(t, f / 2, "alternating");
  return t;
}

GroupTable elementary_abelian_group(int p, int k, int cap) {
  if (!GF::is_prime(p)) throw ParseError("elementary_abelian: p must be prime");
  if (k < 1) throw ParseError("elementary_abelian: k must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > cap) throw BudgetError("elementary_abelian: order exceeds element cap");
  const int deg = p * k;
  std::vector<Perm> gens;
  for (int b = 0; b < k; ++b) {
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) img[i] = i;
    for (int i = 0; i < p; ++i) img[b * p + i] = b * p + (i + 1) % p;
    gens.push_back(perm_from_images(img));
  }
  GroupTable t = generate_elements(gens, cap);
  check_order(t, q, "elementary_abelian");
  return t;
}

GroupTable quaternion8_group(int cap) {
  // Q8 as the 2x2 matrix group over GF(3) generated by i and j,
  // acting faithfully on the 9 vectors of GF(3)^2.
  const int p = 3, k = 2;
  const std::vector<Matrix> mats = {{0, 2, 1, 0}, {1, 1, 1, 2}};
  std::vector<Perm> gens;
  for (const Matrix& m : mats) {
    std::vector<int> img(9);
    for (int x = 0; x < 9; ++x) {
      auto v = vector_digits(x, k, p);
      std::vector<int> w(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) w[i] = (w[i] + m[i * k + j] * v[j]) % p;
      img[x] = vector_index(w, p);
    }
    gens.push_back(perm_from_images(img));
  }
  GroupTable t = generate_elements(gens, cap);
  check_order(t, 8, "quaternion8");
  return t;
}

GroupTable psl2(int q, int cap) {
  static const int supported[] = {4, 5, 7, 8, 9, 11, 13, 17, 27};
  if (std::find(std::begin(supported), std::end(supported), q) == std::end(supported))
    throw ParseError("psl2: unsupported q (supported: 4,5,7,8,9,11,13,17,27)");

  int p = 2, k = 1;
  for (int pp : {2, 3, 5, 7, 11, 13, 17}) {
    int kk = 0;
    long long v = 1;
    while (v < q) {
      v *= pp;
      ++kk;
    }
    if (v == q) {
      p = pp;
      k = kk;
      break;
    }
  }
  GF f = GF::make(p, k);
  const int inf = q;  // projective point at infinity
  const int deg = q + 1;
  const int lambda = f.primitive();

  auto frac_map = [&](auto&& fn) {
    std::vector<int> img(deg);
    for (int x = 0; x <= q; ++x) img[x] = fn(x);
    return perm_from_images(img);
  };

  Perm t_shift = frac_map([&](int x) { return x == inf ? inf : f.add(x, 1); });
  int scale = q % 2 == 0 ? lambda : f.mul(lambda, lambda);
  Perm d_scale = frac_map([&](int x) { return x == inf ? inf : f.mul(scale, x); });
  Perm w_inv = frac_map([&](int x) {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return f.neg(f.inv(x));  // -1/x; equals 1/x in characteristic 2
  });

  GroupTable t = generate_elements({t_shift, d_scale, w_inv}, cap);
  long long expected = static_cast<long long>(q) * (q - 1) * (q + 1) / (q % 2 == 0 ? 1 : 2);
  check_order(t, expected, "psl2");
  return t;
}

GroupTable affine(int q, int cap) {
  int p = 0, k = 0;
  for (int pp = 2; pp <= q; ++pp) {
    if (!GF::is_prime(pp)) continue;
    long long v = pp;
    int kk = 1;
    while (v < q) {
      v *= pp;
      ++kk;
    }
    if (v == q) {
      p = pp;
      k = kk;
      break;
    }
  }
  if (p == 0 || q > 256) throw ParseError("affine: q must be a prime power <= 256");
  GF f = GF::make(p, k);
  std::vector<int> shift(q), scale(q);
  const int lambda = f.primitive();
  for (int x = 0; x < q; ++x) {
    shift[x] = f.add(x, 1);
    scale[x] = f.mul(lambda, x);
  }
  GroupTable t =
      generate_elements({perm_from_images(shift), perm_from_images(scale)}, cap);
  check_order(t, static_cast<long long>(q) * (q - 1), "affine");
  return t;
}

GroupTable matrix_semidirect(int p, int k, const std::vector<std::vector<int>>& matrix_generators,
                             int cap) {
  if (!GF::is_prime(p)) throw ParseError("matrix_semidirect: p must be prime");
  if (k < 1 || k > 8) throw ParseError("matrix_semidirect: dimension out of range");
  long long space = 1;
  for (int i = 0; i < k; ++i) space *= p;
  if (space > 65535) throw ParseError("matrix_semidirect: vector space too large");

  std::vector<Matrix> mats;
  for (const auto& m : matrix_generators) {
    if (static_cast<int>(m.size()) != k * k)
      throw ParseError("matrix_semidirect: matrix must have k*k entries");
    Matrix mm(k * k);
    for (int i = 0; i < k * k; ++i) mm[i] = ((m[i] % p) + p) % p;
    if (!mat_invertible(mm, k, p)) throw ParseError("matrix_semidirect: singular matrix");
    mats.push_back(std::move(mm));
  }

  std::size_t mat_order = mats.empty() ? 1 : matrix_group_order(mats, k, p, cap);
  if (static_cast<long long>(mat_order) * space > cap)
    throw BudgetError("matrix_semidirect: order exceeds element cap");

  const int deg = static_cast<int>(space);
  std::vector<Perm> gens;
  for (int b = 0; b < k; ++b) {  // translations by basis vectors
    std::vector<int> img(deg);
    for (int x = 0; x < deg; ++x) {
      auto v = vector_digits(x, k, p);
      v[b] = (v[b] + 1) % p;
      img[x] = vector_index(v, p);
    }
    gens.push_back(perm_from_images(img));
  }
  for (const Matrix& m : mats) {  // linear maps
    std::vector<int> img(deg);
    for (int x = 0; x < deg; ++x) {
      auto v = vector_digits(x, k, p);
      std::vector<int> w(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) w[i] = (w[i] + m[i * k + j] * v[j]) % p;
      img[x] = vector_index(w, p);
    }
    gens.push_back(perm_from_images(img));
  }
  GroupTable t = generate_elements(gens, cap);
  check_order(t, static_cast<long long>(mat_order) * space, "matrix_semidirect");
  return t;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, int cap) {
  const int da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (int g : a.generators()) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = a.element(g)(static_cast<Point>(i));
    for (int i = 0; i < db; ++i) img[da + i] = da + i;
    gens.push_back(perm_from_images(img));
  }
  for (int g : b.generators()) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = i;
    for (int i = 0; i < db; ++i) img[da + i] = da + b.element(g)(static_cast<Point>(i));
    gens.push_back(perm_from_images(img));
  }
  GroupTable t = generate_elements(gens, cap);
  check_order(t, static_cast<long long>(a.order()) * b.order(), "direct_product");
  return t;
}

GroupRecipe u3_2_recipe() {
  GroupRecipe r;
  r.family = GroupRecipe::Family::MatrixSemidirect;
  r.params = {3, 2};
  r.matrices = {{0, 2, 1, 0}, {1, 1, 1, 2}};  // i and j of Q8 inside GL(2,3)
  r.name = "u3_2";
  return r;
}

GroupTable build(const GroupRecipe& r, int cap) {
  using F = GroupRecipe::Family;
  switch (r.family) {
    case F::Cyclic:
      return cyclic_group(r.params.at(0), cap);
    case F::Dihedral:
      return dihedral_group(r.params.at(0), cap);
    case F::Symmetric:
      return symmetric_group(r.params.at(0), cap);
    case F::Alternating:
      return alternating_group(r.params.at(0), cap);
    case F::ElementaryAbelian:
      return elementary_abelian_group(r.params.at(0), r.params.at(1), cap);
    case F::Quaternion8:
      return quaternion8_group(cap);
    case F::Psl2:
      return psl2(r.params.at(0), cap);
    case F::Affine:
      return affine(r.params.at(0), cap);
    case F::MatrixSemidirect:
      return matrix_semidirect(r.params.at(0), r.params.at(1), r.matrices, cap);
    case F::DirectProduct: {
      if (r.factors.size() < 2) throw ParseError("direct_product: needs two factors");
      GroupTable acc = build(r.factors[0], cap);
      for (std::size_t i = 1; i < r.factors.size(); ++i)
        acc = direct_product(acc, build(r.factors[i], cap), cap);
      return acc;
    }
    case F::ExplicitGenerators: {
      if (r.degree < 1) throw ParseError("explicit generators: degree must be >= 1");
      std::vector<Perm> gens;
      for (const std::string& s : r.generator_text) gens.push_back(parse_cycles(s, r.degree));
      if (gens.empty()) gens.push_back(Perm::identity(r.degree));
      return generate_elements(gens, cap);
    }
  }
  throw Error("build: unknown recipe family");
}

GroupRecipe parse_recipe_id(const std::string& id) {
  if (id.empty()) throw ParseError("empty group identifier");

  // direct products: 'x'-joined identifiers
  if (id.find('x') != std::string::npos) {
    GroupRecipe r;
    r.family = GroupRecipe::Family::DirectProduct;
    r.name = id;
    std::size_t start = 0;
    while (start <= id.size()) {
      std::size_t next = id.find('x', start);
      std::string part = id.substr(start, next == std::string::npos ? next : next - start);
      if (part.empty()) throw ParseError("malformed direct product identifier: " + id);
      r.factors.push_back(parse_recipe_id(part));
      if (next == std::string::npos) break;
      start = next + 1;
    }
    return r;
  }

  GroupRecipe r;
  r.name = id;
  if (id == "u3_2") return u3_2_recipe();
  if (id == "quaternion8") {
    r.family = GroupRecipe::Family::Quaternion8;
    return r;
  }

  static const std::vector<std::pair<std::string, GroupRecipe::Family>> families = {
      {"elementary_abelian", GroupRecipe::Family::ElementaryAbelian},
      {"cyclic", GroupRecipe::Family::Cyclic},
      {"dihedral", GroupRecipe::Family::Dihedral},
      {"symmetric", GroupRecipe::Family::Symmetric},
      {"alternating", GroupRecipe::Family::Alternating},
      {"psl2", GroupRecipe::Family::Psl2},
      {"affine", GroupRecipe::Family::Affine},
  };
  for (const auto& [prefix, fam] : families) {
    if (id.rfind(prefix + "_", 0) != 0) continue;
    r.family = fam;
    std::string rest = id.substr(prefix.size() + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t next = rest.find('_', start);
      std::string tok = rest.substr(start, next == std::string::npos ? next : next - start);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed group identifier: " + id);
      r.params.push_back(std::stoi(tok));
      if (next == std::string::npos) break;
      start = next + 1;
    }
    const std::size_t want = fam == GroupRecipe::Family::ElementaryAbelian ? 2 : 1;
    if (r.params.size() != want) throw ParseError("wrong parameter count in identifier: " + id);
    return r;
  }
  throw ParseError("unknown group identifier: " + id);
}

}  // namespace sublat
