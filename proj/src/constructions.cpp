#include "grouplab/constructions.hpp"

#include <array>
#include <numeric>
#include <string>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

Permutation cycle_on(std::size_t degree, std::vector<Point> const &points) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Permutation(std::move(images));
}

std::vector<Point> range(Point from, Point to) {
  std::vector<Point> out;
  for (Point i = from; i < to; ++i) out.push_back(i);
  return out;
}

Order factorial(std::size_t n) {
  Order f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_prime(std::uint64_t p, char const *what) {
  if (!is_prime(p))
    throw PreconditionError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 1, b = x % p, e = p - 2;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Matrix multiply(Matrix const &a, Matrix const &b, std::uint64_t p) {
  std::size_t k = a.size();
  Matrix c(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t s = 0;
      for (std::size_t l = 0; l < k; ++l) s = (s + a[i][l] * b[l][j]) % p;
      c[i][j] = s;
    }
  return c;
}

bool is_identity_matrix(Matrix const &m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1u : 0u))
        return false;
  return true;
}

std::uint64_t determinant(Matrix m, std::uint64_t p) {
  std::size_t k = m.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t r = c;
    while (r < k && m[r][c] == 0) ++r;
    if (r == k)
      return 0;
    if (r != c) {
      std::swap(m[r], m[c]);
      det = (p - det) % p;
    }
    det = det * m[c][c] % p;
    std::uint64_t inv = inverse_mod(m[c][c], p);
    for (std::size_t i = c + 1; i < k; ++i) {
      std::uint64_t f = m[i][c] * inv % p;
      for (std::size_t j = c; j < k; ++j) m[i][j] = (m[i][j] + (p - f) * m[c][j]) % p;
    }
  }
  return det;
}

std::vector<std::uint64_t> digits(std::size_t v, std::uint64_t p, std::size_t k) {
  std::vector<std::uint64_t> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

std::size_t undigits(std::vector<std::uint64_t> const &d, std::uint64_t p) {
  std::size_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

Permutation linear_action(Matrix const &m, std::uint64_t p, std::size_t k) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= p;
  std::vector<Point> images(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto x = digits(v, p, k);
    std::vector<std::uint64_t> y(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) y[i] = (y[i] + m[i][j] * x[j]) % p;
    images[v] = static_cast<Point>(undigits(y, p));
  }
  return Permutation(std::move(images));
}

} // namespace

PermGroup cyclic(std::size_t n) {
  if (n == 0)
    throw PreconditionError("cyclic: n must be at least 1");
  return PermGroup(n, {cycle_on(n, range(0, static_cast<Point>(n)))},
                   {.known_order = Order(n)});
}

PermGroup dihedral(std::size_t n) {
  if (n == 0)
    throw PreconditionError("dihedral: n must be at least 1");
  if (n == 1)
    return cyclic(2);
  if (n == 2)
    return PermGroup(4, parse_generator_list("(1,2)(3,4), (1,3)(2,4)", 4), {.known_order = 4});
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>(n - 1 - i);
  return PermGroup(n, {cycle_on(n, range(0, static_cast<Point>(n))), Permutation(reflection)},
                   {.known_order = Order(2 * n)});
}

PermGroup symmetric(std::size_t n) {
  if (n == 0)
    throw PreconditionError("symmetric: n must be at least 1");
  if (n == 1)
    return PermGroup::trivial(1);
  return PermGroup(n, {cycle_on(n, {0, 1}), cycle_on(n, range(0, static_cast<Point>(n)))},
                   {.known_order = factorial(n)});
}

PermGroup alternating(std::size_t n) {
  if (n < 3)
    throw PreconditionError("alternating: n must be at least 3");
  Permutation long_cycle = n % 2 ? cycle_on(n, range(0, static_cast<Point>(n)))
                                 : cycle_on(n, range(1, static_cast<Point>(n)));
  return PermGroup(n, {cycle_on(n, {0, 1, 2}), long_cycle},
                   {.known_order = factorial(n) / 2});
}

PermGroup elementary_abelian(std::uint64_t p, std::size_t k) {
  require_prime(p, "elementary_abelian");
  if (k == 0)
    throw PreconditionError("elementary_abelian: k must be at least 1");
  std::size_t n = p * k;
  std::vector<Permutation> gens;
  Order order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    gens.push_back(cycle_on(n, range(static_cast<Point>(i * p), static_cast<Point>((i + 1) * p))));
    order *= p;
  }
  return PermGroup(n, std::move(gens), {.known_order = order});
}

PermGroup quaternion() {
  // Element u + 4s stands for (-1)^s times unit u in {1, i, j, k}.
  constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0},
                                                    {0, 1, 0, 1},
                                                    {0, 1, 1, 0},
                                                    {0, 0, 1, 1}}};
  constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3},
                                                    {1, 0, 3, 2},
                                                    {2, 3, 0, 1},
                                                    {3, 2, 1, 0}}};
  auto right_mul = [&](int by) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) {
      int s = x / 4, u = x % 4;
      int t = (s + sign[u][by]) % 2;
      images[x] = static_cast<Point>(unit[u][by] + 4 * t);
    }
    return Permutation(images);
  };
  return PermGroup(8, {right_mul(1), right_mul(2)}, {.known_order = 8});
}

PermGroup sl2_3() {
  // Points are the nonzero vectors of F_3^2 in the order of their base-3
  // index, shifted down by one to skip the zero vector.
  auto act = [](Matrix const &m) {
    Permutation full = linear_action(m, 3, 2);
    std::vector<Point> images(8);
    for (Point v = 1; v < 9; ++v) images[v - 1] = full[v] - 1;
    return Permutation(images);
  };
  return PermGroup(8, {act({{1, 1}, {0, 1}}), act({{1, 0}, {1, 1}})}, {.known_order = 24});
}

PermGroup psl2(std::uint64_t q) {
  if (q < 3 || !is_prime(q))
    throw PreconditionError("psl2: q must be an odd prime, got " + std::to_string(q));
  std::vector<Point> t(q + 1), s(q + 1);
  for (std::uint64_t x = 0; x < q; ++x) t[x] = static_cast<Point>((x + 1) % q);
  t[q] = static_cast<Point>(q);
  s[0] = static_cast<Point>(q);
  s[q] = 0;
  for (std::uint64_t x = 1; x < q; ++x) s[x] = static_cast<Point>(q - inverse_mod(x, q));
  Order order = Order(q + 1) * q * (q - 1) / 2;
  return PermGroup(q + 1, {Permutation(t), Permutation(s)}, {.known_order = order});
}

DirectProduct direct_product(PermGroup const &a, PermGroup const &b) {
  std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> left, right;
  for (auto const &x : a.generators()) left.push_back(x.extended(n));
  for (auto const &y : b.generators()) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = 0; i < b.degree(); ++i)
      images[a.degree() + i] = static_cast<Point>(a.degree() + y[i]);
    right.push_back(Permutation(images));
  }
  std::vector<Permutation> all = left;
  all.insert(all.end(), right.begin(), right.end());
  PermGroup g(n, all, {.known_order = a.order() * b.order()});
  return {g, Subgroup(g, left), Subgroup(g, right)};
}

std::uint64_t matrix_order(Matrix const &m, std::uint64_t p) {
  require_prime(p, "matrix_order");
  std::size_t k = m.size();
  for (auto const &row : m)
    if (row.size() != k)
      throw PreconditionError("matrix is not square");
  Matrix reduced = m;
  for (auto &row : reduced)
    for (auto &x : row) x %= p;
  if (determinant(reduced, p) == 0)
    throw PreconditionError("matrix is singular mod " + std::to_string(p));
  Matrix power = reduced;
  std::uint64_t order = 1;
  while (!is_identity_matrix(power)) {
    power = multiply(power, reduced, p);
    ++order;
  }
  return order;
}

Semidirect semidirect_product_matrix(std::uint64_t p, std::size_t k, Matrix const &m) {
  require_prime(p, "semidirect_product_matrix");
  if (k == 0 || m.size() != k)
    throw PreconditionError("semidirect_product_matrix: matrix must be " + std::to_string(k) +
                            " x " + std::to_string(k));
  std::uint64_t ord = matrix_order(m, p);
  Matrix reduced = m;
  for (auto &row : reduced)
    for (auto &x : row) x %= p;

  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= p;
  std::vector<Permutation> translations;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Point> images(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto d = digits(v, p, k);
      d[i] = (d[i] + 1) % p;
      images[v] = static_cast<Point>(undigits(d, p));
    }
    translations.push_back(Permutation(images));
  }
  Permutation linear = linear_action(reduced, p, k);
  std::vector<Permutation> gens = translations;
  gens.push_back(linear);
  PermGroup g(n, gens, {.known_order = Order(n) * ord});
  return {g, Subgroup(g, translations), linear, ord};
}

std::vector<Permutation> on_block(PermGroup const &h, std::size_t block, std::size_t blocks) {
  std::size_t d = h.degree();
  std::size_t n = d * blocks;
  std::vector<Permutation> out;
  for (auto const &x : h.generators()) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = 0; i < d; ++i)
      images[block * d + i] = static_cast<Point>(block * d + x[i]);
    out.push_back(Permutation(images));
  }
  return out;
}

Wreath wreath_product_cyclic_top(PermGroup const &h, std::size_t m) {
  if (m == 0 || h.degree() == 0)
    throw PreconditionError("wreath_product_cyclic_top: need m >= 1 and a nonempty domain");
  std::size_t d = h.degree();
  std::size_t n = d * m;
  std::vector<Point> top_images(n);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t i = 0; i < d; ++i)
      top_images[b * d + i] = static_cast<Point>(((b + 1) % m) * d + i);
  Permutation top(top_images);

  Order order = m;
  for (std::size_t b = 0; b < m; ++b) order *= h.order();
  std::vector<Permutation> gens = on_block(h, 0, m);
  gens.push_back(top);
  PermGroup g(n, gens, {.known_order = order});

  std::vector<Permutation> base_gens;
  for (std::size_t b = 0; b < m; ++b) {
    auto block_gens = on_block(h, b, m);
    base_gens.insert(base_gens.end(), block_gens.begin(), block_gens.end());
  }
  Order base_order = order / m;
  Subgroup base(g, PermGroup(n, base_gens, {.known_order = base_order}));
  return {g, base, top};
}

} // namespace grouplab
