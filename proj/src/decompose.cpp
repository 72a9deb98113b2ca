#include "tautilt/decompose.hpp"

#include <algorithm>
#include <random>

#include "tautilt/errors.hpp"
#include "tautilt/linalg.hpp"

namespace tautilt {

namespace {

using linalg::Index;

Rational trace_of(const ModuleMap& f) {
  Rational t(0);
  for (const Mat& b : f.vertex_maps) t += b.trace();
  return t;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

std::vector<BigInt> divisors(BigInt value) {
  if (value < 0) value = -value;
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  for (BigInt d = 1; d * d <= value; ++d) {
    if (value % d != 0) continue;
    small.push_back(d);
    if (d * d != value) large.push_back(value / d);
    if (d > 1000000) break;  // coefficients here stay tiny; a huge constant term means no search
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t shape_hash(const Representation& m) {
  std::uint64_t h = 0x51ed27;
  for (int d : m.dims) h = mix(h, static_cast<std::uint64_t>(d));
  return h;
}

bool all_invertible(const ModuleMap& f) {
  for (const Mat& b : f.vertex_maps)
    if (b.rows() != b.cols() || linalg::determinant(b) == 0) return false;
  return true;
}

/// Invariant tuple used for ordering and cheap isomorphism rejection.
struct Invariants {
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> radical;
  std::vector<std::int64_t> socle;
  std::size_t end_dim;
  auto operator<=>(const Invariants&) const = default;
};

std::vector<std::int64_t> flatten(const std::vector<IntVector>& layers) {
  std::vector<std::int64_t> out;
  for (const IntVector& v : layers)
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Invariants invariants_of(const BoundQuiver& q, const Representation& m) {
  return Invariants{to_std(m.dim_vector()), flatten(radical_layers(q, m)), flatten(socle_layers(q, m)),
                    hom_dimension(q, m, m)};
}

void split_recursively(const BoundQuiver& q, const Representation& m, std::mt19937_64& rng,
                       std::vector<Representation>& out) {
  if (m.is_zero()) return;
  const std::vector<ModuleMap> ends = hom_basis(q, m, m);
  if (ends.size() == 1) {
    out.push_back(m);
    return;
  }
  const std::size_t k = ends.size();
  Mat form(static_cast<Index>(k), static_cast<Index>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Rational t = trace_of(compose(ends[i], ends[j]));
      form(static_cast<Index>(i), static_cast<Index>(j)) = t;
      form(static_cast<Index>(j), static_cast<Index>(i)) = t;
    }
  if (linalg::rank(form) == 1) {  // End/rad is the ground field: local
    out.push_back(m);
    return;
  }

  auto try_split = [&](const ModuleMap& phi) {
    if (auto parts = fitting_split(q, m, phi)) {
      split_recursively(q, parts->first.module, rng, out);
      split_recursively(q, parts->second.module, rng, out);
      return true;
    }
    return false;
  };
  for (const ModuleMap& e : ends)
    if (try_split(e)) return;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (try_split(compose(ends[i], ends[j]))) return;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (try_split(combine({ends[i], ends[j]}, {Rational(1), Rational(1)}, m, m))) return;
      if (try_split(combine({ends[i], ends[j]}, {Rational(1), Rational(-1)}, m, m))) return;
    }
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < k; ++i) c.emplace_back(coeff(rng));
    if (try_split(combine(ends, c, m, m))) return;
  }
  throw Error("splitting failure: no endomorphism with a rational eigenvalue splits a module of dimension " +
              std::to_string(m.total_dimension()) + " whose endomorphism ring (dim " + std::to_string(k) +
              ") is not local");
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const Mat& a) {
  const Index n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = 1;
  // Faddeev-LeVerrier recursion.
  Mat m = Mat::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = a * m;
    for (Index i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Mat am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Rational(k);
  }
  return c;
}

std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() <= 1) return roots;
  BigInt common(1);
  for (const Rational& x : c) common = lcm_big(common, boost::multiprecision::denominator(x));
  std::vector<BigInt> ints;
  for (const Rational& x : c) ints.push_back(boost::multiprecision::numerator(x) * (common / boost::multiprecision::denominator(x)));
  const auto ps = divisors(ints.front());
  const auto qs = divisors(ints.back());
  std::vector<Rational> found;
  for (const BigInt& p : ps)
    for (const BigInt& d : qs)
      for (int sign : {1, -1}) {
        const Rational x = Rational(p * sign, d);
        if (std::find(found.begin(), found.end(), x) != found.end()) continue;
        if (evaluate(c, x) == 0) found.push_back(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::pair<Subrepresentation, Subrepresentation>> fitting_split(const BoundQuiver& q,
                                                                             const Representation& m,
                                                                             const ModuleMap& phi) {
  std::vector<Rational> eigenvalues;
  for (const Mat& b : phi.vertex_maps) {
    if (b.rows() == 0) continue;
    for (const Rational& r : rational_roots(characteristic_polynomial(b)))
      if (std::find(eigenvalues.begin(), eigenvalues.end(), r) == eigenvalues.end()) eigenvalues.push_back(r);
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  const int total = m.total_dimension();
  for (const Rational& lambda : eigenvalues) {
    std::vector<Mat> ker, img;
    int ker_dim = 0;
    for (std::size_t i = 0; i < phi.vertex_maps.size(); ++i) {
      const Index d = phi.vertex_maps[i].rows();
      Mat shifted = phi.vertex_maps[i];
      for (Index r = 0; r < d; ++r) shifted(r, r) -= lambda;
      Mat power = Mat::Identity(d, d);
      for (Index e = 0; e < d; ++e) power = power * shifted;
      ker.push_back(linalg::nullspace(power));
      img.push_back(linalg::column_space(power));
      ker_dim += static_cast<int>(ker.back().cols());
    }
    if (ker_dim > 0 && ker_dim < total)
      return std::make_pair(subrepresentation(q, m, ker), subrepresentation(q, m, img));
  }
  return std::nullopt;
}

std::vector<ModuleMap> endomorphism_radical(const BoundQuiver& q, const Representation& m) {
  const std::vector<ModuleMap> ends = hom_basis(q, m, m);
  const std::size_t k = ends.size();
  if (k == 0) return {};
  Mat form(static_cast<Index>(k), static_cast<Index>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      form(static_cast<Index>(i), static_cast<Index>(j)) = trace_of(compose(ends[i], ends[j]));
  const Mat null = linalg::nullspace(form);
  std::vector<ModuleMap> out;
  for (Index c = 0; c < null.cols(); ++c) {
    std::vector<Rational> coeff;
    for (std::size_t i = 0; i < k; ++i) coeff.push_back(null(static_cast<Index>(i), c));
    out.push_back(combine(ends, coeff, m, m));
  }
  return out;
}

bool canonical_less(const BoundQuiver& q, const Representation& a, const Representation& b) {
  return invariants_of(q, a) < invariants_of(q, b);
}

bool is_brick(const BoundQuiver& q, const Representation& m) { return !m.is_zero() && hom_dimension(q, m, m) == 1; }

bool is_isomorphic(const BoundQuiver& q, const Representation& a, const Representation& b, std::uint64_t seed) {
  if (a.dims != b.dims) return false;
  if (a.is_zero()) return true;
  const std::vector<ModuleMap> maps = hom_basis(q, a, b);
  if (maps.empty()) return false;
  if (maps.size() != hom_dimension(q, a, a) || maps.size() != hom_dimension(q, b, b)) return false;
  std::mt19937_64 rng(mix(seed, shape_hash(a)));
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < maps.size(); ++i) c.emplace_back(coeff(rng));
    if (all_invertible(combine(maps, c, a, b))) return true;
  }
  // The product of vertex determinants is a polynomial of degree at most
  // dim a in the coefficients; a grid with more points per axis than that
  // degree contains a non-root whenever the polynomial is non-zero.
  const std::size_t side = static_cast<std::size_t>(a.total_dimension()) + 1;
  std::size_t points = 1;
  for (std::size_t i = 0; i < maps.size() && points <= 4096; ++i) points *= side;
  if (maps.size() > 4 || points > 4096) return false;
  std::vector<std::size_t> digits(maps.size(), 0);
  for (std::size_t n = 0; n < points; ++n) {
    std::vector<Rational> c;
    for (std::size_t d : digits) c.emplace_back(static_cast<long>(d));
    if (all_invertible(combine(maps, c, a, b))) return true;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < side) break;
      digits[i] = 0;
    }
  }
  return false;
}

std::vector<Representation> indecomposable_summands(const BoundQuiver& q, const Representation& m, std::uint64_t seed) {
  std::mt19937_64 rng(mix(seed, shape_hash(m)));
  std::vector<Representation> pieces;
  split_recursively(q, m, rng, pieces);
  std::vector<std::pair<Invariants, Representation>> keyed;
  for (auto& p : pieces) keyed.emplace_back(invariants_of(q, p), std::move(p));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Representation> out;
  for (auto& [key, rep] : keyed) out.push_back(std::move(rep));
  return out;
}

std::vector<Summand> decompose(const BoundQuiver& q, const Representation& m, std::uint64_t seed) {
  std::vector<Summand> out;
  for (Representation& piece : indecomposable_summands(q, m, seed)) {
    bool merged = false;
    for (Summand& s : out)
      if (is_isomorphic(q, s.module, piece, seed)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back(Summand{std::move(piece), 1});
  }
  return out;
}

bool is_indecomposable(const BoundQuiver& q, const Representation& m, std::uint64_t seed) {
  if (m.is_zero()) return false;
  return indecomposable_summands(q, m, seed).size() == 1;
}

std::vector<Representation> basic_part(const BoundQuiver& q, const std::vector<Representation>& parts, std::uint64_t seed) {
  std::vector<Representation> out;
  for (const Representation& p : parts) {
    bool seen = false;
    for (const Representation& o : out)
      if (is_isomorphic(q, o, p, seed)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace tautilt
