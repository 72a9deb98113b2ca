#include "tautilt/stability.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/linalg.hpp"
#include "tautilt/module_ops.hpp"

namespace tautilt {

using Index = Eigen::Index;

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Vec theta_of_pair(const TauPair& pair, const std::vector<Rational>& weights) {
  if (weights.size() != pair.size()) throw InputError("one weight per summand is required");
  Vec w(static_cast<Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw InputError("stability weights must be positive");
    w(static_cast<Index>(i)) = weights[i];
  }
  return to_rational(g_matrix(pair)) * w;
}

Vec theta_of_pair(const TauPair& pair) { return theta_of_pair(pair, std::vector<Rational>(pair.size(), Rational(1))); }

Vec slot_theta(const TauPair& pair, std::size_t r) { return theta_of_pair(remove_summand(pair, r)); }

Rational pairing(const Vec& theta, const IntVector& dims) {
  Rational s = 0;
  for (Index i = 0; i < theta.size(); ++i) s += theta(i) * dims(i);
  return s;
}

bool is_semistable_hom(const BoundQuiver& q, const Representation& x, const TauPair& rigid) {
  for (int j : rigid.p_parts)
    if (x.dims[sz(j)] != 0) return false;
  if (x.is_zero() || rigid.m_parts.empty()) return true;
  const Representation m = m_module(q, rigid);
  if (hom_dimension(q, m, x) != 0) return false;
  const Representation tm = tau(q, m);
  return tm.is_zero() || hom_dimension(q, x, tm) == 0;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Integral form

namespace {

/// Integer row echelon form of the rows (Euclidean elimination); returns the
/// non-zero rows, which form a basis of the lattice they span.
std::vector<std::vector<BigInt>> lattice_basis(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
  std::size_t cur = 0;
  for (std::size_t c = 0; c < cols && cur < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = cur; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[cur], rows[best]);
      bool done = true;
      for (std::size_t r = cur + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const BigInt f = rows[r][c] / rows[cur][c];
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[cur][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        ++cur;
        break;
      }
    }
  }
  rows.resize(cur);
  return rows;
}

}  // namespace

namespace {

/// Columns: a Z-basis of the lattice spanned by `spanning` inside Q^d.
Mat lattice_of(const std::vector<Vec>& spanning, int d) {
  BigInt lcd = 1;
  for (const Vec& v : spanning)
    for (Index i = 0; i < v.size(); ++i) {
      const BigInt den = boost::multiprecision::denominator(v(i));
      lcd = lcd / gcd(lcd, den) * den;
    }
  std::vector<std::vector<BigInt>> rows;
  for (const Vec& v : spanning) {
    std::vector<BigInt> row(sz(d));
    for (Index i = 0; i < v.size(); ++i) row[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(v(i) * lcd);
    rows.push_back(std::move(row));
  }
  const auto lat = lattice_basis(std::move(rows), sz(d));
  Mat b(d, static_cast<Index>(lat.size()));
  for (std::size_t c = 0; c < lat.size(); ++c)
    for (int r = 0; r < d; ++r) b(r, static_cast<Index>(c)) = Rational(lat[c][sz(r)]) / lcd;
  return b;
}

}  // namespace

Representation integral_form(const BoundQuiver& q, const Representation& x) {
  if (x.is_zero()) return x;
  const ProjectivePresentation pres = minimal_projective_presentation(q, x);
  const std::size_t n = sz(q.vertex_count());
  std::vector<Mat> basis(n);
  for (std::size_t j = 0; j < n; ++j) basis[j] = Mat(x.dims[j], 0);
  for (std::size_t s = 0; s < pres.p0.size(); ++s) {
    const auto j = sz(pres.p0[s]);
    basis[j] = linalg::hcat(basis[j], pres.generators[s]);
  }
  // The Z-span of all path images of the generators. Paths longer than the
  // Loewy length act as zero, so total_dimension rounds of arrow closure suffice.
  for (int round = 0; round <= x.total_dimension(); ++round) {
    std::vector<Mat> next(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Vec> spanning;
      for (Index c = 0; c < basis[j].cols(); ++c) spanning.push_back(basis[j].col(c));
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        if (sz(q.arrows()[a].target) != j) continue;
        const auto i = sz(q.arrows()[a].source);
        for (Index c = 0; c < basis[i].cols(); ++c) spanning.push_back(x.arrows[a] * basis[i].col(c));
      }
      next[j] = lattice_of(spanning, x.dims[j]);
    }
    basis = std::move(next);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (basis[j].cols() != x.dims[j]) throw Error("integral_form: generators do not span the module");
  Representation out = x;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto i = sz(q.arrows()[a].source);
    const auto j = sz(q.arrows()[a].target);
    if (x.dims[i] == 0 || x.dims[j] == 0) continue;
    out.arrows[a] = linalg::solve(basis[j], Mat(x.arrows[a] * basis[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Submodules over a prime field

namespace {

using Row = std::vector<int>;

/// A subspace kept in reduced row echelon form over F_p.
struct Space {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
};

class PrimeField {
 public:
  explicit PrimeField(int p) : p_(p), inv_(sz(p), 0) {
    for (int a = 1; a < p; ++a)
      for (int b = 1; b < p; ++b)
        if (a * b % p == 1) inv_[sz(a)] = b;
  }
  int p() const { return p_; }
  int inv(int a) const { return inv_[sz(a)]; }
  int reduce(const Rational& x) const {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const int d = static_cast<int>(((den % p_) + p_) % p_);
    if (d == 0) throw InputError("entry " + format_rational(x) + " is not integral at p = " + std::to_string(p_));
    const int nm = static_cast<int>(((num % p_) + p_) % p_);
    return nm * inv(d) % p_;
  }

  /// Reduces v against the space; true and inserted when v was independent.
  bool insert(Space& s, Row v) const {
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
      const int f = v[s.pivots[k]];
      if (f != 0)
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = ((v[c] - f * s.rows[k][c]) % p_ + p_) % p_;
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    const int scale = inv(v[piv]);
    for (int& e : v) e = e * scale % p_;
    for (Row& r : s.rows) {
      const int f = r[piv];
      if (f != 0)
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = ((r[c] - f * v[c]) % p_ + p_) % p_;
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(s.pivots.begin(), s.pivots.end(), piv) - s.pivots.begin());
    s.rows.insert(s.rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    s.pivots.insert(s.pivots.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
  }

 private:
  int p_;
  std::vector<int> inv_;
};

struct FpModule {
  std::vector<int> dims;
  std::vector<int> source, target;
  std::vector<std::vector<Row>> arrows;  // [a][row]

  Row apply(std::size_t a, const Row& v, int p) const {
    Row out(sz(dims[sz(target[a])]), 0);
    for (std::size_t r = 0; r < out.size(); ++r) {
      long acc = 0;
      for (std::size_t c = 0; c < v.size(); ++c) acc += static_cast<long>(arrows[a][r][c]) * v[c];
      out[r] = static_cast<int>(acc % p);
    }
    return out;
  }
};

using Graded = std::vector<Space>;

std::vector<int> graded_key(const Graded& g) {
  std::vector<int> key;
  for (const Space& s : g) {
    key.push_back(static_cast<int>(s.rows.size()));
    for (const Row& r : s.rows) key.insert(key.end(), r.begin(), r.end());
  }
  return key;
}

/// Adds (vertex, vector) pairs and closes under the arrows.
void close_under_arrows(const FpModule& m, const PrimeField& f, Graded& g, std::deque<std::pair<int, Row>> work) {
  while (!work.empty()) {
    auto [v, vec] = std::move(work.front());
    work.pop_front();
    if (!f.insert(g[sz(v)], vec)) continue;
    for (std::size_t a = 0; a < m.arrows.size(); ++a)
      if (m.source[a] == v && m.dims[sz(m.target[a])] > 0) work.emplace_back(m.target[a], m.apply(a, vec, f.p()));
  }
}

}  // namespace

bool within_budget(const Representation& x, const BruteForceBudget& budget) {
  std::uint64_t points = 1;
  for (int k = 0; k < x.total_dimension(); ++k) {
    points *= static_cast<std::uint64_t>(budget.prime);
    if (points > budget.max_points) return false;
  }
  return true;
}

std::set<std::vector<int>> submodule_dim_vectors(const BoundQuiver& q, const Representation& x,
                                                 const BruteForceBudget& budget) {
  if (!is_prime(budget.prime)) throw InputError(std::to_string(budget.prime) + " is not prime");
  if (!within_budget(x, budget))
    throw LimitExceeded("submodule enumeration needs p^dim <= " + std::to_string(budget.max_points));
  const PrimeField field(budget.prime);
  const int p = budget.prime;
  const Representation xi = integral_form(q, x);
  FpModule m;
  m.dims = xi.dims;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    m.source.push_back(q.arrows()[a].source);
    m.target.push_back(q.arrows()[a].target);
    std::vector<Row> rows;
    for (Index r = 0; r < xi.arrows[a].rows(); ++r) {
      Row row;
      for (Index c = 0; c < xi.arrows[a].cols(); ++c) row.push_back(field.reduce(xi.arrows[a](r, c)));
      rows.push_back(std::move(row));
    }
    m.arrows.push_back(std::move(rows));
  }
  const std::size_t n = m.dims.size();
  const Graded empty(n);

  // Cyclic submodules generated by one homogeneous vector, normalized so
  // that its first non-zero entry is 1.
  std::map<std::vector<int>, Graded> cyclic;
  for (std::size_t v = 0; v < n; ++v) {
    const int d = m.dims[v];
    Row vec(sz(d), 0);
    for (;;) {
      std::size_t k = 0;
      while (k < vec.size() && ++vec[k] == p) vec[k++] = 0;
      if (k == vec.size()) break;
      std::size_t lead = 0;
      while (vec[lead] == 0) ++lead;
      if (vec[lead] != 1) continue;
      Graded g = empty;
      close_under_arrows(m, field, g, {{static_cast<int>(v), vec}});
      auto key = graded_key(g);
      cyclic.emplace(std::move(key), std::move(g));
    }
  }

  std::map<std::vector<int>, Graded> all;
  all.emplace(graded_key(empty), empty);
  std::deque<const Graded*> queue{&all.begin()->second};
  while (!queue.empty()) {
    const Graded& s = *queue.front();
    queue.pop_front();
    for (const auto& [ckey, c] : cyclic) {
      Graded sum = s;
      std::deque<std::pair<int, Row>> work;
      for (std::size_t v = 0; v < n; ++v)
        for (const Row& r : c[v].rows) work.emplace_back(static_cast<int>(v), r);
      close_under_arrows(m, field, sum, std::move(work));
      auto key = graded_key(sum);
      if (all.count(key)) continue;
      if (all.size() >= budget.max_submodules)
        throw LimitExceeded("more than " + std::to_string(budget.max_submodules) + " submodules");
      auto it = all.emplace(std::move(key), std::move(sum)).first;
      queue.push_back(&it->second);
    }
  }

  std::set<std::vector<int>> dims;
  for (const auto& [key, g] : all) {
    std::vector<int> dv;
    for (const Space& s : g) dv.push_back(static_cast<int>(s.rows.size()));
    dims.insert(std::move(dv));
  }
  return dims;
}

namespace {

bool king_check(const BoundQuiver& q, const Representation& x, const Vec& theta, const BruteForceBudget& budget,
                bool strict) {
  if (theta.size() != q.vertex_count()) throw InputError("stability vector has the wrong length");
  const IntVector total = x.dim_vector();
  if (pairing(theta, total) != 0) return false;
  if (strict && x.is_zero()) return false;
  for (const std::vector<int>& l : submodule_dim_vectors(q, x, budget)) {
    IntVector lv(static_cast<Index>(l.size()));
    bool zero = true;
    for (std::size_t i = 0; i < l.size(); ++i) {
      lv(static_cast<Index>(i)) = l[i];
      zero = zero && l[i] == 0;
    }
    if (zero || lv == total) continue;
    const Rational v = pairing(theta, lv);
    if (strict ? v >= 0 : v > 0) return false;
  }
  return true;
}

}  // namespace

bool is_semistable_bruteforce(const BoundQuiver& q, const Representation& x, const Vec& theta,
                              const BruteForceBudget& budget) {
  return king_check(q, x, theta, budget, false);
}

bool is_stable_bruteforce(const BoundQuiver& q, const Representation& x, const Vec& theta,
                          const BruteForceBudget& budget) {
  return king_check(q, x, theta, budget, true);
}

// ---------------------------------------------------------------------------
// Bricks

Representation brick_of_slot(const Context& ctx, const TauPair& pair, std::size_t r) {
  const BoundQuiver& q = ctx.algebra();
  if (r >= pair.size()) throw InputError("slot out of range");
  const TauPair almost = remove_summand(pair, r);
  const TauPair upper = is_upper_at(q, pair, r) ? pair : bongartz_completion(ctx, almost);
  const int s = exchanged_slot(almost, upper);
  const std::string where = describe_pair(q, pair) + " slot " + std::to_string(r + 1);
  if (s < 0 || !upper.is_m_slot(static_cast<std::size_t>(s)))
    throw TheoremViolation("brick_of_slot", where + ": upper completion exchanges a shifted projective");

  // N = X / t X for the torsion class generated by the remaining M-summands.
  const Representation& x = upper.m_parts[static_cast<std::size_t>(s)];
  Representation generator = x;
  if (!almost.m_parts.empty()) generator = quotient(q, x, trace(q, almost.m_parts, x).inclusion).module;
  if (generator.is_zero()) throw TheoremViolation("brick_of_slot", where + ": exchanged summand lies in Fac");

  // The stable object is the top of N inside the semistable category.
  std::vector<Mat> spans(sz(q.vertex_count()));
  for (int v = 0; v < q.vertex_count(); ++v) spans[sz(v)] = Mat(generator.dims[sz(v)], 0);
  for (const ModuleMap& f : endomorphism_radical(q, generator))
    for (int v = 0; v < q.vertex_count(); ++v)
      spans[sz(v)] = linalg::sum_space(spans[sz(v)], f.vertex_maps[sz(v)]);
  const Representation top_part = quotient(q, generator, spans).module;
  const auto parts = indecomposable_summands(q, top_part, ctx.seed());
  if (parts.empty()) throw TheoremViolation("brick_of_slot", where + ": empty top");
  const Representation& brick = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (!is_isomorphic(q, parts[k], brick, ctx.seed()))
      throw TheoremViolation("brick_of_slot", where + ": two non-isomorphic stable candidates");
  if (!is_brick(q, brick)) throw TheoremViolation("brick_of_slot", where + ": candidate is not a brick");
  if (!is_semistable_hom(q, brick, almost))
    throw TheoremViolation("brick_of_slot", where + ": candidate fails the Hom criterion");
  if (pairing(slot_theta(pair, r), brick.dim_vector()) != 0)
    throw TheoremViolation("brick_of_slot", where + ": theta_r does not vanish on the candidate");
  if (!minimal_torsion_contains(q, {brick}, generator))
    throw TheoremViolation("brick_of_slot", where + ": generator is not filtered by the candidate");
  return brick;
}

BrickSlate brick_slate(const Context& ctx, const TauPair& pair) {
  const BoundQuiver& q = ctx.algebra();
  BrickSlate slate;
  slate.pair = pair;
  const auto n = static_cast<Index>(pair.size());
  slate.g = g_matrix(pair);
  slate.c = c_matrix(pair);
  slate.x = IntMatrix::Zero(pair.vertices, n);
  for (std::size_t r = 0; r < pair.size(); ++r) {
    slate.bricks.push_back(brick_of_slot(ctx, pair, r));
    slate.x.col(static_cast<Index>(r)) = slate.bricks.back().dim_vector();
  }
  slate.d = slate.g.transpose() * slate.x;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const std::int64_t e = slate.d(i, j);
      if (i == j ? (e != 1 && e != -1) : e != 0)
        throw TheoremViolation("c_eq_xd", describe_pair(q, pair) + ": G^T X is not diagonal +-1");
    }
  if (slate.c != slate.x * slate.d) throw TheoremViolation("c_eq_xd", describe_pair(q, pair) + ": C != X D");
  return slate;
}

std::vector<Representation> b_plus(const BrickSlate& slate) {
  std::vector<Representation> out;
  for (std::size_t r = 0; r < slate.bricks.size(); ++r)
    if (slate.d(static_cast<Index>(r), static_cast<Index>(r)) == 1) out.push_back(slate.bricks[r]);
  return out;
}

IntVector d_diagonal(const BrickSlate& slate) { return slate.d.diagonal(); }

// ---------------------------------------------------------------------------
// Torsion classes

bool fac_contains(const BoundQuiver& q, const TauPair& pair, const Representation& x) {
  if (x.is_zero()) return true;
  if (pair.m_parts.empty()) return false;
  return trace(q, pair.m_parts, x).module.dims == x.dims;
}

bool minimal_torsion_contains(const BoundQuiver& q, const std::vector<Representation>& bricks,
                              const Representation& x) {
  Representation cur = x;
  while (!cur.is_zero()) {
    if (bricks.empty()) return false;
    const Subrepresentation t = trace(q, bricks, cur);
    if (t.module.is_zero()) return false;
    cur = quotient(q, cur, t.inclusion).module;
  }
  return true;
}

std::vector<Check> verify_facm_theorem(const BoundQuiver& q, const BrickSlate& slate,
                                       const std::vector<Representation>& probes) {
  const auto plus = b_plus(slate);
  Check orth{"hom_orthogonal", true, ""};
  for (std::size_t i = 0; i < plus.size(); ++i)
    for (std::size_t j = 0; j < plus.size(); ++j)
      if (i != j && hom_dimension(q, plus[i], plus[j]) != 0)
        orth.fail("Hom(" + loewy_name(q, plus[i]) + ", " + loewy_name(q, plus[j]) + ") != 0");
  Check eq{"facm_equality", true, ""};
  auto test = [&](const Representation& x) {
    const bool fac = fac_contains(q, slate.pair, x);
    const bool tor = minimal_torsion_contains(q, plus, x);
    if (fac != tor)
      eq.fail(loewy_name(q, x) + ": Fac M says " + (fac ? "yes" : "no") + ", T(B+) says " + (tor ? "yes" : "no"));
  };
  for (const Representation& x : probes) test(x);
  for (const Representation& x : slate.pair.m_parts) test(x);
  return {orth, eq};
}

std::optional<std::size_t> semibrick_to_pair(const BoundQuiver& q, const std::vector<Representation>& bricks,
                                             const ExchangeGraph& graph, const std::vector<BrickSlate>& slates) {
  if (!graph.complete) throw InputError("semibrick lookup needs a complete exchange graph");
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    if (!is_brick(q, bricks[i])) throw InputError(loewy_name(q, bricks[i]) + " is not a brick");
    for (std::size_t j = 0; j < bricks.size(); ++j)
      if (i != j && hom_dimension(q, bricks[i], bricks[j]) != 0) throw InputError("bricks are not Hom-orthogonal");
  }
  for (std::size_t k = 0; k < slates.size(); ++k) {
    const auto plus = b_plus(slates[k]);
    if (plus.size() != bricks.size()) continue;
    bool all = true;
    for (const Representation& b : bricks) {
      bool found = false;
      for (const Representation& c : plus)
        if (c.dims == b.dims && is_isomorphic(q, b, c)) found = true;
      all = all && found;
    }
    if (all) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Extensions

namespace {

/// The projective cover P0 -> X built from the top generators.
std::pair<Representation, ModuleMap> projective_cover(const BoundQuiver& q, const Representation& x) {
  const ProjectivePresentation pres = minimal_projective_presentation(q, x);
  Representation p0 = projective_sum(q, pres.p0);
  ModuleMap cover;
  for (int j = 0; j < q.vertex_count(); ++j) {
    Mat block(x.dims[sz(j)], p0.dims[sz(j)]);
    Index offset = 0;
    for (std::size_t s = 0; s < pres.p0.size(); ++s)
      for (int path : q.basis_between(pres.p0[s], j))
        block.col(offset++) = basis_path_matrix(q, x, path) * pres.generators[s];
    cover.vertex_maps.push_back(std::move(block));
  }
  return {std::move(p0), std::move(cover)};
}

}  // namespace

std::size_t ext1_dimension(const BoundQuiver& q, const Representation& x, const Representation& y) {
  const auto [p0, cover] = projective_cover(q, x);
  if (!is_surjective(cover)) throw Error("ext1_dimension: projective cover is not surjective");
  const Representation omega = kernel(q, p0, cover).module;
  return hom_dimension(q, omega, y) + hom_dimension(q, x, y) - hom_dimension(q, p0, y);
}

std::optional<Representation> self_extension_witness(const BoundQuiver& q, const Representation& brick,
                                                     const std::vector<Representation>& candidates) {
  std::vector<int> doubled;
  for (int d : brick.dims) doubled.push_back(2 * d);
  const Representation split = direct_sum(q, {brick, brick});
  for (const Representation& e : candidates) {
    if (e.dims != doubled || is_isomorphic(q, e, split)) continue;
    const auto maps = hom_basis(q, brick, e);
    std::vector<ModuleMap> tries = maps;
    if (!maps.empty()) {
      std::vector<Rational> ones(maps.size(), Rational(1));
      tries.push_back(combine(maps, ones, brick, e));
    }
    for (const ModuleMap& f : tries) {
      if (!is_injective(f)) continue;
      if (is_isomorphic(q, cokernel(q, e, f).module, brick)) return e;
    }
  }
  return std::nullopt;
}

}  // namespace tautilt
