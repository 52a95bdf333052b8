#include "fatpoints/geomconfig.hpp"

#include <algorithm>
#include <random>

#include "fatpoints/collision.hpp"
#include "fatpoints/conditions.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/matrix.hpp"

namespace fatpoints {

namespace {

bool is_zero(const ProjPoint& p) {
  return std::all_of(p.begin(), p.end(), [](std::uint64_t x) { return x == 0; });
}

std::size_t span_rank(const std::vector<ProjPoint>& pts, const PrimeField& f) {
  if (pts.empty()) return 0;
  return rank(MatrixF::from_rows(pts, pts.front().size()), f);
}

bool proportional(const ProjPoint& u, const ProjPoint& v, const PrimeField& f) {
  return !is_zero(u) && !is_zero(v) && span_rank({u, v}, f) == 1;
}

// Kernel of the matrix whose columns are `cols`.
std::vector<VectorF> column_kernel(const std::vector<ProjPoint>& cols, const PrimeField& f) {
  const std::size_t rows = cols.front().size();
  MatrixF m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return kernel(m, f);
}

ProjPoint combine(std::uint64_t a, const ProjPoint& u, std::uint64_t b, const ProjPoint& v, const PrimeField& f) {
  ProjPoint r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = f.add(f.mul(a, u[i]), f.mul(b, v[i]));
  return r;
}

ProjPoint with_last(const ProjPoint& p, std::uint64_t last) {
  ProjPoint r = p;
  r.push_back(last);
  return r;
}

// Scale so that the last coordinate is 1; it must be nonzero.
ProjPoint affine_normalized(ProjPoint p, const PrimeField& f) {
  std::uint64_t s = f.inv(p.back());
  for (auto& x : p) x = f.mul(x, s);
  return p;
}

[[noreturn]] void not_general(const std::string& what) { throw InvalidInput("configuration not general: " + what); }

// Intersection of <p, q> and <r, s> when the four points span a plane.
ProjPoint meet(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, const ProjPoint& s, const PrimeField& f) {
  auto ker = column_kernel({p, q, r, s}, f);
  if (ker.size() != 1) not_general("two lines do not meet in a single point");
  ProjPoint x = combine(ker[0][0], p, ker[0][1], q, f);
  if (is_zero(x)) not_general("degenerate line intersection");
  return x;
}

class CountingDraw {
 public:
  CountingDraw(const PrimeField& f, std::mt19937_64& rng) : f_(f), rng_(rng) {}
  std::uint64_t operator()() {
    ++count_;
    return f_.random(rng_);
  }
  std::size_t count() const { return count_; }

 private:
  const PrimeField& f_;
  std::mt19937_64& rng_;
  std::size_t count_ = 0;
};

std::vector<ProjPoint> lift_base(const WConfig& w, const PrimeField& f, std::mt19937_64& rng);
std::vector<ProjPoint> lift_rec(const WConfig& w, const PrimeField& f, std::mt19937_64& rng);

WConfig restrict_to_first(const WConfig& w, int t) {
  WConfig s;
  s.n = w.n;
  s.t = t;
  s.x.resize(static_cast<std::size_t>(t) * (t - 1) / 2);
  for (int i = 1; i <= t; ++i)
    for (int j = i + 1; j <= t; ++j) s.at(i, j) = w.at(i, j);
  return s;
}

// t = n+2: each Pi_i is a hyperplane other than R through L_i = span{x_jk : j,k != i}.
std::vector<ProjPoint> lift_base(const WConfig& w, const PrimeField& f, std::mt19937_64& rng) {
  const int n = w.n;
  const int t = w.t;
  std::vector<ProjPoint> planes;
  for (int i = 1; i <= t; ++i) {
    std::vector<ProjPoint> span;
    for (int j = 1; j <= t; ++j)
      for (int k = j + 1; k <= t; ++k)
        if (j != i && k != i) span.push_back(with_last(w.at(j, k), 0));
    if (span_rank(span, f) != static_cast<std::size_t>(n)) not_general("L_i has the wrong dimension");
    auto ann = kernel(MatrixF::from_rows(span, static_cast<std::size_t>(n) + 2), f);
    if (ann.size() != 2) not_general("L_i annihilator is not 2-dimensional");
    ProjPoint pi;
    for (int attempt = 0;; ++attempt) {
      if (attempt == 8) not_general("no hyperplane other than R found");
      pi = combine(f.random(rng), ann[0], f.random(rng), ann[1], f);
      if (!std::all_of(pi.begin(), pi.end() - 1, [](std::uint64_t x) { return x == 0; })) break;
    }
    planes.push_back(std::move(pi));
  }
  std::vector<ProjPoint> pts;
  for (int j = 0; j < t; ++j) {
    std::vector<ProjPoint> eqs;
    for (int i = 0; i < t; ++i)
      if (i != j) eqs.push_back(planes[i]);
    auto ker = kernel(MatrixF::from_rows(eqs, static_cast<std::size_t>(n) + 2), f);
    if (ker.size() != 1) not_general("hyperplanes do not meet in a point");
    if (ker[0].back() == 0) not_general("lifted point lies on R");
    pts.push_back(affine_normalized(ker[0], f));
  }
  return pts;
}

std::vector<ProjPoint> lift_rec(const WConfig& w, const PrimeField& f, std::mt19937_64& rng) {
  const int n = w.n;
  const int t = w.t;
  if (t == 2) {
    ProjPoint p1(static_cast<std::size_t>(n) + 1);
    for (auto& x : p1) x = f.random(rng);
    p1.push_back(1);
    ProjPoint x12 = with_last(w.at(1, 2), 0);
    return {p1, combine(1, p1, 1, x12, f)};
  }
  if (t < n + 2) {
    // work inside the span of x_12, ..., x_1t, a P^{t-2}
    std::vector<ProjPoint> basis;
    for (int j = 2; j <= t; ++j) basis.push_back(w.at(1, j));
    if (span_rank(basis, f) != basis.size()) not_general("x_1j are dependent");
    WConfig small;
    small.n = t - 2;
    small.t = t;
    small.x.resize(w.x.size());
    for (int i = 1; i <= t; ++i) {
      for (int j = i + 1; j <= t; ++j) {
        std::vector<ProjPoint> cols = basis;
        cols.push_back(w.at(i, j));
        auto ker = column_kernel(cols, f);
        if (ker.size() != 1 || ker[0].back() == 0) not_general("x_ij outside the span of the x_1j");
        // x_ij = -(1/c) * sum c_k basis_k
        std::uint64_t s = f.neg(f.inv(ker[0].back()));
        ProjPoint c(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) c[k] = f.mul(ker[0][k], s);
        small.at(i, j) = std::move(c);
      }
    }
    auto lifted = lift_rec(small, f, rng);
    std::vector<ProjPoint> out;
    for (const auto& q : lifted) {
      ProjPoint p(static_cast<std::size_t>(n) + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) p = combine(1, p, q[k], basis[k], f);
      p.push_back(q.back());
      out.push_back(std::move(p));
    }
    return out;
  }
  if (t == n + 2) return lift_base(w, f, rng);
  auto pts = lift_rec(restrict_to_first(w, n + 2), f, rng);
  for (int s = n + 3; s <= t; ++s) {
    ProjPoint p = meet(pts[0], with_last(w.at(1, s), 0), pts[1], with_last(w.at(2, s), 0), f);
    if (p.back() == 0) not_general("lifted point lies on R");
    pts.push_back(affine_normalized(std::move(p), f));
  }
  return pts;
}

}  // namespace

ProjectedConfig build_projected_config(int n, int l, const PrimeField& field, std::uint64_t seed) {
  if (n < 1 || l < 2) throw InvalidInput("projected config needs n >= 1 and l >= 2");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ProjectedConfig c;
    c.n = n;
    std::vector<ProjPoint> v;
    for (int i = 0; i < l; ++i) {
      ProjPoint p(static_cast<std::size_t>(n));
      for (auto& x : p) x = field.random(rng);
      v.push_back(p);
      c.a.push_back(with_last(p, 1));
    }
    c.b = pair_directions(v, field);
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) c.pairs.emplace_back(i, j);
    bool ok = std::none_of(c.b.begin(), c.b.end(), is_zero);
    for (int i = 0; ok && i < l; ++i)
      for (int j = i + 1; ok && j < l; ++j)
        for (int k = j + 1; ok && k < l; ++k) {
          auto idx = [&](int x, int y) {
            return static_cast<std::size_t>(x * l - x * (x + 1) / 2 + (y - x - 1));
          };
          ok = span_rank({c.b[idx(i, j)], c.b[idx(i, k)], c.b[idx(j, k)]}, field) <= 2;
        }
    if (ok) return c;
  }
  throw NumericalAbort("build_projected_config: degenerate samples");
}

std::size_t conditions_rank(const ProjectedConfig& cfg, int e, const PrimeField& field) {
  if (e < 0) throw InvalidInput("degree must be >= 0");
  field.require_exceeds(e, "projected configuration rank");
  return rank(form_evaluation_rows(cfg.b, e, field), field);
}

int n_k_threshold(int k) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  int t = 2;
  // C(t+3,3)/(t+1) - t > k  <=>  t^2 - t + 6 > 6k
  while (static_cast<long>(t) * t - t + 6 <= 6L * k) ++t;
  return t;
}

ConjectureReport verify_conjecture_nk(int n, int k, const MonteCarlo& mc) {
  if (n < 2 || k < 0) throw InvalidInput("conjecture needs n >= 2 and k >= 0");
  ConjectureReport r;
  r.n = n;
  r.k = k;
  r.expected = static_cast<long>(binomial(n + k, 2)) - (k >= 3 ? static_cast<long>(binomial(k - 1, 2)) : 0);
  r.in_range = 6L * k < static_cast<long>(n) * n - n + 6;
  const long cubics = static_cast<long>(binomial(n + 2, 3));
  if (r.expected > cubics) {
    throw InvalidInput("expected rank " + std::to_string(r.expected) + " exceeds the " + std::to_string(cubics) +
                       " cubics on R; (n,k) outside the conjecture's range");
  }
  if (mc.seeds.empty()) throw ConfigError("at least one seed is required");
  for (std::size_t i = 0; i < mc.seeds.size(); ++i) {
    long m = static_cast<long>(conditions_rank(build_projected_config(n, n + k, mc.field, mc.seeds[i]), 3, mc.field));
    if (i == 0) {
      r.measured = m;
    } else if (m != r.measured) {
      throw NumericalAbort("trials disagree on the projected-pairs rank; re-run with other seeds");
    }
  }
  r.pass = r.measured == r.expected;
  if (!r.in_range) r.warnings.push_back("(n,k) lies outside the strict range 6k < n^2 - n + 6");
  if (n == 4 && k == 3) {
    r.warnings.push_back("seven projected points in P^4 impose 19 conditions on cubics, one fewer than the formula");
  }
  return r;
}

std::size_t WConfig::pair_index(int i, int j) const {
  if (i < 1 || j <= i || j > t) throw InvalidInput("pair index out of range");
  // pairs ordered (1,2), (1,3), ..., (1,t), (2,3), ...
  const int a = i - 1;
  return static_cast<std::size_t>(a * t - a * (a + 1) / 2 + (j - i - 1));
}

WConfig sample_W(int n, int t, const PrimeField& field, std::uint64_t seed) {
  if (n < 2 || t < 3) throw InvalidInput("sample_W needs n >= 2 and t >= 3");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    CountingDraw draw(field, rng);
    WConfig w;
    w.n = n;
    w.t = t;
    w.x.resize(static_cast<std::size_t>(t) * (t - 1) / 2);
    for (int j = 2; j <= t; ++j) {
      ProjPoint p(static_cast<std::size_t>(n));
      for (auto& x : p) x = draw();
      w.at(1, j) = with_last(p, 1);
    }
    for (int j = 3; j <= t; ++j) w.at(2, j) = combine(1, w.at(1, 2), draw(), w.at(1, j), field);
    try {
      for (int j = 3; j <= t; ++j)
        for (int k = j + 1; k <= t; ++k)
          w.at(j, k) = meet(w.at(1, j), w.at(1, k), w.at(2, j), w.at(2, k), field);
    } catch (const InvalidInput&) {
      continue;
    }
    if (std::any_of(w.x.begin(), w.x.end(), is_zero) || !collinearity_holds(w, field)) continue;
    w.scalars_drawn = draw.count();
    return w;
  }
  throw NumericalAbort("sample_W: degenerate samples");
}

bool collinearity_holds(const WConfig& w, const PrimeField& field) {
  for (int a = 1; a <= w.t; ++a)
    for (int b = a + 1; b <= w.t; ++b)
      for (int c = b + 1; c <= w.t; ++c)
        if (span_rank({w.at(a, b), w.at(a, c), w.at(b, c)}, field) > 2) return false;
  return true;
}

std::vector<ProjPoint> lift_preimage(const WConfig& w, const PrimeField& field, std::uint64_t seed) {
  if (w.t < 2 || w.x.size() != static_cast<std::size_t>(w.t) * (w.t - 1) / 2) {
    throw InvalidInput("malformed configuration");
  }
  std::mt19937_64 rng(seed);
  auto pts = lift_rec(w, field, rng);
  if (!verify_lift(pts, w, field).ok) throw InternalError("lifted points fail verification");
  return pts;
}

LiftCheck verify_lift(const std::vector<ProjPoint>& points, const WConfig& w, const PrimeField& field) {
  if (points.size() != static_cast<std::size_t>(w.t)) return {false, "expected " + std::to_string(w.t) + " points"};
  for (int i = 1; i <= w.t; ++i) {
    for (int j = i + 1; j <= w.t; ++j) {
      const ProjPoint& p = points[i - 1];
      const ProjPoint& q = points[j - 1];
      if (p.back() == 0 && q.back() == 0) {
        return {false, "line <p_" + std::to_string(i) + ", p_" + std::to_string(j) + "> lies in R"};
      }
      ProjPoint v = combine(p.back(), q, field.neg(q.back()), p, field);
      v.pop_back();  // last coordinate is 0 by construction
      if (!proportional(v, w.at(i, j), field)) {
        return {false, "<p_" + std::to_string(i) + ", p_" + std::to_string(j) + "> misses x_" + std::to_string(i) +
                           std::to_string(j)};
      }
    }
  }
  return {true, ""};
}

}  // namespace fatpoints
