#include "fatpoints/linsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <random>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

std::vector<int> normalized(std::vector<int> m) {
  for (int x : m) {
    if (x < 0) throw InvalidInput("negative multiplicity");
  }
  m.erase(std::remove(m.begin(), m.end(), 0), m.end());
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

}  // namespace

SystemSpec SystemSpec::projective(int n, int d, std::vector<int> mults) {
  if (n < 1) throw InvalidInput("projective dimension must be >= 1");
  if (d < 0) throw InvalidInput("degree must be >= 0");
  SystemSpec s;
  s.n = n;
  s.d = d;
  s.mults = normalized(std::move(mults));
  return s;
}

SystemSpec SystemSpec::bidegree(int a, int b, std::vector<int> mults) {
  if (a < 0 || b < 0) throw InvalidInput("bidegree must be >= 0");
  SystemSpec s;
  s.p1p1 = true;
  s.n = 2;
  s.a = a;
  s.b = b;
  s.d = a + b;
  s.mults = normalized(std::move(mults));
  return s;
}

MonomialBasis SystemSpec::basis() const {
  return p1p1 ? MonomialBasis::biprojective(a, b) : MonomialBasis::projective(n, d);
}

long SystemSpec::ambient_dim() const {
  if (p1p1) return static_cast<long>(a + 1) * (b + 1);
  return static_cast<long>(binomial(n + d, n));
}

std::string to_string(const SystemSpec& spec) {
  std::string out = spec.p1p1 ? "Q(" + std::to_string(spec.a) + "," + std::to_string(spec.b)
                              : "L(" + std::to_string(spec.n) + "," + std::to_string(spec.d);
  out += ";";
  for (std::size_t i = 0; i < spec.mults.size();) {
    std::size_t j = i;
    while (j < spec.mults.size() && spec.mults[j] == spec.mults[i]) ++j;
    if (i > 0) out += ",";
    out += std::to_string(spec.mults[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  out += ")";
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a nonnegative integer");
    return static_cast<int>(v);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }
  std::size_t column() const { return pos_ + 1; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SystemSpec parse_system(std::string_view text) {
  Cursor c(text);
  char kind = c.peek();
  if (kind != 'L' && kind != 'Q') c.fail("expected 'L' or 'Q'");
  c.expect(kind);
  c.expect('(');
  c.skip_ws();
  std::size_t first_col = c.column();
  int first = c.integer();
  c.expect(',');
  int second = c.integer();
  std::vector<int> mults;
  if (c.accept(';')) {
    if (c.peek() != ')') {
      do {
        int m = c.integer();
        int e = 1;
        if (c.accept('^')) e = c.integer();
        if (static_cast<long>(mults.size()) + e > 100000) c.fail("too many points");
        mults.insert(mults.end(), static_cast<std::size_t>(e), m);
      } while (c.accept(','));
    }
  }
  c.expect(')');
  if (!c.at_end()) c.fail("trailing characters");
  if (kind == 'L') {
    if (first < 1) throw ParseError(first_col, "projective dimension must be >= 1");
    return SystemSpec::projective(first, second, std::move(mults));
  }
  return SystemSpec::bidegree(first, second, std::move(mults));
}

long vdim(const SystemSpec& spec) {
  long v = spec.ambient_dim();
  for (int m : spec.mults) {
    v -= spec.p1p1 ? static_cast<long>(binomial(m + 1, 2)) : static_cast<long>(binomial(m - 1 + spec.n, spec.n));
  }
  return v;
}

long edim(const SystemSpec& spec) { return std::max(vdim(spec), 0L); }

long conditions_rank_once(const SystemSpec& spec, const PrimeField& field, std::uint64_t seed) {
  field.require_exceeds(spec.d, "linear system " + to_string(spec));
  MonomialBasis basis = spec.basis();
  std::mt19937_64 rng(seed);
  MatrixF stacked(0, basis.size());
  for (int m : spec.mults) {
    FatPoint q;
    q.multiplicity = m;
    q.coords.resize(static_cast<std::size_t>(basis.variables()));
    for (auto& x : q.coords) x = field.random(rng);
    // rows of order > d are zero and only cost time
    if (m > spec.d + 1) q.multiplicity = spec.d + 1;
    stacked.append_rows(fat_point_rows(q, basis, field));
  }
  return static_cast<long>(rank(stacked, field));
}

DimReport generic_dim(const SystemSpec& spec, const MonteCarlo& mc) {
  if (mc.seeds.empty()) throw ConfigError("at least one seed is required");
  DimReport r;
  r.vdim = vdim(spec);
  r.edim = edim(spec);
  r.prime = mc.field.prime();
  r.seeds = mc.seeds;
  r.trials = static_cast<int>(mc.seeds.size());
  long first = -1;
  for (std::size_t i = 0; i < mc.seeds.size(); ++i) {
    long dim = spec.ambient_dim() - conditions_rank_once(spec, mc.field, mc.seeds[i]);
    if (i == 0) {
      first = dim;
    } else if (dim != first) {
      throw NumericalAbort("trials disagree on dim " + to_string(spec) + " (" + std::to_string(first) + " vs " +
                           std::to_string(dim) + "); unlucky prime or seed, re-run with other seeds");
    }
  }
  r.measured_dim = first;
  r.special = r.measured_dim > r.edim;
  if (r.measured_dim < r.edim) throw InternalError("measured dimension below expected dimension");
  return r;
}

const char* to_string(AhVerdict v) noexcept {
  switch (v) {
    case AhVerdict::special:
      return "special";
    case AhVerdict::non_special:
      return "non-special";
    case AhVerdict::out_of_scope:
      return "out-of-scope";
  }
  return "?";
}

AhVerdict ah_oracle(int n, int d, int h) {
  if (d < 2) return AhVerdict::out_of_scope;
  if (d == 2 && h >= 2 && h <= n) return AhVerdict::special;
  const int table[4][3] = {{2, 4, 5}, {3, 4, 9}, {4, 3, 7}, {4, 4, 14}};
  for (const auto& row : table) {
    if (row[0] == n && row[1] == d && row[2] == h) return AhVerdict::special;
  }
  return AhVerdict::non_special;
}

int min_nonzero_degree(int n, const std::vector<int>& mults, const MonteCarlo& mc) {
  if (mults.empty()) throw InvalidInput("min_nonzero_degree needs at least one point");
  int start = *std::max_element(mults.begin(), mults.end());
  if (start < 1) throw InvalidInput("multiplicities must be positive");
  // a union of hyperplanes through the points has degree sum(m_i)
  int stop = std::accumulate(mults.begin(), mults.end(), 0);
  for (int j = start; j <= stop; ++j) {
    if (generic_dim(SystemSpec::projective(n, j, mults), mc).measured_dim > 0) return j;
  }
  throw InternalError("no hypersurface found up to degree sum(m_i)");
}

SystemSpec p1p1_to_p2(int a, int b, int m) {
  if (a < 0 || b < 0 || m < 0) throw InvalidInput("p1p1_to_p2 needs a, b, m >= 0");
  return SystemSpec::projective(2, a + b, {a, b, m});
}

bool lu_predicate(long d, long m) {
  return (d + 1) * (d + 1) > 9 * (m * (m + 1) / 2) && d >= 2 * m - 1;
}

}  // namespace fatpoints
