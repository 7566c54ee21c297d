#include "hopfinv/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfinv/error.hpp"

namespace hopfinv {

Rat rat(long num, long den) {
  if (den == 0) throw HopfError("scalars/zero-denominator", "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> rat_from_string(std::string_view s) {
  if (s.empty()) return std::nullopt;
  // strict grammar: [-]digits[/digits]
  size_t pos = 0;
  if (s[pos] == '-') pos++;
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
  if (pos != s.size()) {
    if (s[pos] != '/') return std::nullopt;
    pos++;
    if (pos >= s.size()) return std::nullopt;
    size_t den_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos != s.size() || pos == den_start) return std::nullopt;
  }
  Rat r;
  if (r.set_str(std::string(s), 10) != 0) return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

long euler_phi(long N) {
  if (N <= 0) throw HopfError("scalars/bad-conductor", "conductor must be positive");
  long result = N, n = N;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

namespace {

// Divides a by b in Z[x] (b monic), returning the quotient; the division
// must be exact.  Both polynomials are coefficient vectors, low degree
// first, with nonzero leading coefficient.
std::vector<Int> exact_poly_divide(std::vector<Int> a, const std::vector<Int>& b) {
  if (b.empty() || b.back() != 1)
    throw HopfError("scalars/internal", "divisor must be monic");
  std::vector<Int> q;
  if (a.size() < b.size()) throw HopfError("scalars/internal", "degree underflow");
  q.assign(a.size() - b.size() + 1, Int(0));
  for (size_t qi = q.size(); qi-- > 0;) {
    Int coeff = a[qi + b.size() - 1];
    q[qi] = coeff;
    if (coeff != 0) {
      for (size_t bi = 0; bi < b.size(); ++bi) a[qi + bi] -= coeff * b[bi];
    }
  }
  for (const auto& c : a)
    if (c != 0) throw HopfError("scalars/internal", "inexact polynomial division");
  return q;
}

std::map<long, std::vector<Int>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

std::vector<Int> compute_cyclotomic(long N);

const std::vector<Int>& cyclotomic_locked(long N) {
  auto it = g_cyclo_cache.find(N);
  if (it == g_cyclo_cache.end()) it = g_cyclo_cache.emplace(N, compute_cyclotomic(N)).first;
  return it->second;
}

// Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed by exact division.
std::vector<Int> compute_cyclotomic(long N) {
  if (N == 1) return {Int(-1), Int(1)};
  std::vector<Int> num(static_cast<size_t>(N) + 1, Int(0));
  num[0] = -1;
  num[static_cast<size_t>(N)] = 1;
  for (long d = 1; d < N; ++d) {
    if (N % d == 0) num = exact_poly_divide(std::move(num), cyclotomic_locked(d));
  }
  return num;
}

// Remainder of a rational polynomial modulo the monic integer polynomial m.
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Int>& m) {
  size_t deg_m = m.size() - 1;
  while (a.size() > deg_m) {
    Rat lead = a.back();
    size_t shift = a.size() - 1 - deg_m;
    if (lead != 0) {
      for (size_t i = 0; i < deg_m; ++i) a[shift + i] -= lead * Rat(m[i]);
    }
    a.pop_back();
  }
  a.resize(deg_m, Rat(0));
  return a;
}

// Rational polynomial product, low degree first.
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

bool poly_is_zero(const std::vector<Rat>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

size_t poly_degree(const std::vector<Rat>& a) {
  size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  return d;  // number of coefficients up to the last nonzero; 0 means zero poly
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long N) {
  if (N <= 0) throw HopfError("scalars/bad-conductor", "conductor must be positive");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cyclotomic_locked(N);
}

Cyc::Cyc() : n_(1), c_(1, Rat(0)) {}
Cyc::Cyc(const Rat& r) : n_(1), c_(1, r) {}
Cyc::Cyc(long n) : n_(1), c_(1, Rat(n)) {}

Cyc Cyc::zeta(long N, long k) {
  std::vector<Rat> coeffs;
  k %= N;
  if (k < 0) k += N;
  coeffs.assign(static_cast<size_t>(k) + 1, Rat(0));
  coeffs.back() = 1;
  return from_powers(N, coeffs);
}

Cyc Cyc::from_powers(long N, const std::vector<Rat>& coeffs) {
  if (N <= 0) throw HopfError("scalars/bad-conductor", "conductor must be positive");
  std::vector<Rat> folded(static_cast<size_t>(N), Rat(0));
  for (size_t k = 0; k < coeffs.size(); ++k) folded[k % static_cast<size_t>(N)] += coeffs[k];
  auto reduced = poly_mod(std::move(folded), cyclotomic_polynomial(N));
  return Cyc(N, std::move(reduced));
}

Cyc Cyc::from_coords(long N, std::vector<Rat> coords) {
  if (static_cast<long>(coords.size()) != euler_phi(N))
    throw HopfError("scalars/bad-coords", "coordinate vector must have length phi(N)");
  return Cyc(N, std::move(coords));
}

bool Cyc::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyc::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyc::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyc::is_rational_integer() const { return is_rational() && c_[0].get_den() == 1; }

bool Cyc::is_algebraic_integer() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.get_den() == 1; });
}

std::optional<Rat> Cyc::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

Cyc Cyc::lifted(long M) const {
  if (M % n_ != 0) throw HopfError("scalars/bad-lift", "target conductor must be a multiple");
  if (M == n_) return *this;
  long step = M / n_;
  std::vector<Rat> coeffs(static_cast<size_t>(n_) * step, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) coeffs[k * static_cast<size_t>(step)] = c_[k];
  return from_powers(M, coeffs);
}

std::optional<Cyc> Cyc::lowered(long M) const {
  if (n_ % M != 0) throw HopfError("scalars/bad-lower", "target conductor must divide");
  if (M == n_) return *this;
  long phi_m = euler_phi(M);
  long phi_n = euler_phi(n_);
  // Columns: lifts of the power basis of Q(zeta_M); solve over Q by
  // Gaussian elimination on the augmented matrix.
  std::vector<std::vector<Rat>> aug(static_cast<size_t>(phi_n),
                                    std::vector<Rat>(static_cast<size_t>(phi_m) + 1, Rat(0)));
  for (long j = 0; j < phi_m; ++j) {
    Cyc basis = Cyc::zeta(M, j).lifted(n_);
    for (long r = 0; r < phi_n; ++r) aug[r][j] = basis.c_[r];
  }
  for (long r = 0; r < phi_n; ++r) aug[r][phi_m] = c_[r];

  size_t rows = aug.size(), cols = static_cast<size_t>(phi_m);
  std::vector<long> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pr = row;
    while (pr < rows && aug[pr][col] == 0) pr++;
    if (pr == rows) {
      pivot_col_of_row.push_back(-1);
      continue;
    }
    std::swap(aug[pr], aug[row]);
    Rat inv = 1 / aug[row][col];
    for (size_t j = col; j <= cols; ++j) aug[row][j] *= inv;
    for (size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == row || aug[r2][col] == 0) continue;
      Rat f = aug[r2][col];
      for (size_t j = col; j <= cols; ++j) aug[r2][j] -= f * aug[row][j];
    }
    pivot_col_of_row.push_back(static_cast<long>(col));
    row++;
  }
  // Consistency: rows below the pivots must have zero rhs.
  for (size_t r2 = row; r2 < rows; ++r2)
    if (aug[r2][cols] != 0) return std::nullopt;
  std::vector<Rat> solution(cols, Rat(0));
  size_t rr = 0;
  for (size_t col = 0; col < cols; ++col) {
    if (rr < pivot_col_of_row.size() && pivot_col_of_row[rr] == static_cast<long>(col)) {
      solution[col] = aug[rr][cols];
      rr++;
    }
  }
  // The basis lifts are linearly independent, so the solve is exact when
  // consistent; verify anyway to guard against index slips.
  Cyc candidate(M, std::move(solution));
  if (!(candidate.lifted(n_) == *this)) return std::nullopt;
  return candidate;
}

Cyc Cyc::minimized() const {
  for (long d = 1; d < n_; ++d) {
    if (n_ % d != 0) continue;
    if (auto low = lowered(d)) return *low;
  }
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  long m = lcm_long(n_, o.n_);
  if (n_ != m) *this = lifted(m);
  if (o.n_ != m) {
    Cyc ol = o.lifted(m);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += ol.c_[i];
  } else {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  *this += -o;
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  long m = lcm_long(n_, o.n_);
  Cyc a = (n_ == m) ? *this : lifted(m);
  Cyc b = (o.n_ == m) ? o : o.lifted(m);
  if (a.is_zero() || b.is_zero()) {
    *this = Cyc(m, std::vector<Rat>(static_cast<size_t>(euler_phi(m)), Rat(0)));
    return *this;
  }
  auto prod = poly_mul(a.c_, b.c_);
  *this = Cyc(m, poly_mod(std::move(prod), cyclotomic_polynomial(m)));
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw HopfError("scalars/division-by-zero", "inverse of zero");
  if (is_rational()) return Cyc(n_, [&] {
    std::vector<Rat> v(c_.size(), Rat(0));
    v[0] = 1 / c_[0];
    return v;
  }());
  // Extended Euclid in Q[x] for gcd(a, Phi_N) = 1: find u with
  // u*a + v*Phi = 1; then u mod Phi is the inverse.
  const auto& phi_int = cyclotomic_polynomial(n_);
  std::vector<Rat> r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  std::vector<Rat> r1 = c_;
  r1.resize(poly_degree(r1));
  std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};
  while (!poly_is_zero(r1)) {
    // divide r0 by r1
    size_t d1 = poly_degree(r1);
    std::vector<Rat> rem = r0;
    std::vector<Rat> q(std::max<size_t>(poly_degree(rem), d1) + 1, Rat(0));
    while (poly_degree(rem) >= d1 && !poly_is_zero(rem)) {
      size_t dr = poly_degree(rem);
      Rat f = rem[dr - 1] / r1[d1 - 1];
      size_t shift = dr - d1;
      q[shift] += f;
      for (size_t i = 0; i < d1; ++i) rem[shift + i] -= f * r1[i];
      rem.resize(poly_degree(rem));
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    std::vector<Rat> qs = poly_mul(q, s1);
    std::vector<Rat> s2(std::max(s0.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd, a nonzero constant (Phi_N is irreducible).
  size_t d0 = poly_degree(r0);
  if (d0 != 1) throw HopfError("scalars/internal", "cyclotomic gcd not constant");
  Rat scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  s0.resize(static_cast<size_t>(euler_phi(n_)), Rat(0));
  Cyc out(n_, poly_mod(std::move(s0), phi_int));
  return out;
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  long m = lcm_long(n_, o.n_);
  return lifted(m).c_ == o.lifted(m).c_;
}

int Cyc::compare(const Cyc& a, const Cyc& b) {
  long m = lcm_long(a.n_, b.n_);
  Cyc al = a.lifted(m), bl = b.lifted(m);
  for (size_t i = 0; i < al.c_.size(); ++i) {
    int c = cmp(al.c_[i], bl.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyc::to_string() const {
  if (is_rational()) return rat_to_string(c_[0]);
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rat& coeff = c_[k];
    if (coeff == 0) continue;
    Rat abs_coeff = coeff < 0 ? Rat(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out << "-";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << rat_to_string(abs_coeff);
      continue;
    }
    if (abs_coeff != 1) out << rat_to_string(abs_coeff) << "*";
    out << "z" << n_;
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

struct ScalarParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) pos++;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool consume(char c) {
    if (peek_is(c)) {
      pos++;
      return true;
    }
    return false;
  }
  std::optional<long> parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos == start) return std::nullopt;
    try {
      return std::stol(std::string(s.substr(start, pos - start)));
    } catch (...) {
      return std::nullopt;
    }
  }
  std::optional<Rat> parse_unsigned_rational() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos == start) return std::nullopt;
    if (pos < s.size() && s[pos] == '/') {
      pos++;
      size_t den_start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
      if (pos == den_start) return std::nullopt;
    }
    return rat_from_string(s.substr(start, pos - start));
  }
  // term := rational | [rational "*"] zeta ; zeta := "z" INT ["^" INT]
  std::optional<Cyc> parse_term() {
    skip_ws();
    std::optional<Rat> coeff;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = parse_unsigned_rational();
      if (!coeff) return std::nullopt;
      skip_ws();
      if (!consume('*')) return Cyc(*coeff);
    }
    skip_ws();
    if (pos >= s.size() || s[pos] != 'z') return std::nullopt;
    pos++;
    auto n = parse_uint();
    if (!n || *n <= 0) return std::nullopt;
    long k = 1;
    if (consume('^')) {
      auto e = parse_uint();
      if (!e) return std::nullopt;
      k = *e;
    }
    Cyc z = Cyc::zeta(*n, k);
    if (coeff) z *= Cyc(*coeff);
    return z;
  }
};

}  // namespace

std::optional<Cyc> Cyc::parse(std::string_view s) {
  ScalarParser p{s};
  if (p.eof()) return std::nullopt;
  bool negate = false;
  if (p.consume('-'))
    negate = true;
  else
    p.consume('+');
  auto term = p.parse_term();
  if (!term) return std::nullopt;
  Cyc acc = negate ? -*term : *term;
  while (!p.eof()) {
    bool minus;
    if (p.consume('+'))
      minus = false;
    else if (p.consume('-'))
      minus = true;
    else
      return std::nullopt;
    auto t = p.parse_term();
    if (!t) return std::nullopt;
    acc += minus ? -*t : *t;
  }
  return acc;
}

Classification classify(const Cyc& x) {
  Classification c;
  c.rational = x.is_rational();
  c.rational_integer = x.is_rational_integer();
  c.algebraic_integer = x.is_algebraic_integer();
  return c;
}

bool in_integer_ring(const Cyc& x, long n) {
  if (n < 1) return false;
  long m = lcm_long(x.conductor(), n);
  auto low = x.lifted(m).lowered(n);
  return low && low->is_algebraic_integer();
}

}  // namespace hopfinv
