#include "hopfinv/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hopfinv/error.hpp"

namespace hopfinv {

int FinGroup::order_of(int g) const {
  int k = 1, x = g;
  while (x != identity) {
    x = mul(x, g);
    k++;
    if (k > n) throw HopfError("groups/internal", "order computation runaway");
  }
  return k;
}

long FinGroup::exponent() const {
  long e = 1;
  for (int g = 0; g < n; ++g) e = std::lcm(e, static_cast<long>(order_of(g)));
  return e;
}

int FinGroup::conjugacy_class_count() const {
  std::vector<int> cls(n, -1);
  int count = 0;
  for (int g = 0; g < n; ++g) {
    if (cls[g] != -1) continue;
    for (int x = 0; x < n; ++x) cls[mul(mul(x, g), invof(x))] = count;
    count++;
  }
  return count;
}

FinGroup FinGroup::from_table(std::string name, int n, std::vector<int> table,
                              std::vector<std::string> labels) {
  if (n <= 0) throw HopfError("groups/bad-table", "order must be positive");
  if (static_cast<int>(table.size()) != n * n)
    throw HopfError("groups/bad-table", "table must have order^2 entries");
  for (int v : table)
    if (v < 0 || v >= n) throw HopfError("groups/bad-table", "table entry out of range");
  // Latin square: each row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int b = 0; b < n; ++b) {
      if (seen_row[table[a * n + b]])
        throw HopfError("groups/bad-table", "row " + std::to_string(a + 1) + " repeats a value");
      seen_row[table[a * n + b]] = true;
      if (seen_col[table[b * n + a]])
        throw HopfError("groups/bad-table", "column " + std::to_string(a + 1) + " repeats a value");
      seen_col[table[b * n + a]] = true;
    }
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e * n + a] == a && table[a * n + e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw HopfError("groups/bad-table", "no two-sided identity");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a * n + b] == identity && table[b * n + a] == identity) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw HopfError("groups/bad-table", "element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
          throw HopfError("groups/bad-table",
                          "associativity fails at (" + std::to_string(a + 1) + "," +
                              std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
  FinGroup g;
  g.name = std::move(name);
  g.n = n;
  g.table = std::move(table);
  g.identity = identity;
  g.inv = std::move(inv);
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels.size()) != n)
    throw HopfError("groups/bad-table", "label count mismatch");
  g.labels = std::move(labels);
  return g;
}

namespace {

FinGroup cyclic_group(int n) {
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) {
    if (k == 0)
      labels.push_back("e");
    else if (k == 1)
      labels.push_back("g");
    else
      labels.push_back("g" + std::to_string(k));
  }
  return FinGroup::from_table("C" + std::to_string(n), n, std::move(table), std::move(labels));
}

// Dihedral group of order 2m: r^a s^b with a in [0,m), b in {0,1};
// index a + m*b.
FinGroup dihedral_group(int order) {
  int m = order / 2;
  std::vector<int> table(order * order);
  auto idx = [m](int a, int b) { return a + m * b; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < 2; ++d) {
          int aa = b == 0 ? (a + c) % m : ((a - c) % m + m) % m;
          table[idx(a, b) * order + idx(c, d)] = idx(aa, (b + d) % 2);
        }
  std::vector<std::string> labels(order);
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < m; ++a) {
      std::string l;
      if (a == 1)
        l = "r";
      else if (a > 1)
        l = "r" + std::to_string(a);
      if (b == 1) l += "s";
      if (l.empty()) l = "e";
      labels[a + m * b] = l;
    }
  return FinGroup::from_table("D" + std::to_string(order), order, std::move(table),
                              std::move(labels));
}

// Quaternion group: elements 1,-1,i,-i,j,-j,k,-k in that order.
FinGroup quaternion_group() {
  // basis products: u*v -> (sign, basis) with basis codes 0=1,1=i,2=j,3=k
  static const int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int basis_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  // basis_sign[u][v] is the sign of u*v: i*i=-1, i*j=+k, i*k=-j,
  // j*i=-k, j*j=-1, j*k=+i, k*i=+j, k*j=-i, k*k=-1.
  auto idx = [](int sign, int basis) { return 2 * basis + (sign < 0 ? 1 : 0); };
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = x / 2, sx = x % 2 ? -1 : 1;
      int by = y / 2, sy = y % 2 ? -1 : 1;
      int b = basis_mul[bx][by];
      int s = basis_sign[bx][by] * sx * sy;
      table[x * 8 + y] = idx(s, b);
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FinGroup::from_table("Q8", 8, std::move(table), std::move(labels));
}

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::string cycle_label(const std::vector<int>& p) {
  int m = static_cast<int>(p.size());
  std::vector<bool> seen(m, false);
  std::string out;
  for (int i = 0; i < m; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

FinGroup symmetric_group(int m) {
  auto perms = all_permutations(m);
  int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of[perms[i]] = i;
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(m);
      for (int i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      table[a * n + b] = index_of.at(c);
    }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_label(p));
  return FinGroup::from_table("S" + std::to_string(m), n, std::move(table), std::move(labels));
}

}  // namespace

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  int n = a.n * b.n;
  std::vector<int> table(static_cast<size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> labels;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < b.n; ++y) labels.push_back("(" + a.labels[x] + "," + b.labels[y] + ")");
  return FinGroup::from_table(a.name + "x" + b.name, n, std::move(table), std::move(labels));
}

std::optional<FinGroup> named_group(const std::string& name) {
  // split on 'x' for direct products
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::optional<FinGroup> acc;
  for (const auto& part : parts) {
    std::optional<FinGroup> g;
    if (part.size() >= 2 && part[0] == 'C') {
      bool digits = std::all_of(part.begin() + 1, part.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (digits) {
        int k = std::stoi(part.substr(1));
        if (k >= 1 && k <= 256) g = cyclic_group(k);
      }
    } else if (part == "S3") {
      g = symmetric_group(3);
    } else if (part == "S4") {
      g = symmetric_group(4);
    } else if (part == "Q8") {
      g = quaternion_group();
    } else if (part.size() >= 2 && part[0] == 'D') {
      bool digits = std::all_of(part.begin() + 1, part.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (digits) {
        int k = std::stoi(part.substr(1));
        if (k >= 4 && k <= 64 && k % 2 == 0) g = dihedral_group(k);
      }
    }
    if (!g) return std::nullopt;
    acc = acc ? direct_product(*acc, *g) : *g;
  }
  if (acc) {
    // keep the user's spelling: "C2xC2" etc.
    acc->name = name;
  }
  return acc;
}

const CharTable::Row* CharTable::find(const std::string& name) const {
  for (const auto& r : rows)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

void verify_char_table(const FinGroup& g, const CharTable& t) {
  long dim_sq = 0;
  for (const auto& r : t.rows) dim_sq += static_cast<long>(r.dim) * r.dim;
  if (dim_sq != g.n)
    throw HopfError("groups/char-table", "squared dimensions do not sum to the order");
  if (static_cast<int>(t.rows.size()) != g.conjugacy_class_count())
    throw HopfError("groups/char-table", "row count differs from class count");
  for (const auto& r : t.rows) {
    if (static_cast<int>(r.values.size()) != g.n)
      throw HopfError("groups/char-table", "value count differs from order");
    if (!(r.values[g.identity] == Cyc(r.dim)))
      throw HopfError("groups/char-table", "character value at identity differs from dimension");
    for (int x = 0; x < g.n; ++x)
      for (int h = 0; h < g.n; ++h)
        if (!(r.values[g.mul(g.mul(x, h), g.invof(x))] == r.values[h]))
          throw HopfError("groups/char-table", "character not constant on a class");
  }
  for (const auto& r : t.rows[0].values)
    if (!(r == Cyc(1))) throw HopfError("groups/char-table", "first row is not trivial");
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows.size(); ++j) {
      Cyc s;
      for (int h = 0; h < g.n; ++h) s += t.rows[i].values[h] * t.rows[j].values[g.invof(h)];
      Cyc expect = (i == j) ? Cyc(g.n) : Cyc(0);
      if (!(s == expect)) throw HopfError("groups/char-table", "orthogonality fails");
    }
}

std::optional<CharTable> char_table_for_name(const std::string& name, const FinGroup& g);

std::optional<CharTable> char_table_product(const std::string& name, const FinGroup& g) {
  auto split = name.find('x');
  if (split == std::string::npos) return std::nullopt;
  std::string left = name.substr(0, split), right = name.substr(split + 1);
  auto ga = named_group(left);
  auto gb = named_group(right);
  if (!ga || !gb || ga->n * gb->n != g.n) return std::nullopt;
  auto ta = char_table_for_name(left, *ga);
  auto tb = char_table_for_name(right, *gb);
  if (!ta || !tb) return std::nullopt;
  CharTable t;
  t.conductor = lcm_long(ta->conductor, tb->conductor);
  for (const auto& ra : ta->rows)
    for (const auto& rb : tb->rows) {
      CharTable::Row r;
      r.name = ra.name + "." + rb.name;
      r.dim = ra.dim * rb.dim;
      for (int x = 0; x < ga->n; ++x)
        for (int y = 0; y < gb->n; ++y) r.values.push_back(ra.values[x] * rb.values[y]);
      t.rows.push_back(std::move(r));
    }
  return t;
}

std::optional<CharTable> char_table_for_name(const std::string& name, const FinGroup& g) {
  if (name.find('x') != std::string::npos) return char_table_product(name, g);
  if (name.size() >= 2 && name[0] == 'C') {
    int n = g.n;
    CharTable t;
    t.conductor = n;
    for (int j = 0; j < n; ++j) {
      CharTable::Row r;
      r.name = j == 0 ? "triv" : "chi" + std::to_string(j);
      r.dim = 1;
      for (int k = 0; k < n; ++k) r.values.push_back(Cyc::zeta(n, j * k));
      t.rows.push_back(std::move(r));
    }
    return t;
  }
  if (name == "S3" || name == "S4") {
    int m = name == "S3" ? 3 : 4;
    auto perms = all_permutations(m);
    auto fix = [](const std::vector<int>& p) {
      int f = 0;
      for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i)) f++;
      return f;
    };
    auto sgn = [](const std::vector<int>& p) {
      int s = 1;
      std::vector<bool> seen(p.size(), false);
      for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
          seen[j] = true;
          j = p[j];
          len++;
        }
        if (len % 2 == 0) s = -s;
      }
      return s;
    };
    CharTable t;
    t.conductor = 1;
    CharTable::Row triv{"triv", 1, {}}, sign_row{"sgn", 1, {}}, std_row{"std", m - 1, {}};
    for (const auto& p : perms) {
      triv.values.push_back(Cyc(1));
      sign_row.values.push_back(Cyc(sgn(p)));
      std_row.values.push_back(Cyc(fix(p) - 1));
    }
    t.rows.push_back(std::move(triv));
    t.rows.push_back(std::move(sign_row));
    if (m == 4) {
      // two-dimensional character pulled back from the quotient by the
      // Klein four-subgroup: value depends on cycle type.
      CharTable::Row two{"std2", 2, {}};
      for (const auto& p : perms) {
        std::vector<int> lens;
        std::vector<bool> seen(p.size(), false);
        for (size_t i = 0; i < p.size(); ++i) {
          if (seen[i]) continue;
          size_t j = i, len = 0;
          while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            len++;
          }
          lens.push_back(static_cast<int>(len));
        }
        std::sort(lens.begin(), lens.end());
        int v;
        if (lens == std::vector<int>{1, 1, 1, 1})
          v = 2;
        else if (lens == std::vector<int>{1, 1, 2})
          v = 0;
        else if (lens == std::vector<int>{2, 2})
          v = 2;
        else if (lens == std::vector<int>{1, 3})
          v = -1;
        else
          v = 0;  // 4-cycle
        two.values.push_back(Cyc(v));
      }
      t.rows.push_back(std::move(two));
      CharTable::Row std_sgn{"std.sgn", 3, {}};
      for (size_t i = 0; i < perms.size(); ++i)
        std_sgn.values.push_back(t.rows[1].values[i] * std_row.values[i]);
      t.rows.push_back(std::move(std_row));
      t.rows.push_back(std::move(std_sgn));
    } else {
      t.rows.push_back(std::move(std_row));
    }
    return t;
  }
  if (name == "D8") {
    int m = 4;
    CharTable t;
    t.conductor = 1;
    const int two_vals[4] = {2, 0, -2, 0};
    CharTable::Row rows[5];
    rows[0] = {"triv", 1, {}};
    rows[1] = {"chi_r", 1, {}};
    rows[2] = {"chi_s", 1, {}};
    rows[3] = {"chi_rs", 1, {}};
    rows[4] = {"two", 2, {}};
    for (int idx = 0; idx < 8; ++idx) {
      int a = idx % m, b = idx / m;
      rows[0].values.push_back(Cyc(1));
      rows[1].values.push_back(Cyc(a % 2 ? -1 : 1));
      rows[2].values.push_back(Cyc(b % 2 ? -1 : 1));
      rows[3].values.push_back(Cyc((a + b) % 2 ? -1 : 1));
      rows[4].values.push_back(Cyc(b == 0 ? two_vals[a] : 0));
    }
    for (auto& r : rows) t.rows.push_back(std::move(r));
    return t;
  }
  if (name == "Q8") {
    CharTable t;
    t.conductor = 1;
    CharTable::Row rows[5];
    rows[0] = {"triv", 1, {}};
    rows[1] = {"chi_i", 1, {}};
    rows[2] = {"chi_j", 1, {}};
    rows[3] = {"chi_k", 1, {}};
    rows[4] = {"two", 2, {}};
    // element order: 1,-1,i,-i,j,-j,k,-k
    const int vi[8] = {1, 1, 1, 1, -1, -1, -1, -1};   // kernel {1,-1,i,-i}
    const int vj[8] = {1, 1, -1, -1, 1, 1, -1, -1};   // kernel {1,-1,j,-j}
    const int vk[8] = {1, 1, -1, -1, -1, -1, 1, 1};   // kernel {1,-1,k,-k}
    const int v2[8] = {2, -2, 0, 0, 0, 0, 0, 0};
    for (int idx = 0; idx < 8; ++idx) {
      rows[0].values.push_back(Cyc(1));
      rows[1].values.push_back(Cyc(vi[idx]));
      rows[2].values.push_back(Cyc(vj[idx]));
      rows[3].values.push_back(Cyc(vk[idx]));
      rows[4].values.push_back(Cyc(v2[idx]));
    }
    for (auto& r : rows) t.rows.push_back(std::move(r));
    return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CharTable> character_table(const FinGroup& g) {
  auto t = char_table_for_name(g.name, g);
  if (!t) return std::nullopt;
  verify_char_table(g, *t);
  return t;
}

std::vector<int> generating_set(const FinGroup& g) {
  std::vector<int> gens;
  std::vector<bool> in_closure(g.n, false);
  in_closure[g.identity] = true;
  int closure_size = 1;
  while (closure_size < g.n) {
    int pick = -1;
    for (int x = 0; x < g.n; ++x)
      if (!in_closure[x]) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    // close under multiplication
    std::vector<int> members;
    for (int x = 0; x < g.n; ++x)
      if (in_closure[x]) members.push_back(x);
    members.push_back(pick);
    in_closure[pick] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      size_t cur = members.size();
      for (size_t i = 0; i < cur; ++i)
        for (size_t j = 0; j < cur; ++j) {
          int p = g.mul(members[i], members[j]);
          if (!in_closure[p]) {
            in_closure[p] = true;
            members.push_back(p);
            grew = true;
          }
        }
    }
    closure_size = static_cast<int>(members.size());
  }
  return gens;
}

namespace {

// Extends generator images to a full map by covering the group with
// words in the generators; empty when the extension is inconsistent.
// The result is only guaranteed to be a homomorphism after the caller
// verifies products.
std::optional<std::vector<int>> extend_hom(const FinGroup& a, const FinGroup& b,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& images) {
  std::vector<int> f(a.n, -1);
  f[a.identity] = b.identity;
  std::vector<int> frontier = {a.identity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = a.mul(x, gens[gi]);
        int fy = b.mul(f[x], images[gi]);
        if (f[y] == -1) {
          f[y] = fy;
          next.push_back(y);
        } else if (f[y] != fy) {
          return std::nullopt;
        }
      }
    }
    frontier = std::move(next);
  }
  for (int x = 0; x < a.n; ++x)
    if (f[x] == -1) return std::nullopt;
  return f;
}

bool is_full_hom(const FinGroup& a, const FinGroup& b, const std::vector<int>& f) {
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return true;
}

void for_each_hom(const FinGroup& a, const FinGroup& b,
                  const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> gens = generating_set(a);
  if (gens.empty()) {
    std::vector<int> f(a.n, b.identity);
    visit(f);
    return;
  }
  std::vector<int> gen_order(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) gen_order[i] = a.order_of(gens[i]);
  std::vector<int> images(gens.size(), 0);
  std::vector<int> choice(gens.size(), 0);
  // image order must divide generator order
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < b.n; ++y)
      if (gen_order[i] % b.order_of(y) == 0) candidates[i].push_back(y);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == gens.size()) {
      auto f = extend_hom(a, b, gens, images);
      if (f && is_full_hom(a, b, *f)) visit(*f);
      return;
    }
    for (int y : candidates[i]) {
      images[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const FinGroup& g) {
  std::vector<std::vector<int>> out;
  for_each_hom(g, g, [&](const std::vector<int>& f) {
    std::vector<bool> seen(g.n, false);
    for (int v : f) {
      if (seen[v]) return;
      seen[v] = true;
    }
    out.push_back(f);
  });
  return out;
}

long count_homs_tables(const FinGroup& a, const FinGroup& b) {
  long count = 0;
  for_each_hom(a, b, [&](const std::vector<int>&) { count++; });
  return count;
}

FpGroup parse_presentation(std::string_view text) {
  struct Pos {
    size_t i = 0;
    int line = 1, col = 1;
  } p;
  auto peek = [&]() -> int { return p.i < text.size() ? text[p.i] : -1; };
  auto advance = [&]() {
    if (p.i < text.size()) {
      if (text[p.i] == '\n') {
        p.line++;
        p.col = 1;
      } else {
        p.col++;
      }
      p.i++;
    }
  };
  auto skip_ws = [&]() {
    while (p.i < text.size() && std::isspace(static_cast<unsigned char>(text[p.i]))) advance();
  };
  auto fail = [&](const std::string& msg) -> HopfError {
    return HopfError("groups/parse", "line " + std::to_string(p.line) + " col " +
                                         std::to_string(p.col) + ": " + msg);
  };
  auto expect_word = [&](const std::string& w) {
    skip_ws();
    for (char c : w) {
      if (peek() != c) throw fail("expected '" + w + "'");
      advance();
    }
  };
  auto parse_ident = [&]() -> std::string {
    skip_ws();
    if (peek() < 0 || !(std::isalpha(peek()) || peek() == '_')) throw fail("expected identifier");
    std::string out;
    while (peek() >= 0 && (std::isalnum(peek()) || peek() == '_')) {
      out += static_cast<char>(peek());
      advance();
    }
    return out;
  };
  auto parse_uint = [&]() -> long {
    skip_ws();
    if (peek() < 0 || !std::isdigit(peek())) throw fail("expected integer");
    long v = 0;
    while (peek() >= 0 && std::isdigit(peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) throw fail("repetition count too large");
      advance();
    }
    return v;
  };

  FpGroup out;
  expect_word("gens:");
  while (true) {
    std::string name = parse_ident();
    for (const auto& existing : out.gen_names)
      if (existing == name) throw fail("duplicate generator '" + name + "'");
    out.gen_names.push_back(name);
    skip_ws();
    if (peek() == ',') {
      advance();
      continue;
    }
    break;
  }
  skip_ws();
  if (peek() != ';') throw fail("expected ';' after generator list");
  advance();
  skip_ws();
  if (p.i >= text.size()) return out;
  expect_word("rels:");
  skip_ws();
  if (peek() == ';') {
    advance();
    skip_ws();
    if (p.i != text.size()) throw fail("trailing input after presentation");
    return out;
  }
  while (true) {
    std::vector<int> word;
    while (true) {
      skip_ws();
      if (peek() < 0) throw fail("unterminated relator list");
      if (peek() == ',' || peek() == ';') break;
      std::string name = parse_ident();
      int gi = -1;
      for (size_t k = 0; k < out.gen_names.size(); ++k)
        if (out.gen_names[k] == name) gi = static_cast<int>(k);
      if (gi < 0) throw fail("unknown generator '" + name + "'");
      bool inverted = false;
      long reps = 1;
      while (true) {
        if (peek() == '\'') {
          inverted = !inverted;
          advance();
        } else if (peek() == '^') {
          advance();
          reps = parse_uint();
        } else {
          break;
        }
      }
      int letter = inverted ? -(gi + 1) : (gi + 1);
      for (long r = 0; r < reps; ++r) word.push_back(letter);
    }
    if (word.empty()) throw fail("empty relator");
    out.relators.push_back(std::move(word));
    if (peek() == ',') {
      advance();
      continue;
    }
    advance();  // ';'
    break;
  }
  skip_ws();
  if (p.i != text.size()) throw fail("trailing input after presentation");
  return out;
}

std::string presentation_to_string(const FpGroup& p) {
  std::ostringstream out;
  out << "gens: ";
  for (size_t i = 0; i < p.gen_names.size(); ++i) {
    if (i) out << ",";
    out << p.gen_names[i];
  }
  out << "; rels:";
  if (p.relators.empty()) {
    out << " ;";
    return out.str();
  }
  for (size_t r = 0; r < p.relators.size(); ++r) {
    out << (r ? ", " : " ");
    for (size_t k = 0; k < p.relators[r].size(); ++k) {
      if (k) out << " ";
      int letter = p.relators[r][k];
      out << p.gen_names[std::abs(letter) - 1];
      if (letter < 0) out << "'";
    }
  }
  out << ";";
  return out.str();
}

long count_homs(const FpGroup& p, const FinGroup& g) {
  int r = p.rank();
  double total = std::pow(static_cast<double>(g.n), r);
  if (total > 5e7)
    throw HopfError("groups/hom-budget", "generator image space too large for brute force");
  std::vector<int> images(r, 0);
  long count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      for (const auto& rel : p.relators) {
        int acc = g.identity;
        for (int letter : rel) {
          int img = images[std::abs(letter) - 1];
          acc = g.mul(acc, letter > 0 ? img : g.invof(img));
        }
        if (acc != g.identity) return;
      }
      count++;
      return;
    }
    for (int y = 0; y < g.n; ++y) {
      images[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

namespace {

std::vector<int> close_subset(const FinGroup& g, std::vector<int> seed) {
  std::vector<bool> in(g.n, false);
  for (int x : seed) in[x] = true;
  if (!in[g.identity]) {
    in[g.identity] = true;
    seed.push_back(g.identity);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    size_t cur = seed.size();
    for (size_t i = 0; i < cur; ++i)
      for (size_t j = 0; j < cur; ++j) {
        int pr = g.mul(seed[i], seed[j]);
        if (!in[pr]) {
          in[pr] = true;
          seed.push_back(pr);
          grew = true;
        }
      }
  }
  std::sort(seed.begin(), seed.end());
  return seed;
}

}  // namespace

std::vector<std::vector<int>> all_subgroups(const FinGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> worklist;
  std::vector<int> trivial = {g.identity};
  found.insert(trivial);
  worklist.push_back(trivial);
  while (!worklist.empty()) {
    std::vector<int> h = worklist.back();
    worklist.pop_back();
    std::vector<bool> in(g.n, false);
    for (int x : h) in[x] = true;
    for (int y = 0; y < g.n; ++y) {
      if (in[y]) continue;
      std::vector<int> seed = h;
      seed.push_back(y);
      auto closed = close_subset(g, std::move(seed));
      if (found.insert(closed).second) worklist.push_back(closed);
    }
  }
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

bool is_normal(const FinGroup& g, const std::vector<int>& sub) {
  std::vector<bool> in(g.n, false);
  for (int x : sub) in[x] = true;
  for (int x = 0; x < g.n; ++x)
    for (int h : sub)
      if (!in[g.mul(g.mul(x, h), g.invof(x))]) return false;
  return true;
}

FinGroup quotient_group(const FinGroup& g, const std::vector<int>& normal_sub) {
  std::vector<int> coset_rep(g.n, -1);  // element -> canonical rep of its coset
  std::vector<int> reps;
  for (int x = 0; x < g.n; ++x) {
    if (coset_rep[x] != -1) continue;
    // coset x*N; canonical rep is its smallest element
    std::vector<int> coset;
    for (int h : normal_sub) coset.push_back(g.mul(x, h));
    int rep = *std::min_element(coset.begin(), coset.end());
    for (int y : coset) coset_rep[y] = rep;
  }
  std::map<int, int> index_of;
  for (int x = 0; x < g.n; ++x)
    if (coset_rep[x] == x && !index_of.count(x)) {
      index_of[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i * q + j] = index_of.at(coset_rep[g.mul(reps[i], reps[j])]);
  std::vector<std::string> labels;
  for (int r : reps) labels.push_back(g.labels[r] + "N");
  return FinGroup::from_table(g.name + "/N", q, std::move(table), std::move(labels));
}

long count_injective_homs(const FinGroup& a, const FinGroup& b) {
  if (a.n > b.n) return 0;
  long total = count_homs_tables(a, b);
  for (const auto& sub : all_subgroups(a)) {
    if (sub.size() == 1 || !is_normal(a, sub)) continue;
    if (static_cast<int>(sub.size()) == a.n) {
      // quotient is trivial; it embeds exactly once
      total -= 1;
      continue;
    }
    total -= count_injective_homs(quotient_group(a, sub), b);
  }
  return total;
}

bool isomorphic(const FinGroup& a, const FinGroup& b) {
  if (a.n != b.n) return false;
  return count_injective_homs(a, b) > 0;
}

}  // namespace hopfinv
