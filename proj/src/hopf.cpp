#include "hopfinv/hopf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "hopfinv/error.hpp"

namespace hopfinv {

namespace {

long scalar_content_conductor(const Cyc& c) { return c.minimized().conductor(); }

std::string ix(int i) { return std::to_string(i + 1); }

using PairMap = std::map<std::pair<int, int>, Cyc>;
using TripleMap = std::map<std::array<int, 3>, Cyc>;

void add_term(PairMap& m, int i, int j, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = m.find({i, j});
  if (it == m.end()) {
    m.emplace(std::make_pair(i, j), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void add_term(TripleMap& m, std::array<int, 3> k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

bool maps_equal(const PairMap& a, const PairMap& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || !(it->second == v)) return false;
  }
  return true;
}

bool maps_equal(const TripleMap& a, const TripleMap& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || !(it->second == v)) return false;
  }
  return true;
}

PairMap comult_of_basis(const HopfStructure& h, int i) {
  PairMap out;
  for (const auto& [j, k, c] : h.comult[i]) add_term(out, j, k, c);
  return out;
}

PairMap pair_product(const HopfStructure& h, const PairMap& a, const PairMap& b) {
  PairMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Cyc c = ca * cb;
      for (const auto& [x, cx] : h.mult[ka.first * h.dim + kb.first])
        for (const auto& [y, cy] : h.mult[ka.second * h.dim + kb.second])
          add_term(out, x, y, c * cx * cy);
    }
  return out;
}

TripleMap triple_product(const HopfStructure& h, const TripleMap& a, const TripleMap& b) {
  TripleMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Cyc c = ca * cb;
      for (const auto& [x, cx] : h.mult[ka[0] * h.dim + kb[0]]) {
        Cyc cx2 = c * cx;
        for (const auto& [y, cy] : h.mult[ka[1] * h.dim + kb[1]]) {
          Cyc cy2 = cx2 * cy;
          for (const auto& [z, cz] : h.mult[ka[2] * h.dim + kb[2]])
            add_term(out, {x, y, z}, cy2 * cz);
        }
      }
    }
  return out;
}

}  // namespace

void HopfStructure::finalize(std::optional<long> declared_conductor) {
  if (dim <= 0) throw HopfError("hopf/bad-structure", "dimension must be positive");
  size_t d = static_cast<size_t>(dim);
  if (mult.size() != d * d) throw HopfError("hopf/bad-structure", "mult table size mismatch");
  if (unit.size() != d) throw HopfError("hopf/bad-structure", "unit vector size mismatch");
  if (comult.size() != d) throw HopfError("hopf/bad-structure", "comult table size mismatch");
  if (counit.size() != d) throw HopfError("hopf/bad-structure", "counit vector size mismatch");
  if (antipode.rows != d || antipode.cols != d)
    throw HopfError("hopf/bad-structure", "antipode matrix size mismatch");
  auto check_index = [&](int k) {
    if (k < 0 || k >= dim) throw HopfError("hopf/bad-structure", "basis index out of range");
  };
  long content = 1;
  auto see = [&](const Cyc& c) { content = lcm_long(content, scalar_content_conductor(c)); };
  for (auto& cell : mult) {
    std::vector<std::pair<int, Cyc>> pruned;
    for (auto& [k, c] : cell) {
      check_index(k);
      if (!c.is_zero()) {
        see(c);
        pruned.emplace_back(k, c);
      }
    }
    cell = std::move(pruned);
  }
  for (auto& cell : comult) {
    std::vector<std::tuple<int, int, Cyc>> pruned;
    for (auto& [j, k, c] : cell) {
      check_index(j);
      check_index(k);
      if (!c.is_zero()) {
        see(c);
        pruned.emplace_back(j, k, c);
      }
    }
    cell = std::move(pruned);
  }
  for (const auto& c : unit) see(c);
  for (const auto& c : counit) see(c);
  for (const auto& c : antipode.a) see(c);
  {
    std::vector<PairTerm> pruned;
    for (auto& t : rmatrix) {
      check_index(t.i);
      check_index(t.j);
      if (!t.c.is_zero()) {
        see(t.c);
        pruned.push_back(t);
      }
    }
    rmatrix = std::move(pruned);
    has_rmatrix = has_rmatrix || !rmatrix.empty();
  }
  if (declared_conductor) {
    if (*declared_conductor <= 0)
      throw HopfError("hopf/bad-structure", "declared conductor must be positive");
    if (*declared_conductor % content != 0)
      throw HopfError("hopf/conductor-mismatch",
                      "declared conductor " + std::to_string(*declared_conductor) +
                          " does not contain all scalars (need " + std::to_string(content) + ")");
    conductor = *declared_conductor;
  } else {
    conductor = content;
  }
  if (labels.empty())
    for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i + 1));
  if (labels.size() != d) throw HopfError("hopf/bad-structure", "label count mismatch");

  mult_by_out.assign(d, {});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (const auto& [k, c] : mult[i * dim + j]) mult_by_out[k].emplace_back(i, j, c);
  comult_by_pair.assign(d * d, {});
  for (int i = 0; i < dim; ++i)
    for (const auto& [j, k, c] : comult[i]) comult_by_pair[j * dim + k].emplace_back(i, c);
}

bool ValidationReport::all_pass() const {
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

std::vector<Cyc> basis_el(const HopfStructure& h, int i) {
  std::vector<Cyc> v(h.dim);
  v[i] = Cyc(1);
  return v;
}

std::vector<Cyc> mult_el(const HopfStructure& h, const std::vector<Cyc>& x,
                         const std::vector<Cyc>& y) {
  std::vector<Cyc> out(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < h.dim; ++j) {
      if (y[j].is_zero()) continue;
      Cyc c = x[i] * y[j];
      for (const auto& [k, ck] : h.mult[i * h.dim + j]) out[k] += c * ck;
    }
  }
  return out;
}

std::vector<Cyc> mult_dual(const HopfStructure& h, const std::vector<Cyc>& f,
                           const std::vector<Cyc>& g) {
  std::vector<Cyc> out(h.dim);
  for (int k = 0; k < h.dim; ++k) {
    for (const auto& [j, k2, c] : h.comult[k]) {
      if (f[j].is_zero() || g[k2].is_zero()) continue;
      out[k] += c * f[j] * g[k2];
    }
  }
  return out;
}

Cyc counit_el(const HopfStructure& h, const std::vector<Cyc>& x) {
  Cyc out;
  for (int i = 0; i < h.dim; ++i)
    if (!x[i].is_zero()) out += h.counit[i] * x[i];
  return out;
}

Cyc pair_el(const std::vector<Cyc>& f, const std::vector<Cyc>& x) {
  Cyc out;
  for (size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero() && !x[i].is_zero()) out += f[i] * x[i];
  return out;
}

std::vector<Cyc> antipode_el(const HopfStructure& h, const std::vector<Cyc>& x) {
  return h.antipode.apply(x);
}

std::vector<Cyc> antipode_dual(const HopfStructure& h, const std::vector<Cyc>& f) {
  return h.antipode.transposed().apply(f);
}

std::vector<std::tuple<int, int, Cyc>> comult_el(const HopfStructure& h,
                                                 const std::vector<Cyc>& x) {
  PairMap acc;
  for (int i = 0; i < h.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [j, k, c] : h.comult[i]) add_term(acc, j, k, x[i] * c);
  }
  std::vector<std::tuple<int, int, Cyc>> out;
  for (const auto& [key, c] : acc) out.emplace_back(key.first, key.second, c);
  return out;
}

Mat left_mult_matrix(const HopfStructure& h, const std::vector<Cyc>& x) {
  Mat m(h.dim, h.dim);
  for (int i = 0; i < h.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < h.dim; ++j)
      for (const auto& [k, c] : h.mult[i * h.dim + j]) m.at(k, j) += x[i] * c;
  }
  return m;
}

Mat right_mult_matrix(const HopfStructure& h, const std::vector<Cyc>& x) {
  Mat m(h.dim, h.dim);
  for (int j = 0; j < h.dim; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < h.dim; ++i)
      for (const auto& [k, c] : h.mult[i * h.dim + j]) m.at(k, i) += x[j] * c;
  }
  return m;
}

ValidationReport validate(const HopfStructure& h) {
  ValidationReport report;
  auto run = [&](const std::string& name, auto&& fn) {
    AxiomResult r;
    r.axiom = name;
    r.detail = fn();
    r.pass = r.detail.empty();
    report.axioms.push_back(std::move(r));
  };

  run("indexing", [&]() -> std::string {
    size_t d = static_cast<size_t>(h.dim);
    if (h.mult.size() != d * d || h.comult.size() != d || h.unit.size() != d ||
        h.counit.size() != d || h.antipode.rows != d || h.antipode.cols != d)
      return "table sizes inconsistent with dim";
    return "";
  });

  run("scalar-conductors", [&]() -> std::string {
    auto bad = [&](const Cyc& c) { return h.conductor % scalar_content_conductor(c) != 0; };
    for (const auto& cell : h.mult)
      for (const auto& [k, c] : cell) {
        (void)k;
        if (bad(c)) return "mult coefficient outside declared conductor";
      }
    for (const auto& cell : h.comult)
      for (const auto& [j, k, c] : cell) {
        (void)j;
        (void)k;
        if (bad(c)) return "comult coefficient outside declared conductor";
      }
    for (const auto& c : h.unit)
      if (bad(c)) return "unit coefficient outside declared conductor";
    for (const auto& c : h.counit)
      if (bad(c)) return "counit coefficient outside declared conductor";
    for (const auto& c : h.antipode.a)
      if (bad(c)) return "antipode coefficient outside declared conductor";
    for (const auto& t : h.rmatrix)
      if (bad(t.c)) return "rmatrix coefficient outside declared conductor";
    return "";
  });

  run("associativity", [&]() -> std::string {
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) {
        auto ij = mult_el(h, basis_el(h, i), basis_el(h, j));
        for (int k = 0; k < h.dim; ++k) {
          auto left = mult_el(h, ij, basis_el(h, k));
          auto right = mult_el(h, basis_el(h, i), mult_el(h, basis_el(h, j), basis_el(h, k)));
          if (left != right) return "at (" + ix(i) + "," + ix(j) + "," + ix(k) + ")";
        }
      }
    return "";
  });

  run("unit", [&]() -> std::string {
    for (int i = 0; i < h.dim; ++i) {
      auto e = basis_el(h, i);
      if (mult_el(h, h.unit, e) != e) return "left unit fails at " + ix(i);
      if (mult_el(h, e, h.unit) != e) return "right unit fails at " + ix(i);
    }
    return "";
  });

  run("coassociativity", [&]() -> std::string {
    for (int i = 0; i < h.dim; ++i) {
      TripleMap left, right;
      for (const auto& [j, k, c] : h.comult[i]) {
        for (const auto& [p, q, c2] : h.comult[j]) add_term(left, {p, q, k}, c * c2);
        for (const auto& [p, q, c2] : h.comult[k]) add_term(right, {j, p, q}, c * c2);
      }
      if (!maps_equal(left, right)) return "at " + ix(i);
    }
    return "";
  });

  run("counit", [&]() -> std::string {
    for (int i = 0; i < h.dim; ++i) {
      std::vector<Cyc> left(h.dim), right(h.dim);
      for (const auto& [j, k, c] : h.comult[i]) {
        left[k] += c * h.counit[j];
        right[j] += c * h.counit[k];
      }
      auto e = basis_el(h, i);
      if (left != e) return "left counit fails at " + ix(i);
      if (right != e) return "right counit fails at " + ix(i);
    }
    return "";
  });

  run("counit-multiplicative", [&]() -> std::string {
    if (!(counit_el(h, h.unit) == Cyc(1))) return "counit of unit differs from 1";
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) {
        Cyc lhs = counit_el(h, mult_el(h, basis_el(h, i), basis_el(h, j)));
        if (!(lhs == h.counit[i] * h.counit[j])) return "at (" + ix(i) + "," + ix(j) + ")";
      }
    return "";
  });

  run("comult-multiplicative", [&]() -> std::string {
    PairMap unit_comult;
    for (int i = 0; i < h.dim; ++i)
      if (!h.unit[i].is_zero())
        for (const auto& [j, k, c] : h.comult[i]) add_term(unit_comult, j, k, h.unit[i] * c);
    PairMap unit_sq;
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) add_term(unit_sq, i, j, h.unit[i] * h.unit[j]);
    if (!maps_equal(unit_comult, unit_sq)) return "comult of unit differs from unit x unit";
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) {
        PairMap lhs;
        for (const auto& [k, c] : h.mult[i * h.dim + j])
          for (const auto& [p, q, c2] : h.comult[k]) add_term(lhs, p, q, c * c2);
        PairMap rhs = pair_product(h, comult_of_basis(h, i), comult_of_basis(h, j));
        if (!maps_equal(lhs, rhs)) return "at (" + ix(i) + "," + ix(j) + ")";
      }
    return "";
  });

  run("antipode-left", [&]() -> std::string {
    for (int i = 0; i < h.dim; ++i) {
      std::vector<Cyc> acc(h.dim);
      for (const auto& [j, k, c] : h.comult[i]) {
        auto sj = antipode_el(h, basis_el(h, j));
        auto prod = mult_el(h, sj, basis_el(h, k));
        for (int r = 0; r < h.dim; ++r) acc[r] += c * prod[r];
      }
      std::vector<Cyc> expect(h.dim);
      for (int r = 0; r < h.dim; ++r) expect[r] = h.counit[i] * h.unit[r];
      if (acc != expect) return "at " + ix(i);
    }
    return "";
  });

  run("antipode-right", [&]() -> std::string {
    for (int i = 0; i < h.dim; ++i) {
      std::vector<Cyc> acc(h.dim);
      for (const auto& [j, k, c] : h.comult[i]) {
        auto sk = antipode_el(h, basis_el(h, k));
        auto prod = mult_el(h, basis_el(h, j), sk);
        for (int r = 0; r < h.dim; ++r) acc[r] += c * prod[r];
      }
      std::vector<Cyc> expect(h.dim);
      for (int r = 0; r < h.dim; ++r) expect[r] = h.counit[i] * h.unit[r];
      if (acc != expect) return "at " + ix(i);
    }
    return "";
  });

  run("antipode-involutive", [&]() -> std::string {
    if (!(h.antipode * h.antipode == Mat::identity(h.dim))) return "square of antipode not identity";
    return "";
  });

  if (h.has_rmatrix) {
    TripleMap r13r23, r13r12, delta_r_left, delta_r_right;
    {
      TripleMap r13, r23, r12;
      for (const auto& t : h.rmatrix)
        for (int u = 0; u < h.dim; ++u) {
          if (!h.unit[u].is_zero()) {
            add_term(r13, {t.i, u, t.j}, t.c * h.unit[u]);
            add_term(r23, {u, t.i, t.j}, t.c * h.unit[u]);
            add_term(r12, {t.i, t.j, u}, t.c * h.unit[u]);
          }
        }
      r13r23 = triple_product(h, r13, r23);
      r13r12 = triple_product(h, r13, r12);
      for (const auto& t : h.rmatrix) {
        for (const auto& [p, q, c] : h.comult[t.i]) add_term(delta_r_left, {p, q, t.j}, t.c * c);
        for (const auto& [p, q, c] : h.comult[t.j]) add_term(delta_r_right, {t.i, p, q}, t.c * c);
      }
    }

    run("rmatrix-intertwines-comult", [&]() -> std::string {
      PairMap r;
      for (const auto& t : h.rmatrix) add_term(r, t.i, t.j, t.c);
      for (int i = 0; i < h.dim; ++i) {
        PairMap delta, delta_op;
        for (const auto& [j, k, c] : h.comult[i]) {
          add_term(delta, j, k, c);
          add_term(delta_op, k, j, c);
        }
        if (!maps_equal(pair_product(h, delta_op, r), pair_product(h, r, delta)))
          return "at " + ix(i);
      }
      return "";
    });

    run("rmatrix-left-leg", [&]() -> std::string {
      if (!maps_equal(delta_r_left, r13r23)) return "comult on first leg differs";
      return "";
    });

    run("rmatrix-right-leg", [&]() -> std::string {
      if (!maps_equal(delta_r_right, r13r12)) return "comult on second leg differs";
      return "";
    });
  }

  return report;
}

HopfPtr group_algebra(const FinGroup& g) {
  auto h = std::make_shared<HopfStructure>();
  h->name = "K[" + g.name + "]";
  h->dim = g.n;
  h->labels = g.labels;
  h->mult.assign(static_cast<size_t>(g.n) * g.n, {});
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) h->mult[a * g.n + b].emplace_back(g.mul(a, b), Cyc(1));
  h->unit.assign(g.n, Cyc(0));
  h->unit[g.identity] = Cyc(1);
  h->comult.assign(g.n, {});
  for (int a = 0; a < g.n; ++a) h->comult[a].emplace_back(a, a, Cyc(1));
  h->counit.assign(g.n, Cyc(1));
  h->antipode = Mat(g.n, g.n);
  for (int a = 0; a < g.n; ++a) h->antipode.at(g.invof(a), a) = Cyc(1);
  h->finalize();
  return h;
}

HopfPtr dual_hopf(const HopfStructure& src) {
  auto h = std::make_shared<HopfStructure>();
  h->name = src.name + "^*";
  h->dim = src.dim;
  for (const auto& l : src.labels) h->labels.push_back(l + "*");
  h->mult.assign(static_cast<size_t>(src.dim) * src.dim, {});
  for (int i = 0; i < src.dim; ++i)
    for (int j = 0; j < src.dim; ++j)
      for (const auto& [k, c] : src.comult_by_pair[i * src.dim + j])
        h->mult[i * src.dim + j].emplace_back(k, c);
  h->unit = src.counit;
  h->comult.assign(src.dim, {});
  for (int k = 0; k < src.dim; ++k)
    for (const auto& [i, j, c] : src.mult_by_out[k]) h->comult[k].emplace_back(i, j, c);
  h->counit = src.unit;
  h->antipode = src.antipode.transposed();
  h->finalize();
  return h;
}

HopfPtr drinfeld_double(const FinGroup& g) {
  auto h = std::make_shared<HopfStructure>();
  int n = g.n;
  int d = n * n;
  auto idx = [n](int a, int x) { return a * n + x; };
  h->name = "D(" + g.name + ")";
  h->dim = d;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) h->labels.push_back("(" + g.labels[a] + "|" + g.labels[x] + ")");
  h->mult.assign(static_cast<size_t>(d) * d, {});
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int b = 0; b < n; ++b)
        for (int y = 0; y < n; ++y) {
          if (a == g.mul(g.mul(x, b), g.invof(x)))
            h->mult[idx(a, x) * d + idx(b, y)].emplace_back(idx(a, g.mul(x, y)), Cyc(1));
        }
  h->unit.assign(d, Cyc(0));
  for (int a = 0; a < n; ++a) h->unit[idx(a, g.identity)] = Cyc(1);
  h->comult.assign(d, {});
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int b = 0; b < n; ++b) {
        // a = b * c
        int c = g.mul(g.invof(b), a);
        h->comult[idx(a, x)].emplace_back(idx(b, x), idx(c, x), Cyc(1));
      }
  h->counit.assign(d, Cyc(0));
  for (int x = 0; x < n; ++x) h->counit[idx(g.identity, x)] = Cyc(1);
  h->antipode = Mat(d, d);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      int xa = g.mul(g.mul(g.invof(x), g.invof(a)), x);
      h->antipode.at(idx(xa, g.invof(x)), idx(a, x)) = Cyc(1);
    }
  for (int gg = 0; gg < n; ++gg)
    for (int a = 0; a < n; ++a) h->rmatrix.push_back({idx(gg, g.identity), idx(a, gg), Cyc(1)});
  h->has_rmatrix = true;
  h->finalize();
  return h;
}

std::vector<Cyc> left_integral(const HopfStructure& h) {
  // stacked system: for every basis x, (L_x - counit(x) I) l = 0
  Mat big(static_cast<size_t>(h.dim) * h.dim, h.dim);
  for (int i = 0; i < h.dim; ++i) {
    Mat li = left_mult_matrix(h, basis_el(h, i));
    for (int r = 0; r < h.dim; ++r)
      for (int c = 0; c < h.dim; ++c) {
        Cyc v = li.at(r, c);
        if (r == c) v -= h.counit[i];
        big.at(static_cast<size_t>(i) * h.dim + r, c) = v;
      }
  }
  Mat ns = nullspace(big);
  if (ns.cols != 1)
    throw HopfError("hopf/integral-space",
                    "left integral space has dimension " + std::to_string(ns.cols));
  std::vector<Cyc> l(h.dim);
  for (int r = 0; r < h.dim; ++r) l[r] = ns.at(r, 0);
  Cyc eps = counit_el(h, l);
  if (eps.is_zero())
    throw HopfError("hopf/integral-degenerate", "counit vanishes on the integral");
  Cyc scale = Cyc(h.dim) / eps;
  for (auto& c : l) c *= scale;
  // two-sidedness (holds in the semisimple involutive setting)
  for (int i = 0; i < h.dim; ++i) {
    auto rx = mult_el(h, l, basis_el(h, i));
    for (int r = 0; r < h.dim; ++r)
      if (!(rx[r] == h.counit[i] * l[r]))
        throw HopfError("hopf/integral-not-two-sided", "right action differs at " + ix(i));
  }
  return l;
}

std::vector<Cyc> dual_integral(const HopfStructure& h) {
  auto dual = dual_hopf(h);
  return left_integral(*dual);
}

Mat convolution_identity_power(const HopfStructure& h, long m) {
  if (m < 1) throw HopfError("hopf/bad-power", "convolution power must be positive");
  Mat p = Mat::identity(h.dim);
  for (long step = 2; step <= m; ++step) {
    Mat next(h.dim, h.dim);
    for (int j = 0; j < h.dim; ++j) {
      for (const auto& [a, b, c] : h.comult[j]) {
        // column a of p, multiplied on the right by e_b
        for (int r = 0; r < h.dim; ++r) {
          if (p.at(r, a).is_zero()) continue;
          Cyc coeff = c * p.at(r, a);
          for (const auto& [k, ck] : h.mult[r * h.dim + b]) next.at(k, j) += coeff * ck;
        }
      }
    }
    p = std::move(next);
  }
  return p;
}

long hopf_exponent(const HopfStructure& h, long bound) {
  Mat target(h.dim, h.dim);
  for (int r = 0; r < h.dim; ++r)
    for (int j = 0; j < h.dim; ++j) target.at(r, j) = h.unit[r] * h.counit[j];
  Mat p = Mat::identity(h.dim);
  for (long m = 1; m <= bound; ++m) {
    if (m > 1) {
      Mat next(h.dim, h.dim);
      for (int j = 0; j < h.dim; ++j)
        for (const auto& [a, b, c] : h.comult[j])
          for (int r = 0; r < h.dim; ++r) {
            if (p.at(r, a).is_zero()) continue;
            Cyc coeff = c * p.at(r, a);
            for (const auto& [k, ck] : h.mult[r * h.dim + b]) next.at(k, j) += coeff * ck;
          }
      p = std::move(next);
    }
    if (p == target) return m;
  }
  throw HopfError("hopf/exponent-bound", "no exponent found up to " + std::to_string(bound));
}

Mat antipode_from_exponent(const HopfStructure& h, long bound) {
  long m = hopf_exponent(h, bound);
  if (m == 1) return Mat::identity(h.dim);
  return convolution_identity_power(h, m - 1);
}

std::vector<Cyc> central_projection(const HopfStructure& h, const std::vector<Cyc>& x) {
  auto l = left_integral(h);
  auto terms = comult_el(h, l);
  std::vector<Cyc> out(h.dim);
  for (const auto& [j, k, c] : terms) {
    auto s_k = basis_el(h, k);
    s_k = antipode_el(h, s_k);
    auto prod = mult_el(h, mult_el(h, basis_el(h, j), x), s_k);
    for (int r = 0; r < h.dim; ++r) out[r] += c * prod[r];
  }
  Cyc inv_d = Cyc(Rat(1, h.dim));
  for (auto& c : out) c *= inv_d;
  return out;
}

Mat central_projection_matrix(const HopfStructure& h) {
  auto l = left_integral(h);
  auto terms = comult_el(h, l);
  Mat out(h.dim, h.dim);
  Cyc inv_d = Cyc(Rat(1, h.dim));
  for (int col = 0; col < h.dim; ++col) {
    std::vector<Cyc> acc(h.dim);
    for (const auto& [j, k, c] : terms) {
      auto prod =
          mult_el(h, mult_el(h, basis_el(h, j), basis_el(h, col)), antipode_el(h, basis_el(h, k)));
      for (int r = 0; r < h.dim; ++r) acc[r] += c * prod[r];
    }
    for (int r = 0; r < h.dim; ++r) out.at(r, col) = acc[r] * inv_d;
  }
  return out;
}

Mat center_basis(const HopfStructure& h) {
  Mat big(static_cast<size_t>(h.dim) * h.dim, h.dim);
  for (int i = 0; i < h.dim; ++i) {
    Mat li = left_mult_matrix(h, basis_el(h, i));
    Mat ri = right_mult_matrix(h, basis_el(h, i));
    for (int r = 0; r < h.dim; ++r)
      for (int c = 0; c < h.dim; ++c)
        big.at(static_cast<size_t>(i) * h.dim + r, c) = li.at(r, c) - ri.at(r, c);
  }
  return nullspace(big);
}

std::vector<PairTerm> canonical_element_tensor(const HopfStructure& h) {
  auto l = left_integral(h);
  auto terms = comult_el(h, l);
  // first leg e_p, second leg e_r S(e_q) S(e_s), coefficient c1 c2
  std::map<std::pair<int, int>, Cyc> acc;
  for (const auto& [p, q, c1] : terms) {
    auto sq = antipode_el(h, basis_el(h, q));
    for (const auto& [r, s, c2] : terms) {
      auto ss = antipode_el(h, basis_el(h, s));
      auto second = mult_el(h, mult_el(h, basis_el(h, r), sq), ss);
      Cyc c = c1 * c2;
      for (int t = 0; t < h.dim; ++t) {
        if (second[t].is_zero()) continue;
        auto it = acc.find({p, t});
        if (it == acc.end())
          acc.emplace(std::make_pair(p, t), c * second[t]);
        else {
          it->second += c * second[t];
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
  }
  std::vector<PairTerm> out;
  out.reserve(acc.size());
  for (const auto& [key, c] : acc) out.push_back({key.first, key.second, c});
  return out;
}

std::vector<Cyc> canonical_central_element(const HopfStructure& h) {
  std::vector<Cyc> out(h.dim);
  for (const auto& term : canonical_element_tensor(h)) {
    auto prod = mult_el(h, basis_el(h, term.i), basis_el(h, term.j));
    for (int t = 0; t < h.dim; ++t) out[t] += term.c * prod[t];
  }
  return out;
}

Mat rho_matrix(const HopfStructure& h) {
  auto lam = dual_integral(h);
  Mat out(h.dim, h.dim);
  for (int c = 0; c < h.dim; ++c)
    for (int r = 0; r < h.dim; ++r) {
      // lambda(e_c e_r)
      Cyc v;
      for (const auto& [k, cc] : h.mult[static_cast<size_t>(c) * h.dim + r]) v += cc * lam[k];
      out.at(r, c) = v;
    }
  return out;
}

Mat mu_matrix(const HopfStructure& h) {
  auto l = left_integral(h);
  Mat out(h.dim, h.dim);
  for (const auto& [p, q, c] : comult_el(h, l)) out.at(q, p) += c;
  return out;
}

std::vector<int> irrep_dimensions(const HopfStructure& h) {
  auto cc = canonical_central_element(h);
  Mat m = left_mult_matrix(h, cc);
  std::vector<int> dims;
  int accounted = 0;
  for (int k = 1; k * k <= h.dim; ++k) {
    Cyc mu = Cyc(Rat(static_cast<long>(h.dim) * h.dim, static_cast<long>(k) * k));
    Mat shifted = m;
    for (int r = 0; r < h.dim; ++r) shifted.at(r, r) -= mu;
    size_t nullity = h.dim - rank(std::move(shifted));
    if (nullity == 0) continue;
    if (nullity % (static_cast<size_t>(k) * k) != 0)
      throw HopfError("hopf/dimension-decomposition",
                      "eigenspace for block size " + std::to_string(k) +
                          " has dimension " + std::to_string(nullity));
    size_t count = nullity / (static_cast<size_t>(k) * k);
    for (size_t t = 0; t < count; ++t) dims.push_back(k);
    accounted += static_cast<int>(nullity);
  }
  if (accounted != h.dim)
    throw HopfError("hopf/dimension-decomposition",
                    "eigenspaces cover " + std::to_string(accounted) + " of " +
                        std::to_string(h.dim) + " dimensions");
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace hopfinv
