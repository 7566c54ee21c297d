#include "hopfinv/braid.hpp"

#include <cctype>

#include "hopfinv/error.hpp"
#include "hopfinv/invariants.hpp"
#include "hopfinv/linalg.hpp"

namespace hopfinv {

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord w;
  size_t i = 0;
  int max_index = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      i++;
      continue;
    }
    if (text[i] != 's')
      throw HopfError("braid/parse",
                      "expected 's' at position " + std::to_string(i + 1));
    i++;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
    if (i == start)
      throw HopfError("braid/parse",
                      "expected generator index at position " + std::to_string(start + 1));
    int k = std::stoi(std::string(text.substr(start, i - start)));
    if (k < 1) throw HopfError("braid/parse", "generator indices start at 1");
    bool inv = false;
    if (i < text.size() && text[i] == '\'') {
      inv = true;
      i++;
    }
    max_index = std::max(max_index, k);
    w.letters.emplace_back(k, inv);
  }
  w.strands = strands ? *strands : std::max(1, max_index + 1);
  if (max_index + 1 > w.strands)
    throw HopfError("braid/parse", "generator s" + std::to_string(max_index) +
                                       " needs at least " + std::to_string(max_index + 1) +
                                       " strands");
  return w;
}

std::string braid_to_string(const BraidWord& w) {
  std::string out;
  for (const auto& [k, inv] : w.letters) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(k);
    if (inv) out += "'";
  }
  return out;
}

namespace {

std::vector<PairTerm> prune_pair_terms(int dim, const std::vector<Cyc>& flat) {
  std::vector<PairTerm> out;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!flat[static_cast<size_t>(i) * dim + j].is_zero())
        out.push_back({i, j, flat[static_cast<size_t>(i) * dim + j]});
  return out;
}

// product of two sparse elements of H (x) H
std::vector<Cyc> pair_product_flat(const HopfStructure& h, const std::vector<PairTerm>& a,
                                   const std::vector<PairTerm>& b) {
  size_t d = static_cast<size_t>(h.dim);
  std::vector<Cyc> out(d * d);
  for (const auto& x : a)
    for (const auto& y : b) {
      Cyc c = x.c * y.c;
      for (const auto& [k1, c1] : h.mult[static_cast<size_t>(x.i) * h.dim + y.i])
        for (const auto& [k2, c2] : h.mult[static_cast<size_t>(x.j) * h.dim + y.j])
          out[static_cast<size_t>(k1) * d + k2] += c * c1 * c2;
    }
  return out;
}

bool is_unit_pair(const HopfStructure& h, const std::vector<Cyc>& flat) {
  size_t d = static_cast<size_t>(h.dim);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (!(flat[i * d + j] == h.unit[i] * h.unit[j])) return false;
  return true;
}

}  // namespace

Braiding make_braiding(HopfPtr h) {
  if (!h->has_rmatrix)
    throw HopfError("braid/no-rmatrix", "structure carries no R-matrix");
  Braiding b;
  b.hopf = h;
  b.r = h->rmatrix;
  size_t d = static_cast<size_t>(h->dim);
  // left multiplication by R on H (x) H, solved against the unit
  Mat lr(d * d, d * d);
  for (const auto& term : b.r)
    for (int i = 0; i < h->dim; ++i)
      for (int j = 0; j < h->dim; ++j) {
        size_t col = static_cast<size_t>(i) * d + j;
        for (const auto& [k1, c1] : h->mult[static_cast<size_t>(term.i) * h->dim + i])
          for (const auto& [k2, c2] : h->mult[static_cast<size_t>(term.j) * h->dim + j])
            lr.at(static_cast<size_t>(k1) * d + k2, col) += term.c * c1 * c2;
      }
  std::vector<Cyc> unit2(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) unit2[i * d + j] = h->unit[i] * h->unit[j];
  auto sol = solve(lr, unit2);
  if (!sol) throw HopfError("braid/r-not-invertible", "R has no right inverse in H (x) H");
  b.r_inv = prune_pair_terms(h->dim, *sol);
  if (!is_unit_pair(*h, pair_product_flat(*h, b.r_inv, b.r)))
    throw HopfError("braid/r-not-invertible", "right inverse of R is not two-sided");
  return b;
}

TensorElement apply_braid_generator(const Braiding& b, const TensorElement& t, int k,
                                    bool inverse) {
  const HopfStructure& h = *b.hopf;
  int n = t.primal_count();
  if (t.dual_count() != 0)
    throw HopfError("braid/bad-shape", "braiding acts on all-primal elements");
  if (k < 1 || k + 1 > n) throw HopfError("braid/bad-shape", "generator index out of range");
  const auto& terms = inverse ? b.r_inv : b.r;
  TensorElement out(b.hopf, n, 0);
  for (const auto& [key, c] : t.coeffs()) {
    int x = key[k - 1], y = key[k];
    for (const auto& term : terms) {
      // forward: new k-th = R2 y, new (k+1)-th = R1 x
      // inverse: new k-th = R1bar y, new (k+1)-th = R2bar x
      int left_src = inverse ? term.i : term.j;
      int right_src = inverse ? term.j : term.i;
      for (const auto& [u, cu] : h.mult[static_cast<size_t>(left_src) * h.dim + y])
        for (const auto& [v, cv] : h.mult[static_cast<size_t>(right_src) * h.dim + x]) {
          TensorElement::Key nk = key;
          nk[k - 1] = u;
          nk[k] = v;
          out.add(nk, c * term.c * cu * cv);
        }
    }
  }
  return out;
}

TensorElement apply_braid_word(const Braiding& b, const TensorElement& t, const BraidWord& w) {
  TensorElement out = t;
  for (const auto& [k, inv] : w.letters) out = apply_braid_generator(b, out, k, inv);
  return out;
}

namespace {

size_t state_count_checked(const HopfStructure& h, int strands, size_t budget) {
  size_t count = 1;
  for (int s = 0; s < strands; ++s) {
    count *= static_cast<size_t>(h.dim);
    if (count > budget)
      throw HopfError("braid/budget", "basis state count exceeds the budget");
  }
  return count;
}

TensorElement basis_state(HopfPtr h, int strands, size_t flat) {
  TensorElement t(h, strands, 0);
  TensorElement::Key key(strands);
  for (int s = strands - 1; s >= 0; --s) {
    key[s] = static_cast<int>(flat % h->dim);
    flat /= h->dim;
  }
  t.add(key, Cyc(1));
  return t;
}

}  // namespace

Cyc braid_trace(const Braiding& b, const BraidWord& w, int workers, size_t state_budget) {
  size_t count = state_count_checked(*b.hopf, w.strands, state_budget);
  auto values = parallel_values(count, workers, [&](size_t flat) {
    TensorElement t = basis_state(b.hopf, w.strands, flat);
    TensorElement::Key key = t.coeffs().begin()->first;
    TensorElement image = apply_braid_word(b, t, w);
    auto it = image.coeffs().find(key);
    return it == image.coeffs().end() ? Cyc(0) : it->second;
  });
  Cyc trace;
  for (const auto& v : values) trace += v;
  return trace;
}

bool BraidRelationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

BraidRelationReport check_braid_relations(const Braiding& b, int strands, size_t state_budget) {
  size_t count = state_count_checked(*b.hopf, strands, state_budget);
  BraidRelationReport report;
  auto word = [&](std::vector<std::pair<int, bool>> letters) {
    BraidWord w;
    w.strands = strands;
    w.letters = std::move(letters);
    return w;
  };
  auto equal_on_basis = [&](const BraidWord& lhs, const BraidWord& rhs) {
    for (size_t flat = 0; flat < count; ++flat) {
      TensorElement t = basis_state(b.hopf, strands, flat);
      if (!(apply_braid_word(b, t, lhs) == apply_braid_word(b, t, rhs))) return false;
    }
    return true;
  };
  BraidWord empty = word({});
  for (int k = 1; k + 1 <= strands; ++k) {
    std::string name = "s" + std::to_string(k);
    report.checks.push_back(
        {name + " " + name + "' = 1", equal_on_basis(word({{k, false}, {k, true}}), empty)});
    report.checks.push_back(
        {name + "' " + name + " = 1", equal_on_basis(word({{k, true}, {k, false}}), empty)});
  }
  for (int k = 1; k + 2 <= strands; ++k) {
    std::string a = "s" + std::to_string(k), c = "s" + std::to_string(k + 1);
    report.checks.push_back(
        {a + " " + c + " " + a + " = " + c + " " + a + " " + c,
         equal_on_basis(word({{k, false}, {k + 1, false}, {k, false}}),
                        word({{k + 1, false}, {k, false}, {k + 1, false}}))});
  }
  for (int i = 1; i + 1 <= strands; ++i)
    for (int j = i + 2; j + 1 <= strands; ++j) {
      std::string a = "s" + std::to_string(i), c = "s" + std::to_string(j);
      report.checks.push_back({a + " " + c + " = " + c + " " + a,
                               equal_on_basis(word({{i, false}, {j, false}}),
                                              word({{j, false}, {i, false}}))});
    }
  return report;
}

HomcountReport homcount_crosscheck(const FinGroup& g, const BraidWord& w, const FpGroup& p,
                                   int a, int workers) {
  HomcountReport report;
  Braiding b = make_braiding(drinfeld_double(g));
  report.trace = braid_trace(b, w, workers);
  report.homs = count_homs(p, g);
  Rat scale = 1;
  for (int t = 0; t < a; ++t) scale *= g.n;
  report.predicted = Cyc(scale * Rat(static_cast<long>(report.homs)));
  report.match = report.trace == report.predicted;
  return report;
}

}  // namespace hopfinv
