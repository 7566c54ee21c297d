#include "hopfinv/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hopfinv/error.hpp"

namespace hopfinv {

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Kind { Ident, Int, Comma, Semi, Colon, LBracket, RBracket, End } kind;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (i_ >= s_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = s_[i_];
    if (c == ',') return simple(Token::Kind::Comma);
    if (c == ';') return simple(Token::Kind::Semi);
    if (c == ':') return simple(Token::Kind::Colon);
    if (c == '[') return simple(Token::Kind::LBracket);
    if (c == ']') return simple(Token::Kind::RBracket);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Int;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        t.text += s_[i_];
        advance();
      }
      t.value = std::stol(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
        t.text += s_[i_];
        advance();
      }
      return t;
    }
    t.kind = Token::Kind::End;
    t.text = std::string(1, c);
    t.value = -1;  // marks an unexpected character
    return t;
  }

 private:
  Token simple(Token::Kind k) {
    Token t;
    t.line = line_;
    t.col = col_;
    t.kind = k;
    t.text = std::string(1, s_[i_]);
    advance();
    return t;
  }
  void advance() {
    if (s_[i_] == '\n') {
      line_++;
      col_ = 1;
    } else {
      col_++;
    }
    i_++;
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }
  std::string_view s_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

ParseResult fail_at(const Token& t, const std::string& msg) {
  ParseResult r;
  r.error = ParseError{t.line, t.col, msg};
  return r;
}

// Shape simulation; returns an error message or empty.
std::string simulate_shapes(const InvariantExpr& e, int* out_h, int* out_d) {
  int nh = 0, nd = 0;
  for (const auto& g : e.gens) {
    switch (g.kind) {
      case InvariantExpr::Gen::Kind::L:
      case InvariantExpr::Gen::Kind::CharD:
        nh++;
        break;
      case InvariantExpr::Gen::Kind::Lam:
      case InvariantExpr::Gen::Kind::CharH:
        nd++;
        break;
    }
  }
  int opno = 0;
  for (const auto& op : e.ops) {
    opno++;
    auto bad = [&](const std::string& what) {
      return "op " + std::to_string(opno) + ": " + what;
    };
    switch (op.kind) {
      case InvariantExpr::Op::Kind::ComultH:
        if (op.arg1 < 1 || op.arg1 > nh) return bad("comultH position out of range");
        nh++;
        break;
      case InvariantExpr::Op::Kind::ComultD:
        if (op.arg1 < 1 || op.arg1 > nd) return bad("comultD position out of range");
        nd++;
        break;
      case InvariantExpr::Op::Kind::PermH: {
        if (static_cast<int>(op.perm.size()) != nh) return bad("permH length mismatch");
        std::vector<bool> hit(nh, false);
        for (int v : op.perm) {
          if (v < 1 || v > nh || hit[v - 1]) return bad("permH not a permutation");
          hit[v - 1] = true;
        }
        break;
      }
      case InvariantExpr::Op::Kind::PermD: {
        if (static_cast<int>(op.perm.size()) != nd) return bad("permD length mismatch");
        std::vector<bool> hit(nd, false);
        for (int v : op.perm) {
          if (v < 1 || v > nd || hit[v - 1]) return bad("permD not a permutation");
          hit[v - 1] = true;
        }
        break;
      }
      case InvariantExpr::Op::Kind::Pair:
        if (op.arg1 < 1 || op.arg1 > nh) return bad("pair primal position out of range");
        if (op.arg2 < 1 || op.arg2 > nd) return bad("pair dual position out of range");
        nh--;
        nd--;
        break;
    }
  }
  if (out_h) *out_h = nh;
  if (out_d) *out_d = nd;
  return "";
}

}  // namespace

ParseResult parse_invariant(std::string_view text) {
  Lexer lex(text);
  InvariantExpr e;
  Token t = lex.next();
  auto expect_kw = [&](const char* kw) -> std::optional<ParseResult> {
    if (t.kind != Token::Kind::Ident || t.text != kw)
      return fail_at(t, std::string("expected '") + kw + "'");
    t = lex.next();
    return std::nullopt;
  };
  if (auto err = expect_kw("gens")) return *err;
  if (t.kind != Token::Kind::Colon) return fail_at(t, "expected ':' after 'gens'");
  t = lex.next();
  while (true) {
    if (t.kind != Token::Kind::Ident) return fail_at(t, "expected generator");
    InvariantExpr::Gen g;
    if (t.text == "L") {
      g.kind = InvariantExpr::Gen::Kind::L;
    } else if (t.text == "Lam") {
      g.kind = InvariantExpr::Gen::Kind::Lam;
    } else if (t.text == "charH" || t.text == "charD") {
      g.kind = t.text == "charH" ? InvariantExpr::Gen::Kind::CharH
                                 : InvariantExpr::Gen::Kind::CharD;
      Token name = lex.next();
      if (name.kind != Token::Kind::Ident) return fail_at(name, "expected character name");
      g.name = name.text;
    } else {
      return fail_at(t, "unknown generator '" + t.text + "'");
    }
    e.gens.push_back(std::move(g));
    t = lex.next();
    if (t.kind == Token::Kind::Comma) {
      t = lex.next();
      continue;
    }
    break;
  }
  if (t.kind != Token::Kind::Semi) return fail_at(t, "expected ';' after generator list");
  t = lex.next();
  while (t.kind != Token::Kind::End) {
    if (t.kind != Token::Kind::Ident || t.text != "op") return fail_at(t, "expected 'op'");
    t = lex.next();
    if (t.kind != Token::Kind::Colon) return fail_at(t, "expected ':' after 'op'");
    t = lex.next();
    if (t.kind != Token::Kind::Ident) return fail_at(t, "expected op name");
    InvariantExpr::Op op;
    std::string name = t.text;
    t = lex.next();
    auto read_int = [&](int* out) -> std::optional<ParseResult> {
      if (t.kind != Token::Kind::Int) return fail_at(t, "expected integer");
      *out = static_cast<int>(t.value);
      t = lex.next();
      return std::nullopt;
    };
    if (name == "comultH" || name == "comultD") {
      op.kind = name == "comultH" ? InvariantExpr::Op::Kind::ComultH
                                  : InvariantExpr::Op::Kind::ComultD;
      if (auto err = read_int(&op.arg1)) return *err;
    } else if (name == "permH" || name == "permD") {
      op.kind = name == "permH" ? InvariantExpr::Op::Kind::PermH : InvariantExpr::Op::Kind::PermD;
      if (t.kind != Token::Kind::LBracket) return fail_at(t, "expected '['");
      t = lex.next();
      while (t.kind == Token::Kind::Int) {
        op.perm.push_back(static_cast<int>(t.value));
        t = lex.next();
      }
      if (t.kind != Token::Kind::RBracket) return fail_at(t, "expected ']'");
      if (op.perm.empty()) return fail_at(t, "empty permutation");
      t = lex.next();
    } else if (name == "pair") {
      op.kind = InvariantExpr::Op::Kind::Pair;
      if (auto err = read_int(&op.arg1)) return *err;
      if (auto err = read_int(&op.arg2)) return *err;
    } else {
      return fail_at(t, "unknown op '" + name + "'");
    }
    if (t.kind != Token::Kind::Semi) return fail_at(t, "expected ';' after op");
    e.ops.push_back(std::move(op));
    t = lex.next();
  }
  if (t.value == -1) return fail_at(t, "unexpected character '" + t.text + "'");
  if (std::string msg = simulate_shapes(e, nullptr, nullptr); !msg.empty()) {
    ParseResult r;
    r.error = ParseError{t.line, t.col, msg};
    return r;
  }
  ParseResult r;
  r.expr = std::move(e);
  return r;
}

std::string pretty_print(const InvariantExpr& e) {
  std::ostringstream out;
  out << "gens: ";
  for (size_t i = 0; i < e.gens.size(); ++i) {
    if (i) out << ", ";
    switch (e.gens[i].kind) {
      case InvariantExpr::Gen::Kind::L:
        out << "L";
        break;
      case InvariantExpr::Gen::Kind::Lam:
        out << "Lam";
        break;
      case InvariantExpr::Gen::Kind::CharH:
        out << "charH " << e.gens[i].name;
        break;
      case InvariantExpr::Gen::Kind::CharD:
        out << "charD " << e.gens[i].name;
        break;
    }
  }
  out << ";\n";
  for (const auto& op : e.ops) {
    out << "op: ";
    switch (op.kind) {
      case InvariantExpr::Op::Kind::ComultH:
        out << "comultH " << op.arg1;
        break;
      case InvariantExpr::Op::Kind::ComultD:
        out << "comultD " << op.arg1;
        break;
      case InvariantExpr::Op::Kind::PermH:
      case InvariantExpr::Op::Kind::PermD:
        out << (op.kind == InvariantExpr::Op::Kind::PermH ? "permH [" : "permD [");
        for (size_t i = 0; i < op.perm.size(); ++i) {
          if (i) out << " ";
          out << op.perm[i];
        }
        out << "]";
        break;
      case InvariantExpr::Op::Kind::Pair:
        out << "pair " << op.arg1 << " " << op.arg2;
        break;
    }
    out << ";\n";
  }
  return out.str();
}

std::pair<int, int> expr_shape(const InvariantExpr& e) {
  int nh = 0, nd = 0;
  std::string msg = simulate_shapes(e, &nh, &nd);
  if (!msg.empty()) throw HopfError("invariants/bad-shape", msg);
  return {nh, nd};
}

EvalContext make_context(HopfPtr hopf) {
  EvalContext ctx;
  ctx.hopf = hopf;
  ctx.ell = left_integral(*hopf);
  ctx.lam = dual_integral(*hopf);
  return ctx;
}

EvalContext make_group_context(const FinGroup& g) {
  EvalContext ctx = make_context(group_algebra(g));
  ctx.chars_h = character_table(g);
  CharTable dual_table;
  dual_table.conductor = 1;
  auto add_row = [&](int x) {
    CharTable::Row r;
    r.name = g.labels[x];
    r.dim = 1;
    for (int i = 0; i < g.n; ++i) r.values.push_back(i == x ? Cyc(1) : Cyc(0));
    dual_table.rows.push_back(std::move(r));
  };
  add_row(g.identity);
  for (int x = 0; x < g.n; ++x)
    if (x != g.identity) add_row(x);
  ctx.chars_d = std::move(dual_table);
  return ctx;
}

TensorElement evaluate(const EvalContext& ctx, const InvariantExpr& e) {
  TensorElement acc = TensorElement::scalar(ctx.hopf, Cyc(1));
  for (const auto& g : e.gens) {
    TensorElement next = [&]() -> TensorElement {
      switch (g.kind) {
        case InvariantExpr::Gen::Kind::L:
          return TensorElement::from_primal(ctx.hopf, ctx.ell);
        case InvariantExpr::Gen::Kind::Lam:
          return TensorElement::from_dual(ctx.hopf, ctx.lam);
        case InvariantExpr::Gen::Kind::CharH: {
          if (!ctx.chars_h)
            throw HopfError("invariants/no-characters", "no primal character table attached");
          const auto* row = ctx.chars_h->find(g.name);
          if (!row)
            throw HopfError("invariants/unknown-character",
                            "no primal character named '" + g.name + "'");
          return TensorElement::from_dual(ctx.hopf, row->values);
        }
        case InvariantExpr::Gen::Kind::CharD: {
          if (!ctx.chars_d)
            throw HopfError("invariants/no-characters", "no dual character table attached");
          const auto* row = ctx.chars_d->find(g.name);
          if (!row)
            throw HopfError("invariants/unknown-character",
                            "no dual character named '" + g.name + "'");
          return TensorElement::from_primal(ctx.hopf, row->values);
        }
      }
      throw HopfError("invariants/internal", "unhandled generator");
    }();
    acc = tensor_product(acc, next);
  }
  for (const auto& op : e.ops) {
    switch (op.kind) {
      case InvariantExpr::Op::Kind::ComultH:
        acc = comult_at(acc, Side::H, op.arg1);
        break;
      case InvariantExpr::Op::Kind::ComultD:
        acc = comult_at(acc, Side::D, op.arg1);
        break;
      case InvariantExpr::Op::Kind::PermH:
        acc = permute(acc, Side::H, op.perm);
        break;
      case InvariantExpr::Op::Kind::PermD:
        acc = permute(acc, Side::D, op.perm);
        break;
      case InvariantExpr::Op::Kind::Pair:
        acc = pair_legs(acc, op.arg1, op.arg2);
        break;
    }
  }
  return acc;
}

// ------------------------------------------------------- canonical data

int CanonicalInvariant::legs_h() const {
  return std::accumulate(comps_h.begin(), comps_h.end(), 0);
}
int CanonicalInvariant::legs_d() const {
  return std::accumulate(comps_d.begin(), comps_d.end(), 0);
}
int CanonicalInvariant::paired() const {
  int p = 0;
  for (int v : pair_of_h)
    if (v > 0) p++;
  return p;
}
std::pair<int, int> CanonicalInvariant::shape() const {
  int p = paired();
  return {legs_h() - p, legs_d() - p};
}

namespace {

// Compositions of n into exactly parts positive parts, lexicographic.
void compositions_into(int n, int parts, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(n);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int first = 1; first + (parts - 1) <= n; ++first) {
    cur.push_back(first);
    compositions_into(n - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

// Sorted index subsets of size p from {1..n}, lexicographic.
void subsets_of(int n, int p, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == p) {
    emit(cur);
    return;
  }
  int start = cur.empty() ? 1 : cur.back() + 1;
  for (int v = start; v <= n - (p - static_cast<int>(cur.size())) + 1; ++v) {
    cur.push_back(v);
    subsets_of(n, p, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CanonicalInvariant> enumerate_invariants(int i, int j, int n_max) {
  if (i < 0 || j < 0 || n_max < 1)
    throw HopfError("invariants/bad-budget", "shape and budget must be non-negative");
  std::vector<CanonicalInvariant> out;
  for (int n = 1; n <= n_max; ++n) {
    int p = n - std::max(i, j);
    if (p < 0) continue;
    int nh = p + i, nd = p + j;
    int a_lo = nh == 0 ? 0 : 1, a_hi = nh;
    int b_lo = nd == 0 ? 0 : 1, b_hi = nd;
    for (int a = a_lo; a <= a_hi; ++a)
      for (int b = b_lo; b <= b_hi; ++b) {
        std::vector<std::vector<int>> chs, cds;
        std::vector<int> scratch;
        if (a == 0) {
          chs.push_back({});
        } else {
          compositions_into(nh, a, scratch, [&](const std::vector<int>& c) { chs.push_back(c); });
        }
        if (b == 0) {
          cds.push_back({});
        } else {
          compositions_into(nd, b, scratch, [&](const std::vector<int>& c) { cds.push_back(c); });
        }
        for (const auto& ch : chs)
          for (const auto& cd : cds) {
            std::vector<int> sub_h_scratch;
            subsets_of(nh, p, sub_h_scratch, [&](const std::vector<int>& sh) {
              std::vector<int> sub_d_scratch;
              subsets_of(nd, p, sub_d_scratch, [&](const std::vector<int>& sd) {
                std::vector<int> perm(sd);
                std::sort(perm.begin(), perm.end());
                do {
                  CanonicalInvariant inv;
                  inv.comps_h = ch;
                  inv.comps_d = cd;
                  inv.pair_of_h.assign(nh, 0);
                  for (int t = 0; t < p; ++t) inv.pair_of_h[sh[t] - 1] = perm[t];
                  out.push_back(std::move(inv));
                } while (std::next_permutation(perm.begin(), perm.end()));
              });
            });
          }
      }
  }
  return out;
}

InvariantExpr compile(const CanonicalInvariant& c) {
  int a = static_cast<int>(c.comps_h.size());
  int b = static_cast<int>(c.comps_d.size());
  int nh = c.legs_h(), nd = c.legs_d();
  if (static_cast<int>(c.pair_of_h.size()) != nh)
    throw HopfError("invariants/bad-datum", "pairing vector length differs from leg count");
  InvariantExpr e;
  for (int t = 0; t < a; ++t) e.gens.push_back({InvariantExpr::Gen::Kind::L, ""});
  for (int u = 0; u < b; ++u) e.gens.push_back({InvariantExpr::Gen::Kind::Lam, ""});
  auto push_op = [&](InvariantExpr::Op::Kind k, int a1, int a2 = 0) {
    InvariantExpr::Op op;
    op.kind = k;
    op.arg1 = a1;
    op.arg2 = a2;
    e.ops.push_back(op);
  };
  // expand every integral copy in place, last copy first so earlier
  // positions stay put
  for (int t = a; t >= 1; --t)
    for (int r = 0; r < c.comps_h[t - 1] - 1; ++r)
      push_op(InvariantExpr::Op::Kind::ComultH, t);
  // invert the pairing
  std::vector<int> partner_of_d(nd + 1, 0);
  for (int t = 1; t <= nh; ++t) {
    int u = c.pair_of_h[t - 1];
    if (u == 0) continue;
    if (u < 1 || u > nd || partner_of_d[u])
      throw HopfError("invariants/bad-datum", "pairing is not a partial bijection");
    partner_of_d[u] = t;
  }
  // walk the dual copies, splitting one leg at a time and pairing it
  // away immediately; position bookkeeping below
  std::vector<int> h_pos(nh + 1);
  std::vector<bool> h_alive(nh + 1, true);
  for (int t = 1; t <= nh; ++t) h_pos[t] = t;
  int global_leg = 0, cur = 1;
  for (int u = 1; u <= b; ++u) {
    int k = c.comps_d[u - 1];
    for (int s = 1; s <= k; ++s) {
      global_leg++;
      if (s < k) push_op(InvariantExpr::Op::Kind::ComultD, cur);
      int t = partner_of_d[global_leg];
      if (t > 0) {
        if (!h_alive[t]) throw HopfError("invariants/bad-datum", "pairing reuses a leg");
        push_op(InvariantExpr::Op::Kind::Pair, h_pos[t], cur);
        for (int t2 = 1; t2 <= nh; ++t2)
          if (h_alive[t2] && h_pos[t2] > h_pos[t]) h_pos[t2]--;
        h_alive[t] = false;
      } else {
        cur++;
      }
    }
  }
  return e;
}

std::string invariant_to_string(const CanonicalInvariant& c) {
  std::ostringstream out;
  auto list = [&](const std::vector<int>& v) {
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out << " ";
      out << v[i];
    }
    out << "]";
  };
  out << "compsH=";
  list(c.comps_h);
  out << " compsD=";
  list(c.comps_d);
  out << " pairs=";
  list(c.pair_of_h);
  return out.str();
}

TensorElement evaluate_invariant(const EvalContext& ctx, const CanonicalInvariant& c) {
  return evaluate(ctx, compile(c));
}

FpGroup invariant_to_presentation(const CanonicalInvariant& c) {
  auto shape = c.shape();
  if (shape.first != 0 || shape.second != 0)
    throw HopfError("invariants/not-scalar", "presentation requires a fully paired datum");
  int a = static_cast<int>(c.comps_h.size());
  int nh = c.legs_h(), nd = c.legs_d();
  std::vector<int> copy_of_leg(nh + 1, 0);
  {
    int leg = 0;
    for (int t = 1; t <= a; ++t)
      for (int r = 0; r < c.comps_h[t - 1]; ++r) copy_of_leg[++leg] = t;
  }
  std::vector<int> partner_of_d(nd + 1, 0);
  for (int t = 1; t <= nh; ++t)
    if (c.pair_of_h[t - 1] > 0) partner_of_d[c.pair_of_h[t - 1]] = t;
  FpGroup p;
  for (int t = 1; t <= a; ++t) p.gen_names.push_back("x" + std::to_string(t));
  int global_leg = 0;
  for (int u = 0; u < static_cast<int>(c.comps_d.size()); ++u) {
    std::vector<int> word;
    for (int s = 0; s < c.comps_d[u]; ++s) {
      global_leg++;
      word.push_back(copy_of_leg[partner_of_d[global_leg]]);
    }
    p.relators.push_back(std::move(word));
  }
  return p;
}

// ------------------------------------------------------------decompose span

namespace {

template <typename T>
std::vector<T> parallel_map(size_t count, int workers, const std::function<T(size_t)>& fn) {
  workers = std::max(1, std::min(workers, 64));
  std::vector<std::optional<T>> slots(count);
  if (workers == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) slots[i] = fn(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          slots[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    for (size_t i = 0; i < count; ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);
  }
  std::vector<T> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(std::move(*slots[i]));
  return out;
}

// Incremental exact row reduction; rows are kept fully reduced with
// pivot columns ascending, pivots normalized to 1.
struct RowReducer {
  std::vector<std::vector<Cyc>> rows;
  std::vector<size_t> leads;

  bool insert(std::vector<Cyc> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Cyc& c = v[leads[r]];
      if (c.is_zero()) continue;
      Cyc f = c;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    size_t lead = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead == v.size()) return false;
    Cyc inv = v[lead].inverse();
    for (auto& c : v) c *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Cyc& c = rows[r][lead];
      if (c.is_zero()) continue;
      Cyc f = c;
      for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
    }
    size_t at = 0;
    while (at < leads.size() && leads[at] < lead) at++;
    rows.insert(rows.begin() + at, std::move(v));
    leads.insert(leads.begin() + at, lead);
    return true;
  }

  // residual of v against the current rows; zero residual means v lies
  // in the span
  bool contains(std::vector<Cyc> v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Cyc& c = v[leads[r]];
      if (c.is_zero()) continue;
      Cyc f = c;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  }
};

std::vector<Cyc> datum_dense_value(const EvalContext& ctx, const CanonicalInvariant& inv) {
  return tensor_to_dense(evaluate_invariant(ctx, inv));
}

}  // namespace

std::vector<Cyc> parallel_values(size_t count, int workers,
                                 const std::function<Cyc(size_t)>& fn) {
  return parallel_map<Cyc>(count, workers, fn);
}

SpanResult span_invariants(const EvalContext& ctx, int i, int j, int n_max, int workers) {
  auto data = enumerate_invariants(i, j, n_max);
  auto dense = parallel_map<std::vector<Cyc>>(
      data.size(), workers, [&](size_t k) { return datum_dense_value(ctx, data[k]); });
  SpanResult out;
  RowReducer red;
  size_t k = 0;
  for (int n = 1; n <= n_max; ++n) {
    while (k < data.size()) {
      const auto& inv = data[k];
      int datum_n = std::max(inv.legs_h(), inv.legs_d());
      if (datum_n != n) break;
      red.insert(std::move(dense[k]));
      k++;
    }
    out.growth.emplace_back(n, red.rows.size());
  }
  out.basis = std::move(red.rows);
  return out;
}

bool is_hopf_automorphism(const HopfStructure& h, const Mat& m) {
  auto minv = inverse(m);
  if (!minv) return false;
  // unit and counit
  if (!(m.apply(h.unit) == h.unit)) return false;
  for (int j = 0; j < h.dim; ++j) {
    Cyc s;
    for (int r = 0; r < h.dim; ++r)
      if (!m.at(r, j).is_zero()) s += h.counit[r] * m.at(r, j);
    if (!(s == h.counit[j])) return false;
  }
  // multiplicativity on basis pairs
  std::vector<std::vector<Cyc>> m_cols(h.dim);
  for (int j = 0; j < h.dim; ++j) {
    m_cols[j].resize(h.dim);
    for (int r = 0; r < h.dim; ++r) m_cols[j][r] = m.at(r, j);
  }
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j) {
      auto lhs = m.apply(mult_el(h, basis_el(h, i), basis_el(h, j)));
      auto rhs = mult_el(h, m_cols[i], m_cols[j]);
      if (lhs != rhs) return false;
    }
  // comultiplicativity
  for (int i = 0; i < h.dim; ++i) {
    std::map<std::pair<int, int>, Cyc> lhs, rhs;
    auto add = [](std::map<std::pair<int, int>, Cyc>& acc, int x, int y, const Cyc& c) {
      if (c.is_zero()) return;
      auto it = acc.find({x, y});
      if (it == acc.end())
        acc.emplace(std::make_pair(x, y), c);
      else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    };
    for (const auto& [j, k, c] : comult_el(h, m_cols[i])) add(lhs, j, k, c);
    for (const auto& [j, k, c] : h.comult[i])
      for (int x = 0; x < h.dim; ++x) {
        if (m.at(x, j).is_zero()) continue;
        for (int y = 0; y < h.dim; ++y) add(rhs, x, y, c * m.at(x, j) * m.at(y, k));
      }
    if (lhs.size() != rhs.size()) return false;
    for (const auto& [key, c] : lhs) {
      auto it = rhs.find(key);
      if (it == rhs.end() || !(it->second == c)) return false;
    }
  }
  return true;
}

std::vector<Mat> hopf_automorphism_group(const HopfStructure& h, const std::vector<Mat>& gens,
                                         size_t bound) {
  for (const auto& g : gens)
    if (!is_hopf_automorphism(h, g))
      throw HopfError("invariants/not-automorphism", "generator fails the automorphism laws");
  std::vector<Mat> group = {Mat::identity(h.dim)};
  auto known = [&](const Mat& m) {
    for (const auto& g : group)
      if (g == m) return true;
    return false;
  };
  std::vector<Mat> frontier = group;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        Mat p = f * g;
        if (!known(p)) {
          if (group.size() >= bound)
            throw HopfError("invariants/automorphism-bound", "closure exceeds the bound");
          group.push_back(p);
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return group;
}

std::vector<Mat> group_induced_automorphisms(const FinGroup& g) {
  std::vector<Mat> out;
  for (const auto& sigma : automorphisms(g)) {
    Mat m(g.n, g.n);
    for (int x = 0; x < g.n; ++x) m.at(sigma[x], x) = Cyc(1);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> automorphisms_fixing_characters(const std::vector<Mat>& mats,
                                                 const CharTable& table) {
  std::vector<Mat> out;
  for (const auto& m : mats) {
    bool fixes = true;
    for (const auto& row : table.rows) {
      if (row.values.size() != m.rows) {
        throw HopfError("invariants/table-mismatch",
                        "character length does not match matrix size");
      }
      for (size_t c = 0; c < m.cols && fixes; ++c) {
        Cyc acc;
        for (size_t r = 0; r < m.rows; ++r) acc += row.values[r] * m.at(r, c);
        if (!(acc == row.values[c])) fixes = false;
      }
      if (!fixes) break;
    }
    if (fixes) out.push_back(m);
  }
  return out;
}

TensorElement apply_automorphism(const TensorElement& t, const Mat& m) {
  auto minv = inverse(m);
  if (!minv) throw HopfError("invariants/not-automorphism", "matrix is singular");
  Mat dual_action = minv->transposed();
  TensorElement out = t;
  for (int k = 1; k <= t.primal_count(); ++k) out = apply_matrix_at(out, Side::H, k, m);
  for (int k = 1; k <= t.dual_count(); ++k) out = apply_matrix_at(out, Side::D, k, dual_action);
  return out;
}

namespace {

// Dense matrix of the diagonal action on H^(i,j).
Mat induced_action_matrix(const HopfStructure& h, const Mat& m, int i, int j) {
  auto minv = inverse(m);
  if (!minv) throw HopfError("invariants/not-automorphism", "matrix is singular");
  Mat dual_action = minv->transposed();
  size_t d = static_cast<size_t>(h.dim);
  size_t total = 1;
  for (int p = 0; p < i + j; ++p) {
    if (total > 10000 / d + 1) {
      if (total * d > 10000)
        throw HopfError("invariants/fixed-space-budget", "induced action too large");
    }
    total *= d;
  }
  Mat out(total, total);
  std::vector<int> key(i + j, 0);
  for (size_t col = 0; col < total; ++col) {
    // decode column into factor indices
    size_t rest = col;
    for (int p = i + j - 1; p >= 0; --p) {
      key[p] = static_cast<int>(rest % d);
      rest /= d;
    }
    // expand the product of per-factor columns
    std::vector<std::pair<size_t, Cyc>> partial = {{0, Cyc(1)}};
    std::vector<std::pair<size_t, Cyc>> next;
    for (int p = 0; p < i + j; ++p) {
      const Mat& act = p < i ? m : dual_action;
      next.clear();
      for (int r = 0; r < h.dim; ++r) {
        const Cyc& c = act.at(r, key[p]);
        if (c.is_zero()) continue;
        for (const auto& [flat, pc] : partial) next.emplace_back(flat * d + r, pc * c);
      }
      partial = next;
    }
    for (const auto& [row, c] : partial) out.at(row, col) += c;
  }
  return out;
}

}  // namespace

SpanResult automorphism_fixed_space(HopfPtr h, const std::vector<Mat>& group, int i, int j) {
  if (group.empty()) throw HopfError("invariants/empty-group", "automorphism group is empty");
  size_t d = static_cast<size_t>(h->dim);
  size_t total = 1;
  for (int p = 0; p < i + j; ++p) {
    total *= d;
    if (total > 10000)
      throw HopfError("invariants/fixed-space-budget", "fixed-space dimension too large");
  }
  Mat proj(total, total);
  for (const auto& g : group) proj = proj + induced_action_matrix(*h, g, i, j);
  proj = proj.scaled(Cyc(Rat(1, static_cast<long>(group.size()))));
  // image of the projector = row space of its transpose
  Mat pt = proj.transposed();
  rref(pt);
  SpanResult out;
  for (size_t r = 0; r < pt.rows; ++r) {
    std::vector<Cyc> row(pt.cols);
    bool nonzero = false;
    for (size_t c = 0; c < pt.cols; ++c) {
      row[c] = pt.at(r, c);
      if (!row[c].is_zero()) nonzero = true;
    }
    if (nonzero) out.basis.push_back(std::move(row));
  }
  return out;
}

SaturationReport saturation_check(const EvalContext& ctx, const std::vector<Mat>& group, int i,
                                  int j, int n_max, int workers) {
  SaturationReport report;
  auto fixed = automorphism_fixed_space(ctx.hopf, group, i, j);
  report.fixed_dim = fixed.dimension();
  RowReducer fixed_red;
  for (const auto& row : fixed.basis) fixed_red.insert(row);
  RowReducer span_red;
  auto data = enumerate_invariants(i, j, n_max);
  size_t k = 0;
  for (int n = 1; n <= n_max; ++n) {
    size_t k_end = k;
    while (k_end < data.size() &&
           std::max(data[k_end].legs_h(), data[k_end].legs_d()) == n)
      k_end++;
    auto dense = parallel_map<std::vector<Cyc>>(
        k_end - k, workers, [&](size_t t) { return datum_dense_value(ctx, data[k + t]); });
    for (size_t t = 0; t < dense.size(); ++t) {
      if (!fixed_red.contains(dense[t])) {
        report.containment_ok = false;
        report.containment_detail =
            "datum " + invariant_to_string(data[k + t]) + " lies outside the fixed space";
        report.n_reached = n;
        report.span_dim = span_red.rows.size();
        return report;
      }
      span_red.insert(std::move(dense[t]));
    }
    k = k_end;
    report.n_reached = n;
    if (span_red.rows.size() == report.fixed_dim) {
      report.saturated = true;
      break;
    }
  }
  report.span_dim = span_red.rows.size();
  report.saturated = span_red.rows.size() == report.fixed_dim;
  return report;
}

GramReport gram_rank(const EvalContext& ctx, int i, int j, int n_max, int workers) {
  auto span_ij = span_invariants(ctx, i, j, n_max, workers);
  auto span_ji = span_invariants(ctx, j, i, n_max, workers);
  GramReport report;
  report.dim_ij = span_ij.dimension();
  report.dim_ji = span_ji.dimension();
  size_t d = static_cast<size_t>(ctx.hopf->dim);
  Mat gram(report.dim_ij, report.dim_ji);
  // flat index of (x_1..x_i, y_1..y_j) on the left meets (y, x) on the
  // right: primal legs pair with the partner's dual legs positionally
  size_t total = span_ij.basis.empty() ? 0 : span_ij.basis[0].size();
  std::vector<int> key(i + j, 0);
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rest = flat;
    for (int p = i + j - 1; p >= 0; --p) {
      key[p] = static_cast<int>(rest % d);
      rest /= d;
    }
    // mirrored flat index: first the j dual legs, then the i primal legs
    size_t mirrored = 0;
    for (int p = i; p < i + j; ++p) mirrored = mirrored * d + static_cast<size_t>(key[p]);
    for (int p = 0; p < i; ++p) mirrored = mirrored * d + static_cast<size_t>(key[p]);
    for (size_t r = 0; r < report.dim_ij; ++r) {
      const Cyc& a = span_ij.basis[r][flat];
      if (a.is_zero()) continue;
      for (size_t s = 0; s < report.dim_ji; ++s) {
        const Cyc& b = span_ji.basis[s][mirrored];
        if (b.is_zero()) continue;
        gram.at(r, s) += a * b;
      }
    }
  }
  report.rank = rank(std::move(gram));
  report.full = report.rank == report.dim_ij && report.rank == report.dim_ji;
  return report;
}

DistinguishResult distinguish(const EvalContext& a, const EvalContext& b, int n_max,
                              int workers) {
  DistinguishResult result;
  result.n_max = n_max;
  auto data = enumerate_invariants(0, 0, n_max);
  struct ValuePair {
    Cyc va, vb;
  };
  auto values = parallel_map<ValuePair>(data.size(), workers, [&](size_t k) {
    return ValuePair{as_scalar(evaluate_invariant(a, data[k])),
                     as_scalar(evaluate_invariant(b, data[k]))};
  });
  for (size_t k = 0; k < data.size(); ++k) {
    if (!(values[k].va == values[k].vb)) {
      result.distinguished = true;
      result.witness = data[k];
      result.value1 = values[k].va;
      result.value2 = values[k].vb;
      return result;
    }
  }
  return result;
}

std::vector<ScalarDatum> scalar_generators(const EvalContext& ctx, int n_max, int workers) {
  auto data = enumerate_invariants(0, 0, n_max);
  auto values = parallel_map<Cyc>(data.size(), workers, [&](size_t k) {
    return as_scalar(evaluate_invariant(ctx, data[k]));
  });
  std::vector<ScalarDatum> out;
  std::set<std::string> seen;
  for (size_t k = 0; k < data.size(); ++k) {
    std::string canon = values[k].minimized().to_string();
    if (seen.insert(canon).second) out.push_back({data[k], values[k]});
  }
  return out;
}

}  // namespace hopfinv
