#include "hopfinv/tensor.hpp"

#include <atomic>
#include <sstream>

#include "hopfinv/error.hpp"

namespace hopfinv {

namespace {

std::atomic<size_t> g_term_budget{4'000'000};

void check_same_space(const TensorElement& a, const TensorElement& b) {
  if (a.owner().get() != b.owner().get())
    throw HopfError("tensor/owner-mismatch", "operands belong to different structures");
  if (a.primal_count() != b.primal_count() || a.dual_count() != b.dual_count())
    throw HopfError("tensor/shape-mismatch", "operands have different shapes");
}

void check_position(int have, int k, const char* what) {
  if (k < 1 || k > have)
    throw HopfError("tensor/bad-position",
                    std::string(what) + " position " + std::to_string(k) + " out of range");
}

}  // namespace

size_t tensor_term_budget() { return g_term_budget.load(); }
void set_tensor_term_budget(size_t budget) { g_term_budget.store(budget); }

TensorElement::TensorElement(HopfPtr owner, int primal, int dual)
    : owner_(std::move(owner)), nh_(primal), nd_(dual) {
  if (!owner_) throw HopfError("tensor/no-owner", "tensor without a structure");
  if (nh_ < 0 || nd_ < 0) throw HopfError("tensor/bad-shape", "negative shape");
}

TensorElement TensorElement::scalar(HopfPtr owner, const Cyc& c) {
  TensorElement t(std::move(owner), 0, 0);
  t.add({}, c);
  return t;
}

TensorElement TensorElement::from_primal(HopfPtr owner, const std::vector<Cyc>& v) {
  TensorElement t(owner, 1, 0);
  if (v.size() != static_cast<size_t>(owner->dim))
    throw HopfError("tensor/bad-shape", "coefficient vector length mismatch");
  for (int i = 0; i < owner->dim; ++i) t.add({i}, v[i]);
  return t;
}

TensorElement TensorElement::from_dual(HopfPtr owner, const std::vector<Cyc>& v) {
  TensorElement t(owner, 0, 1);
  if (v.size() != static_cast<size_t>(owner->dim))
    throw HopfError("tensor/bad-shape", "coefficient vector length mismatch");
  for (int i = 0; i < owner->dim; ++i) t.add({i}, v[i]);
  return t;
}

void TensorElement::add(const Key& key, const Cyc& c) {
  if (static_cast<int>(key.size()) != nh_ + nd_)
    throw HopfError("tensor/bad-key", "key length differs from shape");
  if (c.is_zero()) return;
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    if (coeffs_.size() >= g_term_budget.load())
      throw HopfError("tensor/budget", "term budget exceeded");
    coeffs_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_same_space(*this, o);
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_same_space(*this, o);
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}

TensorElement TensorElement::scaled(const Cyc& s) const {
  TensorElement out(owner_, nh_, nd_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : coeffs_) out.add(k, c * s);
  return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
  if (owner_.get() != o.owner_.get() || nh_ != o.nh_ || nd_ != o.nd_) return false;
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (const auto& [k, c] : coeffs_) {
    auto it = o.coeffs_.find(k);
    if (it == o.coeffs_.end() || !(it->second == c)) return false;
  }
  return true;
}

TensorElement comult_at(const TensorElement& t, Side side, int k) {
  const auto& h = *t.owner();
  bool primal = side == Side::H;
  check_position(primal ? t.primal_count() : t.dual_count(), k, "comult");
  TensorElement out(t.owner(), t.primal_count() + (primal ? 1 : 0),
                    t.dual_count() + (primal ? 0 : 1));
  size_t pos = static_cast<size_t>(k - 1) + (primal ? 0 : t.primal_count());
  for (const auto& [key, c] : t.coeffs()) {
    int idx = key[pos];
    TensorElement::Key nk(key.size() + 1);
    std::copy(key.begin(), key.begin() + pos, nk.begin());
    std::copy(key.begin() + pos + 1, key.end(), nk.begin() + pos + 2);
    if (primal) {
      for (const auto& [a, b, cc] : h.comult[idx]) {
        nk[pos] = a;
        nk[pos + 1] = b;
        out.add(nk, c * cc);
      }
    } else {
      // dual comultiplication is the transpose of multiplication
      for (const auto& [a, b, cc] : h.mult_by_out[idx]) {
        nk[pos] = a;
        nk[pos + 1] = b;
        out.add(nk, c * cc);
      }
    }
  }
  return out;
}

TensorElement mult_at(const TensorElement& t, Side side, int k) {
  const auto& h = *t.owner();
  bool primal = side == Side::H;
  int have = primal ? t.primal_count() : t.dual_count();
  check_position(have - 1, k, "mult");
  TensorElement out(t.owner(), t.primal_count() - (primal ? 1 : 0),
                    t.dual_count() - (primal ? 0 : 1));
  size_t pos = static_cast<size_t>(k - 1) + (primal ? 0 : t.primal_count());
  for (const auto& [key, c] : t.coeffs()) {
    int a = key[pos], b = key[pos + 1];
    TensorElement::Key nk(key.size() - 1);
    std::copy(key.begin(), key.begin() + pos, nk.begin());
    std::copy(key.begin() + pos + 2, key.end(), nk.begin() + pos + 1);
    if (primal) {
      for (const auto& [x, cc] : h.mult[a * h.dim + b]) {
        nk[pos] = x;
        out.add(nk, c * cc);
      }
    } else {
      // dual multiplication is the transpose of comultiplication
      for (const auto& [x, cc] : h.comult_by_pair[a * h.dim + b]) {
        nk[pos] = x;
        out.add(nk, c * cc);
      }
    }
  }
  return out;
}

TensorElement permute(const TensorElement& t, Side side, const std::vector<int>& image) {
  bool primal = side == Side::H;
  int have = primal ? t.primal_count() : t.dual_count();
  if (static_cast<int>(image.size()) != have)
    throw HopfError("tensor/bad-permutation", "image length differs from block size");
  std::vector<bool> hit(have, false);
  for (int v : image) {
    if (v < 1 || v > have || hit[v - 1])
      throw HopfError("tensor/bad-permutation", "image is not a permutation");
    hit[v - 1] = true;
  }
  TensorElement out(t.owner(), t.primal_count(), t.dual_count());
  size_t base = primal ? 0 : static_cast<size_t>(t.primal_count());
  for (const auto& [key, c] : t.coeffs()) {
    TensorElement::Key nk = key;
    for (int p = 0; p < have; ++p) nk[base + image[p] - 1] = key[base + p];
    out.add(nk, c);
  }
  return out;
}

TensorElement pair_legs(const TensorElement& t, int hpos, int dpos) {
  check_position(t.primal_count(), hpos, "pair primal");
  check_position(t.dual_count(), dpos, "pair dual");
  TensorElement out(t.owner(), t.primal_count() - 1, t.dual_count() - 1);
  size_t hp = static_cast<size_t>(hpos - 1);
  size_t dp = static_cast<size_t>(t.primal_count()) + (dpos - 1);
  for (const auto& [key, c] : t.coeffs()) {
    if (key[hp] != key[dp]) continue;
    TensorElement::Key nk;
    nk.reserve(key.size() - 2);
    for (size_t i = 0; i < key.size(); ++i)
      if (i != hp && i != dp) nk.push_back(key[i]);
    out.add(nk, c);
  }
  return out;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  if (a.owner().get() != b.owner().get())
    throw HopfError("tensor/owner-mismatch", "operands belong to different structures");
  TensorElement out(a.owner(), a.primal_count() + b.primal_count(),
                    a.dual_count() + b.dual_count());
  for (const auto& [ka, ca] : a.coeffs())
    for (const auto& [kb, cb] : b.coeffs()) {
      TensorElement::Key nk;
      nk.reserve(ka.size() + kb.size());
      nk.insert(nk.end(), ka.begin(), ka.begin() + a.primal_count());
      nk.insert(nk.end(), kb.begin(), kb.begin() + b.primal_count());
      nk.insert(nk.end(), ka.begin() + a.primal_count(), ka.end());
      nk.insert(nk.end(), kb.begin() + b.primal_count(), kb.end());
      out.add(nk, ca * cb);
    }
  return out;
}

TensorElement algebra_product(const TensorElement& a, const TensorElement& b) {
  check_same_space(a, b);
  const auto& h = *a.owner();
  int nh = a.primal_count(), nd = a.dual_count();
  TensorElement out(a.owner(), nh, nd);
  std::vector<std::pair<TensorElement::Key, Cyc>> partial, next;
  for (const auto& [ka, ca] : a.coeffs())
    for (const auto& [kb, cb] : b.coeffs()) {
      partial.clear();
      partial.emplace_back(TensorElement::Key{}, ca * cb);
      for (int p = 0; p < nh + nd; ++p) {
        next.clear();
        int ia = ka[p], ib = kb[p];
        if (p < nh) {
          for (const auto& [x, cc] : h.mult[ia * h.dim + ib])
            for (const auto& [key, c] : partial) {
              auto nk = key;
              nk.push_back(x);
              next.emplace_back(std::move(nk), c * cc);
            }
        } else {
          for (const auto& [x, cc] : h.comult_by_pair[ia * h.dim + ib])
            for (const auto& [key, c] : partial) {
              auto nk = key;
              nk.push_back(x);
              next.emplace_back(std::move(nk), c * cc);
            }
        }
        std::swap(partial, next);
        if (partial.empty()) break;
      }
      for (auto& [key, c] : partial) out.add(key, c);
    }
  return out;
}

TensorElement apply_matrix_at(const TensorElement& t, Side side, int k, const Mat& m) {
  const auto& h = *t.owner();
  bool primal = side == Side::H;
  check_position(primal ? t.primal_count() : t.dual_count(), k, "matrix");
  if (m.rows != static_cast<size_t>(h.dim) || m.cols != static_cast<size_t>(h.dim))
    throw HopfError("tensor/bad-matrix", "matrix shape differs from dim");
  size_t pos = static_cast<size_t>(k - 1) + (primal ? 0 : t.primal_count());
  TensorElement out(t.owner(), t.primal_count(), t.dual_count());
  for (const auto& [key, c] : t.coeffs()) {
    int old = key[pos];
    TensorElement::Key nk = key;
    for (int r = 0; r < h.dim; ++r) {
      const Cyc& mc = m.at(r, old);
      if (mc.is_zero()) continue;
      nk[pos] = r;
      out.add(nk, c * mc);
    }
  }
  return out;
}

Cyc as_scalar(const TensorElement& t) {
  if (t.primal_count() != 0 || t.dual_count() != 0)
    throw HopfError("tensor/not-scalar", "tensor has legs");
  auto it = t.coeffs().find({});
  return it == t.coeffs().end() ? Cyc(0) : it->second;
}

std::string dump_tensor(const TensorElement& t) {
  std::ostringstream out;
  for (const auto& [key, c] : t.coeffs()) {
    for (int p = 0; p < t.primal_count(); ++p) {
      if (p) out << " ";
      out << key[p] + 1;
    }
    out << (t.primal_count() ? " | " : "| ");
    for (int p = 0; p < t.dual_count(); ++p) {
      if (p) out << " ";
      out << key[t.primal_count() + p] + 1;
    }
    out << (t.dual_count() ? " : " : ": ");
    out << c.to_string() << "\n";
  }
  return out.str();
}

std::vector<Cyc> tensor_to_dense(const TensorElement& t) {
  int d = t.owner()->dim;
  size_t total = 1;
  for (int p = 0; p < t.primal_count() + t.dual_count(); ++p) {
    if (total > 100'000'000 / static_cast<size_t>(d))
      throw HopfError("tensor/budget", "dense form too large");
    total *= static_cast<size_t>(d);
  }
  std::vector<Cyc> out(total);
  for (const auto& [key, c] : t.coeffs()) {
    size_t flat = 0;
    for (int v : key) flat = flat * static_cast<size_t>(d) + static_cast<size_t>(v);
    out[flat] = c;
  }
  return out;
}

}  // namespace hopfinv
