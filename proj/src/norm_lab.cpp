#include "chevalley/norm_lab.hpp"

#include <algorithm>
#include <limits>

namespace chev {

namespace {

constexpr FiniteQuotient::Index kUnset = std::numeric_limits<FiniteQuotient::Index>::max();

}  // namespace

std::size_t FiniteQuotient::Hasher::operator()(Index i) const noexcept {
  Entry const* e = q->at(i);
  std::size_t n = q->dim_ * q->dim_;
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::size_t k = 0; k < n; ++k) {
    h ^= e[k];
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool FiniteQuotient::Equal::operator()(Index a, Index b) const noexcept {
  return std::equal(q->at(a), q->at(a) + q->dim_ * q->dim_, q->at(b));
}

FiniteQuotient::FiniteQuotient(std::shared_ptr<ChevalleyGroup const> group, std::vector<Word> generators,
                               std::size_t mem_cap)
    : group_(std::move(group)),
      gen_words_(std::move(generators)),
      dim_(group_->dim()),
      index_(64, Hasher{this}, Equal{this}) {
  auto const& ring = *group_->ring();
  if (ring.kind() != RingKind::Modular || ring.modulus() > 65535) {
    throw std::invalid_argument("finite quotients need Z/m with m <= 65535");
  }
  m_ = static_cast<std::uint32_t>(ring.modulus().get_ui());
  if (gen_words_.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw std::invalid_argument("too many generators");
  }
  for (auto const& w : gen_words_) {
    gens_.push_back(to_sparse(group_->evaluate(w)));
    gen_inverses_.push_back(to_sparse(group_->evaluate(w.inverse())));
  }
  tmp_.resize(3 * dim_ * dim_);
  enumerate(mem_cap);
  for (auto const& w : gen_words_) gen_index_.push_back(index_of(w));
  compute_inverses();
  compute_classes();
}

FiniteQuotient::Entry* FiniteQuotient::scratch() {
  std::size_t need = (count_ + 1) * dim_ * dim_;
  if (store_.size() < need) store_.resize(need);
  return store_.data() + count_ * dim_ * dim_;
}

std::optional<FiniteQuotient::Index> FiniteQuotient::lookup(Entry const* candidate) const {
  probe_ = candidate;
  auto it = index_.find(kProbe);
  if (it == index_.end()) return std::nullopt;
  return *it;
}

FiniteQuotient::Index FiniteQuotient::insert_scratch(bool& inserted) {
  auto [it, ins] = index_.insert(static_cast<Index>(count_));
  inserted = ins;
  if (ins) ++count_;
  return *it;
}

void FiniteQuotient::from_matrix(Matrix const& g, Entry* out) const {
  if (g.dim() != dim_) throw std::invalid_argument("matrix dimension does not match the quotient");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      auto v = g(i, j).as_integer();
      out[i * dim_ + j] = static_cast<Entry>(v->get_ui());
    }
}

FiniteQuotient::Sparse FiniteQuotient::to_sparse(Matrix const& g) const {
  Sparse s;
  s.rows.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      auto v = g(i, j).as_integer()->get_ui();
      if (v != 0) s.rows[i].emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(v));
    }
  return s;
}

void FiniteQuotient::mul_dense(Entry const* a, Entry const* b, Entry* out) const {
  std::uint64_t acc[64];
  std::vector<std::uint64_t> big;
  std::uint64_t* row = acc;
  if (dim_ > 64) {
    big.resize(dim_);
    row = big.data();
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    std::fill(row, row + dim_, 0);
    for (std::size_t k = 0; k < dim_; ++k) {
      std::uint64_t aik = a[i * dim_ + k];
      if (aik == 0) continue;
      Entry const* bk = b + k * dim_;
      for (std::size_t j = 0; j < dim_; ++j) row[j] += aik * bk[j];
    }
    for (std::size_t j = 0; j < dim_; ++j) out[i * dim_ + j] = static_cast<Entry>(row[j] % m_);
  }
}

void FiniteQuotient::mul_sparse_right(Entry const* a, Sparse const& s, Entry* out) const {
  std::uint64_t acc[64];
  std::vector<std::uint64_t> big;
  std::uint64_t* row = acc;
  if (dim_ > 64) {
    big.resize(dim_);
    row = big.data();
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    std::fill(row, row + dim_, 0);
    for (std::size_t k = 0; k < dim_; ++k) {
      std::uint64_t aik = a[i * dim_ + k];
      if (aik == 0) continue;
      for (auto [j, v] : s.rows[k]) row[j] += aik * v;
    }
    for (std::size_t j = 0; j < dim_; ++j) out[i * dim_ + j] = static_cast<Entry>(row[j] % m_);
  }
}

void FiniteQuotient::mul_sparse_left(Sparse const& s, Entry const* a, Entry* out) const {
  std::uint64_t acc[64];
  std::vector<std::uint64_t> big;
  std::uint64_t* row = acc;
  if (dim_ > 64) {
    big.resize(dim_);
    row = big.data();
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    std::fill(row, row + dim_, 0);
    for (auto [k, v] : s.rows[i]) {
      Entry const* ak = a + std::size_t(k) * dim_;
      for (std::size_t j = 0; j < dim_; ++j) row[j] += std::uint64_t(v) * ak[j];
    }
    for (std::size_t j = 0; j < dim_; ++j) out[i * dim_ + j] = static_cast<Entry>(row[j] % m_);
  }
}

void FiniteQuotient::enumerate(std::size_t mem_cap) {
  Entry* e = scratch();
  std::fill(e, e + dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) e[i * dim_ + i] = static_cast<Entry>(1 % m_);
  bool inserted;
  insert_scratch(inserted);
  parent_.push_back(0);
  parent_gen_.push_back(0);

  // The store doubles as the BFS queue.
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      Entry* out = scratch();
      mul_sparse_right(at(static_cast<Index>(i)), gens_[g], out);
      insert_scratch(inserted);
      if (!inserted) continue;
      if (count_ > mem_cap) throw MemoryBudgetExceeded(mem_cap);
      parent_.push_back(static_cast<Index>(i));
      parent_gen_.push_back(static_cast<std::uint16_t>(g));
    }
  }
  store_.resize(count_ * dim_ * dim_);
  store_.shrink_to_fit();
}

void FiniteQuotient::compute_inverses() {
  // element i = parent * g, so i^{-1} = g^{-1} * parent^{-1}
  inverse_.assign(count_, 0);
  Entry* buf = tmp_.data();
  for (std::size_t i = 1; i < count_; ++i) {
    mul_sparse_left(gen_inverses_[parent_gen_[i]], at(inverse_[parent_[i]]), buf);
    auto j = lookup(buf);
    if (!j) throw std::logic_error("inverse left the enumerated group");
    inverse_[i] = *j;
  }
  parent_.clear();
  parent_.shrink_to_fit();
  parent_gen_.clear();
  parent_gen_.shrink_to_fit();
}

void FiniteQuotient::compute_classes() {
  // Orbits under conjugation by the generators are the conjugacy classes,
  // since the generators generate the (finite) group.
  class_of_.assign(count_, kUnset);
  Entry* left = tmp_.data();
  Entry* both = tmp_.data() + dim_ * dim_;
  std::vector<Index> orbit;
  for (std::size_t i = 0; i < count_; ++i) {
    if (class_of_[i] != kUnset) continue;
    auto c = static_cast<Index>(class_sizes_.size());
    class_of_[i] = c;
    orbit.assign(1, static_cast<Index>(i));
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        mul_sparse_left(gens_[g], at(orbit[k]), left);
        mul_sparse_right(left, gen_inverses_[g], both);
        auto j = lookup(both);
        if (!j) throw std::logic_error("conjugate left the enumerated group");
        if (class_of_[*j] == kUnset) {
          class_of_[*j] = c;
          orbit.push_back(*j);
        }
      }
    }
    class_sizes_.push_back(orbit.size());
    class_reps_.push_back(static_cast<Index>(i));
  }
}

FiniteQuotient::Index FiniteQuotient::multiply(Index a, Index b) const {
  Entry* buf = tmp_.data() + 2 * dim_ * dim_;
  mul_dense(at(a), at(b), buf);
  auto j = lookup(buf);
  if (!j) throw std::logic_error("product left the enumerated group");
  return *j;
}

FiniteQuotient::Index FiniteQuotient::conjugate(Index g, Index x) const {
  return multiply(multiply(x, g), inverse(x));
}

std::optional<FiniteQuotient::Index> FiniteQuotient::find(Matrix const& g) const {
  std::vector<Entry> buf(dim_ * dim_);
  from_matrix(g, buf.data());
  return lookup(buf.data());
}

FiniteQuotient::Index FiniteQuotient::index_of(Word const& w) const {
  auto i = find(group_->evaluate(w));
  if (!i) throw std::invalid_argument("word does not evaluate into the enumerated group");
  return *i;
}

Matrix FiniteQuotient::matrix(Index i) const {
  Matrix g(group_->ring(), dim_);
  Entry const* e = at(i);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) g(r, c) = group_->elem(e[r * dim_ + c]);
  return g;
}

// ---------------------------------------------------------------------------

std::unique_ptr<FiniteQuotient> enumerate_quotient(std::shared_ptr<ChevalleyAlgebra const> algebra,
                                                   std::uint32_t m, std::vector<Word> const& generators,
                                                   std::size_t mem_cap) {
  auto group = std::make_shared<ChevalleyGroup const>(std::move(algebra), RingSpec::modular(m));
  // Words were possibly built over another ring; re-home their parameters.
  std::vector<Word> local;
  for (auto const& w : generators) {
    Word out;
    for (auto const& l : w.letters) {
      auto const* r = std::get_if<RootLetter>(&l);
      if (!r) throw std::invalid_argument("quotient generators must be root letters");
      auto v = r->param.as_integer();
      if (!v) throw std::invalid_argument("quotient generator parameters must be integers");
      out.push(RootLetter{r->root, group->elem(*v)});
    }
    local.push_back(std::move(out));
  }
  return std::make_unique<FiniteQuotient>(std::move(group), std::move(local), mem_cap);
}

std::vector<Word> root_generators(ChevalleyGroup const& group) {
  std::vector<Word> gens;
  for (std::size_t r = 0; r < group.roots().size(); ++r) gens.push_back(root_word(r, group.elem(1)));
  return gens;
}

std::vector<FiniteQuotient::Index> conj_closure(FiniteQuotient const& q,
                                                std::vector<FiniteQuotient::Index> const& seeds) {
  std::vector<bool> wanted(q.class_count(), false);
  for (auto s : seeds) {
    wanted[q.class_of()[s]] = true;
    wanted[q.class_of()[q.inverse(s)]] = true;
  }
  std::vector<FiniteQuotient::Index> out;
  for (std::size_t i = 0; i < q.order(); ++i)
    if (wanted[q.class_of()[i]]) out.push_back(static_cast<FiniteQuotient::Index>(i));
  return out;
}

NormTable word_norm_bfs(FiniteQuotient const& q, std::vector<FiniteQuotient::Index> const& s,
                        std::string descriptor) {
  using Index = FiniteQuotient::Index;
  NormTable t;
  t.descriptor = std::move(descriptor);
  for (auto x : s) {
    if (x >= q.order()) throw std::out_of_range("generating set element out of range");
    t.generating_set.push_back(x);
    t.generating_set.push_back(q.inverse(x));
  }
  std::sort(t.generating_set.begin(), t.generating_set.end());
  t.generating_set.erase(std::unique(t.generating_set.begin(), t.generating_set.end()),
                         t.generating_set.end());
  auto const& S = t.generating_set;
  auto const& cls = q.class_of();

  std::vector<std::size_t> hits(q.class_count(), 0);
  for (auto x : S) ++hits[cls[x]];
  bool class_union = true;
  for (auto x : S) class_union &= hits[cls[x]] == q.class_sizes()[cls[x]];

  t.norm.assign(q.order(), -1);
  if (class_union) {
    // Balls are unions of classes: class c enters at level k + 1 iff d s lies
    // in the current ball for its representative d and some s in S = S^{-1}.
    std::vector<int> class_norm(q.class_count(), -1);
    class_norm[cls[FiniteQuotient::identity()]] = 0;
    for (int k = 0;; ++k) {
      std::vector<std::size_t> fresh;
      for (std::size_t c = 0; c < q.class_count(); ++c) {
        if (class_norm[c] >= 0) continue;
        Index d = q.class_representatives()[c];
        for (auto x : S) {
          if (class_norm[cls[q.multiply(d, x)]] >= 0) {
            fresh.push_back(c);
            break;
          }
        }
      }
      if (fresh.empty()) break;
      for (auto c : fresh) class_norm[c] = k + 1;
    }
    for (std::size_t i = 0; i < q.order(); ++i) t.norm[i] = class_norm[cls[i]];
  } else {
    std::vector<Index> frontier{FiniteQuotient::identity()};
    t.norm[FiniteQuotient::identity()] = 0;
    for (int k = 0; !frontier.empty(); ++k) {
      std::vector<Index> next;
      for (auto f : frontier)
        for (auto x : S) {
          auto p = q.multiply(f, x);
          if (t.norm[p] < 0) {
            t.norm[p] = k + 1;
            next.push_back(p);
          }
        }
      frontier = std::move(next);
    }
  }
  auto reached = static_cast<std::size_t>(std::count_if(t.norm.begin(), t.norm.end(), [](int v) { return v >= 0; }));
  if (reached != q.order()) throw NotGenerating(reached, q.order());
  return t;
}

int diameter(NormTable const& t) {
  int d = 0;
  for (int v : t.norm) d = std::max(d, v);
  return d;
}

AxiomReport check_axioms(FiniteQuotient const& q, NormTable const& t) {
  AxiomReport r;
  auto fail = [&](bool& flag, std::string const& what) {
    if (flag && r.first_violation.empty()) r.first_violation = what;
    flag = false;
  };
  auto const n = q.order();
  for (std::size_t g = 0; g < n; ++g) {
    auto gi = static_cast<FiniteQuotient::Index>(g);
    if ((t.norm[g] == 0) != (g == FiniteQuotient::identity())) {
      fail(r.positivity, "positivity fails at element " + std::to_string(g));
    }
    if (t.norm[q.inverse(gi)] != t.norm[g]) fail(r.symmetry, "symmetry fails at element " + std::to_string(g));
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      auto gi = static_cast<FiniteQuotient::Index>(g);
      auto hi = static_cast<FiniteQuotient::Index>(h);
      if (t.norm[q.multiply(gi, hi)] > t.norm[g] + t.norm[h]) {
        fail(r.triangle, "triangle inequality fails at (" + std::to_string(g) + ", " + std::to_string(h) + ")");
      }
      if (t.norm[q.conjugate(gi, q.inverse(hi))] != t.norm[g]) {
        fail(r.conjugation, "conjugation invariance fails at (" + std::to_string(g) + ", " + std::to_string(h) + ")");
      }
      ++r.pairs;
    }
  return r;
}

}  // namespace chev
