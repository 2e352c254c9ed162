#ifndef CHEVALLEY_NORM_LAB_HPP_
#define CHEVALLEY_NORM_LAB_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "chevalley/group.hpp"

namespace chev {

class MemoryBudgetExceeded : public std::runtime_error {
 public:
  explicit MemoryBudgetExceeded(std::size_t cap)
      : std::runtime_error("element store exceeded the budget of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class NotGenerating : public std::runtime_error {
 public:
  NotGenerating(std::size_t reached, std::size_t total)
      : std::runtime_error("generating set reaches " + std::to_string(reached) + " of " +
                           std::to_string(total) + " elements"),
        reached_(reached),
        total_(total) {}
  std::size_t reached() const noexcept { return reached_; }
  std::size_t total() const noexcept { return total_; }

 private:
  std::size_t reached_;
  std::size_t total_;
};

inline constexpr std::size_t kDefaultMemoryCap = 10'000'000;

// A finite group E(Phi, Z/m) in the adjoint realization: every element is a
// dim x dim matrix with entries in [0, m) stored contiguously, indexed by a
// hash set over the store. Element 0 is the identity; the store is in BFS
// order from the generators.
class FiniteQuotient {
 public:
  using Index = std::uint32_t;

  // Throws MemoryBudgetExceeded once more than mem_cap elements are stored.
  FiniteQuotient(std::shared_ptr<ChevalleyGroup const> group, std::vector<Word> generators,
                 std::size_t mem_cap = kDefaultMemoryCap);

  FiniteQuotient(FiniteQuotient const&) = delete;
  FiniteQuotient& operator=(FiniteQuotient const&) = delete;

  ChevalleyGroup const& group() const noexcept { return *group_; }
  std::size_t order() const noexcept { return count_; }
  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t modulus() const noexcept { return m_; }
  std::vector<Word> const& generator_words() const noexcept { return gen_words_; }
  std::vector<Index> const& generators() const noexcept { return gen_index_; }

  static constexpr Index identity() { return 0; }
  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const { return inverse_[a]; }
  // x g x^{-1}
  Index conjugate(Index g, Index x) const;
  std::optional<Index> find(Matrix const& g) const;
  Index index_of(Word const& w) const;
  Matrix matrix(Index i) const;

  // Conjugacy class id of every element (classes numbered by first element).
  std::vector<Index> const& class_of() const { return class_of_; }
  std::size_t class_count() const noexcept { return class_sizes_.size(); }
  std::vector<std::size_t> const& class_sizes() const noexcept { return class_sizes_; }
  std::vector<Index> const& class_representatives() const noexcept { return class_reps_; }

 private:
  using Entry = std::uint16_t;
  struct Sparse {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;  // (col, value)
  };

  struct Hasher {
    FiniteQuotient const* q;
    std::size_t operator()(Index i) const noexcept;
  };
  struct Equal {
    FiniteQuotient const* q;
    bool operator()(Index a, Index b) const noexcept;
  };

  // Hash-set key standing for the candidate behind probe_, so lookups need no
  // insertion. Lookups therefore are not safe to run concurrently.
  static constexpr Index kProbe = 0xfffffffe;
  Entry const* at(Index i) const {
    return i == kProbe ? probe_ : store_.data() + std::size_t(i) * dim_ * dim_;
  }
  // The slot one past the last element, where candidates are built before insertion.
  Entry* scratch();
  std::optional<Index> lookup(Entry const* candidate) const;
  Index insert_scratch(bool& inserted);
  void from_matrix(Matrix const& g, Entry* out) const;
  Sparse to_sparse(Matrix const& g) const;
  void mul_dense(Entry const* a, Entry const* b, Entry* out) const;
  void mul_sparse_right(Entry const* a, Sparse const& s, Entry* out) const;
  void mul_sparse_left(Sparse const& s, Entry const* a, Entry* out) const;

  void enumerate(std::size_t mem_cap);
  void compute_inverses();
  void compute_classes();

  std::shared_ptr<ChevalleyGroup const> group_;
  std::vector<Word> gen_words_;
  std::size_t dim_;
  std::uint32_t m_;
  std::size_t count_ = 0;
  std::vector<Entry> store_;
  std::unordered_set<Index, Hasher, Equal> index_;
  std::vector<Sparse> gens_;
  std::vector<Sparse> gen_inverses_;
  std::vector<Index> gen_index_;
  std::vector<Index> parent_;
  std::vector<std::uint16_t> parent_gen_;
  std::vector<Index> inverse_;
  std::vector<Index> class_of_;
  std::vector<std::size_t> class_sizes_;
  std::vector<Index> class_reps_;
  mutable std::vector<Entry> tmp_;
  mutable Entry const* probe_ = nullptr;
};

// Enumerates the subgroup of E(Phi, Z/m) generated by the given words.
std::unique_ptr<FiniteQuotient> enumerate_quotient(std::shared_ptr<ChevalleyAlgebra const> algebra,
                                                   std::uint32_t m, std::vector<Word> const& generators,
                                                   std::size_t mem_cap = kDefaultMemoryCap);

// All root letters x_alpha(1).
std::vector<Word> root_generators(ChevalleyGroup const& group);

// {g s^{+-1} g^{-1} : g in Q, s in seeds}, sorted.
std::vector<FiniteQuotient::Index> conj_closure(FiniteQuotient const& q,
                                                std::vector<FiniteQuotient::Index> const& seeds);

struct NormTable {
  std::vector<int> norm;                             // by element index
  std::vector<FiniteQuotient::Index> generating_set;  // symmetric, sorted
  std::string descriptor;
};

// Word norm of the Cayley graph on S (closed under inverses first). When S is
// a union of conjugacy classes the balls are too, so BFS runs on class
// representatives. Throws NotGenerating if S does not reach every element.
NormTable word_norm_bfs(FiniteQuotient const& q, std::vector<FiniteQuotient::Index> const& s,
                        std::string descriptor = {});

int diameter(NormTable const& t);

struct AxiomReport {
  bool positivity = true;    // nu(g) = 0 iff g = 1
  bool symmetry = true;      // nu(g^{-1}) = nu(g)
  bool triangle = true;      // nu(g h) <= nu(g) + nu(h)
  bool conjugation = true;   // nu(h^{-1} g h) = nu(g)
  std::size_t pairs = 0;
  std::string first_violation;
  bool all() const { return positivity && symmetry && triangle && conjugation; }
};

// Checks the four norm axioms over all elements and all pairs.
AxiomReport check_axioms(FiniteQuotient const& q, NormTable const& t);

}  // namespace chev

#endif  // CHEVALLEY_NORM_LAB_HPP_
