#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "origami/core.hpp"
#include "origami/perm.hpp"

namespace origami {

enum class GroupKind { finite_perm, free_abelian, free_group };

const char* to_string(GroupKind k);

// One group element in canonical normal form:
//   finite_perm   image table of a permutation of 1..degree
//   free_abelian  integer vector of length rank
//   free_group    freely reduced word; letter +j is generator j, -j its inverse
class GroupElem {
 public:
  static GroupElem perm_elem(std::vector<SquareId> images);
  static GroupElem perm_elem(const FinitePerm& p);
  static GroupElem vec_elem(std::vector<std::int64_t> v);
  static GroupElem word_elem(std::vector<std::int32_t> letters);  // reduces

  GroupKind kind() const;
  bool is_identity() const;

  const std::vector<SquareId>& perm() const;
  const std::vector<std::int64_t>& vec() const;
  const std::vector<std::int32_t>& word() const;

  // Canonical text key; equal elements have equal keys.  Used for stable
  // fiber indexing and for deterministic reports.
  std::string key() const;
  // Human-readable form: cycle notation / integer tuple / letters a..z with
  // uppercase inverses, "e" for the empty word.
  std::string display() const;

  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.payload_ == b.payload_;
  }
  friend bool operator<(const GroupElem& a, const GroupElem& b) {
    return a.payload_ < b.payload_;
  }

 private:
  using Payload = std::variant<std::vector<SquareId>, std::vector<std::int64_t>,
                               std::vector<std::int32_t>>;
  explicit GroupElem(Payload p) : payload_(std::move(p)) {}
  Payload payload_;
};

// Multiplication applies the right operand first (so for permutations
// multiply(g, h) acts as i -> g(h(i))).  Throws MixedGroupKinds when the
// operands live in different kinds, degrees or dimensions.
GroupElem multiply(const GroupElem& a, const GroupElem& b);
GroupElem invert(const GroupElem& a);

// Right-Cayley closure of gens; duplicate-free, canonically sorted, contains
// the identity.  Returns nullopt once more than cap elements appear.
// Finite permutation elements only.
std::optional<std::vector<GroupElem>> close_generators(
    const std::vector<GroupElem>& gens, std::int64_t cap = 1'000'000);

class Group {
 public:
  // degree is the size of the permuted set; gens must all have that degree
  // and be nonempty (use {identity} for the trivial group).
  static Group finite_perm_group(SquareId degree, std::vector<GroupElem> gens);
  static Group free_abelian(std::int64_t rank);
  static Group free_group(std::int64_t rank);  // rank <= 26 (letters a..z)

  GroupKind kind() const { return kind_; }
  // Permutation degree for finite_perm, rank otherwise.
  std::int64_t rank() const { return rank_; }
  const std::vector<GroupElem>& generators() const { return gens_; }
  GroupElem identity() const;

  // Do gens generate this group?
  //   finite_perm:  decided by closure comparison (unknown only past cap)
  //   free_abelian: decided by integer row reduction of the lattice
  //   free_group:   yes exactly for the standard basis up to order and
  //                 inversion, otherwise unknown
  Tribool generates(const std::vector<GroupElem>& gens,
                    std::int64_t cap = 1'000'000) const;

  // Closure of this group's own generators (finite_perm only).
  std::optional<std::vector<GroupElem>> closure(std::int64_t cap = 1'000'000) const;

  std::string display() const;

 private:
  Group(GroupKind k, std::int64_t rank, std::vector<GroupElem> gens)
      : kind_(k), rank_(rank), gens_(std::move(gens)) {}
  GroupKind kind_;
  std::int64_t rank_;
  std::vector<GroupElem> gens_;
};

}  // namespace origami
