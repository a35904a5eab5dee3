#include "origami/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace origami {

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::finite_perm: return "finite_perm";
    case GroupKind::free_abelian: return "free_abelian";
    default: return "free_group";
  }
}

namespace {

std::vector<std::int32_t> reduce_word(std::vector<std::int32_t> w) {
  std::vector<std::int32_t> out;
  for (std::int32_t l : w) {
    if (l == 0) throw Error("word letter 0 is not a generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

char letter_char(std::int32_t l) {
  const std::int32_t j = l > 0 ? l : -l;
  if (j > 26) throw Error("free-group letters beyond z are not printable");
  return static_cast<char>((l > 0 ? 'a' : 'A') + (j - 1));
}

}  // namespace

GroupElem GroupElem::perm_elem(std::vector<SquareId> images) {
  FinitePerm check(images);  // validates bijection
  (void)check;
  return GroupElem(Payload(std::in_place_index<0>, std::move(images)));
}

GroupElem GroupElem::perm_elem(const FinitePerm& p) {
  return GroupElem(Payload(std::in_place_index<0>, p.images()));
}

GroupElem GroupElem::vec_elem(std::vector<std::int64_t> v) {
  if (v.empty()) throw Error("free-abelian element needs rank >= 1");
  return GroupElem(Payload(std::in_place_index<1>, std::move(v)));
}

GroupElem GroupElem::word_elem(std::vector<std::int32_t> letters) {
  return GroupElem(Payload(std::in_place_index<2>, reduce_word(std::move(letters))));
}

GroupKind GroupElem::kind() const {
  switch (payload_.index()) {
    case 0: return GroupKind::finite_perm;
    case 1: return GroupKind::free_abelian;
    default: return GroupKind::free_group;
  }
}

bool GroupElem::is_identity() const {
  switch (payload_.index()) {
    case 0: {
      const auto& im = std::get<0>(payload_);
      for (std::size_t i = 0; i < im.size(); ++i)
        if (im[i] != static_cast<SquareId>(i) + 1) return false;
      return true;
    }
    case 1: {
      for (std::int64_t x : std::get<1>(payload_))
        if (x != 0) return false;
      return true;
    }
    default:
      return std::get<2>(payload_).empty();
  }
}

const std::vector<SquareId>& GroupElem::perm() const {
  if (payload_.index() != 0) throw MixedGroupKinds("element is not a permutation");
  return std::get<0>(payload_);
}

const std::vector<std::int64_t>& GroupElem::vec() const {
  if (payload_.index() != 1) throw MixedGroupKinds("element is not an integer vector");
  return std::get<1>(payload_);
}

const std::vector<std::int32_t>& GroupElem::word() const {
  if (payload_.index() != 2) throw MixedGroupKinds("element is not a reduced word");
  return std::get<2>(payload_);
}

std::string GroupElem::key() const {
  std::ostringstream os;
  switch (payload_.index()) {
    case 0: {
      os << 'p';
      for (SquareId x : std::get<0>(payload_)) os << ':' << x;
      break;
    }
    case 1: {
      os << 'z';
      for (std::int64_t x : std::get<1>(payload_)) os << ':' << x;
      break;
    }
    default: {
      os << 'w';
      for (std::int32_t l : std::get<2>(payload_)) os << ':' << l;
      break;
    }
  }
  return os.str();
}

std::string GroupElem::display() const {
  switch (payload_.index()) {
    case 0: {
      const FinitePerm p{std::vector<SquareId>(std::get<0>(payload_))};
      std::ostringstream os;
      bool any = false;
      for (const auto& c : cycle_decomposition(p)) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (k) os << ',';
          os << c[k];
        }
        os << ')';
      }
      return any ? os.str() : "()";
    }
    case 1: {
      std::ostringstream os;
      os << '(';
      const auto& v = std::get<1>(payload_);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) os << ',';
        os << v[k];
      }
      os << ')';
      return os.str();
    }
    default: {
      const auto& w = std::get<2>(payload_);
      if (w.empty()) return "e";
      std::string s;
      for (std::int32_t l : w) s.push_back(letter_char(l));
      return s;
    }
  }
}

GroupElem multiply(const GroupElem& a, const GroupElem& b) {
  if (a.kind() != b.kind())
    throw MixedGroupKinds(std::string("cannot multiply ") + to_string(a.kind()) +
                          " by " + to_string(b.kind()));
  switch (a.kind()) {
    case GroupKind::finite_perm: {
      const auto& ga = a.perm();
      const auto& gb = b.perm();
      if (ga.size() != gb.size())
        throw MixedGroupKinds("permutation degrees differ: " +
                              std::to_string(ga.size()) + " vs " +
                              std::to_string(gb.size()));
      std::vector<SquareId> im(ga.size());
      // b first, then a.
      for (std::size_t i = 0; i < ga.size(); ++i)
        im[i] = ga[static_cast<std::size_t>(gb[i]) - 1];
      return GroupElem::perm_elem(std::move(im));
    }
    case GroupKind::free_abelian: {
      const auto& va = a.vec();
      const auto& vb = b.vec();
      if (va.size() != vb.size())
        throw MixedGroupKinds("free-abelian ranks differ: " +
                              std::to_string(va.size()) + " vs " +
                              std::to_string(vb.size()));
      std::vector<std::int64_t> v(va.size());
      for (std::size_t i = 0; i < va.size(); ++i) v[i] = va[i] + vb[i];
      return GroupElem::vec_elem(std::move(v));
    }
    default: {
      std::vector<std::int32_t> w = a.word();
      const auto& wb = b.word();
      w.insert(w.end(), wb.begin(), wb.end());
      return GroupElem::word_elem(std::move(w));
    }
  }
}

GroupElem invert(const GroupElem& a) {
  switch (a.kind()) {
    case GroupKind::finite_perm: {
      const auto& im = a.perm();
      std::vector<SquareId> inv(im.size());
      for (std::size_t i = 0; i < im.size(); ++i)
        inv[static_cast<std::size_t>(im[i]) - 1] = static_cast<SquareId>(i) + 1;
      return GroupElem::perm_elem(std::move(inv));
    }
    case GroupKind::free_abelian: {
      std::vector<std::int64_t> v = a.vec();
      for (auto& x : v) x = -x;
      return GroupElem::vec_elem(std::move(v));
    }
    default: {
      const auto& w = a.word();
      std::vector<std::int32_t> r(w.rbegin(), w.rend());
      for (auto& l : r) l = -l;
      return GroupElem::word_elem(std::move(r));
    }
  }
}

std::optional<std::vector<GroupElem>> close_generators(
    const std::vector<GroupElem>& gens, std::int64_t cap) {
  if (gens.empty()) throw Error("closure of an empty generating set");
  for (const auto& g : gens)
    if (g.kind() != GroupKind::finite_perm)
      throw MixedGroupKinds("closure enumeration needs finite permutation elements");
  const GroupElem id =
      GroupElem::perm_elem(FinitePerm::identity(static_cast<SquareId>(gens[0].perm().size())));
  std::set<GroupElem> seen{id};
  std::deque<GroupElem> frontier{id};
  while (!frontier.empty()) {
    GroupElem x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      GroupElem y = multiply(x, g);
      if (seen.insert(y).second) {
        if (static_cast<std::int64_t>(seen.size()) > cap) return std::nullopt;
        frontier.push_back(std::move(y));
      }
    }
  }
  return std::vector<GroupElem>(seen.begin(), seen.end());
}

Group Group::finite_perm_group(SquareId degree, std::vector<GroupElem> gens) {
  if (degree < 1) throw Error("permutation group needs degree >= 1");
  if (gens.empty()) throw Error("a group needs at least one generator");
  for (const auto& g : gens) {
    if (g.kind() != GroupKind::finite_perm)
      throw MixedGroupKinds("finite_perm group given a non-permutation generator");
    if (static_cast<SquareId>(g.perm().size()) != degree)
      throw MixedGroupKinds("generator degree " + std::to_string(g.perm().size()) +
                            " does not match group degree " + std::to_string(degree));
  }
  return Group(GroupKind::finite_perm, degree, std::move(gens));
}

Group Group::free_abelian(std::int64_t rank) {
  if (rank < 1) throw Error("free-abelian group needs rank >= 1");
  std::vector<GroupElem> gens;
  for (std::int64_t j = 0; j < rank; ++j) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
    v[static_cast<std::size_t>(j)] = 1;
    gens.push_back(GroupElem::vec_elem(std::move(v)));
  }
  return Group(GroupKind::free_abelian, rank, std::move(gens));
}

Group Group::free_group(std::int64_t rank) {
  if (rank < 1) throw Error("free group needs rank >= 1");
  if (rank > 26) throw Error("free group rank capped at 26 (letters a..z)");
  std::vector<GroupElem> gens;
  for (std::int64_t j = 1; j <= rank; ++j)
    gens.push_back(GroupElem::word_elem({static_cast<std::int32_t>(j)}));
  return Group(GroupKind::free_group, rank, std::move(gens));
}

GroupElem Group::identity() const {
  switch (kind_) {
    case GroupKind::finite_perm:
      return GroupElem::perm_elem(FinitePerm::identity(rank_));
    case GroupKind::free_abelian:
      return GroupElem::vec_elem(std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0));
    default:
      return GroupElem::word_elem({});
  }
}

namespace {

// Does the row lattice of m span all of Z^k?  Integer row reduction by
// repeated Euclidean steps; the lattice is full exactly when the reduced
// staircase has a +-1 pivot in every column.
bool lattice_is_full(std::vector<std::vector<std::int64_t>> m, std::size_t k) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    // Euclid on column col among rows >= row until at most one nonzero stays.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = row; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        if (best == m.size() ||
            std::abs(m[r][col]) < std::abs(m[best][col]))
          best = r;
      }
      if (best == m.size()) return false;  // column is zero: rank deficient
      std::swap(m[row], m[best]);
      bool others = false;
      for (std::size_t r = row + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        const std::int64_t q = m[r][col] / m[row][col];
        for (std::size_t c = 0; c < k; ++c) m[r][c] -= q * m[row][c];
        if (m[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (std::abs(m[row][col]) != 1) return false;  // pivot with index > 1
    ++row;
  }
  return true;
}

}  // namespace

Tribool Group::generates(const std::vector<GroupElem>& gens, std::int64_t cap) const {
  if (gens.empty()) {
    // The empty set generates the trivial subgroup.
    if (kind_ != GroupKind::finite_perm) return Tribool::no;
    auto full = close_generators(gens_, cap);
    if (!full) return Tribool::unknown;
    return full->size() == 1 ? Tribool::yes : Tribool::no;
  }
  for (const auto& g : gens)
    if (g.kind() != kind_)
      throw MixedGroupKinds("generates: element kind does not match group kind");
  switch (kind_) {
    case GroupKind::finite_perm: {
      for (const auto& g : gens)
        if (static_cast<std::int64_t>(g.perm().size()) != rank_)
          throw MixedGroupKinds("generates: permutation degree mismatch");
      auto sub = close_generators(gens, cap);
      auto full = close_generators(gens_, cap);
      if (!sub || !full) return Tribool::unknown;
      return *sub == *full ? Tribool::yes : Tribool::no;
    }
    case GroupKind::free_abelian: {
      std::vector<std::vector<std::int64_t>> m;
      for (const auto& g : gens) {
        if (static_cast<std::int64_t>(g.vec().size()) != rank_)
          throw MixedGroupKinds("generates: free-abelian rank mismatch");
        m.push_back(g.vec());
      }
      return lattice_is_full(std::move(m), static_cast<std::size_t>(rank_))
                 ? Tribool::yes
                 : Tribool::no;
    }
    default: {
      // Only the standard basis (up to order and inversion) is recognized;
      // everything else is reported unknown rather than guessed.
      if (static_cast<std::int64_t>(gens.size()) != rank_) return Tribool::unknown;
      std::vector<bool> seen(static_cast<std::size_t>(rank_), false);
      for (const auto& g : gens) {
        const auto& w = g.word();
        if (w.size() != 1) return Tribool::unknown;
        const std::int32_t j = w[0] > 0 ? w[0] : -w[0];
        if (j > rank_ || seen[static_cast<std::size_t>(j) - 1])
          return Tribool::unknown;
        seen[static_cast<std::size_t>(j) - 1] = true;
      }
      return Tribool::yes;
    }
  }
}

std::optional<std::vector<GroupElem>> Group::closure(std::int64_t cap) const {
  if (kind_ != GroupKind::finite_perm)
    throw MixedGroupKinds("closure enumeration is for finite permutation groups");
  return close_generators(gens_, cap);
}

std::string Group::display() const {
  std::ostringstream os;
  switch (kind_) {
    case GroupKind::finite_perm: {
      os << "perm:";
      for (std::size_t i = 0; i < gens_.size(); ++i)
        os << (i ? "; " : " ") << gens_[i].display();
      break;
    }
    case GroupKind::free_abelian:
      os << "Z^" << rank_;
      break;
    default:
      os << "F_" << rank_;
      break;
  }
  return os.str();
}

}  // namespace origami
