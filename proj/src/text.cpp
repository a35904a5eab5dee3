#include "origami/text.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

namespace origami {

namespace {

// Single-line scanner tracking 1-based columns for error positions.
struct Scanner {
  const std::string& s;
  int line;
  std::size_t pos = 0;

  int col() const { return static_cast<int>(pos) + 1; }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c, const char* what) {
    if (peek() != c)
      throw ParseError(line, col(), std::string("expected ") + what);
    ++pos;
  }
  std::int64_t number(const char* what) {
    skip_ws();
    const int start = col();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError(line, start, std::string("expected ") + what);
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > (INT64_MAX - 9) / 10)
        throw ParseError(line, start, "number too large");
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }
};

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);
  return lines;
}

// Cycles like (1,2)(3); indices validated against 1..n with repeats rejected.
FinitePerm parse_cycles_line(Scanner& sc, SquareId n) {
  std::vector<std::vector<SquareId>> cycles;
  std::set<SquareId> used;
  while (!sc.done()) {
    sc.expect('(', "'('");
    std::vector<SquareId> cycle;
    if (sc.peek() != ')') {
      for (;;) {
        const SquareId i = sc.number("a square index");
        if (i < 1 || i > n)
          throw SemanticError(sc.line, "square index " + std::to_string(i) +
                                           " outside 1.." + std::to_string(n));
        if (!used.insert(i).second)
          throw SemanticError(sc.line, "square index " + std::to_string(i) +
                                           " appears twice");
        cycle.push_back(i);
        if (sc.peek() != ',') break;
        ++sc.pos;
      }
    }
    sc.expect(')', "')'");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return FinitePerm::from_cycles(n, cycles);
}

}  // namespace

Origami parse_origami_text(const std::string& text) {
  const auto lines = split_lines(text);
  std::optional<SquareId> n;
  std::optional<std::string> builtin;
  std::optional<FinitePerm> sigma, tau;
  int sigma_line = 0, tau_line = 0;
  int last_line = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string body = strip_comment(lines[li]);
    if (trim(body).empty()) continue;
    last_line = line_no;

    Scanner sc{body, line_no};
    sc.skip_ws();
    const std::size_t key_start = sc.pos;
    while (sc.pos < body.size() && body[sc.pos] != ':' &&
           !std::isspace(static_cast<unsigned char>(body[sc.pos])))
      ++sc.pos;
    const std::string key = body.substr(key_start, sc.pos - key_start);
    if (sc.peek() != ':')
      throw ParseError(line_no, sc.col(), "expected ':' after '" + key + "'");
    ++sc.pos;

    if (key == "n") {
      if (n || builtin)
        throw SemanticError(line_no, "duplicate n: line");
      sc.skip_ws();
      if (body.compare(sc.pos, 9, "countable") == 0) {
        sc.pos += 9;
        sc.skip_ws();
        const std::size_t name_start = sc.pos;
        while (sc.pos < body.size() &&
               !std::isspace(static_cast<unsigned char>(body[sc.pos])))
          ++sc.pos;
        const std::string name = body.substr(name_start, sc.pos - name_start);
        if (name.empty())
          throw ParseError(line_no, static_cast<int>(name_start) + 1,
                           "expected a builtin origami name");
        if (name != "staircase" && name != "lemma1")
          throw SemanticError(line_no, "unknown builtin origami '" + name + "'");
        if (!sc.done())
          throw ParseError(line_no, sc.col(), "unexpected trailing text");
        builtin = "staircase";
      } else {
        const SquareId v = sc.number("a square count");
        if (v < 1) throw SemanticError(line_no, "n must be at least 1");
        if (!sc.done())
          throw ParseError(line_no, sc.col(), "unexpected trailing text");
        n = v;
      }
    } else if (key == "sigma" || key == "tau") {
      if (builtin)
        throw SemanticError(line_no,
                            "builtin origamis define their own gluings");
      if (!n)
        throw SemanticError(line_no, "n: must come before " + key + ":");
      auto& slot = key == "sigma" ? sigma : tau;
      if (slot) throw SemanticError(line_no, "duplicate " + key + ": line");
      slot = parse_cycles_line(sc, *n);
      (key == "sigma" ? sigma_line : tau_line) = line_no;
    } else {
      throw ParseError(line_no, static_cast<int>(key_start) + 1,
                       "expected n:, sigma: or tau:");
    }
  }

  if (builtin) return staircase_origami();
  if (!n) throw ParseError(last_line + 1, 1, "missing n: line");
  if (!sigma) throw ParseError(last_line + 1, 1, "missing sigma: line");
  if (!tau) throw ParseError(last_line + 1, 1, "missing tau: line");
  (void)sigma_line;
  (void)tau_line;
  return make_origami(std::move(*sigma), std::move(*tau));
}

std::string render_origami_text(const Origami& o) {
  if (!o.is_finite()) {
    if (o.name().empty())
      throw Error("only builtin countable origamis can be rendered as text");
    return "n: countable " + o.name() + "\n";
  }
  std::ostringstream os;
  os << "n: " << o.size() << "\n";
  os << "sigma: " << cycles_to_string(cycle_decomposition(o.sigma_perm()))
     << "\n";
  os << "tau: " << cycles_to_string(cycle_decomposition(o.tau_perm())) << "\n";
  return os.str();
}

namespace {

// Cycle list for one permutation generator; degree inferred later, so this
// only collects cycles and the largest index.
std::vector<std::vector<SquareId>> scan_generator_cycles(Scanner& sc,
                                                         SquareId& max_index) {
  std::vector<std::vector<SquareId>> cycles;
  std::set<SquareId> used;
  while (!sc.done() && sc.peek() == '(') {
    ++sc.pos;
    std::vector<SquareId> cycle;
    if (sc.peek() != ')') {
      for (;;) {
        const SquareId i = sc.number("a point");
        if (i < 1)
          throw SemanticError(sc.line, "points are numbered from 1");
        if (!used.insert(i).second)
          throw SemanticError(sc.line,
                              "point " + std::to_string(i) + " appears twice");
        max_index = std::max(max_index, i);
        cycle.push_back(i);
        if (sc.peek() != ',') break;
        ++sc.pos;
      }
    }
    sc.expect(')', "')'");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  if (!sc.done())
    throw ParseError(sc.line, sc.col(), "expected '(' or end of generator");
  return cycles;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Group perm_group_from_cycle_lists(
    const std::vector<std::vector<std::vector<SquareId>>>& lists) {
  SquareId degree = 1;
  for (const auto& cycles : lists)
    for (const auto& c : cycles)
      for (SquareId i : c) degree = std::max(degree, i);
  std::vector<GroupElem> gens;
  for (const auto& cycles : lists)
    gens.push_back(
        GroupElem::perm_elem(FinitePerm::from_cycles(degree, cycles)));
  return Group::finite_perm_group(degree, std::move(gens));
}

Group named_perm_group(const std::string& name) {
  const auto cyc = [](std::initializer_list<std::vector<SquareId>> cs) {
    return std::vector<std::vector<SquareId>>(cs);
  };
  if (name == "trivial") return perm_group_from_cycle_lists({cyc({})});
  if (name == "S3") return perm_group_from_cycle_lists({cyc({{1, 2}}), cyc({{1, 3}})});
  if (name == "D4")
    return perm_group_from_cycle_lists({cyc({{1, 2, 3, 4}}), cyc({{1, 3}})});
  if (name == "Q8")
    return perm_group_from_cycle_lists(
        {cyc({{1, 2, 5, 6}, {3, 4, 7, 8}}), cyc({{1, 3, 5, 7}, {2, 8, 6, 4}})});
  if (name == "Z/2xZ/2")
    return perm_group_from_cycle_lists(
        {cyc({{1, 2}, {3, 4}}), cyc({{1, 3}, {2, 4}})});
  throw SemanticError(1, "unknown group name '" + name + "'");
}

}  // namespace

Group parse_group_spec(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.empty()) throw ParseError(1, 1, "empty group specification");

  if (s == "Z") return Group::free_abelian(1);
  if (s == "trivial" || s == "S3" || s == "D4" || s == "Q8" || s == "Z/2xZ/2")
    return named_perm_group(s);

  if (s.rfind("Z^", 0) == 0) {
    Scanner sc{s, 1};
    sc.pos = 2;
    const std::int64_t k = sc.number("a rank");
    if (!sc.done()) throw ParseError(1, sc.col(), "unexpected trailing text");
    if (k < 1) throw SemanticError(1, "rank must be at least 1");
    if (k > 64) throw SemanticError(1, "rank larger than 64 is not supported");
    return Group::free_abelian(k);
  }
  if (s.rfind("F_", 0) == 0) {
    Scanner sc{s, 1};
    sc.pos = 2;
    const std::int64_t r = sc.number("a rank");
    if (!sc.done()) throw ParseError(1, sc.col(), "unexpected trailing text");
    if (r < 1 || r > 26)
      throw SemanticError(1, "free group rank must be between 1 and 26");
    return Group::free_group(r);
  }
  if (s.rfind("Z/", 0) == 0) {
    Scanner sc{s, 1};
    sc.pos = 2;
    const std::int64_t m = sc.number("a modulus");
    if (!sc.done()) throw ParseError(1, sc.col(), "unexpected trailing text");
    if (m < 1) throw SemanticError(1, "modulus must be at least 1");
    if (m > 100'000) throw SemanticError(1, "modulus too large");
    if (m == 1) return named_perm_group("trivial");
    std::vector<SquareId> cycle(static_cast<std::size_t>(m));
    std::iota(cycle.begin(), cycle.end(), 1);
    return perm_group_from_cycle_lists({{cycle}});
  }
  if (s.rfind("perm:", 0) == 0) {
    std::vector<std::vector<std::vector<SquareId>>> lists;
    for (const std::string& part : split_on(s.substr(5), ';')) {
      Scanner sc{part, 1};
      SquareId max_index = 1;
      lists.push_back(scan_generator_cycles(sc, max_index));
    }
    if (lists.empty()) throw ParseError(1, 6, "expected at least one generator");
    return perm_group_from_cycle_lists(lists);
  }
  throw ParseError(1, 1, "unrecognized group specification '" + s + "'");
}

namespace {

GroupElem parse_elem_at(const Group& g, const std::string& text, int line) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError(line, 1, "expected a group element");
  Scanner sc{s, line};
  switch (g.kind()) {
    case GroupKind::finite_perm: {
      SquareId max_index = 1;
      const auto cycles = scan_generator_cycles(sc, max_index);
      if (max_index > g.rank())
        throw SemanticError(line, "point " + std::to_string(max_index) +
                                      " beyond the group degree " +
                                      std::to_string(g.rank()));
      return GroupElem::perm_elem(FinitePerm::from_cycles(g.rank(), cycles));
    }
    case GroupKind::free_abelian: {
      std::vector<std::int64_t> v;
      if (sc.peek() == '(') {
        ++sc.pos;
        if (sc.peek() != ')') {
          for (;;) {
            v.push_back(sc.number("an integer"));
            if (sc.peek() != ',') break;
            ++sc.pos;
          }
        }
        sc.expect(')', "')'");
      } else {
        v.push_back(sc.number("an integer"));
      }
      if (!sc.done())
        throw ParseError(line, sc.col(), "unexpected trailing text");
      if (static_cast<std::int64_t>(v.size()) != g.rank())
        throw SemanticError(line, "expected " + std::to_string(g.rank()) +
                                      " coordinates, got " +
                                      std::to_string(v.size()));
      return GroupElem::vec_elem(std::move(v));
    }
    default: {
      sc.skip_ws();
      if (s.empty()) throw ParseError(line, 1, "expected a word");
      std::vector<std::int32_t> word;
      if (sc.peek() == 'e' && sc.pos + 1 >= s.size()) return g.identity();
      while (sc.pos < s.size()) {
        const char c = s[sc.pos];
        std::int32_t letter;
        if (c >= 'a' && c <= 'z')
          letter = static_cast<std::int32_t>(c - 'a') + 1;
        else if (c >= 'A' && c <= 'Z')
          letter = -(static_cast<std::int32_t>(c - 'A') + 1);
        else
          throw ParseError(line, sc.col(), "expected a letter");
        if ((letter > 0 ? letter : -letter) > g.rank())
          throw SemanticError(line, std::string("letter '") + c +
                                        "' beyond the group rank " +
                                        std::to_string(g.rank()));
        word.push_back(letter);
        ++sc.pos;
      }
      return GroupElem::word_elem(std::move(word));
    }
  }
}

}  // namespace

GroupElem parse_group_elem(const Group& g, const std::string& text) {
  return parse_elem_at(g, text, 1);
}

VoltageAssignment parse_voltage_file(const Group& g, const std::string& text) {
  VoltageAssignment va(g);
  std::set<std::pair<char, SquareId>> assigned;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string body = strip_comment(lines[li]);
    if (trim(body).empty()) continue;
    Scanner sc{body, line_no};
    const char dir = sc.peek();
    if (dir != 'h' && dir != 'v')
      throw ParseError(line_no, sc.col(), "expected 'h' or 'v'");
    ++sc.pos;
    const SquareId square = sc.number("a square index");
    if (square < 1) throw SemanticError(line_no, "squares are numbered from 1");
    if (!assigned.insert({dir, square}).second)
      throw SemanticError(line_no, std::string("edge ") + dir + " " +
                                       std::to_string(square) +
                                       " assigned twice");
    const GroupElem e =
        parse_elem_at(g, body.substr(sc.pos), line_no);
    if (dir == 'h')
      va.set_h(square, e);
    else
      va.set_v(square, e);
  }
  return va;
}

}  // namespace origami
