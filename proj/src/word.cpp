#include "casg/word.hpp"

#include <algorithm>
#include <cctype>

#include "casg/errors.hpp"

namespace casg {

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(const GroupPresentation& alphabet, std::vector<Letter> letters)
    : alphabet_(&alphabet) {
  for (const Letter& l : letters) {
    if (l.gen < 0 || l.gen >= alphabet.rank() || (l.sign != 1 && l.sign != -1))
      throw AlphabetError("letter outside the alphabet of " + alphabet.name());
  }
  letters_ = free_reduce(letters);
}

Word Word::identity(const GroupPresentation& alphabet) { return Word(alphabet, {}); }

Word Word::gen(const GroupPresentation& alphabet, int index, int exponent) {
  std::vector<Letter> ls;
  for (int i = 0; i < std::abs(exponent); ++i)
    ls.push_back({index, exponent > 0 ? 1 : -1});
  return Word(alphabet, std::move(ls));
}

const GroupPresentation& Word::alphabet() const {
  if (!alphabet_) throw AlphabetError("word has no alphabet");
  return *alphabet_;
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    ls.push_back(it->inverse());
  Word w;
  w.alphabet_ = alphabet_;
  w.letters_ = std::move(ls);  // inverse of a reduced word is reduced
  return w;
}

Word operator*(const Word& u, const Word& v) {
  if (u.alphabet_ != v.alphabet_)
    throw AlphabetError("alphabet mismatch in word multiplication");
  std::vector<Letter> ls = u.letters_;
  ls.insert(ls.end(), v.letters_.begin(), v.letters_.end());
  Word w;
  w.alphabet_ = u.alphabet_;
  w.letters_ = free_reduce(ls);
  return w;
}

bool operator==(const Word& u, const Word& v) {
  return u.alphabet_ == v.alphabet_ && u.letters_ == v.letters_;
}

Word concat(const Word& u, const Word& v) { return u * v; }
Word invert(const Word& w) { return w.inverse(); }

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> ls = w.letters();
  size_t a = 0, b = ls.size();
  while (b - a >= 2 && ls[a].gen == ls[b - 1].gen && ls[a].sign == -ls[b - 1].sign) {
    ++a;
    --b;
  }
  return Word(w.alphabet(), std::vector<Letter>(ls.begin() + a, ls.begin() + b));
}

Word apply_letter_map(const std::vector<Word>& images, const Word& w) {
  if (images.empty()) throw AlphabetError("letter map needs at least one image");
  const GroupPresentation* target = &images[0].alphabet();
  for (const Word& im : images)
    if (&im.alphabet() != target) throw AlphabetError("letter map images mix alphabets");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.gen >= static_cast<int>(images.size()))
      throw AlphabetError("unmapped generator " +
                          w.alphabet().generator_names()[l.gen]);
    const Word& im = images[l.gen];
    if (l.sign > 0) {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    } else {
      Word inv = im.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return Word(*target, std::move(out));
}

// ---------------------------------------------------------------------------
// presentations

GroupPresentation::GroupPresentation(std::string name, std::vector<std::string> gen_names,
                                     std::vector<std::vector<Letter>> relators)
    : name_(std::move(name)), names_(std::move(gen_names)) {
  for (auto& r : relators) {
    Word w(*this, r);
    w = cyclic_reduce(w);
    if (w.empty()) throw Error("relator reduces to the identity");
    relators_.push_back(w);
  }
  for (const Word& r : relators_) {
    std::vector<Letter> rel = r.letters();
    std::vector<Letter> irel = r.inverse().letters();
    for (const auto& base : {rel, irel}) {
      for (size_t k = 0; k < base.size(); ++k) {
        std::vector<Letter> rot(base.begin() + k, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + k);
        rotations_.push_back(std::move(rot));
      }
    }
  }
}

const GroupPresentation& GroupPresentation::free_rank2() {
  static const GroupPresentation g("free_rank2", {"A", "B"}, {});
  return g;
}

const GroupPresentation& GroupPresentation::genus2() {
  // [A,B][C,D]
  static const GroupPresentation g(
      "genus2", {"A", "B", "C", "D"},
      {{{0, 1}, {1, 1}, {0, -1}, {1, -1}, {2, 1}, {3, 1}, {2, -1}, {3, -1}}});
  return g;
}

const GroupPresentation& GroupPresentation::bs_letters() {
  static const GroupPresentation g("bs_letters", {"a", "b"}, {});
  return g;
}

const GroupPresentation& GroupPresentation::by_name(std::string_view name) {
  if (name == "free_rank2") return free_rank2();
  if (name == "genus2") return genus2();
  if (name == "bs_letters") return bs_letters();
  throw ParseError("unknown group: " + std::string(name));
}

const Word& GroupPresentation::relator() const {
  if (relators_.empty()) throw Error("free group has no relator");
  return relators_[0];
}

int GroupPresentation::generator_index(std::string_view gen_name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == gen_name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// parsing and printing (GAP-style: A^-1*B^2, parenthesized powers, 1)

namespace {

struct Parser {
  const GroupPresentation& G;
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eof() {
    skip_ws();
    return i >= s.size();
  }

  int parse_int() {
    skip_ws();
    size_t j = i;
    if (j < s.size() && s[j] == '-') ++j;
    size_t d = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == d) throw ParseError("expected integer in word at offset " + std::to_string(i));
    int v = std::stoi(std::string(s.substr(i, j - i)));
    i = j;
    return v;
  }

  std::vector<Letter> parse_expr() {
    std::vector<Letter> out;
    bool first = true;
    while (!eof()) {
      skip_ws();
      if (s[i] == ')') break;
      if (!first) {
        if (s[i] != '*') throw ParseError("expected '*' at offset " + std::to_string(i));
        ++i;
        skip_ws();
      }
      first = false;
      std::vector<Letter> atom;
      if (s[i] == '(') {
        ++i;
        atom = parse_expr();
        skip_ws();
        if (i >= s.size() || s[i] != ')') throw ParseError("missing ')'");
        ++i;
      } else if (s[i] == '1') {
        ++i;
        continue;
      } else {
        // longest generator-name match
        int best = -1;
        size_t best_len = 0;
        for (int g = 0; g < G.rank(); ++g) {
          const std::string& n = G.generator_names()[g];
          if (n.size() > best_len && s.substr(i, n.size()) == n) {
            best = g;
            best_len = n.size();
          }
        }
        if (best < 0)
          throw ParseError("unknown generator at offset " + std::to_string(i) + " in '" +
                           std::string(s) + "'");
        i += best_len;
        atom = {{best, 1}};
      }
      int exp = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        exp = parse_int();
      }
      std::vector<Letter> powered;
      std::vector<Letter> base = atom;
      if (exp < 0) {
        std::reverse(base.begin(), base.end());
        for (Letter& l : base) l = l.inverse();
      }
      for (int k = 0; k < std::abs(exp); ++k)
        powered.insert(powered.end(), base.begin(), base.end());
      out.insert(out.end(), powered.begin(), powered.end());
    }
    return out;
  }
};

}  // namespace

Word GroupPresentation::parse(std::string_view text) const {
  Parser p{*this, text};
  std::vector<Letter> ls = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size()) throw ParseError("trailing input in word: '" + std::string(text) + "'");
  return Word(*this, std::move(ls));
}

std::string GroupPresentation::print(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int e = static_cast<int>(j - i) * ls[i].sign;
    if (!out.empty()) out += '*';
    out += names_[ls[i].gen];
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dehn's algorithm

namespace {

struct Match {
  int len = 0;
  int pos = 0;
  int rot = 0;
};

// Longest piece of any relator rotation found in w; leftmost position, then
// earliest rotation in the fixed order, wins among maximal matches.
Match best_match(const std::vector<Letter>& w,
                 const std::vector<std::vector<Letter>>& rots, bool cyclic) {
  Match best;
  const int n = static_cast<int>(w.size());
  for (int pos = 0; pos < n; ++pos) {
    for (int ri = 0; ri < static_cast<int>(rots.size()); ++ri) {
      const auto& rot = rots[ri];
      int lim = std::min<int>(static_cast<int>(rot.size()), cyclic ? n : n - pos);
      int len = 0;
      while (len < lim && w[(pos + len) % n] == rot[len]) ++len;
      if (len > best.len) best = {len, pos, ri};
    }
  }
  return best;
}

std::vector<Letter> complement_inverse(const std::vector<Letter>& rot, int len) {
  std::vector<Letter> v(rot.begin() + len, rot.end());
  std::reverse(v.begin(), v.end());
  for (Letter& l : v) l = l.inverse();
  return v;
}

}  // namespace

bool is_trivial(const GroupPresentation& G, const Word& w) {
  if (&w.alphabet() != &G) throw AlphabetError("word is not over " + G.name());
  if (G.is_free()) return w.empty();
  const auto& rots = G.relator_rotations();
  const int half = G.relator().size() / 2;  // replace only strict majorities
  Word cur = cyclic_reduce(w);
  while (true) {
    if (cur.empty()) return true;
    Match m = best_match(cur.letters(), rots, /*cyclic=*/true);
    if (m.len <= half) return false;
    const auto& ls = cur.letters();
    const int n = cur.size();
    std::vector<Letter> lin;
    lin.reserve(n);
    for (int k = 0; k < n; ++k) lin.push_back(ls[(m.pos + k) % n]);
    std::vector<Letter> repl = complement_inverse(rots[m.rot], m.len);
    repl.insert(repl.end(), lin.begin() + m.len, lin.end());
    cur = cyclic_reduce(Word(G, std::move(repl)));
  }
}

bool words_equal(const GroupPresentation& G, const Word& u, const Word& v) {
  return is_trivial(G, u * v.inverse());
}

Word dehn_compact(const Word& w) {
  const GroupPresentation& G = w.alphabet();
  if (G.is_free()) return w;
  const auto& rots = G.relator_rotations();
  const int half = G.relator().size() / 2;
  Word cur = w;
  while (true) {
    Match m = best_match(cur.letters(), rots, /*cyclic=*/false);
    if (m.len <= half) return cur;
    const auto& ls = cur.letters();
    std::vector<Letter> out(ls.begin(), ls.begin() + m.pos);
    std::vector<Letter> repl = complement_inverse(rots[m.rot], m.len);
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), ls.begin() + m.pos + m.len, ls.end());
    cur = Word(G, std::move(out));
  }
}

}  // namespace casg
