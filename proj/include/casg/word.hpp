#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace casg {

class GroupPresentation;

struct Letter {
  int gen = 0;   // 0-based generator index
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return {gen, -sign}; }
};

/// Freely reduced word over a fixed generator alphabet. The empty word is the
/// identity. Values are immutable; every operation returns a reduced word.
class Word {
 public:
  Word() = default;
  Word(const GroupPresentation& alphabet, std::vector<Letter> letters);

  static Word identity(const GroupPresentation& alphabet);
  static Word gen(const GroupPresentation& alphabet, int index, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  const GroupPresentation& alphabet() const;
  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }

  Word inverse() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v);

 private:
  const GroupPresentation* alphabet_ = nullptr;
  std::vector<Letter> letters_;
};

/// Generators plus relators; free iff no relators. The surface group carries
/// exactly one relator, [A,B][C,D]. Ambient groups and the two-letter
/// commensurator-word alphabet are fixed singletons so that alphabet mismatch
/// is detectable by identity.
class GroupPresentation {
 public:
  static const GroupPresentation& free_rank2();
  static const GroupPresentation& genus2();
  static const GroupPresentation& bs_letters();
  static const GroupPresentation& by_name(std::string_view name);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  bool is_free() const { return relators_.empty(); }
  bool is_surface() const { return !relators_.empty(); }
  const Word& relator() const;
  int generator_index(std::string_view gen_name) const;  // -1 if unknown

  Word parse(std::string_view text) const;
  std::string print(const Word& w) const;

  /// All cyclic rotations of the relator and its inverse, in a fixed order
  /// (rotations of r first, then of r^-1).
  const std::vector<std::vector<Letter>>& relator_rotations() const { return rotations_; }

 private:
  GroupPresentation(std::string name, std::vector<std::string> gen_names,
                    std::vector<std::vector<Letter>> relators);
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<std::vector<Letter>> rotations_;
};

std::vector<Letter> free_reduce(std::span<const Letter> letters);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word cyclic_reduce(const Word& w);

/// Homomorphic extension of a generator-to-word map: images[i] replaces
/// generator i of w's alphabet. All images must share one target alphabet.
Word apply_letter_map(const std::vector<Word>& images, const Word& w);

/// Word problem in the ambient group: free reduction when free, Dehn's
/// algorithm for the genus-2 group (sound and complete because the relator
/// satisfies C'(1/6); every replacement strictly shortens the word).
bool is_trivial(const GroupPresentation& G, const Word& w);
bool words_equal(const GroupPresentation& G, const Word& u, const Word& v);

/// Length-reducing relator replacements on the linear word. Returns a word
/// representing the same group element, never longer than the input. Identity
/// on free-group words.
Word dehn_compact(const Word& w);

}  // namespace casg
