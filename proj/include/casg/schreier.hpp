#pragma once

#include <functional>

#include "casg/coset_table.hpp"

namespace casg {

/// Word over an abstract symbol alphabet: signed 1-based indices.
using SymSeq = std::vector<int>;

SymSeq sym_reduce(const SymSeq& s);
SymSeq sym_invert(const SymSeq& s);

/// BFS transversal and Schreier generators of a coset table. Tree edges follow
/// the pinned letter order; generators are the non-tree (state, positive
/// letter) slots in state-then-letter order, so the numbering is reproducible.
/// Tree slots rewrite to nothing (they expand to the identity).
class SchreierData {
 public:
  explicit SchreierData(CosetTable table);

  struct GenInfo {
    Word word;
    int state;  // origin slot
    int gen;
  };

  const CosetTable& table() const { return table_; }
  const std::vector<Word>& transversal() const { return transversal_; }
  const std::vector<GenInfo>& generators() const { return gens_; }
  int rank() const { return static_cast<int>(gens_.size()); }

  /// Reidemeister rewriting of a subgroup element over the Schreier
  /// generators. Expanding the result recovers w exactly.
  SymSeq rewrite(const Word& w) const;
  Word expand(const SymSeq& syms) const;

  /// Defining relators of a finite-index subgroup of the surface group: the
  /// rewrite of rep(c) * relator * rep(c)^-1 for every state c.
  std::vector<SymSeq> surface_relators() const;

 private:
  CosetTable table_;
  std::vector<Word> transversal_;
  std::vector<std::vector<int>> slot_;  // [gen][state] = generator index, -1 tree
  std::vector<GenInfo> gens_;

  SymSeq trace(int start, std::span<const Letter> letters) const;
};

/// Coset enumeration against a membership predicate that decides a subgroup of
/// index <= bound. Candidates u, v merge iff member(u * v^-1). Throws
/// EnumerationError when the bound is exceeded.
CosetTable enumerate_by_oracle(const GroupPresentation& G,
                               const std::function<bool(const Word&)>& member,
                               int bound);

}  // namespace casg
