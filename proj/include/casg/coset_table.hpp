#pragma once

#include "casg/word.hpp"

namespace casg {

/// Homomorphism onto a subgroup of a finite abelian product: one residue tuple
/// per ambient generator, one entry per modulus.
struct FiniteAbelianTarget {
  std::vector<int> moduli;
  std::vector<std::vector<int>> images;  // [generator][component]
};

/// Finite-index subgroup as a pointed transitive action of the generators on
/// cosets. Tables are standardized at construction (BFS numbering with letter
/// order A < B < ... < A^-1 < ...), so equal subgroups have equal tables.
class CosetTable {
 public:
  CosetTable(const GroupPresentation& G, std::vector<std::vector<int>> transitions,
             int base = 0);
  static CosetTable whole_group(const GroupPresentation& G);

  const GroupPresentation& group() const { return *G_; }
  int index() const { return n_; }
  int step(int state, Letter l) const {
    return l.sign > 0 ? fwd_[l.gen][state] : bwd_[l.gen][state];
  }
  int walk(int state, const Word& w) const;
  bool contains(const Word& w) const { return walk(0, w) == 0; }
  const std::vector<std::vector<int>>& transitions() const { return fwd_; }

  friend bool operator==(const CosetTable& a, const CosetTable& b);

 private:
  const GroupPresentation* G_ = nullptr;
  int n_ = 0;
  std::vector<std::vector<int>> fwd_, bwd_;

  void build_backward();
  void validate() const;
  void standardize(int base);
};

/// Kernel of the map defined by a FiniteAbelianTarget; states are the elements
/// of the image subgroup, the base state is zero, index = image size.
CosetTable kernel_table(const GroupPresentation& G, const FiniteAbelianTarget& t);

/// Intersection via the product action on pairs reachable from (base, base).
CosetTable intersect(const CosetTable& H, const CosetTable& K);

}  // namespace casg
