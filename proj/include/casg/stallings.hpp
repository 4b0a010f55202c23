#pragma once

#include <optional>

#include "casg/schreier.hpp"

namespace casg {

/// Folded subgroup graph for a finitely generated subgroup of a free group.
/// Every edge carries a witness word over the input-generator symbols, so a
/// successful membership query returns an expression of the element over the
/// inputs. Folding preserves both the subgroup and the witness semantics.
class WitnessGraph {
 public:
  /// Wedge of labeled loops at the base vertex, folded to determinism.
  /// shuffle_seed permutes the internal processing order (the folded result
  /// is independent of it; used by confluence tests).
  static WitnessGraph fold(const GroupPresentation& G, const std::vector<Word>& generators,
                           unsigned shuffle_seed = 0);

  const GroupPresentation& group() const { return *G_; }
  int vertex_count() const;
  bool complete() const;
  /// Rank of the subgroup: non-tree edges of the folded graph.
  int rank() const;
  /// True iff folding met a nontrivial witness discrepancy (the inputs do not
  /// generate freely). Witness queries refuse to run in that case.
  bool has_relations() const { return !relations_.empty(); }

  /// Trace w from the base vertex; returns its expression over the input
  /// generators, or nullopt when w is not in the subgroup.
  std::optional<SymSeq> membership_witness(const Word& w) const;

  /// True iff the generated subgroup equals the finite-index subgroup of H:
  /// the graph is complete with index(H) vertices and every Schreier generator
  /// of H traces to a closed base path.
  bool equals_table(const CosetTable& H) const;

 private:
  struct HalfEdge {
    int to = -1;
    int edge = -1;  // undirected edge id
  };
  const GroupPresentation* G_ = nullptr;
  int base_ = 0;
  // folded adjacency: [vertex][directed label] -> half edge (directed labels:
  // 2*gen for positive, 2*gen+1 for inverse)
  std::vector<std::vector<HalfEdge>> adj_;
  std::vector<SymSeq> witness_;  // per undirected edge, oriented along positive label
  std::vector<SymSeq> relations_;

  WitnessGraph() = default;
  std::optional<std::pair<int, SymSeq>> trace(const Word& w) const;
};

}  // namespace casg
