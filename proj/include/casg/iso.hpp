#pragma once

#include <optional>

#include "casg/stallings.hpp"

namespace casg {

/// Isomorphism between two finite-index subgroups, stored as ambient-word
/// images of the domain's Schreier generators and permanently paired with its
/// verified inverse. Construction checks everything: images lie in the
/// codomain, relator images are trivial (surface case), and the two maps are
/// two-sided inverses on the generating sets.
class SubgroupIso {
 public:
  static SubgroupIso define(CosetTable domain, CosetTable codomain,
                            std::vector<Word> images,
                            std::optional<std::vector<Word>> inverse_images = {});

  /// Identity on the whole group.
  static SubgroupIso identity(const GroupPresentation& G);
  /// Conjugation w -> c w c^-1, domain the whole group.
  static SubgroupIso conjugation(const GroupPresentation& G, const Word& c);

  const GroupPresentation& group() const { return *G_; }
  const SchreierData& domain() const { return dom_; }
  const SchreierData& codomain() const { return cod_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  /// Image of a domain element: rewrite over the domain Schreier generators,
  /// substitute, reduce. Throws DomainError when w is not in the domain.
  Word evaluate(const Word& w) const;
  Word evaluate_inverse(const Word& w) const;

  /// O(1): swaps domain/codomain and the two image lists.
  SubgroupIso inverted() const;

  /// Restriction to f^-1(codomain ∩ L), built by oracle-driven coset
  /// enumeration with bound index(domain) * index(L).
  SubgroupIso restricted(const CosetTable& L) const;

  bool field_equal(const SubgroupIso& other) const;

 private:
  SubgroupIso(const GroupPresentation& G, SchreierData dom, SchreierData cod,
              std::vector<Word> images, std::vector<Word> inverse_images)
      : G_(&G), dom_(std::move(dom)), cod_(std::move(cod)),
        images_(std::move(images)), inverse_images_(std::move(inverse_images)) {}

  const GroupPresentation* G_;
  SchreierData dom_, cod_;
  std::vector<Word> images_, inverse_images_;
};

Word substitute(const SymSeq& syms, const std::vector<Word>& images,
                const GroupPresentation& G);

}  // namespace casg
