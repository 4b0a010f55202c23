#pragma once

#include <utility>

#include "casg/iso.hpp"

namespace casg {

/// Element of the abstract commensurator: an equivalence class of isomorphisms
/// between finite-index subgroups, two being equal when they agree on a common
/// finite-index subgroup. By the unique root property of the ambient groups,
/// identity (and hence equality) is decidable on the representative's own
/// domain generators.
class Commensurator {
 public:
  static Commensurator of(SubgroupIso rep) { return Commensurator(std::move(rep)); }
  static Commensurator identity(const GroupPresentation& G);
  /// Class of conjugation by c, domain the whole group.
  static Commensurator inner(const GroupPresentation& G, const Word& c);

  const GroupPresentation& group() const { return rep_.group(); }
  const SubgroupIso& rep() const { return rep_; }

  /// Function composition: apply `other` first (g.compose(h) = g ∘ h).
  Commensurator compose(const Commensurator& other) const;
  Commensurator inverse() const { return Commensurator(rep_.inverted()); }
  Commensurator pow(int k) const;

  bool is_identity() const;
  bool equals(const Commensurator& other) const;

 private:
  explicit Commensurator(SubgroupIso rep) : rep_(std::move(rep)) {}
  SubgroupIso rep_;
};

/// A finite symbol set with a commensurator per symbol, and words over it.
struct CommWordInstance {
  const GroupPresentation* G = nullptr;
  std::vector<std::string> names;
  std::vector<Commensurator> letters;
  SymSeq word;  // signed 1-based indices into letters, read left to right

  /// Parses "a^-1 b a b^-1" style words over the named letters.
  void set_word(std::string_view text);
};

struct CommVerdict {
  bool trivial = true;
  // violating (generator, image) pairs from the final domain, empty if trivial
  std::vector<std::pair<Word, Word>> witnesses;
};

/// Word problem for finitely generated subgroups of the commensurator:
/// left-fold the word through composition, then test identity on the final
/// domain's Schreier generators.
CommVerdict decide_comm_word(const CommWordInstance& inst);

/// Evaluates the product commensurator on a test word stepwise, applying the
/// letters' representatives right to left without forming the composite.
/// Throws DomainError naming the failing step if an intermediate image leaves
/// the next representative's domain.
Word sequential_evaluate(const CommWordInstance& inst, const Word& test);

/// Composed-commensurator route for the same product; agrees with
/// sequential_evaluate wherever both are defined.
Word composite_evaluate(const CommWordInstance& inst, const Word& test);

/// The pair (psi, phi) generating an image of BS(m, n): phi is conjugation by
/// A; psi maps ker(pi1) to ker(pi2) with A^m -> A^n. The free case can build
/// psi automatically from the two Schreier bases; the surface case requires
/// supplied iso data. The relation psi phi^m psi^-1 = phi^n is verified before
/// returning.
std::pair<Commensurator, Commensurator> build_bs_pair(
    const GroupPresentation& G, int m, int n,
    std::optional<SubgroupIso> psi_data = {});

/// The word b^-1 a b a^-1 b^-1 a b a^-1 b^-1 over the two-letter alphabet:
/// a residual-finiteness kernel witness of BS(2,3).
Word rf_kernel_witness_word();

/// Rewrites a word over {a, b} with a b^2 a^-1 -> b^3 and a^-1 b^3 a -> b^2,
/// greedily, free reduction interleaved. Every step shortens the word.
Word bs23_normalize(const Word& w);

struct KernelWitnessResult {
  Word gamma;
  Word rho_gamma_normalized;
  bool ok = false;  // rho(gamma) trivial and gamma a nonempty reduced word
};

/// Checks that the witness dies under a -> a, b -> b^2 yet is itself nonempty.
KernelWitnessResult bs_kernel_witness_check();

}  // namespace casg
