#include "casg/iso.hpp"

#include "casg/errors.hpp"

namespace casg {

Word substitute(const SymSeq& syms, const std::vector<Word>& images,
                const GroupPresentation& G) {
  std::vector<Letter> out;
  for (int e : syms) {
    const Word& im = images[std::abs(e) - 1];
    if (e > 0) {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    } else {
      Word inv = im.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return Word(G, std::move(out));
}

namespace {

void verify_relators(const SchreierData& side, const std::vector<Word>& images,
                     const char* which) {
  const GroupPresentation& G = side.table().group();
  for (const SymSeq& rel : side.surface_relators()) {
    if (!is_trivial(G, substitute(rel, images, G)))
      throw IsoError(std::string("relator image is nontrivial; the ") + which +
                     " map is not well-defined");
  }
}

void verify_basis(const GroupPresentation& G, const std::vector<Word>& images,
                  const CosetTable& codomain) {
  WitnessGraph g = WitnessGraph::fold(G, images);
  if (g.has_relations() || g.rank() != static_cast<int>(images.size()))
    throw IsoError("images do not generate freely (rank drop)");
  if (!g.equals_table(codomain))
    throw IsoError("images do not generate the codomain");
}

}  // namespace

SubgroupIso SubgroupIso::define(CosetTable domain, CosetTable codomain,
                                std::vector<Word> images,
                                std::optional<std::vector<Word>> inverse_images) {
  const GroupPresentation& G = domain.group();
  if (&codomain.group() != &G)
    throw IsoError("domain and codomain lie in different groups");
  if (domain.index() != codomain.index())
    throw IsoError("domain and codomain indices differ");

  SchreierData dom(std::move(domain));
  SchreierData cod(std::move(codomain));
  if (images.size() != dom.generators().size())
    throw IsoError("need one image per domain Schreier generator");
  for (const Word& w : images)
    if (!cod.table().contains(w))
      throw IsoError("image lies outside the codomain: " + G.print(w));

  std::vector<Word> invs;
  if (inverse_images) {
    invs = std::move(*inverse_images);
    if (invs.size() != cod.generators().size())
      throw IsoError("need one inverse image per codomain Schreier generator");
    for (const Word& w : invs)
      if (!dom.table().contains(w))
        throw IsoError("inverse image lies outside the domain: " + G.print(w));
    if (G.is_free()) verify_basis(G, images, cod.table());
  } else {
    if (!G.is_free())
      throw IsoError("surface isomorphisms require explicit inverse images");
    verify_basis(G, images, cod.table());
    WitnessGraph g = WitnessGraph::fold(G, images);
    for (const auto& gi : cod.generators()) {
      auto wit = g.membership_witness(gi.word);
      if (!wit) throw IsoError("codomain generator missed by the images");
      invs.push_back(dom.expand(*wit));
    }
  }

  if (G.is_surface()) {
    verify_relators(dom, images, "forward");
    verify_relators(cod, invs, "inverse");
  }

  SubgroupIso iso(G, std::move(dom), std::move(cod), std::move(images), std::move(invs));

  // bijectivity certificate: two-sided inverse on both generating sets
  for (const auto& gi : iso.dom_.generators()) {
    if (!words_equal(G, iso.evaluate_inverse(iso.evaluate(gi.word)), gi.word))
      throw IsoError("round trip failed on domain generator " + G.print(gi.word));
  }
  for (const auto& gi : iso.cod_.generators()) {
    if (!words_equal(G, iso.evaluate(iso.evaluate_inverse(gi.word)), gi.word))
      throw IsoError("round trip failed on codomain generator " + G.print(gi.word));
  }
  return iso;
}

SubgroupIso SubgroupIso::identity(const GroupPresentation& G) {
  std::vector<Word> gens;
  for (int g = 0; g < G.rank(); ++g) gens.push_back(Word::gen(G, g));
  return define(CosetTable::whole_group(G), CosetTable::whole_group(G), gens, gens);
}

SubgroupIso SubgroupIso::conjugation(const GroupPresentation& G, const Word& c) {
  std::vector<Word> imgs, invs;
  for (int g = 0; g < G.rank(); ++g) {
    Word x = Word::gen(G, g);
    imgs.push_back(c * x * c.inverse());
    invs.push_back(c.inverse() * x * c);
  }
  return define(CosetTable::whole_group(G), CosetTable::whole_group(G),
                std::move(imgs), std::move(invs));
}

Word SubgroupIso::evaluate(const Word& w) const {
  if (!dom_.table().contains(w))
    throw DomainError("element is outside the domain: " + G_->print(w));
  Word out = substitute(dom_.rewrite(w), images_, *G_);
  return G_->is_surface() ? dehn_compact(out) : out;
}

Word SubgroupIso::evaluate_inverse(const Word& w) const {
  if (!cod_.table().contains(w))
    throw DomainError("element is outside the codomain: " + G_->print(w));
  Word out = substitute(cod_.rewrite(w), inverse_images_, *G_);
  return G_->is_surface() ? dehn_compact(out) : out;
}

SubgroupIso SubgroupIso::inverted() const {
  return SubgroupIso(*G_, cod_, dom_, inverse_images_, images_);
}

SubgroupIso SubgroupIso::restricted(const CosetTable& L) const {
  if (&L.group() != G_) throw AlphabetError("restriction table over a different group");
  const int bound = dom_.table().index() * L.index();
  auto pred = [this, &L](const Word& w) {
    return dom_.table().contains(w) && L.contains(evaluate(w));
  };
  CosetTable P = enumerate_by_oracle(*G_, pred, bound);
  CosetTable Q = intersect(cod_.table(), L);

  SchreierData sp(P);
  std::vector<Word> imgs;
  imgs.reserve(sp.generators().size());
  for (const auto& gi : sp.generators()) imgs.push_back(evaluate(gi.word));
  SchreierData sq(Q);
  std::vector<Word> invs;
  invs.reserve(sq.generators().size());
  for (const auto& gi : sq.generators()) invs.push_back(evaluate_inverse(gi.word));

  return define(std::move(P), std::move(Q), std::move(imgs), std::move(invs));
}

bool SubgroupIso::field_equal(const SubgroupIso& other) const {
  return G_ == other.G_ && dom_.table() == other.dom_.table() &&
         cod_.table() == other.cod_.table() && images_ == other.images_ &&
         inverse_images_ == other.inverse_images_;
}

}  // namespace casg
