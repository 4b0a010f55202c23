#include "casg/comm.hpp"

#include <sstream>

#include "casg/errors.hpp"

namespace casg {

Commensurator Commensurator::identity(const GroupPresentation& G) {
  return Commensurator(SubgroupIso::identity(G));
}

Commensurator Commensurator::inner(const GroupPresentation& G, const Word& c) {
  return Commensurator(SubgroupIso::conjugation(G, c));
}

Commensurator Commensurator::compose(const Commensurator& other) const {
  const SubgroupIso& g = rep_;        // applied second
  const SubgroupIso& h = other.rep_;  // applied first
  if (&g.group() != &h.group()) throw AlphabetError("composition across groups");
  const GroupPresentation& G = g.group();

  CosetTable M = intersect(g.domain().table(), h.codomain().table());
  SubgroupIso hr = h.restricted(M);  // domain h^-1(M), codomain M

  std::vector<Word> imgs;
  imgs.reserve(hr.domain().generators().size());
  for (const auto& gi : hr.domain().generators())
    imgs.push_back(g.evaluate(hr.evaluate(gi.word)));

  // codomain of the composite: the image of M under g
  auto pred = [&g, &M](const Word& w) {
    return g.codomain().table().contains(w) && M.contains(g.evaluate_inverse(w));
  };
  CosetTable Q = enumerate_by_oracle(G, pred, M.index());

  SchreierData sq(Q);
  std::vector<Word> invs;
  invs.reserve(sq.generators().size());
  for (const auto& gi : sq.generators())
    invs.push_back(h.evaluate_inverse(g.evaluate_inverse(gi.word)));

  return Commensurator(
      SubgroupIso::define(hr.domain().table(), std::move(Q), std::move(imgs),
                          std::move(invs)));
}

Commensurator Commensurator::pow(int k) const {
  const GroupPresentation& G = rep_.group();
  if (k == 0) return identity(G);
  Commensurator base = k > 0 ? *this : inverse();
  Commensurator acc = base;
  for (int i = 1; i < std::abs(k); ++i) acc = acc.compose(base);
  return acc;
}

bool Commensurator::is_identity() const {
  const GroupPresentation& G = rep_.group();
  for (const auto& gi : rep_.domain().generators())
    if (!words_equal(G, rep_.evaluate(gi.word), gi.word)) return false;
  return true;
}

bool Commensurator::equals(const Commensurator& other) const {
  return compose(other.inverse()).is_identity();
}

void CommWordInstance::set_word(std::string_view text) {
  word.clear();
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in letter token '" + tok + "'");
      }
    }
    int idx = -1;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) idx = static_cast<int>(i);
    if (idx < 0) throw ParseError("unknown letter '" + name + "'");
    for (int i = 0; i < std::abs(exp); ++i)
      word.push_back(exp > 0 ? idx + 1 : -(idx + 1));
  }
}

CommVerdict decide_comm_word(const CommWordInstance& inst) {
  if (!inst.G) throw Error("instance has no group");
  const GroupPresentation& G = *inst.G;
  Commensurator acc = Commensurator::identity(G);
  bool first = true;
  for (int e : inst.word) {
    const Commensurator& c = inst.letters[std::abs(e) - 1];
    Commensurator next = e > 0 ? c : c.inverse();
    acc = first ? next : acc.compose(next);
    first = false;
  }
  CommVerdict v;
  for (const auto& gi : acc.rep().domain().generators()) {
    Word img = acc.rep().evaluate(gi.word);
    if (!words_equal(G, img, gi.word)) v.witnesses.emplace_back(gi.word, img);
  }
  v.trivial = v.witnesses.empty();
  return v;
}

Word sequential_evaluate(const CommWordInstance& inst, const Word& test) {
  Word cur = test;
  for (int i = static_cast<int>(inst.word.size()) - 1; i >= 0; --i) {
    int e = inst.word[i];
    const SubgroupIso& rep = inst.letters[std::abs(e) - 1].rep();
    try {
      cur = e > 0 ? rep.evaluate(cur) : rep.evaluate_inverse(cur);
    } catch (const DomainError& err) {
      throw DomainError("step " + std::to_string(inst.word.size() - i) + " (letter " +
                        inst.names[std::abs(e) - 1] + (e > 0 ? "" : "^-1") +
                        "): " + err.what());
    }
  }
  return cur;
}

Word composite_evaluate(const CommWordInstance& inst, const Word& test) {
  if (!inst.G) throw Error("instance has no group");
  Commensurator acc = Commensurator::identity(*inst.G);
  bool first = true;
  for (int e : inst.word) {
    const Commensurator& c = inst.letters[std::abs(e) - 1];
    Commensurator next = e > 0 ? c : c.inverse();
    acc = first ? next : acc.compose(next);
    first = false;
  }
  return acc.rep().evaluate(test);
}

std::pair<Commensurator, Commensurator> build_bs_pair(
    const GroupPresentation& G, int m, int n, std::optional<SubgroupIso> psi_data) {
  if (m < 1 || n < 1) throw Error("need m, n >= 1");
  FiniteAbelianTarget t1{{m, n}, {}};
  FiniteAbelianTarget t2{{m, n}, {}};
  t1.images.assign(G.rank(), std::vector<int>{0, 0});
  t2.images.assign(G.rank(), std::vector<int>{0, 0});
  t1.images[0] = {1 % m, 0};
  t1.images[1] = {0, 1 % n};
  t2.images[0] = {0, 1 % n};
  t2.images[1] = {1 % m, 0};
  CosetTable k1 = kernel_table(G, t1);
  CosetTable k2 = kernel_table(G, t2);

  SubgroupIso psi_iso = [&]() -> SubgroupIso {
    if (psi_data) {
      if (!(psi_data->domain().table() == k1) || !(psi_data->codomain().table() == k2))
        throw IsoError("iso data does not match the BS(" + std::to_string(m) + "," +
                       std::to_string(n) + ") kernels");
      return *psi_data;
    }
    if (!G.is_free()) throw IsoError("the surface case requires supplied iso data");
    // basis-to-basis bijection sending A^m to A^n, remaining generators in order
    SchreierData s1(k1), s2(k2);
    Word am = Word::gen(G, 0, m), an = Word::gen(G, 0, n);
    int i1 = -1, i2 = -1;
    for (size_t i = 0; i < s1.generators().size(); ++i)
      if (s1.generators()[i].word == am) i1 = static_cast<int>(i);
    for (size_t i = 0; i < s2.generators().size(); ++i)
      if (s2.generators()[i].word == an) i2 = static_cast<int>(i);
    if (i1 < 0 || i2 < 0)
      throw IsoError("A^m or A^n is not a Schreier generator of its kernel");
    std::vector<Word> images(s1.generators().size());
    images[i1] = an;
    std::vector<Word> rest;
    for (size_t j = 0; j < s2.generators().size(); ++j)
      if (static_cast<int>(j) != i2) rest.push_back(s2.generators()[j].word);
    size_t k = 0;
    for (size_t j = 0; j < images.size(); ++j)
      if (static_cast<int>(j) != i1) images[j] = rest[k++];
    return SubgroupIso::define(k1, k2, std::move(images));
  }();

  Commensurator psi = Commensurator::of(std::move(psi_iso));
  Commensurator phi = Commensurator::inner(G, Word::gen(G, 0));
  Commensurator rel =
      psi.compose(phi.pow(m)).compose(psi.inverse()).compose(phi.pow(-n));
  if (!rel.is_identity())
    throw IsoError("psi phi^m psi^-1 phi^-n is not the identity; invalid iso data");
  return {std::move(psi), std::move(phi)};
}

Word rf_kernel_witness_word() {
  return GroupPresentation::bs_letters().parse("b^-1*a*b*a^-1*b^-1*a*b*a^-1*b^-1");
}

Word bs23_normalize(const Word& w) {
  const GroupPresentation& G = GroupPresentation::bs_letters();
  if (&w.alphabet() != &G) throw AlphabetError("expected a word over {a, b}");
  const std::vector<Letter> p1 = {{0, 1}, {1, 1}, {1, 1}, {0, -1}};          // a b^2 a^-1
  const std::vector<Letter> r1 = {{1, 1}, {1, 1}, {1, 1}};                   // b^3
  const std::vector<Letter> p2 = {{0, -1}, {1, 1}, {1, 1}, {1, 1}, {0, 1}};  // a^-1 b^3 a
  const std::vector<Letter> r2 = {{1, 1}, {1, 1}};                           // b^2
  Word cur = w;
  int budget = cur.size() + 8;
  while (budget-- > 0) {
    const auto& ls = cur.letters();
    int hit = -1;
    const std::vector<Letter>* pat = nullptr;
    const std::vector<Letter>* rep = nullptr;
    for (size_t i = 0; i < ls.size() && hit < 0; ++i) {
      for (auto [p, r] : {std::pair{&p1, &r1}, std::pair{&p2, &r2}}) {
        if (i + p->size() <= ls.size() &&
            std::equal(p->begin(), p->end(), ls.begin() + i)) {
          hit = static_cast<int>(i);
          pat = p;
          rep = r;
          break;
        }
      }
    }
    if (hit < 0) return cur;
    std::vector<Letter> out(ls.begin(), ls.begin() + hit);
    out.insert(out.end(), rep->begin(), rep->end());
    out.insert(out.end(), ls.begin() + hit + pat->size(), ls.end());
    cur = Word(G, std::move(out));
  }
  throw Error("relator rewriting exceeded its step budget");
}

KernelWitnessResult bs_kernel_witness_check() {
  const GroupPresentation& G = GroupPresentation::bs_letters();
  KernelWitnessResult res;
  res.gamma = rf_kernel_witness_word();
  std::vector<Word> rho = {Word::gen(G, 0), Word::gen(G, 1, 2)};  // a -> a, b -> b^2
  Word image = apply_letter_map(rho, res.gamma);
  res.rho_gamma_normalized = bs23_normalize(image);
  res.ok = res.rho_gamma_normalized.empty() && !res.gamma.empty();
  return res;
}

}  // namespace casg
