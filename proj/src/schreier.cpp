#include "casg/schreier.hpp"

#include "casg/errors.hpp"

namespace casg {

SymSeq sym_reduce(const SymSeq& s) {
  SymSeq out;
  out.reserve(s.size());
  for (int e : s) {
    if (!out.empty() && out.back() == -e) {
      out.pop_back();
    } else {
      out.push_back(e);
    }
  }
  return out;
}

SymSeq sym_invert(const SymSeq& s) {
  SymSeq out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(-*it);
  return out;
}

SchreierData::SchreierData(CosetTable table) : table_(std::move(table)) {
  const GroupPresentation& G = table_.group();
  const int n = table_.index();
  const int r = G.rank();

  transversal_.assign(n, Word());
  transversal_[0] = Word::identity(G);
  // tree[g][s] marks the positive slot (s, g) as a spanning-tree edge
  std::vector<std::vector<char>> tree(r, std::vector<char>(n, 0));
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  int discovered = 1;
  // table is standardized, so scanning states in numeric order is the BFS
  for (int s = 0; s < n; ++s) {
    if (!seen[s]) throw Error("coset table is not standardized");
    for (int pass = 0; pass < 2; ++pass) {
      for (int g = 0; g < r; ++g) {
        Letter l{g, pass == 0 ? 1 : -1};
        int t = table_.step(s, l);
        if (!seen[t]) {
          seen[t] = 1;
          ++discovered;
          transversal_[t] = transversal_[s] * Word::gen(G, g, l.sign);
          if (l.sign > 0) {
            tree[g][s] = 1;
          } else {
            tree[g][t] = 1;  // positive slot of the edge traversed backwards
          }
        }
      }
    }
  }
  if (discovered != n) throw Error("coset table is not transitive");

  slot_.assign(r, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    for (int g = 0; g < r; ++g) {
      if (tree[g][s]) continue;
      int t = table_.step(s, Letter{g, 1});
      Word w = transversal_[s] * Word::gen(G, g, 1) * transversal_[t].inverse();
      slot_[g][s] = static_cast<int>(gens_.size());
      gens_.push_back({std::move(w), s, g});
    }
  }
}

SymSeq SchreierData::trace(int start, std::span<const Letter> letters) const {
  SymSeq out;
  int s = start;
  for (const Letter& l : letters) {
    if (l.sign > 0) {
      int idx = slot_[l.gen][s];
      if (idx >= 0) out.push_back(idx + 1);
      s = table_.step(s, l);
    } else {
      int t = table_.step(s, l);
      int idx = slot_[l.gen][t];
      if (idx >= 0) out.push_back(-(idx + 1));
      s = t;
    }
  }
  if (s != start) throw DomainError("trace does not close");
  return sym_reduce(out);
}

SymSeq SchreierData::rewrite(const Word& w) const {
  if (!table_.contains(w))
    throw DomainError("element is not in the subgroup: " + table_.group().print(w));
  return trace(0, w.letters());
}

Word SchreierData::expand(const SymSeq& syms) const {
  Word out = Word::identity(table_.group());
  for (int e : syms) {
    const Word& g = gens_[std::abs(e) - 1].word;
    out = out * (e > 0 ? g : g.inverse());
  }
  return out;
}

std::vector<SymSeq> SchreierData::surface_relators() const {
  const GroupPresentation& G = table_.group();
  if (!G.is_surface()) throw Error("surface relators need a surface group");
  std::vector<SymSeq> out;
  out.reserve(table_.index());
  for (int s = 0; s < table_.index(); ++s)
    out.push_back(trace(s, G.relator().letters()));
  return out;
}

CosetTable enumerate_by_oracle(const GroupPresentation& G,
                               const std::function<bool(const Word&)>& member,
                               int bound) {
  if (bound < 1) throw EnumerationError("enumeration bound must be positive");
  std::vector<Word> reps{Word::identity(G)};
  const int r = G.rank();
  std::vector<std::vector<int>> fwd(r);  // grown in step with reps
  std::vector<std::vector<int>> bwd(r);
  auto add_state = [&](Word w) {
    reps.push_back(std::move(w));
    for (int g = 0; g < r; ++g) {
      fwd[g].push_back(-1);
      bwd[g].push_back(-1);
    }
    return static_cast<int>(reps.size()) - 1;
  };
  for (int g = 0; g < r; ++g) {
    fwd[g].push_back(-1);
    bwd[g].push_back(-1);
  }

  for (size_t s = 0; s < reps.size(); ++s) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int g = 0; g < r; ++g) {
        auto& table = pass == 0 ? fwd : bwd;
        if (table[g][s] != -1) continue;
        Word w = reps[s] * Word::gen(G, g, pass == 0 ? 1 : -1);
        int target = -1;
        for (size_t t = 0; t < reps.size(); ++t) {
          if (member(w * reps[t].inverse())) {
            target = static_cast<int>(t);
            break;
          }
        }
        if (target == -1) {
          if (static_cast<int>(reps.size()) >= bound)
            throw EnumerationError("coset enumeration exceeded bound " +
                                   std::to_string(bound));
          target = add_state(std::move(w));
        }
        table[g][s] = target;
        auto& other = pass == 0 ? bwd : fwd;
        if (other[g][target] != -1 && other[g][target] != static_cast<int>(s))
          throw EnumerationError("membership predicate is not a subgroup");
        other[g][target] = static_cast<int>(s);
      }
    }
  }
  return CosetTable(G, std::move(fwd));
}

}  // namespace casg
