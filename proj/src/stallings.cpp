#include "casg/stallings.hpp"

#include <algorithm>

#include "casg/errors.hpp"

namespace casg {

namespace {

struct EdgeRec {
  int a = -1, b = -1;  // a --gen--> b
  int gen = 0;
  SymSeq wit;          // oriented a -> b
  bool alive = false;
};

SymSeq cat(const SymSeq& u, const SymSeq& v) {
  SymSeq out = u;
  out.insert(out.end(), v.begin(), v.end());
  return sym_reduce(out);
}

struct Builder {
  const GroupPresentation* G;
  int base = 0;
  int n_vertices = 0;
  std::vector<char> alive_vertex;
  std::vector<EdgeRec> edges;
  std::vector<SymSeq> relations;

  int new_vertex() {
    alive_vertex.push_back(1);
    return n_vertices++;
  }

  void add_edge(int from, int to, Letter l, SymSeq wit) {
    EdgeRec e;
    e.gen = l.gen;
    e.alive = true;
    if (l.sign > 0) {
      e.a = from;
      e.b = to;
      e.wit = std::move(wit);
    } else {
      e.a = to;
      e.b = from;
      e.wit = sym_invert(wit);
    }
    edges.push_back(std::move(e));
  }

  // out-edges of v under directed label (gen, dir): (edge id, target,
  // traversal-oriented witness)
  struct Out {
    int id;
    int target;
    SymSeq wit;
  };
  std::vector<Out> outs(int v, int gen, int dir) const {
    std::vector<Out> res;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const EdgeRec& e = edges[i];
      if (!e.alive || e.gen != gen) continue;
      if (dir > 0 && e.a == v) res.push_back({i, e.b, e.wit});
      if (dir < 0 && e.b == v) res.push_back({i, e.a, sym_invert(e.wit)});
    }
    return res;
  }

  void merge(int keep, int drop, const SymSeq& delta) {
    // delta expands to tau(keep) * tau(drop)^-1
    for (EdgeRec& e : edges) {
      if (!e.alive) continue;
      if (e.a == drop && e.b == drop) {
        e.wit = cat(cat(delta, e.wit), sym_invert(delta));
        e.a = e.b = keep;
      } else if (e.a == drop) {
        e.wit = cat(delta, e.wit);
        e.a = keep;
      } else if (e.b == drop) {
        e.wit = cat(e.wit, sym_invert(delta));
        e.b = keep;
      }
    }
    alive_vertex[drop] = 0;
  }

  // one fold action at v; true if something changed
  bool fold_at(int v) {
    for (int gen = 0; gen < G->rank(); ++gen) {
      for (int dir : {1, -1}) {
        auto os = outs(v, gen, dir);
        if (os.size() < 2) continue;
        const Out& o1 = os[0];
        const Out& o2 = os[1];
        if (o1.target == o2.target) {
          SymSeq delta = cat(sym_invert(o1.wit), o2.wit);
          if (!delta.empty()) relations.push_back(delta);
          edges[o2.id].alive = false;
        } else {
          int keep = o1.target, drop = o2.target;
          SymSeq delta = cat(sym_invert(o1.wit), o2.wit);
          if (drop == base) {
            std::swap(keep, drop);
            delta = sym_invert(delta);
          }
          merge(keep, drop, delta);
        }
        return true;
      }
    }
    return false;
  }
};

}  // namespace

WitnessGraph WitnessGraph::fold(const GroupPresentation& G,
                                const std::vector<Word>& generators,
                                unsigned shuffle_seed) {
  if (!G.is_free()) throw FoldError("folding works over free groups only");
  Builder b;
  b.G = &G;
  b.base = b.new_vertex();
  for (size_t i = 0; i < generators.size(); ++i) {
    const Word& w = generators[i];
    if (&w.alphabet() != &G) throw AlphabetError("generator over the wrong group");
    if (w.empty()) {
      b.relations.push_back({static_cast<int>(i) + 1});
      continue;
    }
    int prev = b.base;
    const auto& ls = w.letters();
    for (size_t j = 0; j < ls.size(); ++j) {
      bool last = j + 1 == ls.size();
      int next = last ? b.base : b.new_vertex();
      SymSeq wit = last ? SymSeq{static_cast<int>(i) + 1} : SymSeq{};
      b.add_edge(prev, next, ls[j], std::move(wit));
      prev = next;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    int n = b.n_vertices;
    for (int k = 0; k < n; ++k) {
      int v = static_cast<int>((k + shuffle_seed) % n);
      if (!b.alive_vertex[v]) continue;
      while (b.fold_at(v)) changed = true;
    }
  }

  // renumber alive vertices
  std::vector<int> remap(b.n_vertices, -1);
  int nv = 0;
  for (int v = 0; v < b.n_vertices; ++v)
    if (b.alive_vertex[v]) remap[v] = nv++;

  WitnessGraph g;
  g.G_ = &G;
  g.base_ = remap[b.base];
  g.adj_.assign(nv, std::vector<HalfEdge>(2 * G.rank()));
  int ne = 0;
  for (const EdgeRec& e : b.edges)
    if (e.alive) ++ne;
  g.witness_.reserve(ne);
  for (const EdgeRec& e : b.edges) {
    if (!e.alive) continue;
    int id = static_cast<int>(g.witness_.size());
    g.witness_.push_back(e.wit);
    int a = remap[e.a], bb = remap[e.b];
    HalfEdge& fwd = g.adj_[a][2 * e.gen];
    HalfEdge& rev = g.adj_[bb][2 * e.gen + 1];
    if (fwd.to != -1 || rev.to != -1) throw FoldError("folding left a nondeterministic edge");
    fwd = {bb, id};
    rev = {a, id};
  }
  g.relations_ = std::move(b.relations);
  return g;
}

int WitnessGraph::vertex_count() const { return static_cast<int>(adj_.size()); }

bool WitnessGraph::complete() const {
  for (const auto& row : adj_)
    for (const HalfEdge& h : row)
      if (h.to == -1) return false;
  return true;
}

int WitnessGraph::rank() const {
  return static_cast<int>(witness_.size()) - vertex_count() + 1;
}

std::optional<std::pair<int, SymSeq>> WitnessGraph::trace(const Word& w) const {
  int v = base_;
  SymSeq wit;
  for (const Letter& l : w.letters()) {
    const HalfEdge& h = adj_[v][2 * l.gen + (l.sign > 0 ? 0 : 1)];
    if (h.to == -1) return std::nullopt;
    const SymSeq& ew = witness_[h.edge];
    if (l.sign > 0) {
      wit = sym_reduce([&] {
        SymSeq s = wit;
        s.insert(s.end(), ew.begin(), ew.end());
        return s;
      }());
    } else {
      SymSeq inv = sym_invert(ew);
      SymSeq s = wit;
      s.insert(s.end(), inv.begin(), inv.end());
      wit = sym_reduce(s);
    }
    v = h.to;
  }
  return std::make_pair(v, wit);
}

std::optional<SymSeq> WitnessGraph::membership_witness(const Word& w) const {
  if (has_relations())
    throw FoldError("inputs do not generate freely; witnesses are not well-defined");
  auto res = trace(w);
  if (!res || res->first != base_) return std::nullopt;
  return res->second;
}

bool WitnessGraph::equals_table(const CosetTable& H) const {
  if (&H.group() != G_) throw AlphabetError("table over a different group");
  if (!complete() || vertex_count() != H.index()) return false;
  SchreierData sd(H);
  for (const auto& gi : sd.generators()) {
    auto res = trace(gi.word);
    if (!res || res->first != base_) return false;
  }
  return true;
}

}  // namespace casg
