#include "casg/coset_table.hpp"

#include <map>
#include <queue>

#include "casg/errors.hpp"

namespace casg {

CosetTable::CosetTable(const GroupPresentation& G, std::vector<std::vector<int>> transitions,
                       int base)
    : G_(&G), fwd_(std::move(transitions)) {
  if (fwd_.size() != static_cast<size_t>(G.rank()))
    throw Error("coset table needs one transition array per generator");
  n_ = static_cast<int>(fwd_[0].size());
  build_backward();
  standardize(base);
  validate();
}

void CosetTable::build_backward() {
  bwd_.assign(fwd_.size(), std::vector<int>(n_, -1));
  for (size_t g = 0; g < fwd_.size(); ++g) {
    if (fwd_[g].size() != static_cast<size_t>(n_))
      throw Error("ragged coset table");
    for (int s = 0; s < n_; ++s) {
      int t = fwd_[g][s];
      if (t < 0 || t >= n_) throw Error("coset table entry out of range");
      if (bwd_[g][t] != -1)
        throw EnumerationError("generator action is not a bijection on cosets");
      bwd_[g][t] = s;
    }
  }
}

void CosetTable::standardize(int base) {
  std::vector<int> old2new(n_, -1);
  std::vector<int> order;
  order.reserve(n_);
  old2new[base] = 0;
  order.push_back(base);
  for (size_t i = 0; i < order.size(); ++i) {
    int s = order[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (int g = 0; g < G_->rank(); ++g) {
        int t = pass == 0 ? fwd_[g][s] : bwd_[g][s];
        if (old2new[t] == -1) {
          old2new[t] = static_cast<int>(order.size());
          order.push_back(t);
        }
      }
    }
  }
  if (static_cast<int>(order.size()) != n_)
    throw EnumerationError("coset action is not transitive");
  std::vector<std::vector<int>> nf(fwd_.size(), std::vector<int>(n_));
  for (size_t g = 0; g < fwd_.size(); ++g)
    for (int s = 0; s < n_; ++s) nf[g][old2new[s]] = old2new[fwd_[g][s]];
  fwd_ = std::move(nf);
  build_backward();
}

void CosetTable::validate() const {
  if (G_->is_surface()) {
    for (int s = 0; s < n_; ++s)
      if (walk(s, G_->relator()) != s)
        throw Error("relator does not act as the identity on cosets");
  }
}

CosetTable CosetTable::whole_group(const GroupPresentation& G) {
  std::vector<std::vector<int>> fwd(G.rank(), std::vector<int>(1, 0));
  return CosetTable(G, std::move(fwd));
}

int CosetTable::walk(int state, const Word& w) const {
  if (&w.alphabet() != G_) throw AlphabetError("word is not over " + G_->name());
  for (const Letter& l : w.letters()) state = step(state, l);
  return state;
}

bool operator==(const CosetTable& a, const CosetTable& b) {
  return a.G_ == b.G_ && a.fwd_ == b.fwd_;
}

CosetTable kernel_table(const GroupPresentation& G, const FiniteAbelianTarget& t) {
  if (t.images.size() != static_cast<size_t>(G.rank()))
    throw Error("target needs one image tuple per generator");
  const size_t m = t.moduli.size();
  for (int mod : t.moduli)
    if (mod <= 0) throw Error("moduli must be positive");
  for (const auto& img : t.images)
    if (img.size() != m) throw Error("image tuple arity mismatch");

  using State = std::vector<int>;
  auto add = [&](const State& s, const std::vector<int>& d, int sign) {
    State r(m);
    for (size_t i = 0; i < m; ++i) {
      int v = (s[i] + sign * d[i]) % t.moduli[i];
      r[i] = v < 0 ? v + t.moduli[i] : v;
    }
    return r;
  };

  std::map<State, int> idx;
  std::vector<State> states;
  State zero(m, 0);
  idx[zero] = 0;
  states.push_back(zero);
  for (size_t i = 0; i < states.size(); ++i) {
    State s = states[i];
    for (int g = 0; g < G.rank(); ++g) {
      for (int sign : {1, -1}) {
        State r = add(s, t.images[g], sign);
        if (!idx.count(r)) {
          idx[r] = static_cast<int>(states.size());
          states.push_back(r);
        }
      }
    }
  }
  const int n = static_cast<int>(states.size());
  std::vector<std::vector<int>> fwd(G.rank(), std::vector<int>(n));
  for (int g = 0; g < G.rank(); ++g)
    for (int s = 0; s < n; ++s) fwd[g][s] = idx.at(add(states[s], t.images[g], 1));
  return CosetTable(G, std::move(fwd));
}

CosetTable intersect(const CosetTable& H, const CosetTable& K) {
  if (&H.group() != &K.group()) throw AlphabetError("intersection across groups");
  const GroupPresentation& G = H.group();
  std::map<std::pair<int, int>, int> idx;
  std::vector<std::pair<int, int>> states;
  idx[{0, 0}] = 0;
  states.push_back({0, 0});
  for (size_t i = 0; i < states.size(); ++i) {
    auto [a, b] = states[i];
    for (int g = 0; g < G.rank(); ++g) {
      for (int sign : {1, -1}) {
        Letter l{g, sign};
        std::pair<int, int> t{H.step(a, l), K.step(b, l)};
        if (!idx.count(t)) {
          idx[t] = static_cast<int>(states.size());
          states.push_back(t);
        }
      }
    }
  }
  const int n = static_cast<int>(states.size());
  std::vector<std::vector<int>> fwd(G.rank(), std::vector<int>(n));
  for (int g = 0; g < G.rank(); ++g)
    for (int s = 0; s < n; ++s) {
      Letter l{g, 1};
      fwd[g][s] = idx.at({H.step(states[s].first, l), K.step(states[s].second, l)});
    }
  return CosetTable(G, std::move(fwd));
}

}  // namespace casg
