#include "casewise/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

namespace casewise {

const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::Grounded: return "grounded";
    case Semantics::Complete: return "complete";
    case Semantics::Preferred: return "preferred";
  }
  return "?";
}

const char* to_string(Mode m) { return m == Mode::Forall ? "forall" : "intersect"; }

std::optional<Semantics> parse_semantics(std::string_view s) {
  if (s == "grounded" || s == "grd") return Semantics::Grounded;
  if (s == "complete" || s == "cmp") return Semantics::Complete;
  if (s == "preferred" || s == "prf") return Semantics::Preferred;
  return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "forall") return Mode::Forall;
  if (s == "intersect") return Mode::Intersect;
  return std::nullopt;
}

Af::Af(std::vector<std::vector<std::size_t>> att) : attackers(std::move(att)) {
  attacked.resize(attackers.size());
  for (std::size_t j = 0; j < attackers.size(); ++j) {
    std::sort(attackers[j].begin(), attackers[j].end());
    attackers[j].erase(std::unique(attackers[j].begin(), attackers[j].end()), attackers[j].end());
    for (std::size_t i : attackers[j]) attacked[i].push_back(j);
  }
}

Af Af::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> att(n);
  for (auto [a, b] : edges) att[b].push_back(a);
  return Af(std::move(att));
}

Af Af::from_saf(const Saf& saf) { return Af(saf.attacker_lists()); }

Extension grounded(const Af& af) {
  const std::size_t n = af.size();
  std::vector<char> in(n, 0), out(n, 0);
  std::vector<std::size_t> open_attackers(n);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    open_attackers[i] = af.attackers[i].size();
    if (open_attackers[i] == 0) queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    if (in[x]) continue;
    in[x] = 1;
    for (std::size_t y : af.attacked[x]) {
      if (out[y]) continue;
      out[y] = 1;
      for (std::size_t z : af.attacked[y])
        if (--open_attackers[z] == 0 && !out[z]) queue.push_back(z);
    }
  }
  Extension e;
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) e.push_back(i);
  return e;
}

// {{{ Complete labellings

namespace {

// A complete extension is fixed by its In set, so the search branches on
// In versus not-In only; Out and Undec follow from the In set. Per node the
// labeller counts In attackers, attackers already Out, unlabelled attackers
// and In targets. Assignments go on a trail and are undone on backtrack.
enum Label : char { Unset, In, NotIn };

class Labeller {
 public:
  Labeller(const Af& af, std::size_t cap) : af_(af), cap_(cap) {}

  std::vector<Extension> run() {
    order_ = scc_order();
    const std::size_t n = af_.size();
    labels_.assign(n, Unset);
    in_att_.assign(n, 0);
    out_att_.assign(n, 0);
    in_targets_.assign(n, 0);
    open_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      open_[i] = static_cast<std::uint32_t>(af_.attackers[i].size());
      queue_.push_back(i);
    }
    if (propagate()) search();
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool is_out(std::size_t x) const { return in_att_[x] > 0; }
  bool all_attackers_out(std::size_t x) const { return out_att_[x] == af_.attackers[x].size(); }
  bool must_be_out(std::size_t x) const { return in_targets_[x] > 0 && !is_out(x); }

  bool assign(std::size_t x, Label l) {
    if (labels_[x] == l) return true;
    if (labels_[x] != Unset) return false;
    labels_[x] = l;
    trail_.push_back(x);
    queue_.push_back(x);
    for (std::size_t y : af_.attacked[x]) {
      --open_[y];
      if (must_be_out(y) && open_[y] <= 1) queue_.push_back(y);
    }
    if (l == In) {
      for (std::size_t y : af_.attackers[x]) {
        if (in_targets_[y]++ == 0) pending_.push_back(y);
        queue_.push_back(y);
      }
      for (std::size_t y : af_.attacked[x]) {
        if (in_att_[y]++ != 0) continue;
        queue_.push_back(y);
        for (std::size_t w : af_.attacked[y])
          if (++out_att_[w] == af_.attackers[w].size()) queue_.push_back(w);
      }
    }
    return true;
  }

  void unassign(std::size_t x) {
    if (labels_[x] == In) {
      for (std::size_t y : af_.attackers[x]) --in_targets_[y];
      for (std::size_t y : af_.attacked[x]) {
        if (--in_att_[y] != 0) continue;
        for (std::size_t w : af_.attacked[y]) --out_att_[w];
      }
    }
    for (std::size_t y : af_.attacked[x]) ++open_[y];
    labels_[x] = Unset;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      unassign(trail_.back());
      trail_.pop_back();
    }
  }

  bool propagate() {
    while (!queue_.empty()) {
      std::size_t x = queue_.front();
      queue_.pop_front();
      if (is_out(x) && !assign(x, NotIn)) return fail();
      if (all_attackers_out(x) && !assign(x, In)) return fail();
      if (labels_[x] == In)
        for (std::size_t y : af_.attackers[x])
          if (!assign(y, NotIn)) return fail();
      if (must_be_out(x)) {
        if (open_[x] == 0) return fail();
        if (open_[x] == 1) {
          for (std::size_t z : af_.attackers[x])
            if (labels_[z] == Unset) {
              if (!assign(z, In)) return fail();
              break;
            }
        }
      }
    }
    return true;
  }

  bool fail() {
    queue_.clear();
    return false;
  }

  // Depth-first with an explicit stack; the depth can reach the node count.
  void search() {
    struct Frame {
      std::size_t x, from, mark, pending;
      int tried;
    };
    std::vector<Frame> stack;
    std::size_t from = 0;
    auto open = [&] {
      if (++explored_ > cap_) throw EnumerationCapExceeded(cap_);
      while (from < order_.size() && labels_[order_[from]] != Unset) ++from;
      if (from < order_.size()) {
        stack.push_back({pick(order_[from]), from, trail_.size(), pending_.size(), 0});
        return;
      }
      for (std::size_t x = 0; x < labels_.size(); ++x) {
        if (labels_[x] == In && !all_attackers_out(x)) return;
        if (labels_[x] == NotIn && !is_out(x) && all_attackers_out(x)) return;
      }
      Extension e;
      for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == In) e.push_back(i);
      out_.push_back(std::move(e));
    };
    open();
    while (!stack.empty()) {
      Frame& f = stack.back();
      undo_to(f.mark);
      pending_.resize(f.pending);
      if (f.tried == 2) {
        stack.pop_back();
        continue;
      }
      const Label l = f.tried++ == 0 ? In : NotIn;
      const std::size_t x = f.x;
      from = f.from;
      if (assign(x, l) && propagate()) open();
    }
  }

  // An attacker of the open obligation with the fewest candidates left, if
  // any; otherwise the next node in static order.
  std::size_t pick(std::size_t fallback) const {
    std::size_t best = static_cast<std::size_t>(-1);
    std::uint32_t fewest = UINT32_MAX;
    for (std::size_t y : pending_)
      if (must_be_out(y) && open_[y] < fewest) {
        fewest = open_[y];
        best = y;
      }
    if (best == static_cast<std::size_t>(-1)) return fallback;
    for (std::size_t z : af_.attackers[best])
      if (labels_[z] == Unset) return z;
    return fallback;
  }

  // Nodes grouped by strongly connected component, components in
  // topological order of the attack relation. Branching in this order sees
  // every outside attacker already labelled.
  std::vector<std::size_t> scc_order() const {
    const std::size_t n = af_.size();
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, none), low(n, 0), comp(n, none);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::size_t counter = 0, n_comp = 0;
    // Iterative Tarjan over attacker -> attacked edges.
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != none) continue;
      frames.emplace_back(root, 0);
      while (!frames.empty()) {
        auto& [v, k] = frames.back();
        if (k == 0 && index[v] == none) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = 1;
        }
        if (k < af_.attacked[v].size()) {
          std::size_t w = af_.attacked[v][k++];
          if (index[w] == none) {
            frames.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = n_comp;
          } while (w != v);
          ++n_comp;
        }
        std::size_t done = v;
        frames.pop_back();
        if (!frames.empty()) {
          std::size_t parent = frames.back().first;
          low[parent] = std::min(low[parent], low[done]);
        }
      }
    }
    // Tarjan numbers components in reverse topological order.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (comp[a] != comp[b]) return comp[a] > comp[b];
      return a < b;
    });
    return order;
  }

  const Af& af_;
  std::vector<std::size_t> order_;
  std::size_t cap_;
  std::vector<Label> labels_;
  std::vector<std::uint32_t> in_att_, out_att_, open_, in_targets_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> pending_;  // nodes that gained an In target
  std::deque<std::size_t> queue_;
  std::size_t explored_ = 0;
  std::vector<Extension> out_;
};

bool subset(const Extension& a, const Extension& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Extension> complete(const Af& af, std::size_t cap) {
  std::vector<Extension> out = Labeller(af, cap).run();
  // Grounded is the least complete extension; put it first.
  Extension g = grounded(af);
  auto it = std::find(out.begin(), out.end(), g);
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  return out;
}

// }}}

std::vector<Extension> preferred(const Af& af, std::size_t cap) {
  std::vector<Extension> all = complete(af, cap);
  std::vector<Extension> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j)
      if (i != j && all[i].size() < all[j].size() && subset(all[i], all[j])) maximal = false;
    if (maximal) out.push_back(all[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Extension> extensions(const Af& af, Semantics sem, std::size_t cap) {
  switch (sem) {
    case Semantics::Grounded: return {grounded(af)};
    case Semantics::Complete: return complete(af, cap);
    case Semantics::Preferred: return preferred(af, cap);
  }
  return {};
}

bool conflict_free(const Af& af, const Extension& e) {
  for (std::size_t x : e)
    for (std::size_t a : af.attackers[x])
      if (std::binary_search(e.begin(), e.end(), a)) return false;
  return true;
}

bool defends(const Af& af, const Extension& e, std::size_t x) {
  for (std::size_t a : af.attackers[x]) {
    bool countered = false;
    for (std::size_t d : af.attackers[a])
      if (std::binary_search(e.begin(), e.end(), d)) {
        countered = true;
        break;
      }
    if (!countered) return false;
  }
  return true;
}

bool is_admissible(const Af& af, const Extension& e) {
  if (!conflict_free(af, e)) return false;
  for (std::size_t x : e)
    if (!defends(af, e, x)) return false;
  return true;
}

bool is_complete(const Af& af, const Extension& e) {
  if (!is_admissible(af, e)) return false;
  for (std::size_t x = 0; x < af.size(); ++x)
    if (!std::binary_search(e.begin(), e.end(), x) && defends(af, e, x)) return false;
  return true;
}

std::vector<Formula> consequences(const Saf& saf, const std::vector<Extension>& exts, Mode mode) {
  std::set<Formula> out;
  if (exts.empty()) return {};
  if (mode == Mode::Forall) {
    std::set<Formula> common;
    for (std::size_t k = 0; k < exts.size(); ++k) {
      std::set<Formula> here;
      for (std::size_t i : exts[k])
        if (saf.node(i).is_base()) here.insert(saf.node(i).argument.conclusion());
      if (k == 0) {
        common = std::move(here);
      } else {
        std::set<Formula> next;
        std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                              std::inserter(next, next.begin()));
        common = std::move(next);
      }
    }
    out = std::move(common);
  } else {
    Extension inter = exts[0];
    for (std::size_t k = 1; k < exts.size(); ++k) {
      Extension next;
      std::set_intersection(inter.begin(), inter.end(), exts[k].begin(), exts[k].end(),
                            std::back_inserter(next));
      inter = std::move(next);
    }
    for (std::size_t i : inter)
      if (saf.node(i).is_base()) out.insert(saf.node(i).argument.conclusion());
  }
  return {out.begin(), out.end()};
}

std::vector<Formula> consequences(const Saf& saf, Semantics sem, Mode mode, std::size_t cap) {
  return consequences(saf, extensions(Af::from_saf(saf), sem, cap), mode);
}

QueryResult entails_query(const Saf& saf, Semantics sem, Mode mode, Formula phi,
                          std::size_t cap) {
  std::vector<Extension> exts = extensions(Af::from_saf(saf), sem, cap);
  QueryResult r;
  r.n_extensions = exts.size();
  auto concludes = [&](std::size_t i) {
    return saf.node(i).is_base() && saf.node(i).argument.conclusion() == phi;
  };
  if (mode == Mode::Forall) {
    r.holds = !exts.empty();
    for (const auto& e : exts) {
      auto it = std::find_if(e.begin(), e.end(), concludes);
      if (it == e.end()) {
        r.holds = false;
        r.witnesses.clear();
        break;
      }
      r.witnesses.push_back(*it);
    }
  } else {
    Extension inter = exts.empty() ? Extension{} : exts[0];
    for (std::size_t k = 1; k < exts.size(); ++k) {
      Extension next;
      std::set_intersection(inter.begin(), inter.end(), exts[k].begin(), exts[k].end(),
                            std::back_inserter(next));
      inter = std::move(next);
    }
    for (std::size_t i : inter)
      if (concludes(i)) r.witnesses.push_back(i);
    r.holds = !r.witnesses.empty();
  }
  return r;
}

}  // namespace casewise
