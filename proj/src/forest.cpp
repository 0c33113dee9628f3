#include "zipdata/forest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zipdata/errors.hpp"

namespace zipdata {

namespace {

constexpr std::uint32_t no_coset = static_cast<std::uint32_t>(-1);

void bfs_coset(const ZipDatum& z, const std::vector<Elem>& e_gens, Elem seed, std::uint32_t index,
               TwistedQuotient& q) {
  const FiniteGroup& G = z.g_group();
  const FiniteGroup& E = z.e_group();
  std::vector<Elem> queue{seed};
  q.coset_index[seed] = index;
  q.right_witness[seed] = E.identity();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem g = queue[i];
    const Elem w = q.right_witness[g];
    for (Elem s : e_gens) {
      const Elem left = G.mul(z.tau(s), g);
      if (q.coset_index[left] != index) {
        q.coset_index[left] = index;
        q.right_witness[left] = w;
        queue.push_back(left);
      }
      const Elem right = G.mul(g, z.sigma(s));
      if (q.coset_index[right] != index) {
        q.coset_index[right] = index;
        q.right_witness[right] = E.mul(w, s);
        queue.push_back(right);
      }
    }
  }
}

}  // namespace

std::size_t TwistedQuotient::index_of(Elem g) const {
  if (g >= coset_index.size() || coset_index[g] == no_coset)
    throw input_error("element is outside the quotient domain");
  return coset_index[g];
}

TwistedQuotient twisted_quotient(const ZipDatum& z) {
  const FiniteGroup& G = z.g_group();
  const auto e_gens = generating_set(z.e());
  TwistedQuotient q;
  q.coset_index.assign(G.order(), no_coset);
  q.right_witness.assign(G.order(), no_elem);
  for (Elem g : z.g().members()) {
    if (q.coset_index[g] != no_coset) continue;
    const auto index = static_cast<std::uint32_t>(q.representatives.size());
    q.representatives.push_back(g);
    bfs_coset(z, e_gens, g, index, q);
  }
  if (q.representatives.size() == 1 && q.representatives.front() != G.identity()) {
    q.identity_override = true;
    q.representatives.front() = G.identity();
    std::fill(q.coset_index.begin(), q.coset_index.end(), no_coset);
    bfs_coset(z, e_gens, G.identity(), 0, q);
  }
  return q;
}

ClassificationPath RepForest::path_to(std::size_t leaf) const {
  ClassificationPath p;
  std::optional<std::size_t> cur = leaf;
  while (cur) {
    p.nodes.push_back(*cur);
    p.entries.push_back(nodes_.at(*cur).element);
    cur = nodes_[*cur].parent;
  }
  std::reverse(p.nodes.begin(), p.nodes.end());
  std::reverse(p.entries.begin(), p.entries.end());
  return p;
}

RepForest build_forest(const ZipDatum& z) {
  const FiniteGroup& G = z.g_group();
  RepForest f(z);
  std::map<Elem, RefinementTrace> traces;
  auto datum_for = [&](Elem accumulated, std::size_t level) -> ZipDatum {
    auto it = traces.find(accumulated);
    if (it == traces.end())
      it = traces.emplace(accumulated, refine_to_stationary(twist(z, accumulated))).first;
    return it->second.datum_at(level);
  };
  auto add_node = [&](std::size_t generation, Elem element, std::optional<std::size_t> parent,
                      Elem accumulated) {
    ZipDatum d = datum_for(accumulated, generation + 1);
    const bool stable = d.tau_surjective();
    const std::size_t id = f.nodes_.size();
    f.nodes_.push_back({generation, element, parent, accumulated, stable, {}});
    f.node_data_.push_back(std::move(d));
    f.node_quotients_.emplace_back();
    if (parent) f.nodes_[*parent].children.push_back(id);
    return id;
  };

  f.root_quotient_ = twisted_quotient(z);
  if (f.root_quotient_->identity_override) ++f.identity_overrides_;
  f.generations_.emplace_back();
  for (Elem r : f.root_quotient_->representatives) f.generations_[0].push_back(add_node(0, r, std::nullopt, r));

  const std::size_t generation_limit = z.e().order() + 2;
  auto all_stable = [&](const std::vector<std::size_t>& gen) {
    return std::all_of(gen.begin(), gen.end(), [&](std::size_t i) { return f.nodes_[i].stable; });
  };
  while (!all_stable(f.generations_.back())) {
    const std::size_t n = f.generations_.size() - 1;
    if (n > generation_limit) throw invariant_violation("forest does not become stationary");
    std::vector<std::size_t> next;
    const auto current = f.generations_.back();
    for (std::size_t id : current) {
      const Elem acc = f.nodes_[id].accumulated;
      if (f.nodes_[id].stable) {
        const std::size_t child = add_node(n + 1, G.identity(), id, acc);
        if (!f.nodes_[child].stable) throw invariant_violation("stable node has an unstable child");
        next.push_back(child);
        continue;
      }
      TwistedQuotient q = twisted_quotient(f.node_data_[id]);
      if (q.identity_override) ++f.identity_overrides_;
      for (Elem r : q.representatives) next.push_back(add_node(n + 1, r, id, G.mul(r, acc)));
      f.node_quotients_[id] = std::move(q);
    }
    f.generations_.push_back(std::move(next));
  }
  return f;
}

ClassificationPath classify(const RepForest& f, Elem x) {
  const ZipDatum& z = f.datum_;
  const FiniteGroup& G = z.g_group();
  if (!z.g().contains(x)) throw input_error("classify: element is not in G");
  ClassificationPath path;

  const ZipDatum* level = &z;
  const TwistedQuotient* quotient = &*f.root_quotient_;
  std::optional<std::size_t> node;
  Elem c = x;
  for (;;) {
    const Elem r = quotient->representatives[quotient->index_of(c)];
    const Elem w = quotient->right_witness[c];
    // tau(w) c sigma(w)^-1 is equivalent to c and lies in tau(E) r
    const Elem moved = G.mul(G.mul(level->tau(w), c), G.inv(level->sigma(w)));
    const Elem rest = G.mul(moved, G.inv(r));
    if (!level->tau_image().contains(rest))
      throw invariant_violation("normalized element left tau(E) r");

    std::optional<std::size_t> next;
    const auto& candidates = node ? f.nodes_[*node].children : f.generations_.front();
    for (std::size_t id : candidates)
      if (f.nodes_[id].element == r) next = id;
    if (!next) throw invariant_violation("classification reached a missing child");
    node = next;
    path.entries.push_back(r);
    path.nodes.push_back(*node);
    c = rest;
    if (!f.node_data_[*node].g().contains(c))
      throw invariant_violation("remainder is not in the child datum's G");

    if (f.nodes_[*node].stable) {
      while (!f.nodes_[*node].children.empty()) {
        node = f.nodes_[*node].children.front();
        path.entries.push_back(G.identity());
        path.nodes.push_back(*node);
      }
      return path;
    }
    level = &f.node_data_[*node];
    quotient = &*f.node_quotients_[*node];
  }
}

Elem reconstruct(const RepForest& f, const ClassificationPath& p) {
  const FiniteGroup& G = f.datum().g_group();
  Elem acc = G.identity();
  for (Elem r : p.entries) acc = G.mul(r, acc);
  return acc;
}

bool limit_bijection_check(const RepForest& f, const ClassReport& oracle) {
  if (!(oracle.datum() == f.datum()) || oracle.relation() != Relation::zip_coarse)
    throw input_error("oracle must be the zip classes of the same datum");
  if (f.leaves().size() != oracle.size()) return false;
  std::vector<std::optional<std::vector<Elem>>> path_of_class(oracle.size());
  std::map<std::vector<Elem>, std::size_t> class_of_path;
  for (Elem x : f.datum().g().members()) {
    const auto path = classify(f, x);
    const std::size_t cls = oracle.class_index(x);
    if (!path_of_class[cls]) {
      path_of_class[cls] = path.entries;
      if (!class_of_path.emplace(path.entries, cls).second) return false;
    } else if (*path_of_class[cls] != path.entries) {
      return false;
    }
    if (oracle.class_index(reconstruct(f, path)) != cls) return false;
  }
  return class_of_path.size() == oracle.size();
}

bool parent_product_check(const RepForest& f) {
  const FiniteGroup& G = f.datum().g_group();
  for (const auto& n : f.nodes()) {
    const Elem expected = n.parent ? G.mul(n.element, f.node(*n.parent).accumulated) : n.element;
    if (n.accumulated != expected) return false;
    if (n.parent && f.node(*n.parent).generation + 1 != n.generation) return false;
  }
  for (std::size_t g = 0; g + 1 < f.generations().size(); ++g)
    for (std::size_t id : f.generations()[g]) {
      const auto& n = f.node(id);
      if (n.stable && (n.children.size() != 1 || f.node(n.children[0]).element != G.identity()))
        return false;
    }
  return true;
}

bool root_class_count_check(const RepForest& f, const ClassReport& oracle) {
  const ZipDatum& z = f.datum();
  const TwistedQuotient q = twisted_quotient(z);
  for (std::size_t root : f.roots()) {
    std::size_t leaves = 0;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t id = stack.back();
      stack.pop_back();
      const auto& n = f.node(id);
      if (n.children.empty()) ++leaves;
      stack.insert(stack.end(), n.children.begin(), n.children.end());
    }
    const std::size_t home = q.index_of(f.node(root).element);
    std::set<std::size_t> meeting;
    for (Elem g : z.g().members())
      if (q.coset_index[g] == home) meeting.insert(oracle.class_index(g));
    if (meeting.size() != leaves) return false;
  }
  return true;
}

bool path_roundtrip_check(const RepForest& f) {
  for (std::size_t leaf : f.leaves()) {
    const auto path = f.path_to(leaf);
    if (classify(f, reconstruct(f, path)).entries != path.entries) return false;
  }
  return true;
}

}  // namespace zipdata
