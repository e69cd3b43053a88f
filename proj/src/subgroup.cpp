#include "residua/subgroup.hpp"

#include <algorithm>

#include "residua/error.hpp"

namespace residua {

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw DomainError("subgroups have different parent groups");
}

}  // namespace

Subgroup trivial_subgroup(const GroupPtr& g) {
  ElemSet m(g->order);
  m.set(0);
  return {g, std::move(m)};
}

Subgroup full_subgroup(const GroupPtr& g) {
  ElemSet m(g->order);
  for (uint32_t i = 0; i < g->order; ++i) m.set(i);
  return {g, std::move(m)};
}

Subgroup cyclic_subgroup(const GroupPtr& g, uint16_t x) {
  if (x >= g->order) throw DomainError("element index out of range");
  ElemSet m(g->order);
  uint16_t cur = 0;
  do {
    m.set(cur);
    cur = g->mul(cur, x);
  } while (cur != 0);
  return {g, std::move(m)};
}

Subgroup generated_subgroup(const GroupPtr& g, const ElemSet& seed) {
  return generated_subgroup(g, seed.to_vector());
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<uint16_t>& seed) {
  ElemSet mem(g->order);
  mem.set(0);
  std::vector<uint16_t> queue{0};
  std::vector<uint16_t> gens;
  for (uint16_t s : seed) {
    if (s >= g->order) throw DomainError("seed index out of range");
    if (s != 0) gens.push_back(s);
  }
  // Right-multiplying from the identity reaches every product of seed
  // elements; in a finite group that closure is the generated subgroup.
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (uint16_t s : gens) {
      uint16_t y = g->mul(queue[qi], s);
      if (!mem.test(y)) {
        mem.set(y);
        queue.push_back(y);
      }
    }
  }
  return {g, std::move(mem)};
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return generated_subgroup(h.parent, h.members | k.members);
}

Subgroup meet(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return {h.parent, h.members & k.members};
}

ElemSet set_product(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& g = *h.parent;
  ElemSet out(g.order);
  auto hv = h.members.to_vector();
  auto kv = k.members.to_vector();
  for (uint16_t a : hv)
    for (uint16_t b : kv) out.set(g.mul(a, b));
  return out;
}

Subgroup normal_closure(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  ElemSet cur = h.members;
  for (;;) {
    // Conjugation by the generators suffices: a finite set closed under
    // conj by g is closed under conj by g^-1 and all products.
    ElemSet grown = cur;
    bool changed = false;
    for (uint16_t x : cur.to_vector()) {
      for (uint16_t gen : g->generators) {
        uint16_t y = g->conj(x, gen);
        if (!grown.test(y)) {
          grown.set(y);
          changed = true;
        }
      }
    }
    if (!changed) break;
    cur = generated_subgroup(g, grown).members;
  }
  return {g, std::move(cur)};
}

Subgroup normal_closure_in(const Subgroup& k, const Subgroup& h) {
  require_same_parent(k, h);
  if (!h.members.is_subset_of(k.members))
    throw DomainError("normal_closure_in requires h <= k");
  const GroupPtr& g = h.parent;
  auto conjugators = k.members.to_vector();
  ElemSet cur = h.members;
  for (;;) {
    ElemSet grown = cur;
    bool changed = false;
    for (uint16_t x : cur.to_vector()) {
      for (uint16_t c : conjugators) {
        uint16_t y = g->conj(x, c);
        if (!grown.test(y)) {
          grown.set(y);
          changed = true;
        }
      }
    }
    if (!changed) break;
    cur = generated_subgroup(g, grown).members;
  }
  return {g, std::move(cur)};
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& g = *h.parent;
  ElemSet comms(g.order);
  auto hv = h.members.to_vector();
  auto kv = k.members.to_vector();
  // All pairs, not just generators: the generator commutators need not
  // generate [H,K] without a normal closure.
  for (uint16_t a : hv) {
    uint16_t ia = g.inv(a);
    for (uint16_t b : kv) {
      comms.set(g.mul(g.mul(g.mul(ia, g.inv(b)), a), b));
    }
  }
  return generated_subgroup(h.parent, comms);
}

bool is_normal(const Subgroup& h) {
  const Group& g = *h.parent;
  for (uint16_t x : h.members.to_vector())
    for (uint16_t gen : g.generators)
      if (!h.members.test(g.conj(x, gen))) return false;
  return true;
}

bool is_normal_in(const Subgroup& k, const Subgroup& h) {
  require_same_parent(k, h);
  const Group& g = *h.parent;
  for (uint16_t c : k.members.to_vector())
    for (uint16_t x : h.members.to_vector())
      if (!h.members.test(g.conj(x, c))) return false;
  return true;
}

bool is_subnormal(const Subgroup& h) {
  Subgroup cur = full_subgroup(h.parent);
  for (;;) {
    if (cur.members == h.members) return true;
    Subgroup next = normal_closure_in(cur, h);
    if (next.members == cur.members) return false;
    cur = std::move(next);
  }
}

std::vector<uint32_t> SubgroupSeries::orders() const {
  std::vector<uint32_t> out;
  out.reserve(terms.size());
  for (const Subgroup& t : terms) out.push_back(t.order());
  return out;
}

namespace {

// Shared driver: next = step(current), run per the stop convention.
template <typename Step>
SubgroupSeries run_series(const Subgroup& start, SeriesKind kind, Step step) {
  SubgroupSeries s{start.parent, kind, {start}};
  while (!s.terms.back().is_trivial()) {
    Subgroup next = step(s.terms.back());
    bool repeat = next.members == s.terms.back().members;
    s.terms.push_back(std::move(next));
    if (repeat) break;
  }
  return s;
}

}  // namespace

SubgroupSeries derived_series_of(const Subgroup& h) {
  return run_series(h, SeriesKind::Derived,
                    [](const Subgroup& t) { return commutator_subgroup(t, t); });
}

SubgroupSeries lower_central_series_of(const Subgroup& h) {
  return run_series(h, SeriesKind::LowerCentral,
                    [&h](const Subgroup& t) { return commutator_subgroup(h, t); });
}

SubgroupSeries derived_series(const GroupPtr& g) {
  return derived_series_of(full_subgroup(g));
}

SubgroupSeries lower_central_series(const GroupPtr& g) {
  return lower_central_series_of(full_subgroup(g));
}

QuotientMap quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (n.parent != g) throw DomainError("kernel belongs to a different group");
  if (!is_normal(n)) throw DomainError("quotient kernel is not normal");

  const uint32_t order = g->order;
  const uint32_t ksize = n.order();
  auto nv = n.members.to_vector();

  std::vector<uint16_t> image(order, 0xFFFF);
  std::vector<uint16_t> reps;
  for (uint32_t x = 0; x < order; ++x) {
    if (image[x] != 0xFFFF) continue;
    auto id = static_cast<uint16_t>(reps.size());
    reps.push_back(static_cast<uint16_t>(x));
    for (uint16_t nn : nv) image[g->mul(static_cast<uint16_t>(x), nn)] = id;
  }
  const uint32_t m = static_cast<uint32_t>(reps.size());
  if (m * ksize != order) throw DomainError("coset partition inconsistent");

  auto t = std::make_shared<Group>();
  t->degree = m;
  t->order = m;
  t->cayley.resize(static_cast<size_t>(m) * m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      t->cayley[static_cast<size_t>(i) * m + j] = image[g->mul(reps[i], reps[j])];

  // Right-regular action: element i sends coset j to j*i. With left-to-right
  // composition this is a homomorphism, and coset 0 maps to the identity.
  t->elements.reserve(m);
  for (uint32_t i = 0; i < m; ++i) {
    std::vector<uint16_t> img(m);
    for (uint32_t j = 0; j < m; ++j) img[j] = t->cayley[static_cast<size_t>(j) * m + i];
    t->elements.push_back(Perm::from_images(std::move(img)));
  }

  t->inverse.resize(m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      if (t->cayley[static_cast<size_t>(i) * m + j] == 0) {
        t->inverse[i] = static_cast<uint16_t>(j);
        break;
      }

  for (uint16_t gsrc : g->generators) {
    uint16_t gi = image[gsrc];
    if (gi != 0 &&
        std::find(t->generators.begin(), t->generators.end(), gi) == t->generators.end())
      t->generators.push_back(gi);
  }

  return {g, n, std::move(t), std::move(image)};
}

Subgroup image_subgroup(const QuotientMap& q, const Subgroup& h) {
  if (h.parent != q.source) throw DomainError("subgroup belongs to a different group");
  ElemSet m(q.target->order);
  for (uint16_t x : h.members.to_vector()) m.set(q.image[x]);
  return {q.target, std::move(m)};
}

Subgroup preimage_subgroup(const QuotientMap& q, const Subgroup& m) {
  if (m.parent != q.target) throw DomainError("subgroup belongs to a different group");
  ElemSet out(q.source->order);
  for (uint32_t x = 0; x < q.source->order; ++x)
    if (m.members.test(q.image[x])) out.set(x);
  return {q.source, std::move(out)};
}

std::vector<uint16_t> generating_set(const Subgroup& h) {
  std::vector<uint16_t> gens;
  Subgroup span = trivial_subgroup(h.parent);
  for (uint16_t x : h.members.to_vector()) {
    if (span.members.test(x)) continue;
    gens.push_back(x);
    ElemSet seed = span.members;
    seed.set(x);
    span = generated_subgroup(h.parent, seed);
    if (span.members == h.members) break;
  }
  return gens;
}

std::string generator_words(const Subgroup& h) {
  auto gens = generating_set(h);
  if (gens.empty()) return "()";
  std::string out;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += h.parent->elements[gens[i]].to_cycles();
  }
  return out;
}

Materialized materialize(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  auto gens = generating_set(h);

  // Same breadth-first rule as build_group, driven by the parent table, with
  // lexicographic perm comparison as the per-level tie-break. All BFS state
  // is in parent element indices.
  std::vector<uint16_t> order_out{0};
  std::vector<int32_t> newidx(g->order, -1);
  newidx[0] = 0;
  std::vector<uint16_t> level{0};
  while (!level.empty()) {
    std::vector<uint16_t> fresh;
    ElemSet pending(g->order);
    for (uint16_t x : level) {
      for (uint16_t gen : gens) {
        uint16_t c = g->mul(x, gen);
        if (newidx[c] >= 0 || pending.test(c)) continue;
        pending.set(c);
        fresh.push_back(c);
      }
    }
    std::sort(fresh.begin(), fresh.end(), [&](uint16_t a, uint16_t b) {
      return g->elements[a] < g->elements[b];
    });
    for (uint16_t c : fresh) {
      newidx[c] = static_cast<int32_t>(order_out.size());
      order_out.push_back(c);
    }
    level = std::move(fresh);
  }

  const auto m = static_cast<uint32_t>(order_out.size());
  auto t = std::make_shared<Group>();
  t->degree = g->degree;
  t->order = m;
  t->elements.reserve(m);
  for (uint16_t pi : order_out) t->elements.push_back(g->elements[pi]);
  t->cayley.resize(static_cast<size_t>(m) * m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      t->cayley[static_cast<size_t>(i) * m + j] =
          static_cast<uint16_t>(newidx[g->mul(order_out[i], order_out[j])]);
  t->inverse.resize(m);
  for (uint32_t i = 0; i < m; ++i)
    t->inverse[i] = static_cast<uint16_t>(newidx[g->inv(order_out[i])]);
  for (uint16_t gen : gens) t->generators.push_back(static_cast<uint16_t>(newidx[gen]));

  return {std::move(t), h, std::move(order_out)};
}

Subgroup map_back(const Materialized& m, const ElemSet& sub) {
  ElemSet out(m.of.parent->order);
  for (uint16_t i : sub.to_vector()) out.set(m.to_parent[i]);
  return {m.of.parent, std::move(out)};
}

}  // namespace residua
