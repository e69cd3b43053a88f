#include "residua/group.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "residua/error.hpp"

namespace residua {

GroupPtr build_group(uint32_t degree, const std::vector<Perm>& generators,
                     uint32_t max_order) {
  if (degree == 0) throw DomainError("group degree must be at least 1");
  if (degree > 65535) throw DomainError("group degree exceeds 65535");
  if (max_order == 0 || max_order > kHardMaxOrder)
    throw DomainError("order cap must be in 1.." + std::to_string(kHardMaxOrder));

  // Distinct non-identity generators, input order preserved.
  std::vector<Perm> gens;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  std::vector<Perm> elems{Perm::identity(degree)};
  std::unordered_map<Perm, uint16_t, PermHash> index;
  index.emplace(elems[0], 0);

  // y = elems[parent] * gens[gen]; drives the Cayley fill below.
  struct Link {
    uint16_t parent;
    uint16_t gen;
  };
  std::vector<Link> link{{0, 0}};

  std::vector<uint16_t> level{0};
  while (!level.empty()) {
    std::map<Perm, Link> fresh;  // sorted => lexicographic tie-break per level
    for (uint16_t x : level) {
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Perm c = elems[x] * gens[gi];
        if (index.count(c)) continue;
        fresh.try_emplace(std::move(c), Link{x, static_cast<uint16_t>(gi)});
      }
    }
    level.clear();
    for (auto& [p, lk] : fresh) {
      if (elems.size() >= max_order)
        throw CapError("group order exceeds cap " + std::to_string(max_order));
      auto idx = static_cast<uint16_t>(elems.size());
      index.emplace(p, idx);
      elems.push_back(p);
      link.push_back(lk);
      level.push_back(idx);
    }
  }

  auto g = std::make_shared<Group>();
  g->degree = degree;
  g->order = static_cast<uint32_t>(elems.size());
  const uint32_t n = g->order;
  g->elements = std::move(elems);

  g->cayley.assign(static_cast<size_t>(n) * n, 0);
  for (uint32_t j = 0; j < n; ++j) g->cayley[j] = static_cast<uint16_t>(j);
  for (uint32_t i = 0; i < n; ++i)
    g->cayley[static_cast<size_t>(i) * n] = static_cast<uint16_t>(i);

  // Generator columns by explicit composition; every other column y with
  // y = p * gen follows from cayley[i][y] = cayley[cayley[i][p]][gen], and p
  // was discovered in an earlier level, so ascending y order suffices.
  std::vector<uint16_t> gcol(gens.size());
  std::vector<bool> is_gen_col(n, false);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    uint16_t col = index.at(gens[gi]);
    gcol[gi] = col;
    is_gen_col[col] = true;
    for (uint32_t i = 0; i < n; ++i)
      g->cayley[static_cast<size_t>(i) * n + col] = index.at(g->elements[i] * gens[gi]);
  }
  for (uint32_t y = 1; y < n; ++y) {
    if (is_gen_col[y]) continue;
    uint16_t p = link[y].parent;
    uint16_t col = gcol[link[y].gen];
    for (uint32_t i = 0; i < n; ++i) {
      uint16_t ip = g->cayley[static_cast<size_t>(i) * n + p];
      g->cayley[static_cast<size_t>(i) * n + y] =
          g->cayley[static_cast<size_t>(ip) * n + col];
    }
  }

  g->inverse.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) {
      if (g->cayley[static_cast<size_t>(i) * n + j] == 0) {
        g->inverse[i] = static_cast<uint16_t>(j);
        break;
      }
    }
  }

  g->generators.reserve(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) g->generators.push_back(gcol[gi]);
  return g;
}

uint32_t element_order(const Group& g, uint16_t i) {
  if (i >= g.order) throw DomainError("element index out of range");
  uint32_t k = 1;
  uint16_t cur = i;
  while (cur != 0) {
    cur = g.mul(cur, i);
    ++k;
  }
  return k;
}

std::vector<std::vector<uint16_t>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<uint16_t>> classes;
  std::vector<bool> seen(g.order, false);
  for (uint32_t x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<uint16_t> orbit{static_cast<uint16_t>(x)};
    seen[x] = true;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (uint16_t gen : g.generators) {
        uint16_t y = g.conj(orbit[qi], gen);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

bool is_abelian(const Group& g) {
  for (uint32_t i = 1; i < g.order; ++i)
    for (uint32_t j = i + 1; j < g.order; ++j)
      if (g.mul(static_cast<uint16_t>(i), static_cast<uint16_t>(j)) !=
          g.mul(static_cast<uint16_t>(j), static_cast<uint16_t>(i)))
        return false;
  return true;
}

}  // namespace residua
