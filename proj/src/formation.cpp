#include "residua/formation.hpp"

#include <algorithm>
#include <unordered_set>

#include "residua/classify.hpp"
#include "residua/error.hpp"

namespace residua {

Formation Formation::p_supersoluble(uint32_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  return Formation(Kind::PSupersoluble, p);
}

Formation Formation::p_nilpotent(uint32_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  return Formation(Kind::PNilpotent, p);
}

Formation Formation::composite(Formation outer, Formation inner) {
  Formation f(Kind::Composite);
  f.outer_ = std::make_shared<const Formation>(std::move(outer));
  f.inner_ = std::make_shared<const Formation>(std::move(inner));
  return f;
}

Formation Formation::parse(std::string_view text) {
  if (auto star = text.find('*'); star != std::string_view::npos) {
    if (star == 0 || star + 1 == text.size())
      throw ParseError("malformed composite formation name");
    return composite(parse(text.substr(0, star)), parse(text.substr(star + 1)));
  }
  if (text == "E") return all();
  if (text == "A") return abelian();
  if (text == "N") return nilpotent();
  if (text == "U") return supersoluble();
  auto parse_prime = [&](std::string_view s) -> uint32_t {
    uint32_t p = 0;
    if (s.empty()) throw ParseError("missing prime in formation name");
    for (char c : s) {
      if (!isdigit(static_cast<unsigned char>(c)))
        throw ParseError("malformed prime in formation name");
      p = p * 10 + static_cast<uint32_t>(c - '0');
      if (p > 100000) throw ParseError("prime out of range");
    }
    if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
    return p;
  };
  if (text.rfind("pU:", 0) == 0) return p_supersoluble(parse_prime(text.substr(3)));
  if (text.rfind("pN:", 0) == 0) return p_nilpotent(parse_prime(text.substr(3)));
  throw ParseError("unknown formation name '" + std::string(text) + "'");
}

std::string Formation::name() const {
  switch (kind_) {
    case Kind::All: return "E";
    case Kind::Abelian: return "A";
    case Kind::Nilpotent: return "N";
    case Kind::Supersoluble: return "U";
    case Kind::PSupersoluble: return "pU:" + std::to_string(p_);
    case Kind::PNilpotent: return "pN:" + std::to_string(p_);
    case Kind::Composite: return outer_->name() + "*" + inner_->name();
  }
  return "?";
}

bool membership(const GroupPtr& g, const Formation& f) {
  switch (f.kind()) {
    case Formation::Kind::All: return true;
    case Formation::Kind::Abelian: return is_abelian(*g);
    case Formation::Kind::Nilpotent: return is_nilpotent(g);
    case Formation::Kind::Supersoluble: return is_supersoluble(g);
    case Formation::Kind::PSupersoluble: return is_p_supersoluble(g, f.prime());
    case Formation::Kind::PNilpotent: return is_p_nilpotent(g, f.prime());
    case Formation::Kind::Composite:
      return membership_sub(residual(g, f.inner()), f.outer());
  }
  return false;
}

bool membership_sub(const Subgroup& h, const Formation& f) {
  // Ambient answers avoid re-indexing for the classes that allow it.
  switch (f.kind()) {
    case Formation::Kind::All: return true;
    case Formation::Kind::Abelian: return commutator_subgroup(h, h).is_trivial();
    case Formation::Kind::Nilpotent: return is_nilpotent_sub(h);
    case Formation::Kind::PNilpotent: return is_p_nilpotent_sub(h, f.prime());
    default: return membership(materialize(h).group, f);
  }
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<Subgroup> all;
  auto add = [&](Subgroup s) -> bool {
    if (seen.insert(s.members).second) {
      all.push_back(std::move(s));
      return true;
    }
    return false;
  };
  add(trivial_subgroup(g));

  // Base: normal closures of the cyclic subgroups. Every normal subgroup is
  // the join of the closures of its elements, so join-closure of the base
  // yields the whole lattice.
  std::vector<Subgroup> base;
  for (uint32_t x = 1; x < g->order; ++x) {
    Subgroup ncl = normal_closure(cyclic_subgroup(g, static_cast<uint16_t>(x)));
    if (add(ncl)) base.push_back(std::move(ncl));
  }

  std::vector<Subgroup> frontier = base;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& f : frontier) {
      for (const Subgroup& b : base) {
        if (b.members.is_subset_of(f.members)) continue;
        // Product of normal subgroups is already their join.
        Subgroup j{g, set_product(f, b)};
        if (add(j)) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    uint32_t oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return ElemSet::compare(a.members, b.members) < 0;
  });
  return all;
}

Subgroup residual_generic(const GroupPtr& g, const Formation& f) {
  auto lattice = normal_subgroups(g);
  std::vector<const Subgroup*> family;
  for (const Subgroup& n : lattice) {
    QuotientMap q = quotient_group(g, n);
    if (membership(q.target, f)) family.push_back(&n);
  }
  // Nonempty: G/G is trivial and every class contains the trivial group.
  std::vector<const Subgroup*> minimal;
  for (const Subgroup* n : family) {
    bool is_min = true;
    for (const Subgroup* m : family) {
      if (m != n && m->members.is_subset_of(n->members) && m->members != n->members) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(n);
  }
  Subgroup res = *minimal.front();
  for (size_t i = 1; i < minimal.size(); ++i) res = meet(res, *minimal[i]);
  // A formation is closed under subdirect products, so the intersection must
  // itself land in the family; anything else is an implementation bug.
  if (!membership(quotient_group(g, res).target, f))
    throw std::logic_error("residual family is not intersection-closed: " + f.name());
  return res;
}

Subgroup residual(const GroupPtr& g, const Formation& f) {
  switch (f.kind()) {
    case Formation::Kind::All: return trivial_subgroup(g);
    case Formation::Kind::Abelian: {
      Subgroup full = full_subgroup(g);
      return commutator_subgroup(full, full);
    }
    case Formation::Kind::Nilpotent: return lower_central_series(g).limit();
    case Formation::Kind::Composite:
      return residual_in(residual(g, f.inner()), f.outer());
    default: return residual_generic(g, f);
  }
}

Subgroup residual_in(const Subgroup& h, const Formation& f) {
  switch (f.kind()) {
    case Formation::Kind::All: return trivial_subgroup(h.parent);
    case Formation::Kind::Abelian: return commutator_subgroup(h, h);
    case Formation::Kind::Nilpotent: return lower_central_series_of(h).limit();
    case Formation::Kind::Composite:
      return residual_in(residual_in(h, f.inner()), f.outer());
    default: {
      Materialized m = materialize(h);
      return map_back(m, residual_generic(m.group, f).members);
    }
  }
}

}  // namespace residua
