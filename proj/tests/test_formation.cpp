#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "residua/catalog.hpp"
#include "residua/classify.hpp"
#include "residua/error.hpp"
#include "residua/factorize.hpp"
#include "residua/formation.hpp"
#include "support/bridge.hpp"

using namespace residua;

namespace {

const std::vector<const char*> kSample = {"C1",  "C6", "C12", "S3",      "S4",
                                          "A4",  "D8", "D12", "D24",     "Q8",
                                          "C16", "S3 x C2", "C3 x S3", "C2 x A4"};

std::vector<uint32_t> lattice_orders(const GroupPtr& g) {
  std::vector<uint32_t> out;
  for (const Subgroup& n : normal_subgroups(g)) out.push_back(n.order());
  return out;
}

}  // namespace

TEST_CASE("formation name parsing round-trips") {
  for (const char* name : {"A", "N", "U", "E", "pU:3", "pN:2", "N*A", "pN:2*A", "N*A*A"}) {
    Formation f = Formation::parse(name);
    CHECK(f.name() == name);
  }
  CHECK(Formation::parse("N*A").kind() == Formation::Kind::Composite);
  CHECK(Formation::parse("N*A").outer().kind() == Formation::Kind::Nilpotent);
  CHECK(Formation::parse("pU:5").prime() == 5);
  CHECK_THROWS_AS(Formation::parse("X"), ParseError);
  CHECK_THROWS_AS(Formation::parse("pU:4"), ParseError);
  CHECK_THROWS_AS(Formation::parse("pN:"), ParseError);
  CHECK_THROWS_AS(Formation::parse("*A"), ParseError);
  CHECK_THROWS_AS(Formation::parse("N*"), ParseError);
}

TEST_CASE("membership dispatch") {
  GroupPtr c12 = build_builtin("C12");
  CHECK(membership(c12, Formation::nilpotent()));
  CHECK(membership(c12, Formation::abelian()));

  GroupPtr a4 = build_builtin("A4");
  CHECK(!membership(a4, Formation::supersoluble()));
  CHECK(membership(a4, Formation::all()));
  // A4' = V4 is nilpotent, so A4 lies in the product class N*A
  CHECK(membership(a4, Formation::parse("N*A")));

  GroupPtr s3 = build_builtin("S3");
  CHECK(membership(s3, Formation::parse("N*A")));
  CHECK(!membership(s3, Formation::abelian()));
  CHECK(membership(s3, Formation::p_nilpotent(2)));
  CHECK(!membership(s3, Formation::p_nilpotent(3)));
}

TEST_CASE("every class contains the trivial group") {
  GroupPtr triv = build_builtin("C1");
  for (const char* name : {"A", "N", "U", "E", "pU:2", "pN:7", "N*A", "pN:3*A"})
    CHECK(membership(triv, Formation::parse(name)));
}

TEST_CASE("normal subgroup lattices") {
  GroupPtr s3 = build_builtin("S3");
  CHECK(lattice_orders(s3) == std::vector<uint32_t>{1, 3, 6});

  GroupPtr s4 = build_builtin("S4");
  CHECK(lattice_orders(s4) == std::vector<uint32_t>{1, 4, 12, 24});

  // raw cross-check on S4: normal subgroups via exhaustive enumeration
  {
    auto raw = bridge::to_raw(*s4);
    std::vector<uint32_t> raw_orders;
    for (const auto& h : rawora::all_subgroups(raw, 4))
      if (rawora::is_normal_in(h, raw)) raw_orders.push_back(static_cast<uint32_t>(h.size()));
    std::sort(raw_orders.begin(), raw_orders.end());
    CHECK(lattice_orders(s4) == raw_orders);
  }

  // abelian: every subgroup is normal
  GroupPtr c12 = build_builtin("C12");
  auto all = all_subgroups(c12);
  CHECK(normal_subgroups(c12).size() == all.size());

  // every reported subgroup is in fact normal and closed
  for (const char* name : {"D12", "Q8", "C2 x A4"}) {
    GroupPtr g = build_builtin(name);
    for (const Subgroup& n : normal_subgroups(g)) {
      CHECK(is_normal(n));
      CHECK(n.members.test(0));
      CHECK(g->order % n.order() == 0);
    }
  }
}

TEST_CASE("residual examples") {
  GroupPtr a4 = build_builtin("A4");
  CHECK(residual(a4, Formation::supersoluble()).order() == 4);
  CHECK(residual(a4, Formation::nilpotent()).order() == 4);
  CHECK(residual_generic(a4, Formation::supersoluble()).order() == 4);

  GroupPtr s3 = build_builtin("S3");
  Subgroup s3_derived = residual(s3, Formation::abelian());
  CHECK(s3_derived.order() == 3);
  CHECK(residual_generic(s3, Formation::abelian()).members == s3_derived.members);

  GroupPtr s4 = build_builtin("S4");
  CHECK(residual(s4, Formation::supersoluble()).order() == 4);

  // membership implies trivial residual, and conversely
  for (const char* name : kSample) {
    GroupPtr g = build_builtin(name);
    for (const char* fname : {"A", "N", "U"}) {
      Formation f = Formation::parse(fname);
      CHECK(membership(g, f) == residual(g, f).is_trivial());
    }
  }
}

TEST_CASE("residuals are normal and quotients land in the class") {
  for (const char* name : kSample) {
    GroupPtr g = build_builtin(name);
    std::vector<Formation> fs = {Formation::abelian(), Formation::nilpotent(),
                                 Formation::supersoluble(), Formation::parse("N*A")};
    for (uint32_t p : prime_divisors(g->order)) {
      fs.push_back(Formation::p_supersoluble(p));
      fs.push_back(Formation::p_nilpotent(p));
    }
    for (const Formation& f : fs) {
      Subgroup r = residual(g, f);
      CHECK(is_normal(r));
      CHECK(membership(quotient_group(g, r).target, f));
    }
  }
}

TEST_CASE("fast paths agree with the generic lattice engine") {
  for (const char* name : kSample) {
    GroupPtr g = build_builtin(name);
    for (const char* fname : {"A", "N", "E"}) {
      Formation f = Formation::parse(fname);
      CHECK(residual(g, f).members == residual_generic(g, f).members);
    }
  }
}

TEST_CASE("composite residual equals the residual of the inner residual") {
  for (const char* name : {"S4", "A4", "S3", "D12", "C2 x A4"}) {
    GroupPtr g = build_builtin(name);
    std::vector<Formation> outers = {Formation::nilpotent()};
    for (uint32_t p : prime_divisors(g->order)) outers.push_back(Formation::p_nilpotent(p));
    for (const Formation& x : outers) {
      Formation comp = Formation::composite(x, Formation::abelian());
      Subgroup fast = residual(g, comp);
      Subgroup generic = residual_generic(g, comp);
      CHECK(fast.members == generic.members);
      // and explicitly: the X-residual of G' pulled back
      Subgroup derived = residual(g, Formation::abelian());
      CHECK(fast.members == residual_in(derived, x).members);
    }
  }
  // the worked instance: S4^(N*A) = (S4')^N = (A4)^N = V4
  GroupPtr s4 = build_builtin("S4");
  CHECK(residual(s4, Formation::parse("N*A")).order() == 4);
}

TEST_CASE("membership is quotient-closed on catalog instances") {
  for (const char* name : {"S3", "A4", "D12", "Q8", "C12", "S3 x C2"}) {
    GroupPtr g = build_builtin(name);
    std::vector<Formation> fs = {Formation::abelian(), Formation::nilpotent(),
                                 Formation::supersoluble()};
    for (uint32_t p : prime_divisors(g->order)) {
      fs.push_back(Formation::p_supersoluble(p));
      fs.push_back(Formation::p_nilpotent(p));
    }
    for (const Formation& f : fs) {
      if (!membership(g, f)) continue;
      for (const Subgroup& n : normal_subgroups(g))
        CHECK(membership(quotient_group(g, n).target, f));
    }
  }
}

TEST_CASE("the five concrete classes are subgroup-closed on small instances") {
  for (const char* name : {"C12", "S3", "A4", "D8", "D12", "Q8", "S4"}) {
    GroupPtr g = build_builtin(name);
    std::vector<Formation> fs = {Formation::abelian(), Formation::nilpotent(),
                                 Formation::supersoluble()};
    for (uint32_t p : prime_divisors(g->order)) {
      fs.push_back(Formation::p_supersoluble(p));
      fs.push_back(Formation::p_nilpotent(p));
    }
    auto subs = all_subgroups(g);
    for (const Formation& f : fs) {
      if (!membership(g, f)) continue;
      for (const Subgroup& h : subs) CHECK(membership_sub(h, f));
    }
  }
}

TEST_CASE("residual_in works ambiently on subgroups") {
  GroupPtr s4 = build_builtin("S4");
  auto lattice = normal_subgroups(s4);
  const Subgroup& a4sub = lattice[2];  // order 12 entry
  REQUIRE(a4sub.order() == 12);
  // (A4)^N = V4, computed inside S4
  CHECK(residual_in(a4sub, Formation::nilpotent()).order() == 4);
  // against materialized computation
  Materialized m = materialize(a4sub);
  Subgroup inner = residual_generic(m.group, Formation::nilpotent());
  CHECK(map_back(m, inner.members).members ==
        residual_in(a4sub, Formation::nilpotent()).members);
}
