#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "residua/catalog.hpp"
#include "residua/classify.hpp"
#include "residua/error.hpp"
#include "residua/group.hpp"

using namespace residua;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string("catalog_test_tmp_") + std::to_string(rand()) + ".grp";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builtin constructors") {
  CHECK(build_builtin("C1")->order == 1);
  CHECK(build_builtin("C6")->order == 6);
  CHECK(build_builtin("C48")->order == 48);
  CHECK(build_builtin("S3")->order == 6);
  CHECK(build_builtin("S4")->order == 24);
  CHECK(build_builtin("S5")->order == 120);
  CHECK(build_builtin("A3")->order == 3);
  CHECK(build_builtin("A4")->order == 12);
  CHECK(build_builtin("A5")->order == 60);
  CHECK(build_builtin("D6")->order == 6);
  CHECK(build_builtin("D48")->order == 48);
  CHECK(build_builtin("S3 x C2")->order == 12);
  CHECK(build_builtin("C2 x A4")->order == 24);
  CHECK(build_builtin("C2 x C2 x C3")->order == 12);
}

TEST_CASE("Q8 is the quaternion group") {
  GroupPtr q8 = build_builtin("Q8");
  CHECK(q8->order == 8);
  CHECK(!is_abelian(*q8));
  CHECK(is_nilpotent(q8));
  // exactly one element of order 2 pins Q8 among the order-8 groups
  int involutions = 0;
  for (uint32_t i = 0; i < 8; ++i)
    if (element_order(*q8, static_cast<uint16_t>(i)) == 2) ++involutions;
  CHECK(involutions == 1);
  int order4 = 0;
  for (uint32_t i = 0; i < 8; ++i)
    if (element_order(*q8, static_cast<uint16_t>(i)) == 4) ++order4;
  CHECK(order4 == 6);
}

TEST_CASE("dihedral groups are dihedral") {
  for (uint32_t m = 6; m <= 20; m += 2) {
    GroupPtr d = build_builtin("D" + std::to_string(m));
    CHECK(d->order == m);
    CHECK(!is_abelian(*d));
    // half the elements are reflections of order 2
    uint32_t involutions = 0;
    for (uint32_t i = 0; i < m; ++i)
      if (element_order(*d, static_cast<uint16_t>(i)) == 2) ++involutions;
    CHECK(involutions >= m / 2);
  }
}

TEST_CASE("invalid builtin names") {
  CHECK_THROWS_AS(build_builtin("G7"), ParseError);
  CHECK_THROWS_AS(build_builtin("D7"), ParseError);   // odd order
  CHECK_THROWS_AS(build_builtin("D4"), ParseError);   // below the dihedral range
  CHECK_THROWS_AS(build_builtin("S6"), ParseError);
  CHECK_THROWS_AS(build_builtin("A6"), ParseError);
  CHECK_THROWS_AS(build_builtin("Cx"), ParseError);
  CHECK_THROWS_AS(build_builtin(""), ParseError);
  CHECK_THROWS_AS(build_builtin("C600"), CapError);  // above the default cap
}

TEST_CASE("direct products respect the order cap") {
  CHECK_THROWS_AS(build_builtin("S5 x S5"), CapError);
  CHECK(build_builtin("S5 x C2")->order == 240);
}

TEST_CASE("group files") {
  SUBCASE("well-formed with comments and blank lines") {
    TempFile f("# symmetric group on four points\n\n4\n(1 2 3 4)  # the rotation\n(1 2)\n");
    GroupPtr g = load_group_file(f.path);
    CHECK(g->order == 24);
    CHECK(g->degree == 4);
  }
  SUBCASE("degree line only gives the trivial group") {
    TempFile f("5\n");
    CHECK(load_group_file(f.path)->order == 1);
  }
  SUBCASE("missing degree") {
    TempFile f("# nothing here\n");
    CHECK_THROWS_AS(load_group_file(f.path), ParseError);
  }
  SUBCASE("malformed generator") {
    TempFile f("3\n(1 2 9)\n");
    CHECK_THROWS_AS(load_group_file(f.path), ParseError);
  }
  SUBCASE("nonexistent file") {
    CHECK_THROWS_AS(load_group_file("does_not_exist.grp"), ParseError);
  }
  SUBCASE("resolve_group prefers files, falls back to builtins") {
    TempFile f("3\n(1 2 3)\n");
    CHECK(resolve_group(f.path)->order == 3);
    CHECK(resolve_group("S4")->order == 24);
    CHECK_THROWS_AS(resolve_group("no_such_thing"), ParseError);
  }
}

TEST_CASE("default catalog is pinned") {
  auto cat = default_catalog();
  CHECK(cat.size() == 78);
  // names are unique
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) CHECK(cat[i].name != cat[j].name);
  // spot members
  auto has = [&](const std::string& n) {
    for (const auto& e : cat)
      if (e.name == n) return true;
    return false;
  };
  CHECK(has("C1"));
  CHECK(has("C48"));
  CHECK(has("D6"));
  CHECK(has("D48"));
  CHECK(has("Q8"));
  CHECK(has("S4"));
  CHECK(has("A4"));
  CHECK(has("C2 x A4"));
  CHECK(has("S3 x S3"));
  CHECK(!has("S5"));  // order 120 is out
  // every entry builds, with order at most 48
  for (const auto& e : cat) {
    GroupPtr g = resolve_group(e.source);
    CHECK(g->order <= 48);
    CHECK(g->order >= 1);
  }
}

TEST_CASE("default catalog file mirrors the builtin list") {
  std::ifstream in(std::string(TEST_SOURCE_DIR) + "/../catalog/default.txt");
  REQUIRE(in.good());
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    while (!line.empty() && line.front() == ' ') line.erase(line.begin());
    if (!line.empty()) names.push_back(line);
  }
  auto cat = default_catalog();
  REQUIRE(names.size() == cat.size());
  for (size_t i = 0; i < cat.size(); ++i) CHECK(names[i] == cat[i].name);
}

TEST_CASE("catalog config files") {
  SUBCASE("entries, comments, duplicates") {
    TempFile f("S4\n# comment\nC6\n\nS3 x C2\n");
    auto cat = load_catalog(f.path);
    REQUIRE(cat.size() == 3);
    CHECK(cat[0].name == "S4");
    CHECK(cat[2].name == "S3 x C2");
  }
  SUBCASE("duplicate names rejected") {
    TempFile f("S4\nS4\n");
    CHECK_THROWS_AS(load_catalog(f.path), ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_catalog("nope.cfg"), ParseError);
  }
}
