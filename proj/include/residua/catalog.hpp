#pragma once

#include <string>
#include <vector>

#include "residua/group.hpp"

namespace residua {

/// One named group source: a builtin constructor expression or a file path.
/// Groups are built on demand, not at catalog load.
struct CatalogEntry {
  std::string name;
  std::string source;  // builtin spec (e.g. "S4", "C2 x A4") or file path
};

/// Builtins: "C<n>" cyclic, "D<m>" dihedral of even order m >= 6, "Q8",
/// "S<n>" / "A<n>" for n <= 5, and direct products "X x Y" on disjoint
/// point sets (left-associative).
GroupPtr build_builtin(const std::string& spec, uint32_t max_order = kDefaultMaxOrder);

/// Group file: after stripping '#' comments, the first non-empty line is the
/// degree, each following non-empty line one generator in cycle notation.
GroupPtr load_group_file(const std::string& path, uint32_t max_order = kDefaultMaxOrder);

/// Resolves an existing file path, otherwise a builtin spec.
GroupPtr resolve_group(const std::string& name_or_path,
                       uint32_t max_order = kDefaultMaxOrder);

/// The pinned default catalog: every builtin of order <= 48 plus the four
/// stock direct products. Mirrored in catalog/default.txt.
std::vector<CatalogEntry> default_catalog();

/// Catalog config file: one entry per line, '#' comments; each line is a
/// builtin spec or a group file path.
std::vector<CatalogEntry> load_catalog(const std::string& config_path);

}  // namespace residua
