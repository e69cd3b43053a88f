#include "residua/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "residua/error.hpp"

namespace residua {

namespace {

bool parse_uint(std::string_view s, uint32_t& out) {
  if (s.empty()) return false;
  uint64_t v = 0;
  for (char c : s) {
    if (!isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + static_cast<uint64_t>(c - '0');
    if (v > 1u << 20) return false;
  }
  out = static_cast<uint32_t>(v);
  return true;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Perm cycle_perm(uint32_t degree, std::initializer_list<uint16_t> cycle) {
  std::vector<uint16_t> img(degree);
  for (uint32_t i = 0; i < degree; ++i) img[i] = static_cast<uint16_t>(i);
  auto it = cycle.begin();
  for (size_t i = 0; i < cycle.size(); ++i) {
    uint16_t from = *(it + i);
    uint16_t to = *(it + (i + 1) % cycle.size());
    img[from] = to;
  }
  return Perm::from_images(std::move(img));
}

GroupPtr build_atomic(const std::string& spec, uint32_t max_order);

// Direct product on disjoint point sets, factors built recursively.
GroupPtr build_product(const std::string& left, const std::string& right,
                       uint32_t max_order) {
  GroupPtr a = build_builtin(left, max_order);
  GroupPtr b = build_builtin(right, max_order);
  uint64_t ord = static_cast<uint64_t>(a->order) * b->order;
  if (ord > max_order)
    throw CapError("direct product order " + std::to_string(ord) + " exceeds cap " +
                   std::to_string(max_order));
  uint32_t degree = a->degree + b->degree;
  std::vector<Perm> gens;
  for (uint16_t gi : a->generators) {
    std::vector<uint16_t> img(degree);
    const auto& src = a->elements[gi].images();
    for (uint32_t i = 0; i < a->degree; ++i) img[i] = src[i];
    for (uint32_t i = a->degree; i < degree; ++i) img[i] = static_cast<uint16_t>(i);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  for (uint16_t gi : b->generators) {
    std::vector<uint16_t> img(degree);
    for (uint32_t i = 0; i < a->degree; ++i) img[i] = static_cast<uint16_t>(i);
    const auto& src = b->elements[gi].images();
    for (uint32_t i = 0; i < b->degree; ++i)
      img[a->degree + i] = static_cast<uint16_t>(a->degree + src[i]);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return build_group(degree, gens, max_order);
}

GroupPtr build_atomic(const std::string& spec, uint32_t max_order) {
  if (spec == "Q8") {
    // Regular representation on {1,-1,i,-i,j,-j,k,-k}; generators are left
    // multiplication by i and j.
    std::vector<Perm> gens{cycle_perm(8, {0, 2, 1, 3}) * cycle_perm(8, {4, 6, 5, 7}),
                           cycle_perm(8, {0, 4, 1, 5}) * cycle_perm(8, {2, 7, 3, 6})};
    return build_group(8, gens, max_order);
  }
  if (spec.size() >= 2 && (spec[0] == 'C' || spec[0] == 'D' || spec[0] == 'S' || spec[0] == 'A')) {
    uint32_t n = 0;
    if (!parse_uint(std::string_view(spec).substr(1), n))
      throw ParseError("unknown builtin group '" + spec + "'");
    switch (spec[0]) {
      case 'C': {
        if (n < 1) throw ParseError("cyclic group needs n >= 1");
        if (n > max_order)
          throw CapError("C" + std::to_string(n) + " exceeds order cap");
        if (n == 1) return build_group(1, {}, max_order);
        std::vector<uint16_t> cyc(n);
        for (uint32_t i = 0; i < n; ++i) cyc[i] = static_cast<uint16_t>((i + 1) % n);
        return build_group(n, {Perm::from_images(std::move(cyc))}, max_order);
      }
      case 'D': {
        // D<m> is the dihedral group of order m.
        if (n < 6 || n % 2 != 0)
          throw ParseError("dihedral builtin needs an even order >= 6");
        uint32_t half = n / 2;
        std::vector<uint16_t> rot(half), refl(half);
        for (uint32_t i = 0; i < half; ++i) {
          rot[i] = static_cast<uint16_t>((i + 1) % half);
          refl[i] = static_cast<uint16_t>(half - 1 - i);
        }
        return build_group(half,
                           {Perm::from_images(std::move(rot)),
                            Perm::from_images(std::move(refl))},
                           max_order);
      }
      case 'S': {
        if (n < 1 || n > 5) throw ParseError("symmetric builtin supports S1..S5");
        if (n == 1) return build_group(1, {}, max_order);
        std::vector<uint16_t> cyc(n), swap(n);
        for (uint32_t i = 0; i < n; ++i) {
          cyc[i] = static_cast<uint16_t>((i + 1) % n);
          swap[i] = static_cast<uint16_t>(i);
        }
        swap[0] = 1;
        swap[1] = 0;
        return build_group(
            n, {Perm::from_images(std::move(cyc)), Perm::from_images(std::move(swap))},
            max_order);
      }
      case 'A': {
        if (n < 3 || n > 5) throw ParseError("alternating builtin supports A3..A5");
        std::vector<Perm> gens;
        for (uint32_t k = 2; k < n; ++k)
          gens.push_back(cycle_perm(n, {0, 1, static_cast<uint16_t>(k)}));
        return build_group(n, gens, max_order);
      }
    }
  }
  throw ParseError("unknown builtin group '" + spec + "'");
}

}  // namespace

GroupPtr build_builtin(const std::string& spec, uint32_t max_order) {
  std::string s = trim(spec);
  if (auto pos = s.find(" x "); pos != std::string::npos) {
    // Left-associative: split at the last separator.
    auto last = s.rfind(" x ");
    return build_product(trim(s.substr(0, last)), trim(s.substr(last + 3)), max_order);
  }
  return build_atomic(s, max_order);
}

GroupPtr load_group_file(const std::string& path, uint32_t max_order) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  std::string line;
  uint32_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_degree) {
      if (!parse_uint(line, degree) || degree == 0)
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": expected a positive degree");
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_permutation(line, degree));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_degree) throw ParseError(path + ": missing degree line");
  return build_group(degree, gens, max_order);
}

GroupPtr resolve_group(const std::string& name_or_path, uint32_t max_order) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec))
    return load_group_file(name_or_path, max_order);
  return build_builtin(name_or_path, max_order);
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&out](const std::string& name) { out.push_back({name, name}); };
  for (uint32_t n = 1; n <= 48; ++n) add("C" + std::to_string(n));
  for (uint32_t m = 6; m <= 48; m += 2) add("D" + std::to_string(m));
  add("Q8");
  add("S3");
  add("S4");
  add("A4");
  add("C2 x A4");
  add("S3 x C2");
  add("S3 x S3");
  add("C3 x S3");
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) throw ParseError("cannot open catalog config '" + config_path + "'");
  std::vector<CatalogEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    for (const CatalogEntry& e : out)
      if (e.name == line)
        throw ParseError("duplicate catalog entry '" + line + "'");
    out.push_back({line, line});
  }
  return out;
}

}  // namespace residua
