#include "residua/perm.hpp"

#include <numeric>

#include "residua/error.hpp"

namespace residua {

Perm Perm::identity(uint32_t degree) {
  Perm p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), uint16_t{0});
  return p;
}

Perm Perm::from_images(std::vector<uint16_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint16_t v : images) {
    if (v >= images.size() || seen[v]) throw DomainError("image table is not a bijection");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[i] = rhs.img_[img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<uint16_t>(i);
  return out;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> done(img_.size(), false);
  for (size_t start = 0; start < img_.size(); ++start) {
    if (done[start] || img_[start] == start) continue;
    out += '(';
    size_t p = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      done[p] = true;
      p = img_[p];
      first = false;
    } while (p != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

size_t PermHash::operator()(const Perm& p) const {
  uint64_t h = 1469598103934665603ull;
  for (uint16_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

Perm parse_permutation(std::string_view text, uint32_t degree) {
  std::vector<uint16_t> img(degree);
  std::iota(img.begin(), img.end(), uint16_t{0});
  std::vector<bool> used(degree, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation text");
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<uint32_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point number in cycle");
      uint32_t v = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<uint32_t>(text[pos] - '0');
        if (v > 1u << 20) throw ParseError("point number too large");
        ++pos;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (pos == text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    saw_cycle = true;
    for (size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = static_cast<uint16_t>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  if (!saw_cycle) throw ParseError("no cycles in permutation text");
  return Perm::from_images(std::move(img));
}

}  // namespace residua
