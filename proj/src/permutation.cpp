#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>> &cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k];
      int b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || static_cast<std::size_t>(a) >= degree)
        throw InvalidArgument("cycle point " + std::to_string(a + 1) + " out of range for degree " +
                              std::to_string(degree));
      if (used[a]) throw InvalidArgument("point " + std::to_string(a + 1) + " repeated in cycles");
      used[a] = true;
      img[a] = static_cast<Point>(b);
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidArgument("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw InvalidArgument("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw InvalidArgument("unexpected character in \"" + std::string(text) + "\"");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 65535) throw InvalidArgument("point too large");
        ++i;
      }
      if (v < 1) throw InvalidArgument("points are 1-based");
      cyc.push_back(v - 1);
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::transposition(std::size_t degree, Point i, Point j) {
  if (i == j || i >= degree || j >= degree) throw InvalidArgument("bad transposition");
  Permutation p(degree);
  p.images_[i] = j;
  p.images_[j] = i;
  return p;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  if (rhs.degree() != degree()) throw InvalidArgument("degree mismatch in product");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation &h) const {
  // h g h^{-1} sends h(x) to h(g(x))
  if (h.degree() != degree()) throw InvalidArgument("degree mismatch in conjugation");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[h.images_[x]] = h.images_[images_[x]];
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::is_transposition(Point *i, Point *j) const {
  int moved = 0;
  Point a = 0, b = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] == x) continue;
    if (moved == 0) a = static_cast<Point>(x);
    else if (moved == 1) b = static_cast<Point>(x);
    if (++moved > 2) return false;
  }
  if (moved != 2 || images_[a] != b) return false;
  if (i) *i = a;
  if (j) *j = b;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto &c : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<int> cyc;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cyc.push_back(static_cast<int>(y));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto &c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace hurwitz
