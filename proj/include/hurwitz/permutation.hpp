#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

/// A bijection of {0, ..., d-1}.
///
/// Composition is right-to-left: (a * b)(x) = a(b(x)). Conjugation follows
/// g^h = h g h^{-1}. Points are 0-based internally; text I/O uses 1-based
/// cycle notation such as "(1 2)(3 4)".
class Permutation {
public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Builds a permutation from 0-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>> &cycles);
  /// Parses 1-based cycle notation, e.g. "(1 2 3)(4 5)" or "()".
  static Permutation parse(std::string_view text, std::size_t degree);
  static Permutation transposition(std::size_t degree, Point i, Point j);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  /// h * this * h^{-1}
  Permutation conjugated_by(const Permutation &h) const;

  bool is_identity() const noexcept;
  /// Returns true and sets i < j when this is a transposition (i j).
  bool is_transposition(Point *i = nullptr, Point *j = nullptr) const;
  std::uint64_t order() const;
  /// Nontrivial 0-based cycles, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// 1-based cycle notation; the identity prints as "()".
  std::string to_string() const;

  auto operator<=>(const Permutation &) const = default;
  bool operator==(const Permutation &) const = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace hurwitz
