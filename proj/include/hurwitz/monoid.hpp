#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hurwitz/braid.hpp"

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;
using ComponentId = std::uint32_t;

/// One element of Comp(G, xi).
struct Component {
  ComponentId id = 0;
  int degree = 0;
  /// Lexicographically minimal tuple of the braid orbit for degrees that were
  /// enumerated tuple by tuple. For degrees built by product closure, the
  /// smallest concatenation of factor representatives found.
  Tuple canonical;
  SubgroupId subgroup = 0;
  /// mu_H for H = the group of the component.
  std::vector<int> mu;
  /// Orbit size; unknown for closure-built degrees.
  std::optional<std::uint64_t> orbit_size;
  bool non_factorizable = false;
  /// For degree >= 1 and factorizable: this = generator * rest, generator
  /// non-factorizable.
  std::optional<std::pair<ComponentId, ComponentId>> split;
  /// Position within MonoidTable::degree(degree).
  std::uint32_t index_in_degree = 0;
};

enum class DegreeMethod { BruteForce, Closure };

/// Degree bounds on non-factorizable components.
struct FactorizationBounds {
  /// max(exp(G), (exp(G) - 1) A), A = prod |c|^xi(c).
  BigInt exponent_bound;
  /// max(max_h ord(pi h), sum_h (ord(pi h) - 1)) over blocks h in prod c^xi(c);
  /// absent when there are too many blocks to list.
  std::optional<std::uint64_t> refined_bound;
  /// The bound used for certification: refined if known, else the exponent bound.
  BigInt certified() const { return refined_bound ? BigInt(*refined_bound) : exponent_bound; }
};

FactorizationBounds factorization_bounds(const Setting &setting);

/// Comp(G, xi) up to a degree cap.
///
/// Low degrees are enumerated exhaustively: every product-1 tuple with
/// multidiscriminant n xi is listed and braid orbits are merged with a
/// union-find. Once every degree up to the non-factorizable bound is known,
/// higher degrees are generated as products g * b (g non-factorizable) modulo
/// the relations g * (g' * c) = g' * (g * c). Distinct classes are certified
/// distinct by their invariants (group, mu); classes sharing invariants are
/// settled with a braid search.
class MonoidTable {
public:
  static MonoidTable build(std::shared_ptr<const Setting> setting, int max_degree,
                           const Caps &caps = {});

  MonoidTable(MonoidTable &&) noexcept;
  MonoidTable &operator=(MonoidTable &&) noexcept;
  ~MonoidTable();

  const Setting &setting() const noexcept { return *setting_; }
  std::shared_ptr<const Setting> setting_ptr() const noexcept { return setting_; }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return components_.size(); }
  const Component &component(ComponentId id) const { return components_.at(id); }
  const std::vector<ComponentId> &degree(int n) const;
  DegreeMethod method(int n) const;
  /// Largest degree enumerated tuple by tuple.
  int bruteforce_degree() const noexcept { return bruteforce_degree_; }
  static constexpr ComponentId identity() { return 0; }
  const FactorizationBounds &bounds() const noexcept { return bounds_; }

  /// Component of a product-1 tuple with multidiscriminant n xi, for
  /// brute-forced degrees. nullopt if the tuple is not of that form or its
  /// degree was built by closure.
  std::optional<ComponentId> find(const Tuple &t) const;

  /// Concatenation product. Throws InvalidArgument past max_degree.
  ComponentId multiply(ComponentId a, ComponentId b) const;
  /// Product of a list of components.
  ComponentId multiply_all(const std::vector<ComponentId> &factors) const;
  /// Non-factorizable factors of `id`, in split order.
  std::vector<ComponentId> factorization(ComponentId id) const;

  std::vector<ComponentId> non_factorizable() const;

private:
  MonoidTable() = default;
  struct DegreeData;
  struct Memo;

  std::shared_ptr<const Setting> setting_;
  int max_degree_ = 0;
  int bruteforce_degree_ = 0;
  Caps caps_;
  FactorizationBounds bounds_;
  std::vector<Component> components_;
  std::vector<std::unique_ptr<DegreeData>> degrees_;
  std::vector<std::int32_t> generator_index_; // component id -> index among generators, -1
  std::vector<ComponentId> generators_;
  std::unique_ptr<Memo> memo_;

  void enumerate_bruteforce(int n);
  void enumerate_closure(int n);
  void mark_factorizations(int n);
  std::uint64_t encode(const Tuple &letters_tuple) const;
  ComponentId lookup_vertex(int n, ComponentId gen, ComponentId rest) const;
};

/// Report for non-factorizable components.
struct NonFactorizableReport {
  std::vector<ComponentId> components;
  FactorizationBounds bounds;
  int observed_max_degree = 0;
  /// Table reaches the certified bound, so the list is complete.
  bool complete = false;
  /// Table reaches the exponent bound.
  bool exponent_bound_reached = false;
};

NonFactorizableReport non_factorizable(const MonoidTable &table);

/// z with y = z * x and <z> = <y>, searched over every stored component of
/// degree deg y - deg x. Throws InvalidArgument if deg x > deg y.
std::optional<ComponentId> factor(const MonoidTable &table, ComponentId y, ComponentId x);

/// True when mu_H(y) >= mu_H(x) + kappa N(mu_H(x)) with H = <y> and <x> in H.
bool factorization_hypothesis(const MonoidTable &table, ComponentId y, ComponentId x);
/// kappa = max |c| ord(c) over D_H.
std::uint64_t kappa(const Setting &setting, const SubgroupRecord &h);

/// HF_H(n) for every H in Sub_{G,D} and n <= N.
struct HilbertTable {
  int max_degree = 0;
  std::map<SubgroupId, std::vector<std::uint64_t>> counts;
  std::vector<std::uint64_t> totals;

  std::uint64_t count(SubgroupId h, int n) const;
};

HilbertTable hilbert_table(const MonoidTable &table);

enum class Subspace { I, IStar, J, JStar, RH };

/// Whether the component spans part of the given subspace attached to H.
bool in_subspace(const Setting &setting, Subspace kind, SubgroupId h, const Component &c);

} // namespace hurwitz
