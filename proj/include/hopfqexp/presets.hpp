#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfqexp/hopf_algebra.hpp"

namespace hopfqexp {

/// Multiplication table of a finite group: table[a][b] is the index of a*b.
struct CayleyTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t identity() const;
  std::size_t inverse(std::size_t a) const;
  /// Orders of all elements.
  long exponent() const;
};

/// Throws std::invalid_argument unless the table is a group (closure, associativity, identity, inverses).
void validate_group(const CayleyTable& g);

/// Z_{n_1} x ... x Z_{n_k}, elements in lexicographic order of their coordinate tuples.
CayleyTable cyclic_product_group(const std::vector<int>& orders);
/// Builtin groups: Z2, Z3, Z4, Z6, Z2xZ2, Z3xZ3, S3.
CayleyTable builtin_group(const std::string& name);
/// Group table from a JSON file {"elements": [...], "table": [[...], ...]}.
CayleyTable read_group_table(const std::string& path);

/// Homomorphisms G -> C^* as value tables over Q(zeta_exp(G)); entry [chi][g].
std::vector<std::vector<Cyclotomic>> linear_characters(const CayleyTable& g);
/// Characters of Z_{n_1} x ... x Z_{n_k} in the order of cyclic_product_group:
/// chi_b(a) = prod_i zeta_{n_i}^{a_i b_i}.
std::vector<std::vector<Cyclotomic>> cyclic_product_characters(const std::vector<int>& orders);

HopfAlgebra trivial_algebra();
HopfAlgebra group_algebra(const CayleyTable& g, const std::string& name, int conductor = 1);
/// Function algebra C^G; its grouplikes are the linear characters of G.
HopfAlgebra dual_group_algebra(const CayleyTable& g, const std::string& name);
/// Taft algebra T_n, basis g^i x^j at index j * n + i, with g x = zeta_n x g.
HopfAlgebra taft(int n);
/// Sweedler's 4-dimensional algebra T_2 with basis 1, g, x, gx.
HopfAlgebra sweedler();
/// Borel part of the small quantum group: basis E^a K^c at index a * p + c.
HopfAlgebra uq_borel_sl2(int p);
/// Small quantum sl2 at q = zeta_p: basis E^a F^b K^c at index (a * p + b) * p + c.
HopfAlgebra uq_sl2(int p);

/// Invariants known in advance for a preset; unset fields are not predicted.
struct ExpectedInvariants {
  std::optional<long> qexp;
  std::optional<long> exponent;  // finite exponent
  bool exponent_infinite = false;
  std::optional<long> s2_order;
  std::optional<long> group_exponent;
};

enum class PresetKind { trivial, group_algebra, dual_group_algebra, sweedler, taft, uq_borel_sl2, uq_sl2, tensor };

/// Parsed preset name, e.g. "taft:3", "group:builtin:S3", "tensor:sweedler,taft:3".
struct PresetDescriptor {
  PresetKind kind = PresetKind::trivial;
  int parameter = 0;
  /// "builtin:<name>" or a path to a table file.
  std::string group;
  std::vector<PresetDescriptor> factors;

  static PresetDescriptor parse(const std::string& text);
  std::string name() const;
  HopfAlgebra build() const;
  ExpectedInvariants expected() const;
  /// Whether the attached grouplikes span the coradical (every simple comodule is 1-dimensional).
  bool pointed() const;
};

HopfAlgebra make_preset(const std::string& name);

/// Presets exercised by the property suite, smallest first.
std::vector<std::string> preset_zoo();

}  // namespace hopfqexp
