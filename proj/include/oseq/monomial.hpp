#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oseq {

using Exponent = std::uint16_t;

// Degrees (and therefore single exponents) must stay below 2^16.
inline constexpr std::uint32_t kMaxDegree = 0xFFFF;

// Exponent vector in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  // The monomial 1 in `num_vars` variables.
  static Monomial one(std::size_t num_vars);

  std::size_t num_vars() const { return exponents_.size(); }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t var) const { return exponents_[var]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  // Multiplies in y_var^power.
  Monomial times_power(std::size_t var, std::uint32_t power) const;
  // Divides out the full power of y_var.
  Monomial without_var(std::size_t var) const;
  // Exponent vector of *this followed by that of `other` (variable sets disjoint).
  Monomial concat(const Monomial& other) const;
  // Inserts a new variable at position `var` carrying exponent `power`.
  Monomial insert_var(std::size_t var, std::uint32_t power) const;

  // Space-separated exponents, the on-disk form.
  std::string to_string() const;
  // y1^e1*y2^e2 form for diagnostics; "1" for the unit.
  std::string pretty() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic on exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// True iff every exponent of a is at most the matching exponent of b.
bool divides(const Monomial& a, const Monomial& b);

// Exponent of variable `var` (0-based) in m.
std::uint32_t max_power(const Monomial& m, std::size_t var);

// All monomials of the given degree in `num_vars` variables, lexicographically ascending
// by exponent vector: y_d^k first, y_1^k last.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree);

// Face numbers, indexed from degree 0. Trailing zeros are dropped on construction.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<std::uint64_t> counts);
  FVector(std::initializer_list<std::uint64_t> counts);

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  // Count at degree k, 0 past the end.
  std::uint64_t at(std::size_t k) const { return k < counts_.size() ? counts_[k] : 0; }
  std::uint64_t operator[](std::size_t k) const { return at(k); }
  // Index of the last nonzero entry. Undefined on an empty vector.
  std::size_t top_degree() const { return counts_.size() - 1; }

  // "(1,3,4,4)"
  std::string to_string() const;
  // "1,3,4,4"
  std::string to_csv() const;

  friend bool operator==(const FVector&, const FVector&) = default;
  friend auto operator<=>(const FVector&, const FVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

FVector convolve(const FVector& a, const FVector& b);

// A multicomplex given by its maximal monomials.
class OrderIdeal {
 public:
  OrderIdeal() = default;
  // Drops duplicates and generators dividing another generator. First occurrences keep
  // their relative order.
  OrderIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  bool is_pure() const;
  // Common generator degree of a pure, nonempty ideal.
  std::optional<std::uint32_t> socle_degree() const;
  // Largest generator degree; 0 for the empty ideal.
  std::uint32_t top_degree() const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> generators_;
};

// Counts by degree descent. An ideal without generators has f-vector (1).
FVector f_vector(const OrderIdeal& ideal);

struct PruneResult {
  bool match = false;
  // Highest degree whose count disagreed; meaningful only when !match.
  std::size_t mismatch_degree = 0;
  // Number of layers built before stopping.
  std::size_t layers_built = 0;

  static PruneResult matched(std::size_t layers) { return {true, 0, layers}; }
  static PruneResult mismatch(std::size_t degree, std::size_t layers) {
    return {false, degree, layers};
  }
};

// Degree descent that stops at the first layer whose size disagrees with `candidate`.
PruneResult f_vector_pruned(const OrderIdeal& ideal, const FVector& candidate);

// Join over disjoint variable sets: num_vars adds up and f-vectors convolve.
OrderIdeal join(const OrderIdeal& a, const OrderIdeal& b);

// Order-ideal text format:
//   vars=<d>
//   gen e1 ... ed
// with '#' comments. Output is canonical, so format(parse(format(x))) == format(x).
OrderIdeal parse_order_ideal(std::string_view text);
std::string format_order_ideal(const OrderIdeal& ideal);

}  // namespace oseq
