#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qlogic {

// Characteristic vector of a subset of {0, ..., n-1}; bit i is point i.
using SubsetMask = std::uint64_t;

inline constexpr std::size_t kMaxUniverse = 64;

class Universe {
 public:
  // Throws std::domain_error unless 1 <= n <= 64.
  explicit Universe(std::size_t n);

  std::size_t size() const { return n_; }
  SubsetMask full() const { return full_; }
  bool contains(SubsetMask s) const { return (s & ~full_) == 0; }
  SubsetMask complement(SubsetMask s) const { return full_ & ~s; }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::size_t n_;
  SubsetMask full_;
};

SubsetMask mask_of(std::initializer_list<std::size_t> points);
SubsetMask mask_of(std::span<const std::size_t> points);
std::vector<std::size_t> points_of(SubsetMask s);
std::size_t cardinality(SubsetMask s);

// A deduplicated collection of subsets, kept in ascending mask order.
class Family {
 public:
  // Sorts and deduplicates. Throws std::invalid_argument if some member
  // has a point outside the universe.
  Family(Universe universe, std::vector<SubsetMask> members);

  const Universe& universe() const { return universe_; }
  std::span<const SubsetMask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  SubsetMask operator[](std::size_t i) const { return members_[i]; }

  std::optional<std::size_t> index_of(SubsetMask s) const;
  bool contains(SubsetMask s) const { return index_of(s).has_value(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Universe universe_;
  std::vector<SubsetMask> members_;
};

// Constant-time mask -> member index lookup, dense for small universes.
class MemberIndex {
 public:
  explicit MemberIndex(const Family& family);
  std::optional<std::size_t> find(SubsetMask s) const;

 private:
  const Family* family_;
  std::vector<std::int32_t> dense_;
};

// All even-cardinality subsets of an n-point set. Throws std::domain_error
// unless n is even and 2 <= n <= 20.
Family make_even_logic(std::size_t n);

// Least family containing the generators and the whole set that is closed
// under complement and under unions of disjoint members.
Family concrete_closure(const Universe& universe, std::span<const SubsetMask> generators);

// Least family containing the generators and the whole set that is closed
// under symmetric difference, i.e. their GF(2) span together with X.
// Throws std::domain_error if the span would exceed 2^26 members.
Family difference_closure(const Universe& universe, std::span<const SubsetMask> generators);

struct LogicReport {
  bool contains_X = false;
  bool complement_closed = false;
  std::optional<SubsetMask> complement_violation;
  bool disjoint_union_closed = false;
  std::optional<std::pair<SubsetMask, SubsetMask>> disjoint_union_violation;
  bool difference_closed = false;
  std::optional<std::pair<SubsetMask, SubsetMask>> difference_violation;

  bool is_logic() const { return contains_X && complement_closed && disjoint_union_closed; }
};

LogicReport validate_logic(const Family& family);
bool is_difference_closed(const Family& family);

// Atoms of the Boolean algebra generated by the family: points grouped by
// their membership signature. Blocks are ordered by their smallest point.
std::vector<SubsetMask> boolean_atoms(const Family& family);

enum class AtomReading {
  // Every atom equals A ∩ B for some members A, B (A == B allowed).
  atom_is_intersection,
  // Intersections of distinct members generate a Boolean algebra with the
  // same atoms as the one generated by the family.
  generated_algebra,
};

bool intersections_generate_atoms(const Family& family,
                                  AtomReading reading = AtomReading::atom_is_intersection);

}  // namespace qlogic
