#include "qlogic/setlogic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qlogic {

Universe::Universe(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxUniverse)
    throw std::domain_error("universe size must be in [1, 64], got " + std::to_string(n));
  full_ = n == 64 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

SubsetMask mask_of(std::span<const std::size_t> points) {
  SubsetMask m = 0;
  for (std::size_t p : points) {
    if (p >= kMaxUniverse) throw std::domain_error("point index out of range");
    m |= SubsetMask{1} << p;
  }
  return m;
}

SubsetMask mask_of(std::initializer_list<std::size_t> points) {
  return mask_of(std::span<const std::size_t>(points.begin(), points.size()));
}

std::vector<std::size_t> points_of(SubsetMask s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

std::size_t cardinality(SubsetMask s) { return static_cast<std::size_t>(std::popcount(s)); }

Family::Family(Universe universe, std::vector<SubsetMask> members)
    : universe_(universe), members_(std::move(members)) {
  for (SubsetMask m : members_)
    if (!universe_.contains(m)) throw std::invalid_argument("family member outside the universe");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::optional<std::size_t> Family::index_of(SubsetMask s) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

namespace {
constexpr std::size_t kDenseIndexLimit = 20;
}

MemberIndex::MemberIndex(const Family& family) : family_(&family) {
  if (family.universe().size() > kDenseIndexLimit) return;
  dense_.assign(std::size_t{1} << family.universe().size(), -1);
  for (std::size_t i = 0; i < family.size(); ++i) dense_[family[i]] = static_cast<std::int32_t>(i);
}

std::optional<std::size_t> MemberIndex::find(SubsetMask s) const {
  if (dense_.empty()) return family_->index_of(s);
  if (s >= dense_.size() || dense_[s] < 0) return std::nullopt;
  return static_cast<std::size_t>(dense_[s]);
}

Family make_even_logic(std::size_t n) {
  if (n < 2 || n > 20 || n % 2 != 0)
    throw std::domain_error("even logic needs an even universe size in [2, 20], got " + std::to_string(n));
  const Universe u(n);
  std::vector<SubsetMask> members;
  members.reserve(std::size_t{1} << (n - 1));
  for (SubsetMask s = 0; s <= u.full(); ++s)
    if (std::popcount(s) % 2 == 0) members.push_back(s);
  return Family(u, std::move(members));
}

Family concrete_closure(const Universe& universe, std::span<const SubsetMask> generators) {
  std::unordered_set<SubsetMask> seen;
  std::vector<SubsetMask> members;
  std::vector<SubsetMask> work;
  auto add = [&](SubsetMask s) {
    if (seen.insert(s).second) work.push_back(s);
  };
  for (SubsetMask g : generators) {
    if (!universe.contains(g)) throw std::invalid_argument("generator outside the universe");
    add(g);
  }
  add(universe.full());

  while (!work.empty()) {
    const SubsetMask a = work.back();
    work.pop_back();
    members.push_back(a);
    add(universe.complement(a));
    // `add` only appends to `work`, so `members` is stable during the scan.
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((members[i] & a) == 0) add(members[i] | a);
  }
  return Family(universe, std::move(members));
}

Family difference_closure(const Universe& universe, std::span<const SubsetMask> generators) {
  // Echelon basis over GF(2), keyed by leading bit.
  std::vector<SubsetMask> basis;
  auto insert = [&](SubsetMask v) {
    for (SubsetMask b : basis) v = std::min(v, v ^ b);
    if (v == 0) return;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
  };
  for (SubsetMask g : generators) {
    if (!universe.contains(g)) throw std::invalid_argument("generator outside the universe");
    insert(g);
  }
  insert(universe.full());

  if (basis.size() > 26) throw std::domain_error("difference closure too large to enumerate");
  std::vector<SubsetMask> members{0};
  members.reserve(std::size_t{1} << basis.size());
  for (SubsetMask b : basis) {
    const std::size_t half = members.size();
    for (std::size_t i = 0; i < half; ++i) members.push_back(members[i] ^ b);
  }
  return Family(universe, std::move(members));
}

LogicReport validate_logic(const Family& family) {
  const Universe& u = family.universe();
  const MemberIndex index(family);
  LogicReport report;
  report.contains_X = family.contains(u.full());

  for (SubsetMask a : family.members()) {
    if (!index.find(u.complement(a))) {
      report.complement_violation = a;
      break;
    }
  }
  report.complement_closed = !report.complement_violation;

  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const SubsetMask a = members[i], b = members[j];
      if (!report.disjoint_union_violation && (a & b) == 0 && !index.find(a | b))
        report.disjoint_union_violation = std::pair{a, b};
      if (!report.difference_violation && !index.find(a ^ b)) report.difference_violation = std::pair{a, b};
    }
    if (report.disjoint_union_violation && report.difference_violation) break;
  }
  report.disjoint_union_closed = !report.disjoint_union_violation;
  report.difference_closed = !report.difference_violation;
  return report;
}

bool is_difference_closed(const Family& family) {
  const MemberIndex index(family);
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!index.find(members[i] ^ members[j])) return false;
  return true;
}

std::vector<SubsetMask> boolean_atoms(const Family& family) {
  const std::size_t n = family.universe().size();
  std::map<std::vector<bool>, SubsetMask> blocks;
  std::vector<std::vector<bool>> order;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<bool> signature(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) signature[i] = (family[i] >> p) & 1;
    auto [it, fresh] = blocks.try_emplace(signature, 0);
    if (fresh) order.push_back(signature);
    it->second |= SubsetMask{1} << p;
  }
  std::vector<SubsetMask> atoms;
  atoms.reserve(order.size());
  for (const auto& sig : order) atoms.push_back(blocks[sig]);
  return atoms;
}

bool intersections_generate_atoms(const Family& family, AtomReading reading) {
  const auto members = family.members();
  const auto atoms = boolean_atoms(family);

  if (reading == AtomReading::atom_is_intersection) {
    std::unordered_set<SubsetMask> wanted(atoms.begin(), atoms.end());
    for (std::size_t i = 0; i < members.size() && !wanted.empty(); ++i)
      for (std::size_t j = i; j < members.size() && !wanted.empty(); ++j) wanted.erase(members[i] & members[j]);
    return wanted.empty();
  }

  std::vector<SubsetMask> intersections;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) intersections.push_back(members[i] & members[j]);
  auto generated = boolean_atoms(Family(family.universe(), std::move(intersections)));
  auto expected = atoms;
  std::sort(generated.begin(), generated.end());
  std::sort(expected.begin(), expected.end());
  return generated == expected;
}

}  // namespace qlogic
