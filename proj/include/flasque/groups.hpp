#pragma once

#include <memory>
#include <string>
#include <vector>

namespace flasque {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group given by labels and a full multiplication table.
/// table[a][b] is the index of the product a*b.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 24;

  std::size_t order() const { return labels_.size(); }
  int identity() const { return identity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int g) const { return labels_.at(static_cast<std::size_t>(g)); }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  /// Index of the element with this label; throws UnknownElement.
  int index_of(const std::string& label) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;
  friend GroupPtr make_group(std::vector<std::string> labels, std::vector<std::vector<int>> table);

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Validates the table as a group law. Errors: MalformedTable, DuplicateLabel,
/// OrderTooLarge, NotAssociative, NoIdentity, NoInverse.
GroupPtr make_group(std::vector<std::string> labels, std::vector<std::vector<int>> table);

/// <σ, τ | σ² = τ² = 1, στ = τσ> with elements ordered 1, σ, τ, στ.
GroupPtr klein_four();
GroupPtr cyclic_group(std::size_t n);
GroupPtr symmetric_group_3();

bool same_group(const GroupPtr& a, const GroupPtr& b);

class Subgroup {
 public:
  /// Checks closure and identity membership; throws NotASubgroup.
  Subgroup(GroupPtr parent, std::vector<int> members);

  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);
  static Subgroup generated_by(const GroupPtr& g, const std::vector<int>& generators);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(int g) const;
  bool is_subgroup_of(const Subgroup& other) const;

  /// "{1,σ}" style listing in member order.
  std::string name() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> members_;
};

/// All subgroups, each once, ordered by order then by sorted member indices.
std::vector<Subgroup> subgroups(const GroupPtr& g);

/// The subgroup as a group of its own; element i is parent member members()[i].
GroupPtr subgroup_as_group(const Subgroup& h);

}  // namespace flasque
