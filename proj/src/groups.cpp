#include "flasque/groups.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <unordered_set>

#include "flasque/error.hpp"

namespace flasque {

GroupPtr make_group(std::vector<std::string> labels, std::vector<std::vector<int>> table) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(Errc::MalformedTable, "empty group");
  if (n > FiniteGroup::kMaxOrder)
    throw Error(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds " +
                                         std::to_string(FiniteGroup::kMaxOrder));
  if (table.size() != n) throw Error(Errc::MalformedTable, "table is not square");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::MalformedTable, "table is not square");
    for (int x : row)
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw Error(Errc::MalformedTable, "index out of range");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(Errc::DuplicateLabel, l);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto ab = static_cast<std::size_t>(table[a][b]);
        auto bc = static_cast<std::size_t>(table[b][c]);
        if (table[ab][c] != table[a][bc])
          throw Error(Errc::NotAssociative, "(" + labels[a] + "·" + labels[b] + ")·" + labels[c]);
      }

  int e = -1;
  for (std::size_t cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[cand][x] == static_cast<int>(x) && table[x][cand] == static_cast<int>(x);
    if (ok) e = static_cast<int>(cand);
  }
  if (e < 0) throw Error(Errc::NoIdentity, "no two-sided identity");

  std::vector<int> inverse(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] == e && table[y][x] == e) {
        inverse[x] = static_cast<int>(y);
        break;
      }
    if (inverse[x] < 0) throw Error(Errc::NoInverse, labels[x]);
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->labels_ = std::move(labels);
  g->table_ = std::move(table);
  g->inverse_ = std::move(inverse);
  g->identity_ = e;
  return g;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(Errc::UnknownElement, label);
  return static_cast<int>(it - labels_.begin());
}

GroupPtr klein_four() {
  // σ = 0b01, τ = 0b10; the product is bitwise xor.
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return make_group({"1", "σ", "τ", "στ"}, table);
}

GroupPtr cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<int>((a + b) % n);
  }
  return make_group(labels, table);
}

GroupPtr symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(std::to_string(q[0] + 1) + std::to_string(q[1] + 1) +
                                               std::to_string(q[2] + 1));
  labels[0] = "1";
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return make_group(labels, table);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const auto n = static_cast<int>(parent_->order());
  for (int m : members_)
    if (m < 0 || m >= n) throw Error(Errc::NotASubgroup, "member index out of range");
  if (!contains(parent_->identity())) throw Error(Errc::NotASubgroup, "missing identity");
  for (int a : members_)
    for (int b : members_)
      if (!contains(parent_->mul(a, b))) throw Error(Errc::NotASubgroup, "not closed under the table");
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<int> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Subgroup(g, all);
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

namespace {

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::set<int> members(seed.begin(), seed.end());
  members.insert(g.identity());
  std::vector<int> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    std::vector<int> current(members.begin(), members.end());
    for (int a : frontier)
      for (int b : current) {
        for (int p : {g.mul(a, b), g.mul(b, a)})
          if (members.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

}  // namespace

Subgroup Subgroup::generated_by(const GroupPtr& g, const std::vector<int>& generators) {
  return Subgroup(g, closure(*g, generators));
}

bool Subgroup::contains(int g) const { return std::binary_search(members_.begin(), members_.end(), g); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!same_group(parent_, other.parent_)) return false;
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string Subgroup::name() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << parent_->label(members_[i]);
  os << '}';
  return os.str();
}

std::vector<Subgroup> subgroups(const GroupPtr& g) {
  // Every subgroup is reached from {1} by repeatedly adjoining one element.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue{{g->identity()}};
  found.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::vector<int> current = queue[k];
    for (int x = 0; x < static_cast<int>(g->order()); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<int> seed = current;
      seed.push_back(x);
      auto next = closure(*g, seed);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto& members : sorted) out.emplace_back(g, std::move(members));
  return out;
}

GroupPtr subgroup_as_group(const Subgroup& h) {
  const auto& m = h.members();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    labels.push_back(h.parent()->label(m[i]));
    for (std::size_t j = 0; j < m.size(); ++j) {
      int p = h.parent()->mul(m[i], m[j]);
      table[i][j] = static_cast<int>(std::lower_bound(m.begin(), m.end(), p) - m.begin());
    }
  }
  return make_group(labels, table);
}

}  // namespace flasque
