#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace bnreorder {

/// Dense index of a node in its Dag's declaration order.
struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

struct Arc {
  NodeId tail;
  NodeId head;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// Fixed-universe set of nodes backed by a bitmap. The universe size is the
/// node count of the Dag the set refers to.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe);
  NodeSet(std::size_t universe, std::initializer_list<NodeId> ids);
  NodeSet(std::size_t universe, const std::vector<NodeId>& ids);

  static NodeSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(NodeId id) const;
  void insert(NodeId id);
  void erase(NodeId id);

  bool intersects(const NodeSet& other) const;
  bool is_subset_of(const NodeSet& other) const;

  NodeSet& operator|=(const NodeSet& other);
  NodeSet& operator&=(const NodeSet& other);
  NodeSet& operator-=(const NodeSet& other);
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

  NodeSet with(NodeId id) const;
  NodeSet without(NodeId id) const;

  /// Members in increasing index order.
  std::vector<NodeId> members() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(NodeId(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  void check_universe(const NodeSet& other) const;
  void check_member(NodeId id) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bnreorder

template <>
struct std::hash<bnreorder::NodeId> {
  std::size_t operator()(bnreorder::NodeId id) const noexcept { return id.value; }
};
