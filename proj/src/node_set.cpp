#include "bnreorder/node_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bnreorder {

namespace {
constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

NodeSet::NodeSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> ids) : NodeSet(universe) {
  for (NodeId id : ids) insert(id);
}

NodeSet::NodeSet(std::size_t universe, const std::vector<NodeId>& ids) : NodeSet(universe) {
  for (NodeId id : ids) insert(id);
}

NodeSet NodeSet::full(std::size_t universe) {
  NodeSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(NodeId(i));
  return s;
}

std::size_t NodeSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool NodeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void NodeSet::check_member(NodeId id) const {
  if (id.index() >= universe_) throw std::out_of_range("node index outside set universe");
}

void NodeSet::check_universe(const NodeSet& other) const {
  if (other.universe_ != universe_) throw std::invalid_argument("node sets over different universes");
}

bool NodeSet::contains(NodeId id) const {
  if (id.index() >= universe_) return false;
  return (words_[id.index() / 64] >> (id.index() % 64)) & 1U;
}

void NodeSet::insert(NodeId id) {
  check_member(id);
  words_[id.index() / 64] |= std::uint64_t{1} << (id.index() % 64);
}

void NodeSet::erase(NodeId id) {
  check_member(id);
  words_[id.index() / 64] &= ~(std::uint64_t{1} << (id.index() % 64));
}

bool NodeSet::intersects(const NodeSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

NodeSet NodeSet::with(NodeId id) const {
  NodeSet s = *this;
  s.insert(id);
  return s;
}

NodeSet NodeSet::without(NodeId id) const {
  NodeSet s = *this;
  s.erase(id);
  return s;
}

std::vector<NodeId> NodeSet::members() const {
  std::vector<NodeId> out;
  out.reserve(size());
  for_each([&](NodeId id) { out.push_back(id); });
  return out;
}

}  // namespace bnreorder
