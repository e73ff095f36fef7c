#include "tangles/search.hpp"

#include <algorithm>
#include <string>

#include "tangles/error.hpp"
#include "tangles/parallel.hpp"

namespace tangles {

SideTable::SideTable(const CutPool& pool) {
  sides_.reserve(2 * pool.size());
  for (const Bipartition& cut : pool) {
    sides_.push_back(cut.side_a);
    sides_.push_back(cut.side_a.complement());
  }
}

bool consistent(std::span<const BitVec* const> core, const BitVec& candidate,
                std::size_t agreement) {
  if (candidate.count() < agreement) return false;
  for (const BitVec* side : core) {
    if (intersection_count(candidate, *side) < agreement) return false;
  }
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = i + 1; j < core.size(); ++j) {
      if (!intersection_at_least(candidate, *core[i], *core[j], agreement)) return false;
    }
  }
  return true;
}

bool consistent(std::span<const BitVec> core, const BitVec& candidate, std::size_t agreement) {
  std::vector<const BitVec*> pointers;
  pointers.reserve(core.size());
  for (const BitVec& side : core) pointers.push_back(&side);
  return consistent(std::span<const BitVec* const>(pointers), candidate, agreement);
}

Core updated_core(const Core& core, OrientedSide side, const SideTable& sides) {
  const BitVec& members = sides.members(side);
  for (const OrientedSide& c : core) {
    if (sides.members(c).is_subset_of(members)) return core;
  }
  Core out;
  out.reserve(core.size() + 1);
  for (const OrientedSide& c : core) {
    if (!members.is_subset_of(sides.members(c))) out.push_back(c);
  }
  out.push_back(side);
  return out;
}

std::optional<Core> extend_core(const Core& core, OrientedSide side, std::size_t agreement,
                                const SideTable& sides) {
  const BitVec& members = sides.members(side);
  for (const OrientedSide& c : core) {
    if (sides.members(c).is_subset_of(members)) return core;
  }
  Core out;
  out.reserve(core.size() + 1);
  std::vector<const BitVec*> kept;
  kept.reserve(core.size());
  for (const OrientedSide& c : core) {
    const BitVec& other = sides.members(c);
    if (!members.is_subset_of(other)) {
      out.push_back(c);
      kept.push_back(&other);
    }
  }
  // Triples through a dropped superset are bounded below by the same triple
  // through `side` itself, so the reduced core is enough.
  if (!consistent(std::span<const BitVec* const>(kept), members, agreement)) return std::nullopt;
  out.push_back(side);
  return out;
}

TangleSearchTree::TangleSearchTree(std::shared_ptr<const CutPool> pool, std::size_t agreement)
    : pool_(std::move(pool)),
      sides_(std::make_shared<const SideTable>(*pool_)),
      agreement_(agreement) {
  if (agreement_ == 0) throw Error(ErrorCode::kBadParams, "agreement must be at least 1");
  nodes_.emplace_back();
}

std::size_t TangleSearchTree::add_child(std::size_t parent, Direction direction) {
  const OrientedSide side{nodes_[parent].level, direction};
  return add_child(parent, direction, updated_core(nodes_[parent].core, side, *sides_));
}

std::size_t TangleSearchTree::add_child(std::size_t parent, Direction direction, Core core) {
  const std::size_t level = nodes_[parent].level;
  if (level >= pool_->size()) {
    throw Error(ErrorCode::kBadParams,
                "node " + std::to_string(parent) + " already orients every cut");
  }
  auto& slot = nodes_[parent].children[static_cast<std::size_t>(direction)];
  if (slot) {
    throw Error(ErrorCode::kBadParams,
                "node " + std::to_string(parent) + " already has that child");
  }
  TangleNode child;
  child.parent = parent;
  child.level = level + 1;
  child.oriented = OrientedSide{level, direction};
  child.core = std::move(core);
  const std::size_t id = nodes_.size();
  slot = id;
  nodes_.push_back(std::move(child));
  return id;
}

std::vector<OrientedSide> TangleSearchTree::path(std::size_t id) const {
  std::vector<OrientedSide> out(nodes_[id].level);
  for (std::optional<std::size_t> v = id; v && nodes_[*v].oriented; v = nodes_[*v].parent) {
    out[nodes_[*v].level - 1] = *nodes_[*v].oriented;
  }
  return out;
}

std::vector<Direction> TangleSearchTree::orientation(std::size_t id) const {
  std::vector<Direction> out;
  for (const OrientedSide& side : path(id)) out.push_back(side.direction);
  return out;
}

std::vector<std::size_t> TangleSearchTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_leaf()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> TangleSearchTree::nodes_at_level(std::size_t level) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].level == level) out.push_back(i);
  }
  return out;
}

std::size_t TangleSearchTree::height() const noexcept {
  std::size_t h = 0;
  for (const TangleNode& node : nodes_) h = std::max(h, node.level);
  return h;
}

TangleSearchTree build_tree(std::shared_ptr<const CutPool> pool, std::size_t agreement,
                            const BuildOptions& options) {
  if (options.max_psi) pool = std::make_shared<const CutPool>(pool->prefix(*options.max_psi));
  TangleSearchTree tree(pool, agreement);
  const SideTable& sides = tree.sides();

  std::vector<std::size_t> frontier{0};
  for (std::size_t cut = 0; cut < pool->size() && !frontier.empty(); ++cut) {
    std::vector<std::array<std::optional<Core>, 2>> extensions(frontier.size());
    parallel_for(frontier.size(), options.threads, [&](std::size_t i) {
      const Core& core = tree.node(frontier[i]).core;
      for (Direction d : {Direction::kA, Direction::kComplement}) {
        extensions[i][static_cast<std::size_t>(d)] =
            extend_core(core, OrientedSide{cut, d}, agreement, sides);
      }
    });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      bool extended = false;
      for (Direction d : {Direction::kA, Direction::kComplement}) {
        auto& ext = extensions[i][static_cast<std::size_t>(d)];
        if (!ext) continue;
        next.push_back(tree.add_child(frontier[i], d, std::move(*ext)));
        extended = true;
      }
      if (!extended) tree.set_maximal(frontier[i], true);
    }
    frontier = std::move(next);
  }
  return tree;
}

TangleSearchTree build_tree(const CutPool& pool, std::size_t agreement,
                            const BuildOptions& options) {
  return build_tree(std::make_shared<const CutPool>(pool), agreement, options);
}

std::vector<std::vector<Direction>> brute_force_tangles(const CutPool& pool,
                                                        std::size_t agreement,
                                                        std::size_t limit) {
  const std::size_t m = pool.size();
  if (m > limit) {
    throw Error(ErrorCode::kTooLarge, "brute force over " + std::to_string(m) +
                                          " cuts exceeds the limit of " + std::to_string(limit));
  }
  const SideTable sides(pool);
  std::vector<std::vector<Direction>> out;
  std::vector<const BitVec*> chosen(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Direction> orientation(m);
    for (std::size_t i = 0; i < m; ++i) {
      orientation[i] = ((mask >> i) & 1U) ? Direction::kComplement : Direction::kA;
      chosen[i] = &sides.members(OrientedSide{i, orientation[i]});
    }
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      for (std::size_t j = i; j < m && ok; ++j) {
        for (std::size_t k = j; k < m && ok; ++k) {
          ok = intersection_count(*chosen[i], *chosen[j], *chosen[k]) >= agreement;
        }
      }
    }
    if (ok) out.push_back(std::move(orientation));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tangles
