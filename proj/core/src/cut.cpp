#include "tangles/cut.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tangles/error.hpp"

namespace tangles {

Bipartition make_cut(const BitVec& membership, int id, std::optional<std::size_t> expected_size) {
  if (expected_size && membership.size() != *expected_size) {
    throw Error(ErrorCode::kLengthMismatch,
                "membership has length " + std::to_string(membership.size()) + ", expected " +
                    std::to_string(*expected_size));
  }
  const std::size_t ones = membership.count();
  if (ones == 0 || ones == membership.size()) {
    throw Error(ErrorCode::kEmptySide, "cut " + std::to_string(id) + " has an empty side");
  }
  Bipartition cut;
  cut.id = id;
  cut.side_a = membership.test(0) ? membership : membership.complement();
  return cut;
}

CutPool::CutPool(std::size_t num_objects, std::vector<Bipartition> cuts)
    : num_objects_(num_objects), cuts_(std::move(cuts)) {
  for (const Bipartition& cut : cuts_) {
    if (cut.universe_size() != num_objects_) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "cut " + std::to_string(cut.id) + " spans " +
                      std::to_string(cut.universe_size()) + " objects, pool has " +
                      std::to_string(num_objects_));
    }
    const std::size_t size_a = cut.size_a();
    if (size_a == 0 || size_a == num_objects_) {
      throw Error(ErrorCode::kEmptySide, "cut " + std::to_string(cut.id) + " has an empty side");
    }
    if (!std::isfinite(cut.cost) || cut.cost < 0.0) {
      throw Error(ErrorCode::kBadParams,
                  "cut " + std::to_string(cut.id) + " needs a finite non-negative cost");
    }
  }
  std::sort(cuts_.begin(), cuts_.end(), [](const Bipartition& a, const Bipartition& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.id < b.id;
  });
}

CutPool CutPool::prefix(double max_psi) const {
  std::vector<Bipartition> kept;
  for (const Bipartition& cut : cuts_) {
    if (cut.cost > max_psi) break;
    kept.push_back(cut);
  }
  return CutPool(num_objects_, std::move(kept));
}

std::optional<std::size_t> CutPool::position_of(int id) const {
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (cuts_[i].id == id) return i;
  }
  return std::nullopt;
}

}  // namespace tangles
