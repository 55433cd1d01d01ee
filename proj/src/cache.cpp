#include "codedcast/cache.hpp"

#include <algorithm>
#include <stdexcept>

namespace codedcast {

CacheState::CacheState(CachePolicy policy, int capacity)
    : policy_(policy), capacity_(capacity) {
  if (capacity < 1) throw std::invalid_argument("CacheState: capacity must be >= 1");
}

long long CacheState::frequency(int rank) const {
  const auto it = freq_.find(rank);
  return it == freq_.end() ? 0 : it->second;
}

void CacheState::update(int rank) {
  if (policy_ == CachePolicy::LRU) {
    lru_update(rank);
  } else {
    lfu_update(rank);
  }
}

void CacheState::lru_update(int rank) {
  const auto it = std::find(slots_.begin(), slots_.end(), rank);
  if (it != slots_.end()) {
    slots_.erase(it);
  } else if (static_cast<int>(slots_.size()) == capacity_) {
    members_.erase(slots_.back());
    slots_.pop_back();
  }
  slots_.insert(slots_.begin(), rank);
  members_.insert(rank);
}

bool CacheState::lfu_less(int a, int b) const {
  const long long fa = frequency(a);
  const long long fb = frequency(b);
  if (fa != fb) return fa > fb;
  return a < b;
}

void CacheState::lfu_update(int rank) {
  const bool was_cached = members_.count(rank) != 0;
  if (was_cached) {
    slots_.erase(std::find(slots_.begin(), slots_.end(), rank));
  }
  ++freq_[rank];

  // Only `rank`'s key changed, so the top-capacity set can shift by at most
  // this one element.
  const auto cmp = [this](int a, int b) { return lfu_less(a, b); };
  if (was_cached) {
    slots_.insert(std::lower_bound(slots_.begin(), slots_.end(), rank, cmp), rank);
    return;
  }
  if (static_cast<int>(slots_.size()) < capacity_) {
    slots_.insert(std::lower_bound(slots_.begin(), slots_.end(), rank, cmp), rank);
    members_.insert(rank);
    return;
  }
  if (lfu_less(rank, slots_.back())) {
    members_.erase(slots_.back());
    slots_.pop_back();
    slots_.insert(std::lower_bound(slots_.begin(), slots_.end(), rank, cmp), rank);
    members_.insert(rank);
  }
}

CacheState CacheState::replay(CachePolicy policy, int capacity,
                              const std::vector<int>& draws) {
  CacheState state(policy, capacity);
  if (policy == CachePolicy::LRU) {
    // Final LRU state is the last `capacity` distinct draws, newest first.
    for (auto it = draws.rbegin(); it != draws.rend(); ++it) {
      if (static_cast<int>(state.slots_.size()) == capacity) break;
      if (state.members_.insert(*it).second) state.slots_.push_back(*it);
    }
    return state;
  }
  // LFU: final state depends only on the draw counts.
  for (int r : draws) ++state.freq_[r];
  std::vector<int> ranks;
  ranks.reserve(state.freq_.size());
  for (const auto& [r, f] : state.freq_) ranks.push_back(r);
  const auto cmp = [&state](int a, int b) { return state.lfu_less(a, b); };
  std::sort(ranks.begin(), ranks.end(), cmp);
  if (static_cast<int>(ranks.size()) > capacity) ranks.resize(capacity);
  state.slots_ = std::move(ranks);
  state.members_.insert(state.slots_.begin(), state.slots_.end());
  return state;
}

double hit_prob_floor(int rank, const Catalog& cat) { return cat.pmf(rank); }

}  // namespace codedcast
