#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "codedcast/zipf.hpp"

namespace codedcast {

enum class CachePolicy { LRU, LFU };

/// One terminal's content cache.
///
/// LRU keeps slots in recency order, most recent first. LFU keeps slots as
/// the top-capacity ranks by request frequency, ties broken by lower rank;
/// frequency counters cover every rank ever requested and are never aged.
class CacheState {
 public:
  CacheState(CachePolicy policy, int capacity);

  /// Record a request for `rank` and update the slots per the policy.
  void update(int rank);

  bool contains(int rank) const { return members_.count(rank) != 0; }

  /// Slot order: position 0 is the first cache location.
  const std::vector<int>& slots() const { return slots_; }
  const std::unordered_set<int>& contents() const { return members_; }

  CachePolicy policy() const { return policy_; }
  int capacity() const { return capacity_; }
  long long frequency(int rank) const;

  /// State after replaying `draws` in order on an empty cache. Equivalent to
  /// calling update() per draw but O(draws) for LRU and O(draws + distinct)
  /// for LFU, which matters for large warm-ups.
  static CacheState replay(CachePolicy policy, int capacity,
                           const std::vector<int>& draws);

 private:
  void lru_update(int rank);
  void lfu_update(int rank);
  bool lfu_less(int a, int b) const;  // a orders before b in LFU slots

  CachePolicy policy_;
  int capacity_;
  std::vector<int> slots_;
  std::unordered_set<int> members_;
  std::unordered_map<int, long long> freq_;  // LFU only
};

/// Lower bound on the steady-state probability that `rank` is cached, valid
/// for both policies: equals the request pmf (the chance the rank was the
/// most recent request / the single cached item).
double hit_prob_floor(int rank, const Catalog& cat);

}  // namespace codedcast
