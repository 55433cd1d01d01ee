#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "codedcast/cache.hpp"
#include "codedcast/graphs.hpp"

namespace codedcast {

enum class Strategy { COLORING, CYCLES, COLORING_THEN_CYCLES };

enum class GroupKind { CLIQUE, CYCLE, SINGLETON };

/// One delivery group. Members are vertex (or terminal) ids. For a clique,
/// one codeword XORing every member's request; for a k-cycle v1->...->vk->v1,
/// the k-1 adjacent-pair codewords r(vi) xor r(vi+1); for a singleton (or a
/// merged same-content multicast), the plain content.
struct CodeGroup {
  GroupKind kind = GroupKind::SINGLETON;
  std::vector<int> members;
  std::vector<std::vector<int>> codeword_ranks;  // sorted rank sets
};

/// A full linear XOR index code; total_length is the number of codewords
/// (transmissions over a broadcast domain).
struct IndexCode {
  std::vector<CodeGroup> groups;
  int total_length = 0;
};

struct Coloring {
  std::vector<int> color;  // per vertex
  int count = 0;
};

/// Welsh-Powell style greedy proper coloring: vertices in descending degree
/// order (ties by lower id), each taking the smallest free color. Every
/// color class is a clique of the dependency graph's bidirected core.
Coloring greedy_coloring(const ConflictGraph& cg);

/// Greedy vertex-disjoint directed cycle search: cycles of length 2, then 3,
/// ... up to max_len, enumerated in ascending-vertex-id order; a cycle is
/// accepted iff disjoint from all previously accepted ones. `excluded`
/// vertices (size n, may be empty) never participate.
std::vector<std::vector<int>> disjoint_cycles(const Digraph& g, int max_len,
                                              const std::vector<bool>& excluded = {});

/// Assemble an index code for a dependency instance whose requests are
/// pairwise distinct. COLORING turns color classes into cliques; CYCLES uses
/// disjoint cycles plus singletons; COLORING_THEN_CYCLES colors first and
/// runs the cycle search over the leftover singletons.
IndexCode build_code(const DependencyGraph& dep, Strategy strategy,
                     int max_cycle_len = 4);

/// Saved transmissions: n - total_length.
int coding_gain(const IndexCode& code, int n);

/// Synthetic content bytes: a PRNG stream keyed by the rank, so any party
/// can reproduce the payload of a content it holds.
std::vector<std::uint8_t> payload_for_rank(int rank, std::size_t len);

struct Codeword {
  std::vector<int> rank_set;          // sorted
  std::vector<std::uint8_t> payload;  // bitwise XOR of member payloads
};

/// Materialize a group's codewords with payloads of length payload_len.
std::vector<Codeword> encode(const CodeGroup& group, std::size_t payload_len);

/// Peeling decoder. Repeatedly resolves any codeword with exactly one rank
/// outside cached-union-decoded; succeeds once `want` is resolved (or was
/// cached all along); returns nullopt if a full pass makes no progress.
std::optional<std::vector<std::uint8_t>> decode(
    const std::unordered_set<int>& cached, const std::unordered_set<int>& decoded,
    const std::vector<Codeword>& received, int want, std::size_t payload_len);

/// Exact minimum clique cover of the bidirected core (equivalently the
/// chromatic number of the conflict graph) by subset dynamic programming.
/// Limited to n <= 10; throws std::invalid_argument beyond that.
int optimal_clique_cover(const DependencyGraph& dep);

enum class SelfHitMode {
  LOCAL,  // own-cache requests satisfied locally, never enter the code
  CODED   // every request enters the delivery instance
};

/// End-to-end code planning for one batch of (terminal, rank) requests:
/// optional self-hit removal, merging of same-content requests into plain
/// multicast groups, dependency graph over the remaining (distinct-request)
/// terminals, then build_code. Group members are terminal ids.
struct DeliveryPlan {
  IndexCode code;
  std::vector<int> self_hits;  // terminals satisfied from their own cache
};

DeliveryPlan plan_delivery(const std::vector<std::pair<int, int>>& requests,
                           const std::vector<CacheState>& caches,
                           Strategy strategy, int max_cycle_len,
                           SelfHitMode self_hit_mode);

/// One line per codeword: `group_kind,member_ids,rank_set` with `;` joining
/// ids inside a field.
void dump_code(std::ostream& os, const IndexCode& code);

const char* to_string(GroupKind kind);
const char* to_string(Strategy strategy);

}  // namespace codedcast
