#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobweb/fnomial.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// One node per level of a layer; consecutive nodes are automatically in
// cover relation there.
struct MaximalChain {
    std::size_t low = 0;                   // level of selection.front()
    std::vector<std::uint64_t> selection;  // 1-based ordinal per level

    std::string to_string() const;  // "1:1->2:3->..."; empty chain gives ""
};

// prod of level sizes; an empty layer holds exactly one (empty) chain.
Integer count_max_chains(const Layer& l);

// Lexicographic stream over ordinal tuples. Construction throws
// EnumerationCapExceeded, carrying the exact count, when the layer holds
// more chains than the cap.
class ChainEnumerator {
public:
    explicit ChainEnumerator(const Layer& l, std::uint64_t cap = kDefaultEnumerationCap);

    std::optional<MaximalChain> next();
    const Integer& total() const noexcept { return total_; }

private:
    std::size_t low_ = 0;
    std::vector<std::uint64_t> sizes_;
    std::vector<std::uint64_t> current_;
    bool exhausted_ = false;
    Integer total_;
};

std::vector<MaximalChain> enumerate_max_chains(const Layer& l,
                                               std::uint64_t cap = kDefaultEnumerationCap);

// Chain indices [first, last], inclusive, in lexicographic order.
struct BlockRange {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
};

struct PartitionCertificate {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t m = 0;       // n - k
    Integer chain_count;     // |C_max<Phi_{k+1} -> Phi_n>|
    Integer block_size;      // m_F! = |C_max(P_m)|
    Integer block_count;     // fnomial(n, k)
    bool verified = false;
    bool blocks_materialized = false;
    std::vector<BlockRange> blocks;  // filled only when materialized
};

// Checks fnomial(n,k) * m_F! == prod_{s=k+1}^{n} F_s exactly; with
// materialize set and the layer within the cap, additionally builds the
// explicit partition by chunking the lexicographic chain stream into blocks
// of m_F! chains and re-checks disjointness, cardinalities and coverage.
// Over the cap the cardinality identity is still verified and blocks are
// omitted (blocks_materialized stays false).
PartitionCertificate verify_partition_theorem(const FSequence& F, std::size_t n, std::size_t k,
                                              bool materialize,
                                              std::uint64_t cap = kDefaultEnumerationCap);

// Brute-force count of simple paths visiting exactly one node per level in
// increasing level order, walking the graph's own adjacency.
Integer count_monotone_max_paths(const ComparabilityGraph& g,
                                 std::uint64_t cap = kDefaultEnumerationCap);

nlohmann::ordered_json to_json(const PartitionCertificate& c);

}  // namespace cobweb
