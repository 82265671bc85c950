#include "cobweb/chains.hpp"

#include <boost/dynamic_bitset.hpp>

#include <sstream>
#include <utility>

namespace cobweb {

std::string MaximalChain::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < selection.size(); ++i) {
        if (i > 0)
            os << "->";
        os << low + i << ":" << selection[i];
    }
    return os.str();
}

Integer count_max_chains(const Layer& l) {
    Integer count = 1;  // one free choice per level; empty product for the empty layer
    for (const auto& s : l.sizes())
        count *= s;
    return count;
}

ChainEnumerator::ChainEnumerator(const Layer& l, std::uint64_t cap)
    : low_(l.low()), total_(count_max_chains(l)) {
    if (total_ > Integer(cap))
        throw EnumerationCapExceeded("layer holds " + total_.str() +
                                         " maximal chains, over the cap of " +
                                         std::to_string(cap),
                                     total_);
    sizes_.reserve(l.level_count());
    for (const auto& s : l.sizes())
        sizes_.push_back(s.convert_to<std::uint64_t>());  // each size <= total <= cap
    current_.assign(sizes_.size(), 1);
}

std::optional<MaximalChain> ChainEnumerator::next() {
    if (exhausted_)
        return std::nullopt;
    MaximalChain chain{low_, current_};
    // odometer increment, last level fastest
    std::size_t i = sizes_.size();
    while (i > 0) {
        --i;
        if (current_[i] < sizes_[i]) {
            ++current_[i];
            break;
        }
        current_[i] = 1;
        if (i == 0)
            exhausted_ = true;
    }
    if (sizes_.empty())
        exhausted_ = true;
    return chain;
}

std::vector<MaximalChain> enumerate_max_chains(const Layer& l, std::uint64_t cap) {
    ChainEnumerator en(l, cap);
    std::vector<MaximalChain> chains;
    while (auto c = en.next())
        chains.push_back(std::move(*c));
    return chains;
}

namespace {

Layer theorem_layer(const FSequence& F, std::size_t n, std::size_t k) {
    std::vector<Integer> sizes;
    for (std::size_t s = k + 1; s <= n; ++s)
        sizes.push_back(F.value(s));
    return Layer(F.name(), k + 1, std::move(sizes));
}

}  // namespace

PartitionCertificate verify_partition_theorem(const FSequence& F, std::size_t n, std::size_t k,
                                              bool materialize, std::uint64_t cap) {
    if (k > n)
        throw InvalidRange("verify_partition_theorem needs k <= n, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
    AdmissibilityReport adm = is_admissible_upto(F, n);
    if (!adm.admissible) {
        const auto& f = *adm.first_failure;
        throw NotAdmissible("sequence '" + F.name() + "' is not cobweb admissible: fnomial(" +
                            std::to_string(f.n) + "," + std::to_string(f.k) + ") = " +
                            rational_to_string(f.value));
    }

    PartitionCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.m = n - k;

    Layer layer = theorem_layer(F, n, k);
    cert.chain_count = count_max_chains(layer);
    // P_m is the cobweb subposet with level sizes F_1..F_m, so its chain
    // count is exactly m_F!.
    cert.block_size = count_max_chains(theorem_layer(F, cert.m, 0));
    cert.block_count = numerator(fnomial(F, n, k).value);
    cert.verified = cert.block_count * cert.block_size == cert.chain_count;

    if (!materialize || !cert.verified || cert.chain_count > Integer(cap))
        return cert;

    const auto total = cert.chain_count.convert_to<std::uint64_t>();
    const auto block_size = cert.block_size.convert_to<std::uint64_t>();
    const auto block_count = cert.block_count.convert_to<std::uint64_t>();

    // Chains correspond to mixed-radix numerals, so the occupancy check below
    // is an exact set identity, not a hash.
    std::vector<std::uint64_t> strides(layer.level_count(), 1);
    {
        std::uint64_t stride = 1;
        for (std::size_t i = layer.level_count(); i > 0; --i) {
            strides[i - 1] = stride;
            stride *= layer.sizes()[i - 1].convert_to<std::uint64_t>();
        }
    }

    boost::dynamic_bitset<> seen(total);
    ChainEnumerator en(layer, cap);
    std::uint64_t position = 0;
    bool ok = true;
    while (auto chain = en.next()) {
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < chain->selection.size(); ++i)
            index += (chain->selection[i] - 1) * strides[i];
        if (index >= total || seen.test(index) || index != position) {
            ok = false;
            break;
        }
        seen.set(index);
        ++position;
    }
    ok = ok && position == total && seen.count() == total;
    ok = ok && block_count * block_size == total;
    if (ok) {
        cert.blocks.reserve(block_count);
        for (std::uint64_t b = 0; b < block_count; ++b)
            cert.blocks.push_back(BlockRange{b * block_size, (b + 1) * block_size - 1});
        cert.blocks_materialized = true;
    } else {
        cert.verified = false;
    }
    return cert;
}

Integer count_monotone_max_paths(const ComparabilityGraph& g, std::uint64_t cap) {
    if (g.level_count() == 0)
        return 1;
    const std::size_t last_level = g.level_count() - 1;
    std::uint64_t found = 0;

    // Plain depth-first walk over the materialized adjacency, one node per
    // level in increasing level order.
    auto extend = [&](auto&& self, std::size_t v, std::size_t rel) -> void {
        if (rel == last_level) {
            if (++found > cap)
                throw EnumerationCapExceeded(
                    "monotone path walk exceeded the cap of " + std::to_string(cap),
                    Integer(found));
            return;
        }
        for (std::size_t u : g.nodes_at(rel + 1))
            if (g.adjacent(v, u))
                self(self, u, rel + 1);
    };
    for (std::size_t v : g.nodes_at(0))
        extend(extend, v, 0);
    return Integer(found);
}

nlohmann::ordered_json to_json(const PartitionCertificate& c) {
    return nlohmann::ordered_json{
        {"n", c.n},
        {"k", c.k},
        {"m", c.m},
        {"chain_count", c.chain_count.str()},
        {"block_size", c.block_size.str()},
        {"block_count", c.block_count.str()},
        {"verified", c.verified},
        {"blocks_materialized", c.blocks_materialized},
    };
}

}  // namespace cobweb
