#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cobweb/sequence.hpp"

namespace cobweb {

// Contiguous level range <Phi_low .. Phi_high> of a cobweb poset, carried by
// value (sequence name plus level sizes). A layer with no levels is legal:
// it is the k = n edge case of the partition theorem and holds exactly one
// (empty) maximal chain.
class Layer {
public:
    Layer(std::string sequence_name, std::size_t low, std::vector<Integer> sizes);

    bool empty() const noexcept { return sizes_.empty(); }
    std::size_t level_count() const noexcept { return sizes_.size(); }
    // First level index; for an empty layer this is the level the range
    // would have started at.
    std::size_t low() const noexcept { return low_; }
    std::size_t high() const;  // InvalidRange when empty
    const Integer& size_at(std::size_t level) const;  // absolute level index
    const std::vector<Integer>& sizes() const noexcept { return sizes_; }
    Integer node_count() const;
    const std::string& sequence_name() const noexcept { return seq_name_; }

private:
    std::string seq_name_;
    std::size_t low_;
    std::vector<Integer> sizes_;
};

// Graded DAG with levels Phi_0..Phi_n of sizes F_0..F_n and the complete
// bipartite cover relation between consecutive levels. Cover arcs are
// implicit; materialization (hasse_diagram, write_dot) is on demand.
class CobwebPoset {
public:
    CobwebPoset(FSequence F, std::size_t n);

    const FSequence& sequence() const noexcept { return seq_; }
    std::size_t top_level() const noexcept { return n_; }
    const Integer& level_size(std::size_t s) const;
    const std::vector<Integer>& level_sizes() const noexcept { return sizes_; }

    // <Phi_k -> Phi_n>, 0 <= k <= n <= top_level().
    Layer layer(std::size_t k, std::size_t n) const;
    Layer full_layer() const;

private:
    FSequence seq_;
    std::size_t n_;
    std::vector<Integer> sizes_;
};

CobwebPoset build_cobweb(const FSequence& F, std::size_t n);

// Explicit finite DAG (cover arcs). Acyclicity is verified on construction.
class InputDag {
public:
    InputDag(std::size_t node_count,
             std::vector<std::pair<std::size_t, std::size_t>> arcs,
             std::vector<std::size_t> levels = {},
             std::vector<std::string> labels = {});

    // Text format: optional first line "levels: n_0 n_1 ..." declaring the
    // level sizes |Phi_0| |Phi_1| ..., then one "u v" cover arc per line with
    // nodes written as "s:j" labels (level s, 1-based ordinal j). Without the
    // levels line the node set is inferred from the arc endpoints.
    static InputDag from_edge_list(std::istream& in);
    static InputDag from_edge_list(const std::string& text);

    std::size_t node_count() const noexcept { return adj_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& arcs() const noexcept { return arcs_; }
    const std::vector<std::vector<std::size_t>>& out_arcs() const noexcept { return adj_; }
    const std::vector<std::vector<std::size_t>>& in_arcs() const noexcept { return radj_; }
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

    bool has_levels() const noexcept { return !levels_.empty(); }
    const std::vector<std::size_t>& levels() const { return levels_; }
    std::string label(std::size_t v) const;

    // Copy with one occurrence of the arc u -> v removed.
    InputDag without_arc(std::size_t u, std::size_t v) const;

private:
    std::vector<std::pair<std::size_t, std::size_t>> arcs_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::vector<std::size_t>> radj_;
    std::vector<std::size_t> topo_;
    std::vector<std::size_t> levels_;   // empty = no level labels
    std::vector<std::string> labels_;   // empty = unnamed nodes
};

struct CobwebCheck {
    bool ok = false;
    // A cross-level pair with neither node reaching the other, when !ok.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Definition check on an arbitrary labelled DAG: every two nodes on distinct
// levels must be comparable under the transitive closure of the cover arcs.
CobwebCheck is_cobweb(const InputDag& d);

// True iff ranks exist with every cover arc an increment of exactly 1 and
// all minimal elements at rank 0.
bool is_graded(const InputDag& d);

InputDag hasse_diagram(const CobwebPoset& p);
InputDag hasse_diagram(const Layer& l);

// Materialized comparability graph of a layer: u ~ v iff they lie on
// distinct levels. Node ids are level-major.
class ComparabilityGraph {
public:
    explicit ComparabilityGraph(const Layer& l);

    std::size_t node_count() const noexcept { return level_of_.size(); }
    std::size_t level_count() const noexcept { return by_level_.size(); }
    std::size_t low_level() const noexcept { return low_; }
    const std::vector<std::size_t>& nodes_at(std::size_t rel_level) const;
    std::size_t level_of(std::size_t v) const;  // relative to low_level()
    bool adjacent(std::size_t u, std::size_t v) const;
    Integer edge_count() const;  // counted from the materialized adjacency

private:
    std::size_t low_ = 0;
    std::vector<std::size_t> level_of_;
    std::vector<std::vector<std::size_t>> by_level_;
    std::vector<boost::dynamic_bitset<>> adj_;
};

ComparabilityGraph comparability_graph(const Layer& l);
ComparabilityGraph comparability_graph(const CobwebPoset& p);

// Closed form sum_{s<t} |Phi_s||Phi_t|.
Integer comparability_edge_count(const Layer& l);

// One rank group per level, nodes labelled "s:j", an arc per cover pair,
// levels bottom-to-top.
void write_dot(std::ostream& os, const Layer& l);
void write_dot(std::ostream& os, const CobwebPoset& p);

}  // namespace cobweb
