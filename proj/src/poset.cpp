#include "cobweb/poset.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace cobweb {

// ---------------------------------------------------------------------------
// Layer

Layer::Layer(std::string sequence_name, std::size_t low, std::vector<Integer> sizes)
    : seq_name_(std::move(sequence_name)), low_(low), sizes_(std::move(sizes)) {
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 1)
            throw ZeroLevel("level " + std::to_string(low_ + i) + " of layer has size " +
                            sizes_[i].str());
    }
}

std::size_t Layer::high() const {
    if (empty())
        throw InvalidRange("empty layer has no top level");
    return low_ + sizes_.size() - 1;
}

const Integer& Layer::size_at(std::size_t level) const {
    if (empty() || level < low_ || level > high())
        throw InvalidRange("level " + std::to_string(level) + " outside layer");
    return sizes_[level - low_];
}

Integer Layer::node_count() const {
    Integer total = 0;
    for (const auto& s : sizes_)
        total += s;
    return total;
}

// ---------------------------------------------------------------------------
// CobwebPoset

CobwebPoset::CobwebPoset(FSequence F, std::size_t n) : seq_(std::move(F)), n_(n) {
    sizes_.reserve(n + 1);
    Integer f0 = seq_.value(0);
    sizes_.push_back(f0 == 0 ? Integer(1) : f0);  // minimal elements
    for (std::size_t s = 1; s <= n; ++s) {
        Integer fs = seq_.value(s);
        if (fs == 0)
            throw ZeroLevel("F_" + std::to_string(s) + " = 0 would give an empty level");
        sizes_.push_back(std::move(fs));
    }
}

const Integer& CobwebPoset::level_size(std::size_t s) const {
    if (s > n_)
        throw InvalidRange("level " + std::to_string(s) + " above top level " +
                           std::to_string(n_));
    return sizes_[s];
}

Layer CobwebPoset::layer(std::size_t k, std::size_t n) const {
    if (k > n || n > n_)
        throw InvalidRange("layer needs 0 <= k <= n <= " + std::to_string(n_) + ", got k=" +
                           std::to_string(k) + " n=" + std::to_string(n));
    std::vector<Integer> sizes(sizes_.begin() + static_cast<std::ptrdiff_t>(k),
                               sizes_.begin() + static_cast<std::ptrdiff_t>(n) + 1);
    return Layer(seq_.name(), k, std::move(sizes));
}

Layer CobwebPoset::full_layer() const {
    return layer(0, n_);
}

CobwebPoset build_cobweb(const FSequence& F, std::size_t n) {
    return CobwebPoset(F, n);
}

// ---------------------------------------------------------------------------
// InputDag

InputDag::InputDag(std::size_t node_count,
                   std::vector<std::pair<std::size_t, std::size_t>> arcs,
                   std::vector<std::size_t> levels,
                   std::vector<std::string> labels)
    : arcs_(std::move(arcs)), adj_(node_count), radj_(node_count),
      levels_(std::move(levels)), labels_(std::move(labels)) {
    if (!levels_.empty() && levels_.size() != node_count)
        throw Error("levels vector must name every node");
    if (!labels_.empty() && labels_.size() != node_count)
        throw Error("labels vector must name every node");
    for (const auto& [u, v] : arcs_) {
        if (u >= node_count || v >= node_count)
            throw InvalidRange("arc endpoint out of range");
        adj_[u].push_back(v);
        radj_[v].push_back(u);
    }

    // Kahn's algorithm; anything left over sits on a cycle.
    std::vector<std::size_t> indeg(node_count);
    for (std::size_t v = 0; v < node_count; ++v)
        indeg[v] = radj_[v].size();
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < node_count; ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    topo_.reserve(node_count);
    while (!queue.empty()) {
        std::size_t u = queue.back();
        queue.pop_back();
        topo_.push_back(u);
        for (std::size_t v : adj_[u])
            if (--indeg[v] == 0)
                queue.push_back(v);
    }
    if (topo_.size() != node_count)
        throw CycleDetected("input digraph is not acyclic");
}

std::string InputDag::label(std::size_t v) const {
    if (v < labels_.size() && !labels_[v].empty())
        return labels_[v];
    return "#" + std::to_string(v);
}

InputDag InputDag::without_arc(std::size_t u, std::size_t v) const {
    auto arcs = arcs_;
    auto it = std::find(arcs.begin(), arcs.end(), std::make_pair(u, v));
    if (it == arcs.end())
        throw InvalidRange("no arc " + std::to_string(u) + " -> " + std::to_string(v));
    arcs.erase(it);
    return InputDag(node_count(), std::move(arcs), levels_, labels_);
}

namespace {

// "s:j" with s >= 0 and j >= 1
std::pair<std::size_t, std::size_t> parse_node_token(const std::string& token) {
    auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
        throw Error("bad node token '" + token + "', expected s:j");
    try {
        std::size_t consumed = 0;
        std::size_t s = std::stoull(token.substr(0, colon), &consumed);
        if (consumed != colon)
            throw Error("");
        std::size_t j = std::stoull(token.substr(colon + 1), &consumed);
        if (consumed != token.size() - colon - 1 || j == 0)
            throw Error("");
        return {s, j};
    } catch (const std::exception&) {
        throw Error("bad node token '" + token + "', expected s:j");
    }
}

}  // namespace

InputDag InputDag::from_edge_list(std::istream& in) {
    std::vector<std::size_t> declared_sizes;
    bool sizes_declared = false;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>,
                          std::pair<std::size_t, std::size_t>>> raw_arcs;
    std::string line;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#')
            continue;
        if (first_content_line && tok == "levels:") {
            std::size_t size = 0;
            while (ls >> size)
                declared_sizes.push_back(size);
            sizes_declared = true;
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        std::string tok2;
        if (!(ls >> tok2))
            throw Error("expected two node tokens per arc line, got '" + line + "'");
        raw_arcs.emplace_back(parse_node_token(tok), parse_node_token(tok2));
    }

    std::vector<std::size_t> sizes = declared_sizes;
    if (!sizes_declared) {
        for (const auto& [a, b] : raw_arcs) {
            for (const auto& node : {a, b}) {
                if (node.first >= sizes.size())
                    sizes.resize(node.first + 1, 0);
                sizes[node.first] = std::max(sizes[node.first], node.second);
            }
        }
    }

    std::vector<std::size_t> offsets(sizes.size() + 1, 0);
    for (std::size_t s = 0; s < sizes.size(); ++s)
        offsets[s + 1] = offsets[s] + sizes[s];
    const std::size_t node_count = offsets.back();

    auto node_id = [&](const std::pair<std::size_t, std::size_t>& node) {
        if (node.first >= sizes.size() || node.second > sizes[node.first])
            throw Error("node " + std::to_string(node.first) + ":" +
                        std::to_string(node.second) + " outside the declared levels");
        return offsets[node.first] + node.second - 1;
    };

    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    arcs.reserve(raw_arcs.size());
    for (const auto& [a, b] : raw_arcs)
        arcs.emplace_back(node_id(a), node_id(b));

    std::vector<std::size_t> levels(node_count);
    std::vector<std::string> labels(node_count);
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        for (std::size_t j = 1; j <= sizes[s]; ++j) {
            std::size_t id = offsets[s] + j - 1;
            levels[id] = s;
            labels[id] = std::to_string(s) + ":" + std::to_string(j);
        }
    }
    return InputDag(node_count, std::move(arcs), std::move(levels), std::move(labels));
}

InputDag InputDag::from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

// ---------------------------------------------------------------------------
// Checks

CobwebCheck is_cobweb(const InputDag& d) {
    if (!d.has_levels())
        throw MissingLevels("is_cobweb needs level labels on every node");
    const std::size_t n = d.node_count();
    const auto& levels = d.levels();

    // Descendant sets over the order relation, not just the cover relation.
    std::vector<boost::dynamic_bitset<>> reach(n, boost::dynamic_bitset<>(n));
    const auto& topo = d.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        std::size_t u = *it;
        reach[u].set(u);
        for (std::size_t v : d.out_arcs()[u])
            reach[u] |= reach[v];
    }

    CobwebCheck result;
    result.ok = true;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (levels[x] == levels[y])
                continue;
            if (!reach[x].test(y) && !reach[y].test(x)) {
                result.ok = false;
                result.witness = std::make_pair(x, y);
                return result;
            }
        }
    }
    return result;
}

bool is_graded(const InputDag& d) {
    // Walking in topological order, every predecessor is ranked before its
    // successors; minimal elements sit at rank 0.
    std::vector<std::size_t> rank(d.node_count(), 0);
    for (std::size_t u : d.topological_order()) {
        const auto& preds = d.in_arcs()[u];
        if (preds.empty())
            continue;
        std::size_t r = rank[preds.front()] + 1;
        for (std::size_t p : preds)
            if (rank[p] + 1 != r)
                return false;
        rank[u] = r;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Materialization

namespace {

struct LevelIndex {
    std::vector<std::size_t> sizes;    // per level, as machine ints
    std::vector<std::size_t> offsets;  // offsets[i] = first node id of level i
    std::size_t node_count = 0;
};

LevelIndex index_layer(const Layer& l) {
    LevelIndex ix;
    ix.sizes.reserve(l.level_count());
    for (const auto& s : l.sizes())
        ix.sizes.push_back(to_size_t(s));
    ix.offsets.resize(ix.sizes.size() + 1, 0);
    for (std::size_t i = 0; i < ix.sizes.size(); ++i)
        ix.offsets[i + 1] = ix.offsets[i] + ix.sizes[i];
    ix.node_count = ix.offsets.back();
    return ix;
}

}  // namespace

InputDag hasse_diagram(const Layer& l) {
    LevelIndex ix = index_layer(l);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t i = 0; i + 1 < ix.sizes.size(); ++i)
        for (std::size_t a = 0; a < ix.sizes[i]; ++a)
            for (std::size_t b = 0; b < ix.sizes[i + 1]; ++b)
                arcs.emplace_back(ix.offsets[i] + a, ix.offsets[i + 1] + b);

    std::vector<std::size_t> levels(ix.node_count);
    std::vector<std::string> labels(ix.node_count);
    for (std::size_t i = 0; i < ix.sizes.size(); ++i) {
        for (std::size_t j = 1; j <= ix.sizes[i]; ++j) {
            std::size_t id = ix.offsets[i] + j - 1;
            levels[id] = l.low() + i;
            labels[id] = std::to_string(l.low() + i) + ":" + std::to_string(j);
        }
    }
    return InputDag(ix.node_count, std::move(arcs), std::move(levels), std::move(labels));
}

InputDag hasse_diagram(const CobwebPoset& p) {
    return hasse_diagram(p.full_layer());
}

ComparabilityGraph::ComparabilityGraph(const Layer& l) : low_(l.low()) {
    LevelIndex ix = index_layer(l);
    level_of_.resize(ix.node_count);
    by_level_.resize(ix.sizes.size());
    for (std::size_t i = 0; i < ix.sizes.size(); ++i) {
        by_level_[i].reserve(ix.sizes[i]);
        for (std::size_t j = 0; j < ix.sizes[i]; ++j) {
            std::size_t id = ix.offsets[i] + j;
            level_of_[id] = i;
            by_level_[i].push_back(id);
        }
    }
    adj_.assign(ix.node_count, boost::dynamic_bitset<>(ix.node_count));
    for (std::size_t u = 0; u < ix.node_count; ++u)
        for (std::size_t v = u + 1; v < ix.node_count; ++v)
            if (level_of_[u] != level_of_[v]) {
                adj_[u].set(v);
                adj_[v].set(u);
            }
}

const std::vector<std::size_t>& ComparabilityGraph::nodes_at(std::size_t rel_level) const {
    if (rel_level >= by_level_.size())
        throw InvalidRange("level index outside graph");
    return by_level_[rel_level];
}

std::size_t ComparabilityGraph::level_of(std::size_t v) const {
    if (v >= level_of_.size())
        throw InvalidRange("node outside graph");
    return level_of_[v];
}

bool ComparabilityGraph::adjacent(std::size_t u, std::size_t v) const {
    if (u >= adj_.size() || v >= adj_.size())
        throw InvalidRange("node outside graph");
    return adj_[u].test(v);
}

Integer ComparabilityGraph::edge_count() const {
    Integer twice = 0;
    for (const auto& row : adj_)
        twice += Integer(row.count());
    return twice / 2;
}

ComparabilityGraph comparability_graph(const Layer& l) {
    return ComparabilityGraph(l);
}

ComparabilityGraph comparability_graph(const CobwebPoset& p) {
    return ComparabilityGraph(p.full_layer());
}

Integer comparability_edge_count(const Layer& l) {
    const auto& sizes = l.sizes();
    Integer total = 0;
    for (std::size_t s = 0; s < sizes.size(); ++s)
        for (std::size_t t = s + 1; t < sizes.size(); ++t)
            total += sizes[s] * sizes[t];
    return total;
}

// ---------------------------------------------------------------------------
// DOT export

void write_dot(std::ostream& os, const Layer& l) {
    LevelIndex ix = index_layer(l);
    os << "digraph cobweb {\n";
    os << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < ix.sizes.size(); ++i) {
        os << "  { rank=same;";
        for (std::size_t j = 1; j <= ix.sizes[i]; ++j)
            os << " \"" << l.low() + i << ":" << j << "\";";
        os << " }\n";
    }
    for (std::size_t i = 0; i + 1 < ix.sizes.size(); ++i)
        for (std::size_t a = 1; a <= ix.sizes[i]; ++a)
            for (std::size_t b = 1; b <= ix.sizes[i + 1]; ++b)
                os << "  \"" << l.low() + i << ":" << a << "\" -> \"" << l.low() + i + 1
                   << ":" << b << "\";\n";
    os << "}\n";
}

void write_dot(std::ostream& os, const CobwebPoset& p) {
    write_dot(os, p.full_layer());
}

}  // namespace cobweb
