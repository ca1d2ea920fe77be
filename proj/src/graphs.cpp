#include "graphlie/graphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace graphlie::graphs {

namespace {

int popcount(VertexMask m) { return std::popcount(m); }

std::vector<int> mask_to_list(VertexMask m) {
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if ((m >> v) & 1u) out.push_back(v);
    return out;
}

}  // namespace

MixedGraph::MixedGraph(std::vector<std::string> vertices,
                       std::vector<std::pair<std::string, std::string>> plain_edges,
                       std::vector<std::pair<std::string, std::string>> directed_edges) {
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 1; i < vertices.size(); ++i)
        require(vertices[i] != vertices[i - 1], errc::duplicate_vertex, "duplicate vertex " + vertices[i]);
    require(vertices.size() <= 30, errc::budget_exceeded, "graphs are limited to 30 vertices");
    names_ = std::move(vertices);
    adj_.assign(names_.size(), 0);

    std::set<std::pair<int, int>> plain_set, directed_support;
    for (const auto& [a, b] : plain_edges) {
        int i = index_of(a), j = index_of(b);
        require(i != j, errc::parse_error, "loop edge at " + a);
        plain_set.insert({std::min(i, j), std::max(i, j)});
    }
    std::set<std::pair<int, int>> directed_set;
    for (const auto& [o, t] : directed_edges) {
        int i = index_of(o), j = index_of(t);
        require(i != j, errc::parse_error, "loop edge at " + o);
        directed_set.insert({i, j});
        auto sup = std::make_pair(std::min(i, j), std::max(i, j));
        require(!directed_support.count(sup), errc::parse_error,
                "edge {" + o + "," + t + "} directed both ways");
        directed_support.insert(sup);
    }
    for (const auto& e : directed_support)
        require(!plain_set.count(e), errc::parse_error, "edge appears both plain and directed");

    plain_.assign(plain_set.begin(), plain_set.end());
    directed_.assign(directed_set.begin(), directed_set.end());
    for (const auto& [a, b] : plain_) {
        adj_[size_t(a)] |= VertexMask(1) << b;
        adj_[size_t(b)] |= VertexMask(1) << a;
    }
    for (const auto& [o, t] : directed_) {
        adj_[size_t(o)] |= VertexMask(1) << t;
        adj_[size_t(t)] |= VertexMask(1) << o;
    }
}

int MixedGraph::index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    require(it != names_.end() && *it == name, errc::parse_error, "unknown vertex " + name);
    return int(it - names_.begin());
}

bool MixedGraph::has_plain_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(plain_.begin(), plain_.end(), std::make_pair(a, b));
}

bool MixedGraph::has_directed_edge(int o, int t) const {
    return std::binary_search(directed_.begin(), directed_.end(), std::make_pair(o, t));
}

VertexMask MixedGraph::termini_mask() const {
    VertexMask m = 0;
    for (const auto& [o, t] : directed_) m |= VertexMask(1) << t;
    return m;
}

VertexMask MixedGraph::origins_mask() const {
    VertexMask m = 0;
    for (const auto& [o, t] : directed_) m |= VertexMask(1) << o;
    return m;
}

VertexMask MixedGraph::isolated_mask() const {
    VertexMask m = 0;
    for (int v = 0; v < n(); ++v)
        if (!adj_[size_t(v)]) m |= VertexMask(1) << v;
    return m;
}

MixedGraph MixedGraph::simple_part() const {
    std::vector<std::pair<std::string, std::string>> pe;
    for (const auto& [a, b] : plain_) pe.push_back({name(a), name(b)});
    return MixedGraph(names_, pe, {});
}

MixedGraph MixedGraph::underlying() const {
    std::vector<std::pair<std::string, std::string>> pe;
    for (const auto& [a, b] : plain_) pe.push_back({name(a), name(b)});
    for (const auto& [o, t] : directed_) pe.push_back({name(o), name(t)});
    return MixedGraph(names_, pe, {});
}

LabelledGraph::LabelledGraph(std::vector<std::string> vertices,
                             std::vector<std::pair<std::string, std::string>> edges,
                             std::vector<std::pair<std::string, int>> labels)
    : g_(std::move(vertices), std::move(edges), {}) {
    theta_.assign(size_t(g_.n()), 0);
    std::set<std::string> seen;
    for (const auto& [name, value] : labels) {
        require(value == 0 || value == 1, errc::parse_error, "label of " + name + " must be 0 or 1");
        require(seen.insert(name).second, errc::parse_error, "duplicate label for " + name);
        theta_[size_t(g_.index_of(name))] = uint8_t(value);
    }
    require(seen.size() == size_t(g_.n()), errc::parse_error, "labelling must cover every vertex");
}

LabelledGraph::LabelledGraph(MixedGraph simple, std::vector<uint8_t> theta) : g_(std::move(simple)), theta_(std::move(theta)) {
    require(g_.is_simple(), errc::parse_error, "labelled graphs are simple");
    require(theta_.size() == size_t(g_.n()), errc::parse_error, "labelling must cover every vertex");
}

std::string CliquePolynomial::to_string() const {
    std::string out;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (i) out += " + ";
        if (i == 0)
            out += std::to_string(coefficients[i]);
        else if (i == 1)
            out += std::to_string(coefficients[i]) + "z";
        else
            out += std::to_string(coefficients[i]) + "z^" + std::to_string(i);
    }
    return out;
}

bool is_special(const MixedGraph& g) {
    for (const auto& [o, t] : g.directed_edges()) {
        VertexMask nb = g.adjacency(t);
        for (int w : mask_to_list(nb))
            if (!g.has_directed_edge(w, t)) return false;
        (void)o;
    }
    return true;
}

Signature signature_of(const MixedGraph& g, const std::vector<std::string>& negative_isolated) {
    require(is_special(g), errc::not_special, "graph is not special");
    Signature s;
    s.theta.assign(size_t(g.n()), 0);
    VertexMask t = g.termini_mask();
    for (int v = 0; v < g.n(); ++v) s.theta[size_t(v)] = uint8_t((t >> v) & 1u);
    VertexMask iso = g.isolated_mask();
    for (const auto& name : negative_isolated) {
        int v = g.index_of(name);
        require((iso >> v) & 1u, errc::usage, "vertex " + name + " is not isolated; its sign is determined");
        s.theta[size_t(v)] = 1;
    }
    return s;
}

MixedGraph cone(const MixedGraph& g, const Signature& sig, const std::string& tip) {
    require(sig.theta.size() == size_t(g.n()), errc::usage, "signature size mismatch");
    for (const auto& name : g.names())
        require(name != tip, errc::duplicate_vertex, "tip " + tip + " already a vertex");
    std::vector<std::string> vs = g.names();
    vs.push_back(tip);
    std::vector<std::pair<std::string, std::string>> plain, directed;
    for (const auto& [a, b] : g.plain_edges()) plain.push_back({g.name(a), g.name(b)});
    for (const auto& [o, t] : g.directed_edges()) directed.push_back({g.name(o), g.name(t)});
    for (int v = 0; v < g.n(); ++v) {
        if (sig.theta[size_t(v)])
            directed.push_back({tip, g.name(v)});
        else
            plain.push_back({tip, g.name(v)});
    }
    return MixedGraph(vs, plain, directed);
}

std::optional<std::vector<int>> find_induced_lambda_s(const MixedGraph& g) {
    for (int z = 0; z < g.n(); ++z) {
        std::vector<int> origins;
        for (const auto& [o, t] : g.directed_edges())
            if (t == z) origins.push_back(o);
        for (size_t i = 0; i < origins.size(); ++i)
            for (size_t j = i + 1; j < origins.size(); ++j)
                if (!g.has_edge(origins[i], origins[j])) return std::vector<int>{origins[i], origins[j], z};
    }
    return std::nullopt;
}

namespace {

std::optional<std::vector<int>> find_on_four(const MixedGraph& g, bool want_c4) {
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int vs[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (want_c4) {
                        if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                            return std::vector<int>{a, b, c, d};
                    } else {
                        if (edges != 3) continue;
                        int ones = 0, twos = 0;
                        for (int i = 0; i < 4; ++i) {
                            if (deg[i] == 1) ++ones;
                            if (deg[i] == 2) ++twos;
                        }
                        if (ones == 2 && twos == 2) return std::vector<int>{a, b, c, d};
                    }
                }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_induced_c4(const MixedGraph& g) { return find_on_four(g, true); }
std::optional<std::vector<int>> find_induced_p4(const MixedGraph& g) { return find_on_four(g, false); }

bool is_simple_droms(const MixedGraph& g) {
    return !find_induced_c4(g).has_value() && !find_induced_p4(g).has_value();
}

bool is_mixed_droms(const MixedGraph& g) {
    return is_special(g) && !find_induced_lambda_s(g).has_value() && is_simple_droms(g);
}

std::vector<VertexMask> connected_components(const MixedGraph& g, VertexMask within) {
    std::vector<VertexMask> comps;
    VertexMask left = within;
    while (left) {
        int start = std::countr_zero(left);
        VertexMask comp = VertexMask(1) << start;
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (int v : mask_to_list(frontier)) next |= g.adjacency(v) & within;
            frontier = next & ~comp;
            comp |= next & within;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

std::vector<int> central_vertices(const MixedGraph& g, VertexMask within) {
    std::vector<int> out;
    for (int v : mask_to_list(within)) {
        VertexMask others = within & ~(VertexMask(1) << v);
        if ((g.adjacency(v) & others) == others) out.push_back(v);
    }
    return out;
}

namespace {

// Terminus vertices of directed edges induced by `mask`.
VertexMask termini_within(const MixedGraph& g, VertexMask mask) {
    VertexMask m = 0;
    for (const auto& [o, t] : g.directed_edges())
        if (((mask >> o) & 1u) && ((mask >> t) & 1u)) m |= VertexMask(1) << t;
    return m;
}

bool droms_decomp_rec(const MixedGraph& g, VertexMask mask, std::map<VertexMask, bool>& memo) {
    if (popcount(mask) <= 1) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    bool ok = false;
    auto comps = connected_components(g, mask);
    if (comps.size() > 1) {
        ok = true;
        for (VertexMask c : comps)
            if (!droms_decomp_rec(g, c, memo)) {
                ok = false;
                break;
            }
    } else {
        VertexMask terms = termini_within(g, mask);
        for (int v : central_vertices(g, mask)) {
            if ((terms >> v) & 1u) continue;  // tip of a cone is positive
            VertexMask rest = mask & ~(VertexMask(1) << v);
            VertexMask rest_terms = termini_within(g, rest);
            bool compatible = true;
            for (int w : mask_to_list(rest)) {
                bool w_term = (rest_terms >> w) & 1u;
                bool w_isolated = (g.adjacency(w) & rest & ~(VertexMask(1) << w)) == 0;
                if (w_term) {
                    if (!g.has_directed_edge(v, w)) compatible = false;
                } else if (!w_isolated) {
                    if (!g.has_plain_edge(v, w)) compatible = false;
                }  // isolated base vertices accept either edge type
                if (!compatible) break;
            }
            if (compatible && droms_decomp_rec(g, rest, memo)) {
                ok = true;
                break;
            }
        }
    }
    memo[mask] = ok;
    return ok;
}

}  // namespace

bool is_mixed_droms_decomposition(const MixedGraph& g) {
    if (!is_special(g)) return false;
    std::map<VertexMask, bool> memo;
    return droms_decomp_rec(g, g.full_mask(), memo);
}

std::optional<std::vector<int>> find_forbidden_labelled_path(const LabelledGraph& lg) {
    const MixedGraph& g = lg.graph();
    int n = g.n();
    for (int y = 0; y < n; ++y) {
        if (lg.theta(y) != 0) continue;
        auto nb = mask_to_list(g.adjacency(y));
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], z = nb[j];
                if (g.has_edge(x, z)) continue;
                if (lg.theta(x) + lg.theta(z) >= 1) {
                    if (lg.theta(z) > lg.theta(x)) std::swap(x, z);
                    return std::vector<int>{x, y, z};
                }
            }
    }
    return std::nullopt;
}

bool is_labelled_droms(const LabelledGraph& g) {
    return is_simple_droms(g.graph()) && !find_forbidden_labelled_path(g).has_value();
}

bool central_condition(const LabelledGraph& lg) {
    const MixedGraph& g = lg.graph();
    require(is_simple_droms(g), errc::not_droms, "underlying graph is not Droms");
    VertexMask full = g.full_mask();
    for (VertexMask mask = 1; mask <= full; ++mask) {
        if (connected_components(g, mask).size() != 1) continue;
        bool all_zero = true;
        for (int v : mask_to_list(mask))
            if (lg.theta(v)) all_zero = false;
        if (all_zero) continue;
        bool found = false;
        for (int v : central_vertices(g, mask))
            if (lg.theta(v)) found = true;
        if (!found) return false;
        if (mask == full) break;  // avoid overflow when n == 32
    }
    return true;
}

bool common_origin_per_component(const MixedGraph& g) {
    for (VertexMask comp : connected_components(g, g.full_mask())) {
        int origin = -1;
        for (const auto& [o, t] : g.directed_edges()) {
            if (!((comp >> o) & 1u)) continue;
            if (origin == -1) origin = o;
            if (origin != o) return false;
        }
    }
    return true;
}

namespace {

void clique_rec(const MixedGraph& g, VertexMask candidates, int size, VertexMask chosen,
                std::vector<long long>& counts, VertexMask negatives, std::vector<long long>* neg_counts) {
    if (size + 1 >= int(counts.size())) counts.resize(size_t(size) + 2, 0);
    while (candidates) {
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        VertexMask with_v = chosen | (VertexMask(1) << v);
        ++counts[size_t(size) + 1];
        if (neg_counts) {
            if (size + 2 >= int(neg_counts->size())) neg_counts->resize(size_t(size) + 2, 0);
            VertexMask hit = with_v & negatives;
            if (hit) {
                require((hit & (hit - 1)) == 0, errc::internal,
                        "clique with two negative vertices in a special graph");
                ++(*neg_counts)[size_t(size) + 1];
            }
        }
        clique_rec(g, candidates & g.adjacency(v), size + 1, with_v, counts, negatives, neg_counts);
    }
}

}  // namespace

CliquePolynomial clique_polynomial(const MixedGraph& g) {
    std::vector<long long> counts{1};
    clique_rec(g, g.full_mask(), 0, 0, counts, 0, nullptr);
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return CliquePolynomial{counts};
}

int clique_number(const MixedGraph& g) { return clique_polynomial(g).degree(); }

std::vector<long long> negative_clique_counts(const MixedGraph& g) {
    require(is_special(g), errc::not_special, "graph is not special");
    VertexMask neg = g.termini_mask();
    std::vector<long long> counts{1};
    std::vector<long long> neg_counts{0};
    clique_rec(g, g.full_mask(), 0, 0, counts, neg, &neg_counts);
    // only cliques of size >= 2 count
    if (neg_counts.size() >= 2) neg_counts[1] = 0;
    while (neg_counts.size() > 1 && neg_counts.back() == 0) neg_counts.pop_back();
    return neg_counts;
}

MixedGraph induced_subgraph(const MixedGraph& g, VertexMask mask) {
    std::vector<std::string> vs;
    for (int v : mask_to_list(mask)) vs.push_back(g.name(v));
    std::vector<std::pair<std::string, std::string>> plain, directed;
    for (const auto& [a, b] : g.plain_edges())
        if (((mask >> a) & 1u) && ((mask >> b) & 1u)) plain.push_back({g.name(a), g.name(b)});
    for (const auto& [o, t] : g.directed_edges())
        if (((mask >> o) & 1u) && ((mask >> t) & 1u)) directed.push_back({g.name(o), g.name(t)});
    return MixedGraph(vs, plain, directed);
}

LabelledGraph induced_subgraph(const LabelledGraph& g, VertexMask mask) {
    MixedGraph sub = induced_subgraph(g.graph(), mask);
    std::vector<uint8_t> theta;
    for (int v : mask_to_list(mask)) theta.push_back(g.theta(v));
    return LabelledGraph(std::move(sub), std::move(theta));
}

MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b) {
    std::vector<std::string> vs = a.names();
    for (const auto& name : b.names()) vs.push_back(name);
    std::vector<std::pair<std::string, std::string>> plain, directed;
    for (const auto& [x, y] : a.plain_edges()) plain.push_back({a.name(x), a.name(y)});
    for (const auto& [x, y] : b.plain_edges()) plain.push_back({b.name(x), b.name(y)});
    for (const auto& [o, t] : a.directed_edges()) directed.push_back({a.name(o), a.name(t)});
    for (const auto& [o, t] : b.directed_edges()) directed.push_back({b.name(o), b.name(t)});
    return MixedGraph(vs, plain, directed);  // duplicate names rejected there
}

bool contains_induced(const MixedGraph& g, const MixedGraph& pattern) {
    int k = pattern.n();
    if (k > g.n()) return false;
    // choose k vertices, then try every assignment pattern vertex -> chosen vertex
    auto try_assignment = [&](const std::vector<int>& chosen) {
        std::vector<int> p(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) p[size_t(i)] = i;
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j) {
                    if (i == j) continue;
                    int gi = chosen[size_t(p[size_t(i)])], gj = chosen[size_t(p[size_t(j)])];
                    if (pattern.has_directed_edge(i, j) != g.has_directed_edge(gi, gj)) ok = false;
                    if (i < j && pattern.has_plain_edge(i, j) != g.has_plain_edge(gi, gj)) ok = false;
                }
            if (ok) return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    };
    std::vector<int> chosen;
    std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
        if (left == 0) return try_assignment(chosen);
        for (int v = start; v <= g.n() - left; ++v) {
            chosen.push_back(v);
            if (rec(v + 1, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0, k);
}

ParsedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    try {
        require(j.is_object() && j.contains("vertices"), errc::parse_error, "missing \"vertices\"");
        std::vector<std::string> vertices = j["vertices"].get<std::vector<std::string>>();
        auto read_edges = [&](const char* key) {
            std::vector<std::pair<std::string, std::string>> out;
            if (!j.contains(key)) return out;
            for (const auto& e : j[key]) {
                require(e.is_array() && e.size() == 2, errc::parse_error,
                        std::string(key) + " entries must be pairs");
                out.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
            }
            return out;
        };
        auto plain = read_edges("plain_edges");
        auto directed = read_edges("directed_edges");
        ParsedGraph out;
        if (j.contains("labels")) {
            require(directed.empty(), errc::parse_error, "labelled graphs cannot have directed edges");
            std::vector<std::pair<std::string, int>> labels;
            for (const auto& [k, v] : j["labels"].items()) labels.push_back({k, v.get<int>()});
            out.labelled = LabelledGraph(vertices, plain, labels);
        } else {
            out.mixed = MixedGraph(vertices, plain, directed);
        }
        return out;
    } catch (const error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("bad graph JSON: ") + e.what());
    }
}

std::string graph_to_json(const MixedGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.names();
    auto& pe = j["plain_edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.plain_edges()) pe.push_back({g.name(a), g.name(b)});
    auto& de = j["directed_edges"] = nlohmann::json::array();
    for (const auto& [o, t] : g.directed_edges()) de.push_back({g.name(o), g.name(t)});
    return j.dump();
}

std::string graph_to_json(const LabelledGraph& g) {
    nlohmann::json j = nlohmann::json::parse(graph_to_json(g.graph()));
    j.erase("directed_edges");
    auto& labels = j["labels"] = nlohmann::json::object();
    for (int v = 0; v < g.n(); ++v) labels[g.graph().name(v)] = int(g.theta(v));
    return j.dump();
}

std::vector<MixedGraph> all_special_mixed_graphs(int n) {
    std::vector<MixedGraph> out;
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    for (uint32_t em = 0; em < (1u << pairs.size()); ++em) {
        std::vector<VertexMask> adj(size_t(n), 0);
        for (size_t p = 0; p < pairs.size(); ++p)
            if ((em >> p) & 1u) {
                adj[size_t(pairs[p].first)] |= VertexMask(1) << pairs[p].second;
                adj[size_t(pairs[p].second)] |= VertexMask(1) << pairs[p].first;
            }
        VertexMask non_isolated = 0;
        for (int v = 0; v < n; ++v)
            if (adj[size_t(v)]) non_isolated |= VertexMask(1) << v;
        // negative part: independent set of non-isolated vertices
        for (VertexMask neg = 0;; ++neg) {
            VertexMask sub = neg & non_isolated;
            if (sub == neg) {
                bool independent = true;
                for (int v : mask_to_list(neg))
                    if (adj[size_t(v)] & neg) independent = false;
                if (independent) {
                    std::vector<std::pair<std::string, std::string>> plain, directed;
                    for (size_t p = 0; p < pairs.size(); ++p) {
                        if (!((em >> p) & 1u)) continue;
                        auto [a, b] = pairs[p];
                        bool na = (neg >> a) & 1u, nb = (neg >> b) & 1u;
                        if (na)
                            directed.push_back({names[size_t(b)], names[size_t(a)]});
                        else if (nb)
                            directed.push_back({names[size_t(a)], names[size_t(b)]});
                        else
                            plain.push_back({names[size_t(a)], names[size_t(b)]});
                    }
                    out.emplace_back(names, plain, directed);
                }
            }
            if (n == 0 || neg == (VertexMask(1) << n) - 1) break;
        }
    }
    return out;
}

std::vector<LabelledGraph> all_labelled_graphs(int n) {
    std::vector<LabelledGraph> out;
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    for (uint32_t em = 0; em < (1u << pairs.size()); ++em) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (size_t p = 0; p < pairs.size(); ++p)
            if ((em >> p) & 1u) edges.push_back({names[size_t(pairs[p].first)], names[size_t(pairs[p].second)]});
        MixedGraph g(names, edges, {});
        for (uint32_t tm = 0; tm < (1u << n); ++tm) {
            std::vector<uint8_t> theta(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) theta[size_t(v)] = uint8_t((tm >> v) & 1u);
            out.emplace_back(g, theta);
        }
        if (n == 0) break;
    }
    return out;
}

}  // namespace graphlie::graphs
