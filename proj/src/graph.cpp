#include "aluffi/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aluffi/util.hpp"

namespace aluffi {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > 63) throw std::invalid_argument("graph too large");
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("vertex index out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u - 1] |= std::uint64_t(1) << (v - 1);
    adj_[v - 1] |= std::uint64_t(1) << (u - 1);
}

bool Graph::adjacent(int u, int v) const {
    return (adj_[u - 1] >> (v - 1)) & 1;
}

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::num_edges() const { return static_cast<int>(edges().size()); }

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n_; ++v)
            if ((frontier >> v) & 1) next |= adj_[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

Ideal edge_ideal(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) throw std::invalid_argument("edge ideal of an edgeless graph");
    std::vector<std::string> names;
    for (int i = 1; i <= g.num_vertices(); ++i) names.push_back("x" + std::to_string(i));
    RingPtr ring = RingContext::make(std::move(names));
    std::vector<Polynomial> gens;
    gens.reserve(es.size());
    for (auto [u, v] : es)
        gens.push_back(Polynomial::variable(ring, u - 1) *
                       Polynomial::variable(ring, v - 1));
    return Ideal(ring, std::move(gens));
}

namespace {

int min_cover_rec(const Graph& g, std::uint64_t cover, int count, int best) {
    if (count >= best) return best;
    int u = -1, v = -1;
    for (int a = 1; a <= g.num_vertices() && u < 0; ++a) {
        if ((cover >> (a - 1)) & 1) continue;
        std::uint64_t open = g.adj_mask(a) & ~cover;
        if (open) {
            u = a;
            v = std::countr_zero(open) + 1;
        }
    }
    if (u < 0) return count;
    best = min_cover_rec(g, cover | (std::uint64_t(1) << (u - 1)), count + 1, best);
    best = min_cover_rec(g, cover | (std::uint64_t(1) << (v - 1)), count + 1, best);
    return best;
}

}  // namespace

int vertex_cover_number(const Graph& g) {
    if (g.num_edges() == 0)
        throw std::invalid_argument("cover number of an edgeless graph");
    return min_cover_rec(g, 0, 0, g.num_vertices());
}

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int v : s) {
        if (v < 1 || v > g.num_vertices())
            throw std::invalid_argument("vertex index out of range");
        mask |= g.adj_mask(v);
    }
    std::vector<int> out;
    for (int v = 1; v <= g.num_vertices(); ++v)
        if ((mask >> (v - 1)) & 1) out.push_back(v);
    return out;
}

bool is_r_transversal(const Graph& g, const Monomial& m, int r) {
    if (m.size() != g.num_vertices())
        throw std::invalid_argument("monomial has wrong variable count");
    if (m.degree() != r) throw std::invalid_argument("transversal degree mismatch");
    // Slots: the variables of m with multiplicity. A slot for vertex v can be
    // assigned any neighbor of v as the differentiated (first) endpoint;
    // first endpoints must be pairwise distinct.
    std::vector<int> slot_vertex;
    for (int v = 1; v <= g.num_vertices(); ++v)
        for (int k = 0; k < m[v - 1]; ++k) slot_vertex.push_back(v);
    int n = g.num_vertices();
    std::vector<int> matched(n + 1, 0);  // first endpoint -> slot+1
    std::vector<char> visited;
    auto augment = [&](auto&& self, int slot) -> bool {
        for (int u = 1; u <= n; ++u) {
            if (!g.adjacent(u, slot_vertex[slot]) || visited[u]) continue;
            visited[u] = 1;
            if (matched[u] == 0 || self(self, matched[u] - 1)) {
                matched[u] = slot + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t s = 0; s < slot_vertex.size(); ++s) {
        visited.assign(n + 1, 0);
        if (!augment(augment, static_cast<int>(s))) return false;
    }
    return true;
}

bool witness34_valid(const Graph& g, const Witness34& w) {
    if (!g.adjacent(w.x1, w.x2) || w.s.empty()) return false;
    int r = vertex_cover_number(g);
    std::vector<int> with1 = w.s, with2 = w.s;
    with1.push_back(w.x1);
    with2.push_back(w.x2);
    auto independent = [&](const std::vector<int>& set) {
        for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b)
                if (g.adjacent(set[a], set[b])) return false;
        return true;
    };
    if (!independent(with1) || !independent(with2)) return false;
    return static_cast<int>(neighborhood(g, w.s).size()) == r - 1;
}

std::optional<Witness34> theorem34_witness(const Graph& g) {
    int r = vertex_cover_number(g);
    if (r <= 1) throw std::domain_error("witness search needs cover number > 1");
    int n = g.num_vertices();
    for (auto [a, b] : g.edges()) {
        for (auto [x1, x2] : {std::pair{a, b}, std::pair{b, a}}) {
            std::uint64_t forbidden = g.adj_mask(x1) | g.adj_mask(x2) |
                                      (std::uint64_t(1) << (x1 - 1)) |
                                      (std::uint64_t(1) << (x2 - 1));
            std::vector<int> cand;
            for (int v = 1; v <= n; ++v)
                if (!((forbidden >> (v - 1)) & 1)) cand.push_back(v);

            std::vector<int> s;
            std::uint64_t nbhd = 0;
            auto rec = [&](auto&& self, std::size_t from) -> std::optional<Witness34> {
                if (!s.empty() && std::popcount(nbhd) == r - 1) {
                    Witness34 w{x1, x2, s};
                    if (witness34_valid(g, w)) return w;
                }
                for (std::size_t i = from; i < cand.size(); ++i) {
                    int v = cand[i];
                    bool indep = true;
                    for (int u : s)
                        if (g.adjacent(u, v)) {
                            indep = false;
                            break;
                        }
                    if (!indep) continue;
                    std::uint64_t saved = nbhd;
                    nbhd |= g.adj_mask(v);
                    if (std::popcount(nbhd) <= r - 1) {
                        s.push_back(v);
                        if (auto w = self(self, i + 1)) return w;
                        s.pop_back();
                    }
                    nbhd = saved;
                }
                return std::nullopt;
            };
            if (auto w = rec(rec, 0)) return w;
        }
    }
    return std::nullopt;
}

bool is_graph_atf(const Graph& g) {
    if (g.num_edges() == 0)
        throw std::invalid_argument("torsion query on an edgeless graph");
    int r = vertex_cover_number(g);
    if (r == 1) return false;  // star
    return !theorem34_witness(g).has_value();
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n, 1);
    return g;
}

Graph path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path needs >= 2 vertices");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star needs >= 2 vertices");
    Graph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(1, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("need at least two parts");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    Graph g(n);
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int k = 0; k < parts[p]; ++k) part_of.push_back(static_cast<int>(p));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (part_of[u - 1] != part_of[v - 1]) g.add_edge(u, v);
    return g;
}

Graph complete_minus_matching(int n, int matching_size) {
    if (matching_size < 0 || 2 * matching_size > n)
        throw std::invalid_argument("matching too large");
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            bool removed = (v == u + 1) && (u % 2 == 1) && (u + 1 <= 2 * matching_size);
            if (!removed) g.add_edge(u, v);
        }
    return g;
}

Graph parse_graph_family(std::string_view text) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family needs the form name:params");
    std::string name(text.substr(0, colon));
    std::string params(text.substr(colon + 1));
    std::vector<int> nums;
    std::string cur;
    for (char c : params + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                nums.push_back(std::stoi(cur));
                cur.clear();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad family parameters: " + params);
        }
    }
    if (nums.empty()) throw std::invalid_argument("family needs parameters");
    if (name == "complete") return complete_graph(nums.at(0));
    if (name == "cycle") return cycle_graph(nums.at(0));
    if (name == "path") return path_graph(nums.at(0));
    if (name == "star") return star_graph(nums.at(0));
    if (name == "multipartite") return complete_multipartite(nums);
    if (name == "kmm") {
        if (nums.size() != 2) throw std::invalid_argument("kmm needs n,matching");
        return complete_minus_matching(nums[0], nums[1]);
    }
    throw std::invalid_argument("unknown graph family: " + name);
}

Graph parse_graph(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("graph file must start with n");
    Graph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << g.num_vertices() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

// --- isomorphism-free enumeration -------------------------------------------

namespace {

int pair_slot(int u, int v, int n) {  // 0-based u < v
    return u * (2 * n - u - 3) / 2 + v - 1;
}

std::uint32_t canonical_mask(std::uint32_t mask, int n,
                             const std::vector<std::vector<int>>& slot_maps) {
    std::uint32_t best = ~std::uint32_t(0);
    for (const auto& map : slot_maps) {
        std::uint32_t img = 0;
        std::uint32_t rest = mask;
        while (rest) {
            int s = std::countr_zero(rest);
            rest &= rest - 1;
            img |= std::uint32_t(1) << map[s];
        }
        best = std::min(best, img);
    }
    return best;
}

std::vector<std::vector<int>> slot_permutations(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> maps;
    int slots = n * (n - 1) / 2;
    do {
        std::vector<int> map(slots);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                map[pair_slot(u, v, n)] = pair_slot(a, b, n);
            }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

// All graphs on n labeled-free vertices as canonical edge masks, built by
// vertex augmentation. Guarded: the memo may be reached from worker threads.
const std::vector<std::uint32_t>& all_graph_masks(int n) {
    static std::recursive_mutex lock;  // the builder recurses on n-1
    std::lock_guard<std::recursive_mutex> hold(lock);
    static std::map<int, std::vector<std::uint32_t>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<std::uint32_t> result;
    if (n == 1) {
        result.push_back(0);
    } else {
        const std::vector<std::uint32_t>& prev = all_graph_masks(n - 1);
        auto maps = slot_permutations(n);
        std::set<std::uint32_t> seen;
        for (std::uint32_t pmask : prev) {
            // Re-index the (n-1)-vertex slots into the n-vertex slot space.
            std::uint32_t base = 0;
            for (int u = 0; u < n - 1; ++u)
                for (int v = u + 1; v < n - 1; ++v)
                    if ((pmask >> pair_slot(u, v, n - 1)) & 1)
                        base |= std::uint32_t(1) << pair_slot(u, v, n);
            for (std::uint32_t attach = 0; attach < (std::uint32_t(1) << (n - 1));
                 ++attach) {
                std::uint32_t mask = base;
                for (int v = 0; v < n - 1; ++v)
                    if ((attach >> v) & 1)
                        mask |= std::uint32_t(1) << pair_slot(v, n - 1, n);
                seen.insert(canonical_mask(mask, n, maps));
            }
        }
        result.assign(seen.begin(), seen.end());
    }
    return memo.emplace(n, std::move(result)).first->second;
}

Graph mask_to_graph(std::uint32_t mask, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((mask >> pair_slot(u, v, n)) & 1) g.add_edge(u + 1, v + 1);
    return g;
}

}  // namespace

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1..8 vertices");
    std::vector<Graph> out;
    for (std::uint32_t mask : all_graph_masks(n)) {
        Graph g = mask_to_graph(mask, n);
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace aluffi
