#include "zmono/dual_forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zmono {

namespace {

// Path-compressing union-find over node indices.
struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

std::vector<std::vector<int>> adjacency(const FaceGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.node_count()));
    for (const auto& [a, b] : g.links) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

bool path_exists(int from, int to, const std::vector<std::vector<int>>& adj,
                 const std::vector<char>& banned) {
    if (banned[static_cast<size_t>(from)] || banned[static_cast<size_t>(to)]) return false;
    if (from == to) return true;
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{from};
    seen[static_cast<size_t>(from)] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (seen[static_cast<size_t>(v)] || banned[static_cast<size_t>(v)]) continue;
            if (v == to) return true;
            seen[static_cast<size_t>(v)] = 1;
            stack.push_back(v);
        }
    }
    return false;
}

// The lexicographically least cycle, over all rotations and directions of all
// cycles.  Its first node v0 is the least node on any cycle; every other node
// exceeds v0, so nodes below the candidate start are banned outright.  From a
// feasible prefix the next node is the least neighbour from which the start
// stays reachable; closing as early as possible is optimal because a proper
// prefix precedes every extension.
std::optional<std::vector<int>> least_cycle(const FaceGraph& g) {
    const auto adj = adjacency(g);
    const int n = g.node_count();
    for (int v0 = 0; v0 < n; ++v0) {
        std::vector<char> banned(static_cast<size_t>(n), 0);
        for (int v = 0; v < v0; ++v) banned[static_cast<size_t>(v)] = 1;

        std::vector<int> prefix{v0};
        std::vector<char> in_prefix(static_cast<size_t>(n), 0);
        in_prefix[static_cast<size_t>(v0)] = 1;
        bool dead = false;
        while (!dead) {
            const int last = prefix.back();
            if (prefix.size() >= 3 &&
                std::binary_search(adj[static_cast<size_t>(last)].begin(),
                                   adj[static_cast<size_t>(last)].end(), v0)) {
                return prefix;
            }
            dead = true;
            for (int x : adj[static_cast<size_t>(last)]) {
                if (banned[static_cast<size_t>(x)] || in_prefix[static_cast<size_t>(x)]) continue;
                // can we still get from x back to v0 avoiding the prefix interior?
                std::vector<char> blocked = banned;
                for (int p : prefix)
                    if (p != v0) blocked[static_cast<size_t>(p)] = 1;
                if (!path_exists(x, v0, adj, blocked)) continue;
                prefix.push_back(x);
                in_prefix[static_cast<size_t>(x)] = 1;
                dead = false;
                break;
            }
        }
    }
    return std::nullopt;
}

std::string face_name(const Face& f) { return f.v[0] + "-" + f.v[1] + "-" + f.v[2]; }

}  // namespace

FaceGraph dual(const Triangulation& t) {
    FaceGraph g;
    g.nodes = t.faces();
    g.links.reserve(static_cast<size_t>(t.edge_count()));
    for (int e = 0; e < t.edge_count(); ++e) {
        auto [f1, f2] = t.edge_face_ids(e);
        if (f1 > f2) std::swap(f1, f2);
        g.links.emplace_back(f1, f2);
    }
    std::sort(g.links.begin(), g.links.end());
    internal_check(std::adjacent_find(g.links.begin(), g.links.end()) == g.links.end(),
                   "dual graph must be simple");
    return g;
}

FaceGraph subgraph_by_type(const Triangulation& t, MonodromyTag filter,
                           const std::vector<FaceReport>& reports) {
    std::vector<int> keep;  // face ids with the requested type
    for (int fid = 0; fid < t.face_count(); ++fid) {
        if (reports[static_cast<size_t>(fid)].type.tag == filter) keep.push_back(fid);
    }
    std::vector<int> index(static_cast<size_t>(t.face_count()), -1);
    FaceGraph g;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        index[static_cast<size_t>(keep[static_cast<size_t>(i)])] = i;
        g.nodes.push_back(t.face_at(keep[static_cast<size_t>(i)]));
    }
    for (int e = 0; e < t.edge_count(); ++e) {
        auto [f1, f2] = t.edge_face_ids(e);
        const int a = index[static_cast<size_t>(f1)], b = index[static_cast<size_t>(f2)];
        if (a >= 0 && b >= 0) g.links.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.links.begin(), g.links.end());
    g.links.erase(std::unique(g.links.begin(), g.links.end()), g.links.end());
    return g;
}

FaceGraph subgraph_by_type(const Triangulation& t, MonodromyTag filter) {
    return subgraph_by_type(t, filter, face_reports(t));
}

ForestCertificate is_forest(const FaceGraph& g) {
    ForestCertificate cert;
    const int n = g.node_count();
    DisjointSet dsu(n);
    for (const auto& [a, b] : g.links) dsu.unite(a, b);

    std::map<int, std::vector<int>> members;  // root -> nodes
    for (int v = 0; v < n; ++v) members[dsu.find(v)].push_back(v);
    std::map<int, int> link_count;
    for (const auto& [a, b] : g.links) ++link_count[dsu.find(a)];

    const auto adj = adjacency(g);
    bool all_trees = true;
    for (const auto& [root, nodes] : members) {
        ForestComponent comp;
        comp.nodes = static_cast<int>(nodes.size());
        comp.links = link_count.count(root) ? link_count.at(root) : 0;
        const bool acyclic = comp.links == comp.nodes - 1;
        if (!acyclic) {
            comp.shape = "other";
            all_trees = false;
        } else {
            int deg_one = 0;
            bool path = true;
            for (int v : nodes) {
                const auto deg = adj[static_cast<size_t>(v)].size();
                if (deg > 2) path = false;
                if (deg <= 1) ++deg_one;
            }
            // a path with k>=2 nodes has two endpoints; a single node is P1
            if (path && (comp.nodes == 1 || deg_one == 2))
                comp.shape = "P" + std::to_string(comp.nodes);
            else
                comp.shape = "tree";
        }
        cert.components.push_back(comp);
    }
    cert.forest = all_trees;
    if (!all_trees) {
        auto cyc = least_cycle(g);
        internal_check(cyc.has_value(), "a non-forest graph must contain a cycle");
        std::vector<Face> witness;
        for (int v : *cyc) witness.push_back(g.nodes[static_cast<size_t>(v)]);
        cert.cycle_witness = std::move(witness);
    }
    return cert;
}

std::string export_dot(const FaceGraph& g, const std::map<Face, std::string>& annotations,
                       const std::string& graph_name) {
    std::ostringstream os;
    os << "graph " << graph_name << " {\n";
    for (const auto& f : g.nodes) {
        os << "  \"" << face_name(f) << "\"";
        auto it = annotations.find(f);
        if (it != annotations.end()) os << " [mtype=\"" << it->second << "\"]";
        os << ";\n";
    }
    for (const auto& [a, b] : g.links) {
        os << "  \"" << face_name(g.nodes[static_cast<size_t>(a)]) << "\" -- \""
           << face_name(g.nodes[static_cast<size_t>(b)]) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

Face face_from_name(const std::string& name) {
    std::array<std::string, 3> parts;
    size_t start = 0;
    for (int i = 0; i < 2; ++i) {
        const size_t dash = name.find('-', start);
        if (dash == std::string::npos)
            throw DomainError(ErrorKind::TrigParse, "bad DOT face name '" + name + "'");
        parts[static_cast<size_t>(i)] = name.substr(start, dash - start);
        start = dash + 1;
    }
    parts[2] = name.substr(start);
    return Face(parts[0], parts[1], parts[2]);
}

std::string unquote(const std::string& s, size_t& pos) {
    internal_check(pos < s.size() && s[pos] == '"', "expected quoted name in DOT");
    const size_t end = s.find('"', pos + 1);
    internal_check(end != std::string::npos, "unterminated quote in DOT");
    std::string out = s.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    return out;
}

}  // namespace

ParsedDot parse_dot(const std::string& text) {
    ParsedDot out;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    std::map<Face, int> index;
    std::vector<std::pair<Face, Face>> raw_links;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!saw_header) {
            std::istringstream hs(line);
            std::string kw;
            hs >> kw >> out.graph_name;
            if (kw != "graph")
                throw DomainError(ErrorKind::TrigParse, "expected 'graph <name> {'");
            saw_header = true;
            continue;
        }
        if (line.find('}') != std::string::npos) break;
        size_t pos = line.find('"');
        if (pos == std::string::npos)
            throw DomainError(ErrorKind::TrigParse, "unrecognized DOT line: " + line);
        const Face first = face_from_name(unquote(line, pos));
        const size_t dashes = line.find("--", pos);
        if (dashes != std::string::npos) {
            size_t p2 = line.find('"', dashes);
            raw_links.emplace_back(first, face_from_name(unquote(line, p2)));
        } else {
            if (!index.emplace(first, static_cast<int>(out.graph.nodes.size())).second)
                throw DomainError(ErrorKind::TrigParse, "duplicate DOT node");
            out.graph.nodes.push_back(first);
            const size_t attr = line.find("mtype=\"", pos);
            if (attr != std::string::npos) {
                size_t q = attr + 6;
                out.annotations[first] = unquote(line, q);
            }
        }
    }
    for (const auto& [fa, fb] : raw_links) {
        auto ia = index.find(fa), ib = index.find(fb);
        if (ia == index.end() || ib == index.end())
            throw DomainError(ErrorKind::TrigParse, "DOT link references an undeclared node");
        out.graph.links.emplace_back(std::min(ia->second, ib->second),
                                     std::max(ia->second, ib->second));
    }
    return out;
}

}  // namespace zmono
