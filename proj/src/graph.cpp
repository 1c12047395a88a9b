#include "cdx/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cdx {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::invalid_argument("Graph: vertex out of range");
    if (has_edge(u, v)) throw std::invalid_argument("Graph: duplicate edge rejected");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::is_regular(int* degree_out) const {
    if (order() == 0) return false;
    int d = degree(0);
    for (int v = 1; v < order(); ++v)
        if (degree(v) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

std::vector<int> Graph::bfs_distances(int src) const {
    std::vector<int> dist(order(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj_[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (order() == 0) return false;
    auto dist = bfs_distances(0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

int Graph::girth() const {
    int best = kInfinity;
    for (int s = 0; s < order(); ++s) {
        std::vector<int> dist(order(), -1), par(order(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : adj_[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push_back(v);
                } else if (v != par[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

int Graph::diameter() const {
    int d = 0;
    for (int s = 0; s < order(); ++s) {
        auto dist = bfs_distances(s);
        for (int x : dist) {
            if (x < 0) return kInfinity;
            d = std::max(d, x);
        }
    }
    return d;
}

Graph graph_from_lcf(const std::vector<int>& jumps, int repeats) {
    if (jumps.empty()) throw std::invalid_argument("LCF: jump list must be nonempty");
    long n = static_cast<long>(jumps.size()) * repeats;
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("LCF: order must be even and >= 4");
    Graph g(static_cast<int>(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, static_cast<int>((i + 1) % n));
    for (int i = 0; i < n; ++i) {
        long j = ((i + jumps[i % jumps.size()]) % n + n) % n;
        if (j == i) throw std::invalid_argument("LCF: jump produces a self-loop");
        if (!g.has_edge(i, static_cast<int>(j))) g.add_edge(i, static_cast<int>(j));
    }
    int d = 0;
    if (!g.is_regular(&d) || d != 3)
        throw std::invalid_argument("LCF: result is not cubic (chord collision)");
    return g;
}

Graph graph_from_lcf_string(const std::string& spec) {
    auto lb = spec.find('['), rb = spec.find(']');
    auto xs = spec.find('x', rb == std::string::npos ? 0 : rb);
    if (lb == std::string::npos || rb == std::string::npos || xs == std::string::npos)
        throw std::invalid_argument("LCF: expected \"[j1,j2,...]xN\"");
    std::vector<int> jumps;
    std::stringstream body(spec.substr(lb + 1, rb - lb - 1));
    std::string tok;
    while (std::getline(body, tok, ',')) jumps.push_back(std::stoi(tok));
    int repeats = std::stoi(spec.substr(xs + 1));
    return graph_from_lcf(jumps, repeats);
}

Graph voltage_lift(const VoltageGraph& base, long group_order) {
    if (base.n < 1 || group_order < 1) throw std::invalid_argument("voltage_lift: bad parameters");
    long m = group_order;
    Graph g(static_cast<int>(base.n * m));
    auto vertex = [&](int u, long i) { return static_cast<int>(u * m + ((i % m + m) % m)); };
    for (const auto& arc : base.arcs) {
        for (long i = 0; i < m; ++i) {
            int a = vertex(arc.u, i), b = vertex(arc.v, i + arc.voltage);
            if (a == b) throw std::invalid_argument("voltage_lift: lift has a self-loop");
            if (g.has_edge(a, b)) throw std::invalid_argument("voltage_lift: lift is not simple");
            g.add_edge(a, b);
        }
    }
    return g;
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> directed;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (!(ls >> n) || n < 1) throw std::invalid_argument("graph file: bad order line");
            continue;
        }
        if (n < 0) throw std::invalid_argument("graph file: order line must come first");
        if (first.back() != ':') throw std::invalid_argument("graph file: expected \"i:\"");
        int u = std::stoi(first.substr(0, first.size() - 1));
        int v;
        while (ls >> v) directed.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("graph file: missing order line");
    std::sort(directed.begin(), directed.end());
    Graph g(n);
    for (auto [u, v] : directed) {
        if (!std::binary_search(directed.begin(), directed.end(), std::make_pair(v, u)))
            throw std::invalid_argument("graph file: adjacency asymmetric");
        if (u < v) g.add_edge(u, v);
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << "\n";
    for (int v = 0; v < g.order(); ++v) {
        os << v << ":";
        for (int u : g.neighbors(v)) os << " " << u;
        os << "\n";
    }
    return os.str();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    int n = a.order();
    if (n != b.order()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < n; ++v) db.push_back(b.degree(v));
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<int> perm(n, -1), used(n, 0);
    // map vertex i of a to perm[i] in b
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || db[cand] != da[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(cand, perm[j])) ok = false;
            if (!ok) continue;
            perm[i] = cand;
            used[cand] = 1;
            if (place(i + 1)) return true;
            used[cand] = 0;
            perm[i] = -1;
        }
        return false;
    };
    return place(0);
}

long cycles_through_vertex(const Graph& g, int length, int v) {
    if (length < 3) throw std::invalid_argument("cycles_through_vertex: length must be >= 3");
    // DFS over paths v, a, ..., z with a < z to count each cycle once.
    long count = 0;
    std::vector<char> on_path(g.order(), 0);
    on_path[v] = 1;
    std::vector<int> path{v};
    std::function<void(int)> dfs = [&](int cur) {
        if (static_cast<int>(path.size()) == length) {
            if (g.has_edge(cur, v) && path[1] < cur) ++count;
            return;
        }
        for (int nxt : g.neighbors(cur)) {
            if (on_path[nxt]) continue;
            on_path[nxt] = 1;
            path.push_back(nxt);
            dfs(nxt);
            path.pop_back();
            on_path[nxt] = 0;
        }
    };
    dfs(v);
    return count;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph petersen_graph() {
    // Outer C_5, inner pentagram, spokes.
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph moebius_ladder(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("moebius_ladder: n must be even and >= 4");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
    return g;
}

}  // namespace cdx
