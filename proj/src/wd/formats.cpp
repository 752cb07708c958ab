#include "wd/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace wd {

namespace {

using nlohmann::json;

struct LineReader {
    std::istream& in;
    int line_no = 0;
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            if (out.empty()) continue;
            if (out[0] == 'c') continue;  // comment
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw FormatError("line " + std::to_string(line_no) + ": " + msg);
    }
};

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

Graph parse_gr(std::istream& in) {
    LineReader rd{in};
    std::string line;
    if (!rd.next(line)) throw FormatError("missing 'p tw' header");
    std::istringstream hs(line);
    std::string p, tw;
    long long n = -1, m = -1;
    if (!(hs >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
        rd.fail("expected header 'p tw <n> <m>'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    while (rd.next(line)) {
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) rd.fail("expected edge line 'u v'");
        std::string rest;
        if (es >> rest) rd.fail("trailing tokens on edge line");
        if (u < 1 || u > n || v < 1 || v > n) rd.fail("vertex id out of range");
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError("header claims " + std::to_string(m) + " edges, got " +
                          std::to_string(edges.size()));
    try {
        return Graph::build(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw FormatError(e.what());
    }
}

void write_gr(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << "p tw " << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
}

RootedTreeDecomposition parse_td(std::istream& in, int n_vertices) {
    LineReader rd{in};
    std::string line;
    if (!rd.next(line)) throw FormatError("missing 's td' header");
    std::istringstream hs(line);
    std::string s, td;
    long long bags = -1, maxbag = -1, n = -1;
    if (!(hs >> s >> td >> bags >> maxbag >> n) || s != "s" || td != "td" ||
        bags < 0)
        rd.fail("expected header 's td <bags> <maxbagsize> <n>'");
    if (n != n_vertices)
        rd.fail("decomposition is over " + std::to_string(n) +
                " vertices, graph has " + std::to_string(n_vertices));
    if (bags == 0) throw FormatError("decomposition must have at least one bag");

    std::vector<VertexSet> bag_of(bags);
    std::vector<char> seen(bags, 0);
    std::vector<std::pair<int, int>> tree_edges;
    while (rd.next(line)) {
        std::istringstream ls(line);
        if (line[0] == 'b') {
            char b;
            long long id;
            if (!(ls >> b >> id) || id < 1 || id > bags)
                rd.fail("expected bag line 'b <id> v1 v2 ...'");
            if (seen[id - 1]) rd.fail("duplicate bag " + std::to_string(id));
            seen[id - 1] = 1;
            VertexSet bag;
            long long v;
            while (ls >> v) {
                if (v < 1 || v > n_vertices)
                    rd.fail("bag vertex id " + std::to_string(v) + " out of range");
                bag.push_back(static_cast<int>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            bag_of[id - 1] = std::move(bag);
        } else {
            long long a, b;
            if (!(ls >> a >> b) || a < 1 || a > bags || b < 1 || b > bags || a == b)
                rd.fail("expected tree edge '<i> <j>'");
            tree_edges.emplace_back(static_cast<int>(a - 1),
                                    static_cast<int>(b - 1));
        }
    }
    for (int i = 0; i < bags; ++i)
        if (!seen[i])
            throw FormatError("bag " + std::to_string(i + 1) + " missing");
    if (static_cast<long long>(tree_edges.size()) != bags - 1)
        throw FormatError("tree must have exactly bags-1 edges");

    // Root at the node containing the smallest vertex id; tie-break node id.
    int root = 0;
    {
        int best_vertex = n_vertices;
        for (int t = 0; t < bags; ++t)
            if (!bag_of[t].empty() && bag_of[t].front() < best_vertex) {
                best_vertex = bag_of[t].front();
                root = t;
            }
    }
    std::vector<std::vector<int>> adj(bags);
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    RootedTreeDecomposition rtd;
    rtd.parent.assign(bags, -2);
    rtd.root = root;
    rtd.bags = std::move(bag_of);
    std::vector<int> stack{root};
    rtd.parent[root] = -1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int u : adj[t])
            if (rtd.parent[u] == -2) {
                rtd.parent[u] = t;
                stack.push_back(u);
            }
    }
    for (int t = 0; t < bags; ++t)
        if (rtd.parent[t] == -2)
            throw FormatError("tree edges do not connect bag " +
                              std::to_string(t + 1));
    return rtd;
}

void write_td(std::ostream& out, const RootedTreeDecomposition& rtd,
              int n_vertices) {
    size_t maxbag = 0;
    for (const auto& b : rtd.bags) maxbag = std::max(maxbag, b.size());
    out << "s td " << rtd.node_count() << ' ' << maxbag << ' ' << n_vertices
        << '\n';
    for (int t = 0; t < rtd.node_count(); ++t) {
        out << "b " << t + 1;
        for (int v : rtd.bags[t]) out << ' ' << v + 1;
        out << '\n';
    }
    for (int t = 0; t < rtd.node_count(); ++t)
        if (rtd.parent[t] >= 0) out << rtd.parent[t] + 1 << ' ' << t + 1 << '\n';
}

Layering parse_layering_json(std::istream& in, int n_vertices) {
    json j = parse_json(in);
    if (!j.contains("layers") || !j["layers"].is_array())
        throw FormatError("layering JSON must contain a 'layers' array");
    Layering ly;
    ly.layer.reserve(j["layers"].size());
    for (const auto& x : j["layers"]) {
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw FormatError("layer indices must be nonnegative integers");
        ly.layer.push_back(x.get<int>());
    }
    if (static_cast<int>(ly.layer.size()) != n_vertices)
        throw FormatError("layering lists " + std::to_string(ly.layer.size()) +
                          " vertices, graph has " + std::to_string(n_vertices));
    return ly;
}

void write_layering_json(std::ostream& out, const Layering& ly) {
    json j;
    j["layers"] = ly.layer;
    out << j.dump() << '\n';
}

Coloring parse_coloring_json(std::istream& in, int n_vertices) {
    json j = parse_json(in);
    if (!j.contains("ell") || !j.contains("m") || !j.contains("colors"))
        throw FormatError("coloring JSON must contain ell, m, colors");
    Coloring c;
    c.ell = j["ell"].get<int>();
    c.m = j["m"].get<int>();
    if (c.ell < 1 || c.m < 1) throw FormatError("ell and m must be positive");
    for (const auto& x : j["colors"]) {
        long long v = x.get<long long>();
        if (v < 0 || v >= c.m)
            throw FormatError("color value out of palette (0-indexed)");
        c.color.push_back(static_cast<int>(v) + 1);
    }
    if (static_cast<int>(c.color.size()) != n_vertices)
        throw FormatError("coloring lists " + std::to_string(c.color.size()) +
                          " vertices, graph has " + std::to_string(n_vertices));
    return c;
}

void write_coloring_json(std::ostream& out, const Coloring& c) {
    json j;
    j["ell"] = c.ell;
    j["m"] = c.m;
    std::vector<int> zero_based(c.color.size());
    for (size_t i = 0; i < c.color.size(); ++i) zero_based[i] = c.color[i] - 1;
    j["colors"] = zero_based;
    out << j.dump() << '\n';
}

ConstructionMeta parse_construction_json(std::istream& in) {
    json j = parse_json(in);
    ConstructionMeta meta;
    if (!j.contains("eta") || !j.contains("theta"))
        throw FormatError("construction JSON must contain eta and theta");
    meta.eta = j["eta"].get<int>();
    meta.theta = j["theta"].get<int>();
    if (j.contains("root")) meta.root = j["root"].get<int>();
    if (j.contains("colorer_F")) meta.colorer_f = j["colorer_F"].get<std::string>();
    if (j.contains("colorer_Fprime"))
        meta.colorer_fprime = j["colorer_Fprime"].get<std::string>();
    return meta;
}

void write_construction_json(std::ostream& out, const ConstructionMeta& meta) {
    json j;
    j["eta"] = meta.eta;
    j["theta"] = meta.theta;
    j["root"] = meta.root;
    j["colorer_F"] = meta.colorer_f;
    j["colorer_Fprime"] = meta.colorer_fprime;
    out << j.dump() << '\n';
}

namespace {
std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open " + path);
    return f;
}
}  // namespace

Graph load_gr(const std::string& path) {
    auto f = open_in(path);
    return parse_gr(f);
}

RootedTreeDecomposition load_td(const std::string& path, int n_vertices) {
    auto f = open_in(path);
    return parse_td(f, n_vertices);
}

Layering load_layering(const std::string& path, int n_vertices) {
    auto f = open_in(path);
    return parse_layering_json(f, n_vertices);
}

Coloring load_coloring(const std::string& path, int n_vertices) {
    auto f = open_in(path);
    return parse_coloring_json(f, n_vertices);
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw FormatError("cannot open " + path + " for writing");
    f << content;
}

}  // namespace wd
