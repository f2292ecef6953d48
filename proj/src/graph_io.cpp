#include "wordrep/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wordrep {

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw std::runtime_error("edge list: " + msg);
}

int parse_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        bad(std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size() || value < 0)
        bad(std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    if (g.has_labels()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "c " << v << ' ' << g.label(v) << '\n';
    }
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    bool any_label = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (n < 0) {
            if (kind != "p") bad("first line must be 'p <n> <m>'");
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra)) bad("malformed p line");
            n = parse_int(a, "vertex count");
            m = parse_int(b, "edge count");
            labels.assign(n, "");
            continue;
        }
        if (kind == "c") {
            std::string vtok;
            if (!(ls >> vtok)) bad("malformed c line");
            int v = parse_int(vtok, "vertex");
            if (v >= n) bad("label vertex out of range");
            std::string label;
            std::getline(ls, label);
            size_t start = label.find_first_not_of(' ');
            labels[v] = start == std::string::npos ? "" : label.substr(start);
            any_label = true;
        } else if (kind == "e") {
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra)) bad("malformed e line");
            int u = parse_int(a, "endpoint");
            int v = parse_int(b, "endpoint");
            if (u >= n || v >= n) bad("endpoint out of range");
            if (u == v) bad("self-loop");
            edges.push_back({u, v});
        } else {
            bad("unknown line kind '" + kind + "'");
        }
    }
    if (n < 0) bad("empty input");
    if (static_cast<int>(edges.size()) != m) bad("edge count does not match p line");
    if (any_label) {
        for (int v = 0; v < n; ++v)
            if (labels[v].empty()) labels[v] = std::to_string(v);
    } else {
        labels.clear();
    }
    try {
        return Graph(n, std::move(edges), std::move(labels));
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
}

}  // namespace wordrep
