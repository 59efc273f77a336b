#include "randic/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace randic {

namespace {

// splits on whitespace after turning commas into spaces
std::vector<std::string> tokens_of(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    for (char& c : all)
        if (c == ',') c = ' ';
    std::istringstream split(all);
    std::vector<std::string> out;
    std::string tok;
    while (split >> tok) out.push_back(tok);
    return out;
}

long long to_int(const std::string& tok) {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::runtime_error("bad integer token '" + tok + "'");
    return v;
}

double to_real(const std::string& tok) {
    size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::runtime_error("bad number token '" + tok + "'");
    return v;
}

SimpleGraph edge_list_from_tokens(const std::vector<std::string>& toks) {
    if (toks.size() < 2) throw std::runtime_error("edge list needs a 'n m' header");
    int n = static_cast<int>(to_int(toks[0]));
    long long m = to_int(toks[1]);
    if (m < 0 || toks.size() != 2 + 2 * static_cast<size_t>(m))
        throw std::runtime_error("edge list token count does not match header");
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        int u = static_cast<int>(to_int(toks[2 + 2 * static_cast<size_t>(k)]));
        int v = static_cast<int>(to_int(toks[3 + 2 * static_cast<size_t>(k)]));
        edges.emplace_back(u, v);
    }
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph matrix_from_tokens(const std::vector<std::string>& toks, size_t first_line_tokens) {
    size_t n = first_line_tokens;
    if (n == 0 || toks.size() != n * n)
        throw std::runtime_error("adjacency matrix must be square");
    std::vector<Edge> edges;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            long long v = to_int(toks[i * n + j]);
            if (v != 0 && v != 1) throw std::runtime_error("adjacency entries must be 0/1");
            if (v != to_int(toks[j * n + i]))
                throw std::runtime_error("adjacency matrix not symmetric");
            if (i == j && v != 0) throw std::runtime_error("adjacency diagonal must be zero");
            if (v == 1 && i < j) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return SimpleGraph(static_cast<int>(n), std::move(edges));
}

size_t count_first_line_tokens(const std::string& text) {
    std::istringstream first(text.substr(0, text.find('\n')));
    std::string tok;
    size_t count = 0;
    while (first >> tok) ++count;
    return count;
}

}  // namespace

DegreeSequence read_degree_sequence(std::istream& in) {
    DegreeSequence d;
    for (const auto& tok : tokens_of(in)) d.push_back(static_cast<int>(to_int(tok)));
    return d;
}

DirectedDegreeSequence read_pair_sequence(std::istream& in) {
    auto toks = tokens_of(in);
    if (toks.size() % 2 != 0) throw std::runtime_error("pair sequence needs out/in pairs");
    DirectedDegreeSequence d;
    for (size_t i = 0; i < toks.size(); i += 2)
        d.push_back({static_cast<int>(to_int(toks[i])), static_cast<int>(to_int(toks[i + 1]))});
    return d;
}

SimpleGraph read_edge_list(std::istream& in) { return edge_list_from_tokens(tokens_of(in)); }

SimpleGraph read_adjacency_matrix(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream stream(all);
    return matrix_from_tokens(tokens_of(stream), count_first_line_tokens(all));
}

SimpleGraph read_graph_auto(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream as_edges(all);
    try {
        return edge_list_from_tokens(tokens_of(as_edges));
    } catch (const std::exception&) {
        std::istringstream as_matrix(all);
        return matrix_from_tokens(tokens_of(as_matrix), count_first_line_tokens(all));
    }
}

DiGraph read_digraph_edge_list(std::istream& in) {
    auto toks = tokens_of(in);
    if (toks.size() < 2) throw std::runtime_error("edge list needs a 'n m' header");
    int n = static_cast<int>(to_int(toks[0]));
    long long m = to_int(toks[1]);
    if (m < 0 || toks.size() != 2 + 2 * static_cast<size_t>(m))
        throw std::runtime_error("edge list token count does not match header");
    std::vector<Arc> arcs;
    for (long long k = 0; k < m; ++k)
        arcs.emplace_back(static_cast<int>(to_int(toks[2 + 2 * static_cast<size_t>(k)])),
                          static_cast<int>(to_int(toks[3 + 2 * static_cast<size_t>(k)])));
    return DiGraph(n, std::move(arcs));
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_adjacency_matrix(std::ostream& out, const SimpleGraph& g) {
    const int n = g.node_count();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << (g.has_edge(i, j) ? 1 : 0);
        }
        out << '\n';
    }
}

void write_digraph_edge_list(std::ostream& out, const DiGraph& g) {
    out << g.node_count() << ' ' << g.arc_count() << '\n';
    for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
}

MatchingInstance read_matching_instance(std::istream& in) {
    auto toks = tokens_of(in);
    if (toks.size() < 2) throw std::runtime_error("instance needs a 'n m' header");
    int n = static_cast<int>(to_int(toks[0]));
    long long m = to_int(toks[1]);
    if (n < 0 || m < 0 || toks.size() != 2 + static_cast<size_t>(n) + 3 * static_cast<size_t>(m))
        throw std::runtime_error("instance token count does not match header");
    MatchingInstance inst;
    for (int i = 0; i < n; ++i)
        inst.b.push_back(static_cast<int>(to_int(toks[2 + static_cast<size_t>(i)])));
    std::vector<Edge> edges;
    std::vector<double> weights;
    size_t at = 2 + static_cast<size_t>(n);
    for (long long k = 0; k < m; ++k) {
        int u = static_cast<int>(to_int(toks[at]));
        int v = static_cast<int>(to_int(toks[at + 1]));
        weights.push_back(to_real(toks[at + 2]));
        edges.emplace_back(u, v);
        at += 3;
    }
    // SimpleGraph sorts its edge list; keep the weights aligned
    std::vector<size_t> order(edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        Edge ea = edges[a], eb = edges[b];
        if (ea.first > ea.second) std::swap(ea.first, ea.second);
        if (eb.first > eb.second) std::swap(eb.first, eb.second);
        return ea < eb;
    });
    std::vector<Edge> sorted_edges;
    for (size_t i : order) {
        sorted_edges.push_back(edges[i]);
        inst.weights.push_back(weights[i]);
    }
    inst.host = SimpleGraph(n, std::move(sorted_edges));
    return inst;
}

void write_matching_instance(std::ostream& out, const MatchingInstance& inst) {
    out << inst.host.node_count() << ' ' << inst.host.edge_count() << '\n';
    for (size_t i = 0; i < inst.b.size(); ++i) {
        if (i) out << ' ';
        out << inst.b[i];
    }
    out << '\n';
    const auto& edges = inst.host.edges();
    for (size_t k = 0; k < edges.size(); ++k) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", inst.weights[k]);
        out << edges[k].first << ' ' << edges[k].second << ' ' << buf << '\n';
    }
}

namespace {

template <typename T>
T read_file_with(const std::string& path, T (*reader)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return reader(in);
}

}  // namespace

DegreeSequence read_degree_sequence_file(const std::string& path) {
    return read_file_with(path, read_degree_sequence);
}

DirectedDegreeSequence read_pair_sequence_file(const std::string& path) {
    return read_file_with(path, read_pair_sequence);
}

SimpleGraph read_graph_file(const std::string& path) {
    return read_file_with(path, read_graph_auto);
}

MatchingInstance read_matching_instance_file(const std::string& path) {
    return read_file_with(path, read_matching_instance);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << content;
}

std::string format_percent(double ratio) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", ratio * 100.0);
    std::string s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s + "%";
}

}  // namespace randic
