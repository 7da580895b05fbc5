#include "sparsehom/formats.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace sparsehom {

void write_elim_tree(std::ostream &out, const EliminationTree &t) {
    out << "elimtree n=" << t.vertex_count() << " root=" << t.root << '\n';
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.parent[v] >= 0) out << v << ' ' << t.parent[v] << '\n';
}

void write_tree_decomposition(std::ostream &out, const TreeDecomposition &d) {
    out << "treedecomp n=" << d.bags.size() << '\n';
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        out << "bag " << i << ':';
        for (Vertex v : d.bags[i]) out << ' ' << v;
        out << '\n';
    }
    for (auto [x, y] : d.tree_edges) out << "link " << x << ' ' << y << '\n';
}

void write_matched_tree_decomposition(std::ostream &out, const MatchedTreeDecomposition &d) {
    write_tree_decomposition(out, d.td);
    for (std::size_t i = 0; i < d.matchings.size(); ++i) {
        out << "match " << i << ':';
        for (auto [u, v] : d.matchings[i]) out << ' ' << u << '-' << v;
        out << '\n';
    }
}

std::vector<std::string> read_lines(std::istream &in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

namespace {

long long parse_field(const std::string &token, const std::string &key) {
    if (token.rfind(key + "=", 0) != 0)
        throw FormatError("expected " + key + "=<value>, got: " + token);
    try {
        return std::stoll(token.substr(key.size() + 1));
    } catch (const std::exception &) {
        throw FormatError("bad numeric value in " + token);
    }
}

std::vector<std::string> tokens_of(const std::string &line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

}  // namespace

EliminationTree parse_elim_tree(const std::vector<std::string> &lines, std::size_t &pos) {
    if (pos >= lines.size()) throw FormatError("expected elimtree header");
    auto head = tokens_of(lines[pos]);
    if (head.size() != 3 || head[0] != "elimtree")
        throw FormatError("bad elimtree header: " + lines[pos]);
    int n = static_cast<int>(parse_field(head[1], "n"));
    int root = static_cast<int>(parse_field(head[2], "root"));
    if (n < 1 || root < 0 || root >= n) throw FormatError("bad elimtree dimensions");
    ++pos;
    EliminationTree t;
    t.root = root;
    t.parent.assign(n, -2);
    t.parent[root] = -1;
    for (int i = 0; i < n - 1; ++i, ++pos) {
        if (pos >= lines.size()) throw FormatError("elimtree truncated");
        auto tok = tokens_of(lines[pos]);
        if (tok.size() != 2) throw FormatError("bad elimtree edge line: " + lines[pos]);
        int c, p;
        try {
            c = std::stoi(tok[0]);
            p = std::stoi(tok[1]);
        } catch (const std::exception &) {
            throw FormatError("bad elimtree edge line: " + lines[pos]);
        }
        if (c < 0 || c >= n || p < 0 || p >= n || c == root || t.parent[c] != -2)
            throw FormatError("bad elimtree edge line: " + lines[pos]);
        t.parent[c] = p;
    }
    for (int v = 0; v < n; ++v)
        if (t.parent[v] == -2) throw FormatError("elimtree vertex without parent line");
    return t;
}

MatchedTreeDecomposition parse_tree_decomposition(const std::vector<std::string> &lines,
                                                  std::size_t &pos) {
    if (pos >= lines.size()) throw FormatError("expected treedecomp header");
    auto head = tokens_of(lines[pos]);
    if (head.size() != 2 || head[0] != "treedecomp")
        throw FormatError("bad treedecomp header: " + lines[pos]);
    int nbags = static_cast<int>(parse_field(head[1], "n"));
    if (nbags < 1) throw FormatError("bad treedecomp bag count");
    ++pos;

    MatchedTreeDecomposition d;
    d.td.bags.assign(nbags, {});
    std::vector<char> seen(nbags, 0);
    bool have_match = false;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings(nbags);

    while (pos < lines.size()) {
        auto tok = tokens_of(lines[pos]);
        if (tok.empty()) {
            ++pos;
            continue;
        }
        const std::string &kind = tok[0];
        if (kind != "bag" && kind != "link" && kind != "match") break;
        if (tok.size() < 2) throw FormatError("bad directive: " + lines[pos]);
        if (kind == "bag") {
            if (tok[1].empty() || tok[1].back() != ':')
                throw FormatError("bag id must end with ':' in: " + lines[pos]);
            int id = std::stoi(tok[1].substr(0, tok[1].size() - 1));
            if (id < 0 || id >= nbags || seen[id]) throw FormatError("bad bag id: " + lines[pos]);
            seen[id] = 1;
            for (std::size_t i = 2; i < tok.size(); ++i)
                d.td.bags[id].push_back(std::stoi(tok[i]));
        } else if (kind == "link") {
            if (tok.size() != 3) throw FormatError("bad link line: " + lines[pos]);
            d.td.tree_edges.emplace_back(std::stoi(tok[1]), std::stoi(tok[2]));
        } else {  // match
            have_match = true;
            if (tok[1].empty() || tok[1].back() != ':')
                throw FormatError("match id must end with ':' in: " + lines[pos]);
            int id = std::stoi(tok[1].substr(0, tok[1].size() - 1));
            if (id < 0 || id >= nbags) throw FormatError("bad match id: " + lines[pos]);
            for (std::size_t i = 2; i < tok.size(); ++i) {
                auto dash = tok[i].find('-');
                if (dash == std::string::npos)
                    throw FormatError("bad match pair: " + tok[i]);
                matchings[id].emplace_back(std::stoi(tok[i].substr(0, dash)),
                                           std::stoi(tok[i].substr(dash + 1)));
            }
        }
        ++pos;
    }
    for (int i = 0; i < nbags; ++i)
        if (!seen[i]) throw FormatError("missing bag " + std::to_string(i));
    if (have_match) d.matchings = std::move(matchings);
    return d;
}

}  // namespace sparsehom
