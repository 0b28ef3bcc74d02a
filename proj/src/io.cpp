#include "ktdom/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "ktdom/errors.hpp"

namespace ktdom {

std::string format_edge_list(const CirculantGraph& g) {
    const auto edges = g.edges();
    std::ostringstream out;
    out << "p tds " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

CirculantGraph parse_edge_list(std::istream& in) {
    int order = -1;
    long long claimed_edges = -1;
    std::vector<std::pair<int, int>> edges;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto at = [&] { return " (line " + std::to_string(line_no) + ")"; };
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag[0] == '#') continue;  // blank or comment
        if (tag == "c") continue;                          // classic comment rows
        if (tag == "p") {
            std::string family;
            if (!(fields >> family >> order >> claimed_edges) || family != "tds") {
                throw ParameterError("malformed problem line" + at());
            }
            if (order < 1) {
                throw ParameterError("order must be positive" + at());
            }
            continue;
        }
        if (tag == "e") {
            if (order < 0) {
                throw ParameterError("edge before problem line" + at());
            }
            int u = 0;
            int v = 0;
            if (!(fields >> u >> v)) {
                throw ParameterError("malformed edge line" + at());
            }
            if (u < 1 || u > order || v < 1 || v > order || u == v) {
                throw ParameterError("edge endpoints outside 1.." +
                                     std::to_string(order) + at());
            }
            edges.push_back({u - 1, v - 1});
            continue;
        }
        throw ParameterError("unrecognized line tag '" + tag + "'" + at());
    }
    if (order < 0) {
        throw ParameterError("missing problem line");
    }
    auto g = CirculantGraph::from_edges(order, edges);
    if (claimed_edges >= 0 &&
        static_cast<long long>(g.edge_count()) != claimed_edges) {
        throw ParameterError("problem line claims " + std::to_string(claimed_edges) +
                             " edges, found " + std::to_string(g.edge_count()));
    }
    return g;
}

CirculantGraph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_set_line(const std::vector<int>& labels,
                            const std::string& trailing_comment) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out << ' ';
        out << labels[i];
    }
    if (!trailing_comment.empty()) {
        if (!labels.empty()) out << ' ';
        out << "# " << trailing_comment;
    }
    return out.str();
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<SetFileEntry> parse_set_file(std::istream& in) {
    std::vector<SetFileEntry> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        SetFileEntry entry;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            entry.comment = trim(line.substr(hash + 1));
            line.resize(hash);
        }
        std::istringstream fields(line);
        int label = 0;
        while (fields >> label) entry.labels.push_back(label);
        if (!fields.eof()) {
            throw ParameterError("malformed label (line " + std::to_string(line_no) +
                                 ")");
        }
        if (!entry.labels.empty()) out.push_back(std::move(entry));
    }
    return out;
}

std::vector<SetFileEntry> parse_set_file_text(const std::string& text) {
    std::istringstream in(text);
    return parse_set_file(in);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParameterError("cannot open file: " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParameterError("cannot write file: " + path);
    }
    out << content;
}

}  // namespace ktdom
