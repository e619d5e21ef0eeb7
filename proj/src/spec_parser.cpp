#include "lexidim/spec_parser.hpp"

#include <cctype>
#include <sstream>

#include "lexidim/error.hpp"

namespace lexidim {
namespace {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) {
        throw Error("parse", "empty edge-list document");
    }
    std::istringstream hs(header);
    long long n = 0;
    long long m = 0;
    if (!(hs >> n >> m)) {
        throw Error("parse", "malformed edge-list header, expected \"n m\"");
    }
    std::string extra;
    if (hs >> extra) {
        throw Error("parse", "malformed edge-list header, trailing token \"" + extra + "\"");
    }
    if (n < 1) {
        throw Error("parse", "edge-list order must be >= 1, got " + std::to_string(n));
    }
    if (m < 0) {
        throw Error("parse", "edge-list edge count must be >= 0");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) {
            throw Error("parse", "edge-list ended after " + std::to_string(i) + " of " +
                                     std::to_string(m) + " edges");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string tail;
    if (in >> tail) {
        throw Error("parse", "unexpected token after edge list: \"" + tail + "\"");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

// Recursive-descent parser for the generator grammar.
class GeneratorParser {
public:
    explicit GeneratorParser(const std::string& text) : text_(text) {}

    Graph parse() {
        Graph g = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw Error("parse", "unexpected trailing input at position " + std::to_string(pos_));
        }
        return g;
    }

private:
    Graph parse_expr() {
        skip_ws();
        std::string name = parse_ident();
        skip_ws();
        if (name == "complement") {
            expect('(');
            Graph inner = parse_expr();
            skip_ws();
            expect(')');
            return complement(inner);
        }
        if (name == "join") {
            expect('(');
            Graph left = parse_expr();
            skip_ws();
            expect(',');
            Graph right = parse_expr();
            skip_ws();
            expect(')');
            return join(left, right);
        }
        expect(':');
        std::vector<int> args = parse_args();
        return make_named(name, args);
    }

    static Graph make_named(const std::string& name, const std::vector<int>& args) {
        auto one_arg = [&](const char* what) {
            if (args.size() != 1) {
                throw Error("parse", std::string(what) + " takes exactly one argument");
            }
            return args[0];
        };
        if (name == "path" || name == "P") {
            return path_graph(one_arg("path"));
        }
        if (name == "cycle" || name == "C") {
            return cycle_graph(one_arg("cycle"));
        }
        if (name == "empty" || name == "N") {
            return empty_graph(one_arg("empty"));
        }
        if (name == "complete_bipartite") {
            if (args.size() != 2) {
                throw Error("parse", "complete_bipartite takes two arguments r,s");
            }
            return complete_bipartite_graph(args[0], args[1]);
        }
        if (name == "complete" || name == "K") {
            if (args.size() == 2) {
                return complete_bipartite_graph(args[0], args[1]);
            }
            return complete_graph(one_arg("complete"));
        }
        throw Error("parse", "unknown generator \"" + name + "\"");
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (pos_ == start) {
            throw Error("parse", "expected generator name at position " + std::to_string(pos_));
        }
        return text_.substr(start, pos_ - start);
    }

    std::vector<int> parse_args() {
        std::vector<int> args;
        args.push_back(parse_int());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == ',') {
            // A comma only continues the argument list when a digit follows;
            // otherwise it belongs to an enclosing join(...).
            std::size_t probe = pos_ + 1;
            while (probe < text_.size() &&
                   std::isspace(static_cast<unsigned char>(text_[probe]))) {
                ++probe;
            }
            if (probe >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[probe]))) {
                break;
            }
            ++pos_;
            args.push_back(parse_int());
            skip_ws();
        }
        return args;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            throw Error("parse", "expected integer at position " + std::to_string(pos_));
        }
        return std::stoi(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw Error("parse", std::string("expected '") + c + "' at position " +
                                     std::to_string(pos_));
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_spec(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw Error("parse", "empty graph specification");
    }
    if (std::isdigit(static_cast<unsigned char>(text[first]))) {
        return parse_edge_list(text.substr(first));
    }
    return GeneratorParser(text).parse();
}

std::vector<Graph> parse_member_list(const std::string& list) {
    std::vector<Graph> members;
    std::size_t begin = 0;
    while (begin <= list.size()) {
        std::size_t end = list.find(';', begin);
        std::string piece =
            list.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
        if (piece.find_first_not_of(" \t\r\n") != std::string::npos) {
            members.push_back(parse_graph_spec(piece));
        }
        if (end == std::string::npos) {
            break;
        }
        begin = end + 1;
    }
    if (members.empty()) {
        throw Error("parse", "empty member list");
    }
    return members;
}

}  // namespace lexidim
