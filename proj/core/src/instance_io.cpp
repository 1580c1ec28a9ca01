#include "pafp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pafp/errors.hpp"

namespace pafp {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void reject(int line_no, const std::string& why) {
    throw parse_error("line " + std::to_string(line_no) + ": " + why);
}

int parse_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        reject(line_no, "expected a decimal integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

PafpInstance parse_instance(const std::string& text) {
    bool have_header = false;
    int n = 0, m = 0, f = 0;
    bool have_source = false, have_target = false;
    Vertex source = 0, target = 0;
    std::vector<Arc> arcs;
    std::vector<VertexPair> pairs;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0][0] == '#' || toks[0][0] == 'c') continue;  // comment

        if (toks[0] == "p") {
            if (have_header) reject(line_no, "duplicate header");
            if (toks.size() != 5 || toks[1] != "pafp")
                reject(line_no, "header must be 'p pafp <n> <m> <f>'");
            n = parse_int(toks[2], line_no);
            m = parse_int(toks[3], line_no);
            f = parse_int(toks[4], line_no);
            if (n < 0 || m < 0 || f < 0) reject(line_no, "negative count in header");
            have_header = true;
            continue;
        }
        if (!have_header) reject(line_no, "content before 'p pafp' header");

        auto check_vertex = [&](int v) {
            if (v < 1 || v > n)
                reject(line_no, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        };

        if (toks[0] == "s" || toks[0] == "t") {
            if (toks.size() != 2) reject(line_no, "'" + std::string(toks[0]) + "' line needs one vertex");
            int v = parse_int(toks[1], line_no);
            check_vertex(v);
            if (toks[0] == "s") {
                if (have_source) reject(line_no, "duplicate 's' line");
                source = v;
                have_source = true;
            } else {
                if (have_target) reject(line_no, "duplicate 't' line");
                target = v;
                have_target = true;
            }
        } else if (toks[0] == "a" || toks[0] == "f") {
            if (toks.size() != 3) reject(line_no, "'" + std::string(toks[0]) + "' line needs two vertices");
            int u = parse_int(toks[1], line_no);
            int v = parse_int(toks[2], line_no);
            check_vertex(u);
            check_vertex(v);
            if (toks[0] == "a") {
                if (u == v) reject(line_no, "loop arc at vertex " + std::to_string(u));
                arcs.emplace_back(u, v);
            } else {
                if (u == v) reject(line_no, "pair with equal endpoints {" + std::to_string(u) + "}");
                pairs.emplace_back(u, v);
            }
        } else {
            reject(line_no, "unknown line type '" + std::string(toks[0]) + "'");
        }
    }

    if (!have_header) throw parse_error("missing 'p pafp' header");
    if (!have_source) throw parse_error("missing 's' line");
    if (!have_target) throw parse_error("missing 't' line");
    if (static_cast<int>(arcs.size()) != m)
        throw parse_error("header declares " + std::to_string(m) + " arcs but file has " +
                          std::to_string(arcs.size()));
    if (static_cast<int>(pairs.size()) != f)
        throw parse_error("header declares " + std::to_string(f) + " pairs but file has " +
                          std::to_string(pairs.size()));
    if (source == target) throw parse_error("source equals target");
    return make_instance(n, arcs, source, target, pairs);
}

std::string serialize_instance(const PafpInstance& inst) {
    std::ostringstream out;
    out << "c pafp instance\n";
    out << "p pafp " << inst.graph.vertex_count() << ' ' << inst.graph.arc_count() << ' '
        << inst.pairs.size() << '\n';
    out << "s " << inst.source << '\n';
    out << "t " << inst.target << '\n';
    for (auto [u, v] : inst.graph.arcs()) out << "a " << u << ' ' << v << '\n';
    for (auto [u, v] : inst.pairs) out << "f " << u << ' ' << v << '\n';
    return out.str();
}

PafpInstance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

}  // namespace pafp
