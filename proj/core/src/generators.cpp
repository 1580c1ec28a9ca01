#include "pafp/generators.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

#include "pafp/errors.hpp"
#include "pafp/layering.hpp"
#include "pafp/rng.hpp"

namespace pafp {

namespace {

int parse_cnf_int(const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error("cnf: expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

Cnf3 parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int declared_clauses = 0;
    Cnf3 cnf;
    std::vector<int> current;

    auto close_clause = [&]() {
        if (current.empty()) throw parse_error("cnf: empty clause");
        if (current.size() > 3) throw parse_error("cnf: clause with more than 3 literals");
        while (current.size() < 3) current.push_back(current.front());  // pad by repetition
        cnf.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
    };

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            if (have_header) throw parse_error("cnf: duplicate header");
            std::string kind;
            if (!(ls >> kind) || kind != "cnf") throw parse_error("cnf: header must be 'p cnf <vars> <clauses>'");
            std::string vs, cs, extra;
            if (!(ls >> vs >> cs) || (ls >> extra))
                throw parse_error("cnf: header must be 'p cnf <vars> <clauses>'");
            cnf.var_count = parse_cnf_int(vs);
            declared_clauses = parse_cnf_int(cs);
            if (cnf.var_count < 0 || declared_clauses < 0) throw parse_error("cnf: negative header count");
            have_header = true;
            continue;
        }
        if (!have_header) throw parse_error("cnf: literals before the header");
        // literal stream; clauses may span lines
        do {
            int lit = parse_cnf_int(tok);
            if (lit == 0) {
                close_clause();
            } else {
                if (std::abs(lit) > cnf.var_count)
                    throw parse_error("cnf: literal " + tok + " out of range");
                current.push_back(lit);
            }
        } while (ls >> tok);
    }
    if (!have_header) throw parse_error("cnf: missing header");
    if (!current.empty()) throw parse_error("cnf: unterminated clause");
    if (static_cast<int>(cnf.clauses.size()) != declared_clauses)
        throw parse_error("cnf: header declares " + std::to_string(declared_clauses) +
                          " clauses but file has " + std::to_string(cnf.clauses.size()));
    return cnf;
}

bool sat_brute(const Cnf3& cnf) {
    if (cnf.var_count > 20)
        throw precondition_error("sat_brute: refusing more than 20 variables");
    const std::uint32_t total = 1u << cnf.var_count;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (const auto& cl : cnf.clauses) {
            bool sat = false;
            for (int lit : cl) {
                int v = std::abs(lit) - 1;
                bool val = (mask >> v) & 1u;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

PafpInstance gen_gmo(const Cnf3& cnf) {
    const int m = static_cast<int>(cnf.clauses.size());
    if (m == 0) throw parse_error("gen_gmo: formula has no clauses");
    for (const auto& cl : cnf.clauses)
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > cnf.var_count)
                throw parse_error("gen_gmo: literal out of range");

    const int n = 3 * m + 2;
    const Vertex s = 1;
    const Vertex t = n;
    auto vertex = [](int clause, int slot) { return 2 + 3 * clause + slot; };  // 0-based inputs

    std::vector<Arc> arcs;
    for (int slot = 0; slot < 3; ++slot) arcs.emplace_back(s, vertex(0, slot));
    for (int c = 0; c + 1 < m; ++c)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) arcs.emplace_back(vertex(c, i), vertex(c + 1, j));
    for (int slot = 0; slot < 3; ++slot) arcs.emplace_back(vertex(m - 1, slot), t);

    // a forbidden pair for every two complementary literal occurrences
    std::vector<VertexPair> pairs;
    for (int c1 = 0; c1 < m; ++c1)
        for (int i1 = 0; i1 < 3; ++i1)
            for (int c2 = c1; c2 < m; ++c2)
                for (int i2 = (c2 == c1 ? i1 + 1 : 0); i2 < 3; ++i2)
                    if (cnf.clauses[static_cast<std::size_t>(c1)][static_cast<std::size_t>(i1)] ==
                        -cnf.clauses[static_cast<std::size_t>(c2)][static_cast<std::size_t>(i2)])
                        pairs.emplace_back(vertex(c1, i1), vertex(c2, i2));

    return make_instance(n, arcs, s, t, pairs);
}

namespace {

// Shared ladder construction so the backward generator can keep drawing from
// the same stream. Layout: source 1, layer d = {2d, 2d+1}, target 2*len.
PafpInstance ladder_impl(int len, std::optional<double> density, Rng& rng) {
    if (len < 1) throw parse_error("ladder length must be at least 1");
    if (density && (*density <= 0.0 || *density > 1.0))
        throw parse_error("ladder density must lie in (0, 1]");

    const int n = 2 * len;
    const Vertex s = 1;
    const Vertex t = n;
    auto layer = [&](int d) -> std::vector<Vertex> {
        if (d == 0) return {s};
        if (d == len) return {t};
        return {2 * d, 2 * d + 1};
    };

    std::vector<Arc> chain;
    if (density) {
        // one retained chain keeps the target reachable at every density
        Vertex prev = s;
        for (int d = 1; d < len; ++d) {
            Vertex pick = 2 * d + static_cast<int>(rng.below(2));
            chain.emplace_back(prev, pick);
            prev = pick;
        }
        chain.emplace_back(prev, t);
    }
    auto on_chain = [&](Vertex u, Vertex v) {
        return std::find(chain.begin(), chain.end(), Arc{u, v}) != chain.end();
    };

    std::vector<Arc> arcs;
    for (int d = 0; d < len; ++d)
        for (Vertex u : layer(d))
            for (Vertex v : layer(d + 1)) {
                if (!density || on_chain(u, v) || rng.chance(*density)) arcs.emplace_back(u, v);
            }
    return make_instance(n, arcs, s, t, {});
}

}  // namespace

PafpInstance gen_ladder(int len, std::optional<double> density, std::uint64_t seed) {
    Rng rng(seed);
    return ladder_impl(len, density, rng);
}

PafpInstance gen_backward_augmented(int len, int k, std::uint64_t seed) {
    if (k < 0) throw parse_error("backward arc count must be nonnegative");
    Rng rng(seed);
    PafpInstance inst = ladder_impl(len, 0.5, rng);
    const int n = inst.graph.vertex_count();

    // distances never change below: every injected arc points to a vertex
    // already at least as close to the source
    LayerProfile prof = layer_profile(inst.graph, inst.source);

    auto reach_from = [&](Vertex src) {
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        std::vector<Vertex> stack{src};
        seen[static_cast<std::size_t>(src)] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : inst.graph.out(u))
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
        }
        return seen;
    };

    for (int placed = 0; placed < k; ++placed) {
        std::vector<std::vector<char>> reach(static_cast<std::size_t>(n) + 1);
        for (Vertex v = 1; v <= n; ++v)
            if (prof.reachable(v)) reach[static_cast<std::size_t>(v)] = reach_from(v);

        std::vector<Arc> candidates;
        for (Vertex u = 1; u <= n; ++u) {
            if (!prof.reachable(u)) continue;
            for (Vertex v = 1; v <= n; ++v) {
                if (v == u || !prof.reachable(v)) continue;
                if (*prof.dist[static_cast<std::size_t>(v)] >= *prof.dist[static_cast<std::size_t>(u)]) continue;
                if (inst.graph.has_arc(u, v)) continue;
                if (reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) continue;  // would close a cycle
                candidates.emplace_back(u, v);
            }
        }
        if (candidates.empty())
            throw precondition_error("gen_backward_augmented: no candidate left for arc " +
                                     std::to_string(placed + 1) + " of " + std::to_string(k));
        auto [u, v] = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
        inst.graph.add_arc(u, v);
    }
    return inst;
}

}  // namespace pafp
