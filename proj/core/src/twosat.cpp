#include "pafp/twosat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pafp {

namespace {

inline int node_of(Lit l) { return 2 * l.var + (l.negated ? 1 : 0); }

inline bool value_of(Lit l, const std::vector<bool>& model) {
    return model[static_cast<std::size_t>(l.var)] != l.negated;
}

}  // namespace

std::optional<std::vector<bool>> solve(const TwoSatFormula& f) {
    const int nodes = 2 * f.var_count;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (const auto& [a, b] : f.clauses) {
        // (a or b)  ==  not a -> b  and  not b -> a
        adj[static_cast<std::size_t>(node_of(~a))].push_back(node_of(b));
        adj[static_cast<std::size_t>(node_of(~b))].push_back(node_of(a));
    }

    // iterative Tarjan; comp ids grow in pop order = reverse topological
    std::vector<int> comp(static_cast<std::size_t>(nodes), -1);
    std::vector<int> index(static_cast<std::size_t>(nodes), -1);
    std::vector<int> lowlink(static_cast<std::size_t>(nodes), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack;
    int next_index = 0, comp_count = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (int start = 0; start < nodes; ++start) {
        if (index[static_cast<std::size_t>(start)] != -1) continue;
        call.push_back({start, 0});
        index[static_cast<std::size_t>(start)] = lowlink[static_cast<std::size_t>(start)] = next_index++;
        stack.push_back(start);
        on_stack[static_cast<std::size_t>(start)] = 1;
        while (!call.empty()) {
            auto& fr = call.back();
            auto& outs = adj[static_cast<std::size_t>(fr.v)];
            bool descended = false;
            while (fr.child < outs.size()) {
                int w = outs[fr.child++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = lowlink[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = 1;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    lowlink[static_cast<std::size_t>(fr.v)] =
                        std::min(lowlink[static_cast<std::size_t>(fr.v)], index[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            int v = fr.v;
            call.pop_back();
            if (!call.empty())
                lowlink[static_cast<std::size_t>(call.back().v)] =
                    std::min(lowlink[static_cast<std::size_t>(call.back().v)], lowlink[static_cast<std::size_t>(v)]);
            if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = comp_count;
                    if (w == v) break;
                }
                ++comp_count;
            }
        }
    }

    std::vector<bool> model(static_cast<std::size_t>(f.var_count));
    for (int x = 0; x < f.var_count; ++x) {
        int cpos = comp[static_cast<std::size_t>(2 * x)];
        int cneg = comp[static_cast<std::size_t>(2 * x + 1)];
        if (cpos == cneg) return std::nullopt;
        // smaller comp id = later in topological order = safe to satisfy
        model[static_cast<std::size_t>(x)] = cpos < cneg;
    }

    for (const auto& [a, b] : f.clauses)
        if (!value_of(a, model) && !value_of(b, model))
            throw std::logic_error("twosat: extracted model violates a clause");
    return model;
}

void FormulaBuilder::require_or(Term a, Term b) {
    ++added_;
    if (contradiction_) return;
    if (a.is_constant() && a.constant_value()) return;
    if (b.is_constant() && b.constant_value()) return;
    bool a_false = a.is_constant();
    bool b_false = b.is_constant();
    if (a_false && b_false) {
        contradiction_ = true;
        return;
    }
    if (a_false) {
        formula_.add_unit(b.lit());
        return;
    }
    if (b_false) {
        formula_.add_unit(a.lit());
        return;
    }
    formula_.add_clause(a.lit(), b.lit());
}

}  // namespace pafp
