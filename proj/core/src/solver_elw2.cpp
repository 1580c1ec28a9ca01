#include "pafp/solver_elw2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pafp/errors.hpp"
#include "pafp/twosat.hpp"

namespace pafp {

std::vector<Vertex> PositionDecoder::decode(const std::vector<bool>& model) const {
    std::vector<Vertex> seq;
    seq.reserve(slots.size());
    for (const auto& slot : slots) {
        if (slot.var < 0)
            seq.push_back(slot.v0);
        else
            seq.push_back(model[static_cast<std::size_t>(slot.var)] ? slot.v1 : slot.v0);
    }
    return seq;
}

LengthFormula build_length_formula(const PafpInstance& inst, const ExactLengthProfile& prof,
                                   int length) {
    if (prof.width > 2)
        throw precondition_error("exact-length width " + std::to_string(prof.width) + " exceeds 2");
    if (length < 0 || length >= static_cast<int>(prof.layers.size()))
        throw precondition_error("length " + std::to_string(length) + " out of range");
    const auto& last = prof.layers[static_cast<std::size_t>(length)];
    if (!std::binary_search(last.begin(), last.end(), inst.target))
        throw precondition_error("target not reachable at exactly length " + std::to_string(length));

    LengthFormula out;
    FormulaBuilder fb;

    // one slot per position; two-vertex layers get a selector variable
    out.decoder.slots.resize(static_cast<std::size_t>(length) + 1);
    for (int d = 0; d <= length; ++d) {
        const auto& layer = prof.layers[static_cast<std::size_t>(d)];
        auto& slot = out.decoder.slots[static_cast<std::size_t>(d)];
        if (layer.empty()) throw std::logic_error("empty layer below a populated one");
        slot.v0 = layer[0];
        if (layer.size() == 2) {
            slot.v1 = layer[1];
            slot.var = fb.add_var();
        }
    }
    auto selected = [&](int d, Vertex v) {
        const auto& slot = out.decoder.slots[static_cast<std::size_t>(d)];
        if (slot.var < 0) return Term::constant(v == slot.v0);
        return v == slot.v0 ? Term::literal(neg(slot.var)) : Term::literal(pos(slot.var));
    };

    fb.require(selected(length, inst.target));

    // consecutive positions must follow an arc
    for (int d = 0; d < length; ++d)
        for (Vertex u : prof.layers[static_cast<std::size_t>(d)])
            for (Vertex v : prof.layers[static_cast<std::size_t>(d) + 1])
                if (!inst.graph.has_arc(u, v))
                    fb.require_or(~selected(d, u), ~selected(d + 1, v));

    // forbidden pairs may not occupy two distinct positions
    std::vector<std::vector<int>> positions(static_cast<std::size_t>(inst.graph.vertex_count()) + 1);
    for (int d = 0; d <= length; ++d)
        for (Vertex v : prof.layers[static_cast<std::size_t>(d)])
            positions[static_cast<std::size_t>(v)].push_back(d);
    for (const auto& [a, b] : inst.pairs)
        for (int i : positions[static_cast<std::size_t>(a)])
            for (int j : positions[static_cast<std::size_t>(b)])
                if (i != j) fb.require_or(~selected(i, a), ~selected(j, b));

    out.contradiction = fb.contradiction();
    out.clauses_added = fb.clauses_added();
    out.formula = fb.formula();
    return out;
}

Elw2Result solve_elw2(const PafpInstance& inst) {
    if (!is_dag(inst.graph)) throw precondition_error("solve_elw2: graph is not a DAG");
    ExactLengthProfile prof = exact_length_profile(inst.graph, inst.source);
    if (prof.width > 2)
        throw precondition_error("exact-length width " + std::to_string(prof.width) + " exceeds 2");

    Elw2Result res;
    for (int length = 0; length < static_cast<int>(prof.layers.size()); ++length) {
        const auto& layer = prof.layers[static_cast<std::size_t>(length)];
        if (!std::binary_search(layer.begin(), layer.end(), inst.target)) continue;
        LengthFormula lf = build_length_formula(inst, prof, length);
        ++res.formulas_built;
        res.clauses_total += lf.clauses_added;
        if (lf.contradiction) continue;
        if (auto model = solve(lf.formula)) {
            std::vector<Vertex> seq = lf.decoder.decode(*model);
            if (check_path(inst, seq).verdict != Verdict::SafePath)
                throw std::logic_error("solve_elw2: decoded path failed the safety check");
            res.yes = true;
            res.certificate = PathCertificate{std::move(seq)};
            return res;  // lengths ascend, so this witness is shortest
        }
    }
    return res;
}

}  // namespace pafp
