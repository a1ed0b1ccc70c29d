#pragma once

// Reduction of a cyclotomic presentation into a residue field.

#include "jackson/prime_context.hpp"
#include "jackson/presentation.hpp"

namespace jackson {

inline QPresentation<GFElement> specialize(const QPresentation<Cyclotomic>& P, const FiniteField& F) {
    QPresentation<GFElement> out(F, P.gens(), P.name() + "/reduced");
    out.set_labels(P.labels());
    for (const Rule<Cyclotomic>* r : P.ordered_rules()) {
        GFElement q = reduce(r->q, F);
        if (q.is_zero()) throw NotReducible("q-coefficient reduces to zero");
        std::map<int, GFElement> lin;
        for (auto& [k, c] : r->lin) {
            GFElement v = reduce(c, F);
            if (!v.is_zero()) lin.emplace(k, v);
        }
        out.set_rule(r->j, r->i, q, lin, reduce(r->c, F));
    }
    return out;
}

inline QPresentation<GFElement> specialize(const QPresentation<Cyclotomic>& P, const PrimeContext& ctx) {
    return specialize(P, residue_field(ctx, P.field().order()));
}

}  // namespace jackson
