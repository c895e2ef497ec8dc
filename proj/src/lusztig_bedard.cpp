#include "btstrata/lusztig_bedard.hpp"

#include <algorithm>
#include <stdexcept>

namespace btstrata {

NodeTwist global_twist(const GroupContext& g) {
    NodeTwist d;
    for (int v : g.node_ids()) d[v] = g.tau_sigma_node(v);
    return d;
}

NodeSet apply_twist(const NodeTwist& d, const NodeSet& s) {
    NodeSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(d.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

NodeSet intersect(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

LBState lb_start(const GroupContext& g, const NodeSet& j0, const WeylElt& w,
                 const NodeTwist& twist) {
    LBState st;
    st.j = j0;
    std::sort(st.j.begin(), st.j.end());
    // anchor = W_a-part of w; a length-zero factor only renames nodes and is
    // accounted for by the twist
    auto word = g.reduced_word(w);
    WeylElt x = g.identity();
    for (int n : word.letters) x = g.mult(x, g.simple(n));
    st.anchor = x;
    st.w = g.min_double_coset_rep(st.j, st.anchor, apply_twist(twist, st.j));
    st.step = 0;
    st.forced = true;
    return st;
}

LBState lb_step(const GroupContext& g, const LBState& state, const NodeTwist& twist) {
    NodeSet dj = apply_twist(twist, state.j);
    if (!g.is_min_double_coset_rep(state.j, state.w, dj))
        throw std::invalid_argument("state w is not a minimal double-coset representative");
    LBState nxt;
    nxt.anchor = state.anchor;
    nxt.j = intersect(state.j, g.conjugate_node_set(state.w, dj));
    NodeSet dj2 = apply_twist(twist, nxt.j);
    nxt.w = g.min_double_coset_rep(nxt.j, state.anchor, dj2);
    nxt.step = state.step + 1;
    // Condition (c) constrains the successor within W_{J'} w W_{d(J)}; the
    // choice is forced exactly when the minimal representative of the
    // anchor's coset is the unique option we can reach, which holds whenever
    // it equals the minimal representative of W_{J'} w W_{d(J)} as well.
    WeylElt alt = g.min_double_coset_rep(nxt.j, state.w, dj);
    nxt.forced = state.forced && (alt == nxt.w || nxt.j == state.j);
    return nxt;
}

LBLimit lb_limit_twisted(const GroupContext& g, const NodeSet& j0, const WeylElt& w,
                         const NodeTwist& twist) {
    LBState st = lb_start(g, j0, w, twist);
    int guard = static_cast<int>(j0.size()) + 2;
    for (int i = 0; i < guard; ++i) {
        LBState nxt = lb_step(g, st, twist);
        if (nxt.j == st.j && nxt.w == st.w) {
            return LBLimit{st.j, st.w, st.step + 1, st.forced};
        }
        if (!std::includes(st.j.begin(), st.j.end(), nxt.j.begin(), nxt.j.end()))
            throw std::logic_error("type sets must weakly decrease");
        st = std::move(nxt);
    }
    throw std::logic_error("iteration failed to stabilize within |J0|+1 steps");
}

LBLimit lb_limit(const GroupContext& g, const NodeSet& j0, const WeylElt& w) {
    return lb_limit_twisted(g, j0, w, global_twist(g));
}

}  // namespace btstrata
