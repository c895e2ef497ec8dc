#pragma once

#include "btstrata/weyl.hpp"

namespace btstrata {

// State of the type / relative-position iteration. `anchor` is the group
// element whose parahoric-refinement sequence this is: the relative
// position at type J is the minimal representative of W_J anchor W_{d(J)}
// where d is the twist on nodes. The iteration is not a function of
// (j, w) alone, so the anchor travels with the state.
struct LBState {
    NodeSet j;
    WeylElt w;       // minimal representative of W_j anchor W_{d(j)}
    WeylElt anchor;  // W_a-part of the input element
    int step = 0;
    bool forced = true;  // false when condition (c) left a genuine choice
};

using NodeTwist = std::map<int, int>;

// Twist used for an element of the extended group: the global tau-sigma
// diagram action of the context.
NodeTwist global_twist(const GroupContext& g);

NodeSet apply_twist(const NodeTwist& d, const NodeSet& s);

LBState lb_start(const GroupContext& g, const NodeSet& j0, const WeylElt& w,
                 const NodeTwist& twist);

// One refinement step: J' = J cap {}^{w}(d(J)), then the minimal
// representative of W_{J'} anchor W_{d(J')}. Throws on a state whose w is
// not the minimal double-coset representative.
LBState lb_step(const GroupContext& g, const LBState& state, const NodeTwist& twist);

struct LBLimit {
    NodeSet j_inf;
    WeylElt w_inf;
    int steps;
    bool forced;
};

// Iterate to the fixed point. The W_a-part of `w` is the anchor; the twist
// is the context's global tau-sigma action.
LBLimit lb_limit(const GroupContext& g, const NodeSet& j0, const WeylElt& w);

// Same with an explicit twist (used for finite-group checks where the
// diagram automorphism is passed by hand).
LBLimit lb_limit_twisted(const GroupContext& g, const NodeSet& j0, const WeylElt& w,
                         const NodeTwist& twist);

}  // namespace btstrata
