#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <unordered_set>

#include "btstrata/admissible.hpp"
#include "btstrata/lusztig_bedard.hpp"

using namespace btstrata;

namespace {

NodeSet big_s(const GroupContext& g) {
    NodeSet s;
    for (int v : g.node_ids())
        if (v != 0) s.push_back(v);
    return s;
}

// All elements of a finite context (Cayley closure).
std::vector<WeylElt> all_elements(const GroupContext& g) {
    std::vector<WeylElt> out{g.identity()};
    std::unordered_set<WeylElt, WeylEltHash> seen{g.identity()};
    for (size_t head = 0; head < out.size(); ++head) {
        for (int n : g.node_ids()) {
            WeylElt nxt = g.mult(out[head], g.simple(n));
            if (seen.insert(nxt).second) out.push_back(nxt);
        }
    }
    return out;
}

// Brute-force enumeration of the sequence family of the iteration in a
// finite Weyl group with twist d: all sequences (J_i, w_i) with
//   (a) J_0 = J, w_0 in {}^{J_0}W^{d(J_0)},
//   (b) J_{i+1} = J_i cap {}^{w_i}(d(J_i)),
//   (c) w_{i+1} in W_{J_{i+1}} w_i W_{d(J_i)} and minimal for the smaller
//       double coset.
// Returns the map w_infinity -> J_infinity; the theory says the map from
// sequences to limits is injective with image {}^{J}W.
std::map<std::vector<int>, NodeSet> sequence_oracle(const GroupContext& g, const NodeSet& j0,
                                                    const NodeTwist& twist,
                                                    const std::vector<WeylElt>& all) {
    auto key = [](const WeylElt& w) {
        std::vector<int> k(w.w.img);
        return k;
    };
    std::map<std::vector<int>, NodeSet> limits;

    struct Frame {
        NodeSet j;
        WeylElt w;
    };
    std::function<void(Frame, int)> rec = [&](Frame f, int depth) {
        REQUIRE(depth <= static_cast<int>(j0.size()) + 2);
        NodeSet dj = apply_twist(twist, f.j);
        NodeSet j2;
        {
            NodeSet conj = g.conjugate_node_set(f.w, dj);
            std::set_intersection(f.j.begin(), f.j.end(), conj.begin(), conj.end(),
                                  std::back_inserter(j2));
        }
        NodeSet dj2 = apply_twist(twist, j2);
        // candidates for w_{i+1}: minimal (J2, d(J2))-reps inside W_{J2} w W_{d(J)}
        std::vector<WeylElt> cands;
        std::unordered_set<WeylElt, WeylEltHash> seen;
        for (const auto& u : all) {
            // u in W_{J2}?
            NodeSet su = g.support(u);
            if (!std::includes(j2.begin(), j2.end(), su.begin(), su.end())) continue;
            for (const auto& v : all) {
                NodeSet sv = g.support(v);
                if (!std::includes(dj.begin(), dj.end(), sv.begin(), sv.end())) continue;
                WeylElt cand = g.mult(g.mult(u, f.w), v);
                cand = g.min_double_coset_rep(j2, cand, dj2);
                // must stay inside W_{J2} w W_{d(J)}
                seen.insert(cand);
            }
        }
        for (const auto& c : seen) cands.push_back(c);
        std::sort(cands.begin(), cands.end(),
                  [&](const WeylElt& a, const WeylElt& b) { return a.w.img < b.w.img; });
        for (const auto& w2 : cands) {
            if (j2 == f.j && w2 == f.w) {
                // fixed point: record limit
                auto k = key(f.w);
                if (limits.count(k)) {
                    CHECK(limits[k] == f.j);
                } else {
                    limits[k] = f.j;
                }
                continue;
            }
            if (j2 == f.j && !(w2 == f.w)) continue;  // w must stabilize with J
            rec(Frame{j2, w2}, depth + 1);
        }
    };

    // w_0 ranges over {}^{J}W^{d(J)}
    NodeSet dj0 = apply_twist(twist, j0);
    for (const auto& w : all)
        if (g.is_min_double_coset_rep(j0, w, dj0)) rec(Frame{j0, w}, 0);
    return limits;
}

}  // namespace

TEST_CASE("fixed point and trivial inputs") {
    GroupContext g(DiagramKind::OddCBC, 3);
    // J_0 empty stabilizes immediately
    auto lim = lb_limit(g, {}, g.mult(g.simple(0), g.simple(1)));
    CHECK(lim.j_inf.empty());
    CHECK(lim.steps <= 1);
    // identity anchor: largest tau-sigma stable subset (odd: everything)
    auto lim2 = lb_limit(g, {1, 2, 3}, g.identity());
    CHECK(lim2.j_inf == NodeSet{1, 2, 3});
    CHECK(lim2.w_inf == g.identity());
}

TEST_CASE("identity anchor in the even case: largest tau-stable subset") {
    GroupContext g(DiagramKind::EvenBC, 3);
    // tau swaps 0 and 1: J = {1,2,3} loses node 1
    auto lim = lb_limit(g, {1, 2, 3}, g.identity());
    CHECK(lim.j_inf == NodeSet{2, 3});
    CHECK(lim.w_inf == g.identity());
    // tau as input has the same W_a part
    auto lim2 = lb_limit(g, {1, 2, 3}, g.tau());
    CHECK(lim2.j_inf == NodeSet{2, 3});
}

TEST_CASE("worked example: odd n = 7, Sigma = {s2}") {
    GroupContext g(DiagramKind::OddCBC, 3);
    auto js = jset(g);
    auto it = std::find_if(js.begin(), js.end(),
                           [](const SigmaOrbitDatum& d) { return d.sigma == NodeSet{2}; });
    REQUIRE(it != js.end());
    auto lim = lb_limit(g, big_s(g), it->w_sigma);
    CHECK(lim.j_inf == NodeSet{3});
    CHECK(lim.j_inf == it->sharp);
}

TEST_CASE("J_infinity = Sigma-sharp for all n in 3..17") {
    for (int n = 3; n <= 17; ++n) {
        GroupContext g(kind_for_dimension(n), rank_for_dimension(n));
        NodeSet s = big_s(g);
        for (const auto& datum : jset(g)) {
            auto lim = lb_limit(g, s, datum.w_sigma);
            CHECK(lim.j_inf == datum.sharp);
            CHECK(lim.steps <= g.rank() + 1);
        }
    }
}

TEST_CASE("idempotence: re-running on the limit is the identity") {
    for (int n : {6, 7, 9, 10}) {
        GroupContext g(kind_for_dimension(n), rank_for_dimension(n));
        for (const auto& datum : jset(g)) {
            auto lim = lb_limit(g, big_s(g), datum.w_sigma);
            auto again = lb_limit(g, lim.j_inf, lim.w_inf);
            CHECK(again.j_inf == lim.j_inf);
            CHECK(again.w_inf == lim.w_inf);
            CHECK(again.steps <= 1);
        }
    }
}

TEST_CASE("monotone termination and step validation") {
    GroupContext g(DiagramKind::EvenBC, 4);
    NodeSet s = big_s(g);
    NodeTwist twist = global_twist(g);
    for (const auto& datum : jset(g)) {
        LBState st = lb_start(g, s, datum.w_sigma, twist);
        for (int i = 0; i < g.rank() + 1; ++i) {
            LBState nxt = lb_step(g, st, twist);
            CHECK(std::includes(st.j.begin(), st.j.end(), nxt.j.begin(), nxt.j.end()));
            if (nxt.j == st.j && nxt.w == st.w) break;
            st = nxt;
        }
    }
    // invalid state: non-minimal w
    LBState bad;
    bad.j = s;
    bad.anchor = g.mult(g.simple(2), g.simple(0));
    bad.w = bad.anchor;  // s2 s0 has a left descent in S
    CHECK_THROWS_AS(lb_step(g, bad, twist), std::invalid_argument);
}

TEST_CASE("finite-group oracle: limits agree with brute-force sequences") {
    // B_2 and B_3 with trivial twist, D_3 with the order-2 diagram twist
    struct Case {
        DiagramKind kind;
        int m;
        bool twist_last_two;
    };
    for (auto c : {Case{DiagramKind::FiniteB, 2, false}, Case{DiagramKind::FiniteB, 3, false},
                   Case{DiagramKind::FiniteD, 3, true}}) {
        GroupContext g(c.kind, c.m);
        NodeTwist twist;
        for (int v : g.node_ids()) twist[v] = v;
        if (c.twist_last_two) {
            twist[c.m - 1] = c.m;
            twist[c.m] = c.m - 1;
        }
        auto all = all_elements(g);
        // a couple of J choices
        std::vector<NodeSet> js = {{1}, {1, 2}};
        if (c.m == 3) js.push_back({1, 3});
        for (const auto& j0 : js) {
            auto limits = sequence_oracle(g, j0, twist, all);
            NodeSet dj0 = apply_twist(twist, j0);
            for (const auto& w : all) {
                if (!g.is_min_double_coset_rep(j0, w, dj0)) continue;
                auto lim = lb_limit_twisted(g, j0, w, twist);
                std::vector<int> k(lim.w_inf.w.img);
                REQUIRE(limits.count(k));
                CHECK(limits.at(k) == lim.j_inf);
            }
        }
    }
}
