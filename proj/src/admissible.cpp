#include "btstrata/admissible.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace btstrata {

DiagramKind kind_for_dimension(int n) {
    if (n < 3) throw std::invalid_argument("dimension must be at least 3");
    return n % 2 == 1 ? DiagramKind::OddCBC : DiagramKind::EvenBC;
}

int rank_for_dimension(int n) {
    if (n < 3) throw std::invalid_argument("dimension must be at least 3");
    return n % 2 == 1 ? (n - 1) / 2 : n / 2;
}

std::vector<long long> dominant_rep(const GroupContext& g, const WeylElt& x) {
    std::vector<long long> v(x.t);
    for (auto& c : v) c = std::llabs(c);
    std::sort(v.begin(), v.end(), std::greater<>());
    v.push_back(x.sim);
    return v;
}

WeylElt lambda_one(const GroupContext& g) {
    std::vector<long long> v(g.rank(), 0);
    v[0] = 1;
    return g.translation(v, 1);
}

WeylElt lambda_zero(const GroupContext& g) {
    return g.translation(std::vector<long long>(g.rank(), 0), 1);
}

std::vector<WeylElt> adm_maxima(const GroupContext& g, const WeylElt& t_lambda) {
    // W_0-orbit of the translation part.
    std::vector<WeylElt> out;
    std::unordered_set<WeylElt, WeylEltHash> seen;
    std::vector<std::vector<long long>> orbit{t_lambda.t};
    std::set<std::vector<long long>> vseen{t_lambda.t};
    // generate the signed-permutation orbit by applying the finite simple
    // reflections' linear parts
    std::vector<SignedPerm> gens;
    for (int node : g.node_ids()) {
        const WeylElt& s = g.simple(node);
        bool affine = false;
        for (auto c : s.t)
            if (c != 0) affine = true;
        if (!affine) gens.push_back(s.w);
    }
    // also include linear parts of affine reflections (sign flips)
    for (int node : g.node_ids()) gens.push_back(g.simple(node).w);
    for (size_t head = 0; head < orbit.size(); ++head) {
        auto cur = orbit[head];
        for (const auto& w : gens) {
            std::vector<long long> nxt(cur.size(), 0);
            for (int i = 0; i < g.rank(); ++i) {
                int im = w.img[i];
                int j = std::abs(im) - 1;
                nxt[j] = im > 0 ? cur[i] : -cur[i];
            }
            if (!vseen.count(nxt)) {
                vseen.insert(nxt);
                orbit.push_back(nxt);
            }
        }
    }
    for (const auto& v : orbit) out.push_back(g.translation(v, t_lambda.sim));
    // order deterministically, longest first is irrelevant; sort by vector
    std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) { return a.t < b.t; });
    return out;
}

std::vector<WeylElt> admissible_set(const GroupContext& g, const WeylElt& t_lambda) {
    // Union of Bruhat intervals below the maxima: the interval [e, y] is the
    // set of products of subwords of one reduced word of y.
    std::vector<WeylElt> maxima = adm_maxima(g, t_lambda);
    std::unordered_set<WeylElt, WeylEltHash> seen;
    for (const auto& y : maxima) {
        auto word = g.reduced_word(y);
        size_t k = word.letters.size();
        if (k > 26) throw std::runtime_error("admissible set word too long");
        std::vector<WeylElt> partial{g.identity()};
        // iterative subword products with per-level dedupe keeps this small
        std::unordered_set<WeylElt, WeylEltHash> level{g.identity()};
        for (size_t i = 0; i < k; ++i) {
            std::vector<WeylElt> next;
            std::unordered_set<WeylElt, WeylEltHash> next_set;
            for (const auto& x : partial) {
                // either skip letter i or take it
                if (next_set.insert(x).second) next.push_back(x);
                WeylElt y2 = g.mult(x, g.simple(word.letters[i]));
                if (next_set.insert(y2).second) next.push_back(y2);
            }
            partial = std::move(next);
        }
        for (const auto& x : partial) seen.insert(g.mult(x, word.omega_part));
    }
    std::vector<WeylElt> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const WeylElt& a, const WeylElt& b) {
        long long la = g.length(a), lb = g.length(b);
        if (la != lb) return la < lb;
        if (a.t != b.t) return a.t < b.t;
        return a.w.img < b.w.img;
    });
    return out;
}

std::vector<std::vector<long long>> admissible_classes(const GroupContext& g,
                                                       const WeylElt& t_lambda) {
    std::set<std::vector<long long>> classes;
    for (const auto& x : admissible_set(g, t_lambda)) classes.insert(dominant_rep(g, x));
    return {classes.rbegin(), classes.rend()};  // descending: lambda_1 first
}

bool in_admissible_set(const GroupContext& g, const std::vector<WeylElt>& maxima,
                       const WeylElt& x) {
    for (const auto& y : maxima)
        if (g.bruhat_leq(x, y)) return true;
    return false;
}

namespace {

// The type of the special parahoric K is the node set S = all nodes except
// node 0 (K corresponds to the 0-th vertex in both diagram families).
NodeSet big_s(const GroupContext& g) {
    NodeSet s;
    for (int v : g.node_ids())
        if (v != 0) s.push_back(v);
    return s;
}

}  // namespace

std::vector<std::vector<int>> eo_cox_words(const GroupContext& g) {
    std::vector<std::vector<int>> out;
    if (g.kind() == DiagramKind::OddCBC) {
        // 1, s0, s0 s1, ..., s0 s1 ... s_{m-1}
        for (int i = 0; i <= g.rank(); ++i) {
            std::vector<int> w;
            for (int j = 0; j < i; ++j) w.push_back(j);
            out.push_back(w);
        }
    } else {
        // tau, s0 tau, s0 s2 tau, ..., s0 s2 ... s_{m-1} tau
        for (int i = 0; i < g.rank(); ++i) {
            std::vector<int> w;
            if (i >= 1) w.push_back(0);
            for (int j = 2; j <= i; ++j) w.push_back(j);
            out.push_back(w);
        }
    }
    return out;
}

std::vector<EOElement> eo_cox(const GroupContext& g) {
    if (!is_affine(g.kind())) throw std::invalid_argument("eo_cox needs an affine context");
    NodeSet s_nodes = big_s(g);
    const WeylElt& omega = g.tau();
    std::vector<WeylElt> maxima = adm_maxima(g, lambda_one(g));

    // Candidates: sigma-Coxeter products (one letter per tau-sigma orbit,
    // proper orbit subsets, all orders) times the length-zero part of the
    // admissible class. A candidate that is minimal in W_S \ W~ has node 0
    // as its only left descent, and a left descent of a prefix persists
    // under right extension, so prefixes acquiring a descent in S are
    // pruned immediately.
    auto orbits = g.tau_sigma_orbits();
    size_t norb = orbits.size();
    std::vector<WeylElt> candidates{omega};  // empty product
    std::unordered_set<WeylElt, WeylEltHash> cand_seen{omega};
    auto has_s_descent = [&](const WeylElt& x) {
        for (int n : s_nodes)
            if (g.left_descent(n, x)) return true;
        return false;
    };
    std::vector<bool> used(norb, false);
    std::function<void(const WeylElt&, size_t)> rec = [&](const WeylElt& prefix, size_t depth) {
        if (depth > 0 && depth < norb) {  // proper support, nonempty
            WeylElt full = g.mult(prefix, omega);
            if (cand_seen.insert(full).second) candidates.push_back(full);
        }
        if (depth + 1 >= norb) return;  // next extension would exhaust all orbits
        for (size_t i = 0; i < norb; ++i) {
            if (used[i]) continue;
            used[i] = true;
            for (int letter : orbits[i]) {
                WeylElt nxt = g.mult(prefix, g.simple(letter));
                if (!has_s_descent(nxt)) rec(nxt, depth + 1);
            }
            used[i] = false;
        }
    };
    rec(g.identity(), 0);

    std::vector<EOElement> out;
    for (const auto& w : candidates) {
        if (has_s_descent(w)) continue;  // minimal in W_S \ W~
        NodeSet supp = g.sigma_support(w);
        if (static_cast<int>(supp.size()) > g.rank()) continue;  // proper
        if (!g.is_sigma_coxeter(w)) continue;
        if (!in_admissible_set(g, maxima, w)) continue;
        out.push_back(EOElement{w, supp, true});
    }
    std::sort(out.begin(), out.end(), [&](const EOElement& a, const EOElement& b) {
        return g.length(a.element) < g.length(b.element);
    });
    return out;
}

std::vector<SigmaOrbitDatum> jset(const GroupContext& g) {
    if (!is_affine(g.kind())) throw std::invalid_argument("jset needs an affine context");
    auto orbits = g.tau_sigma_orbits();
    // d(v) = diagram distance from the orbit of v to node 0
    std::map<int, std::vector<NodeSet>> by_dist;
    for (const auto& orb : orbits) by_dist[g.diagram_distance(orb, 0)].push_back(orb);
    for (auto& [d, v] : by_dist)
        if (v.size() != 1) throw std::logic_error("distances separate orbits in these diagrams");

    std::vector<EOElement> eo = eo_cox(g);
    std::vector<SigmaOrbitDatum> out;
    for (auto& [d, orbs] : by_dist) {
        SigmaOrbitDatum datum;
        datum.sigma = orbs[0];
        datum.distance = d;
        for (auto& [d2, orbs2] : by_dist) {
            if (orbs2[0] == datum.sigma) continue;
            NodeSet& target = d2 <= d ? datum.flat : datum.sharp;
            for (int v : orbs2[0]) target.push_back(v);
        }
        std::sort(datum.flat.begin(), datum.flat.end());
        std::sort(datum.sharp.begin(), datum.sharp.end());
        // w_Sigma: unique EO element with sigma-support equal to flat
        bool found = false;
        for (const auto& e : eo)
            if (e.support == datum.flat) {
                if (found) throw std::logic_error("w_Sigma not unique");
                datum.w_sigma = e.element;
                found = true;
            }
        if (!found) throw std::logic_error("no EO element matches Sigma-flat");
        out.push_back(std::move(datum));
    }
    std::sort(out.begin(), out.end(),
              [](const SigmaOrbitDatum& a, const SigmaOrbitDatum& b) { return a.distance < b.distance; });
    return out;
}

std::vector<EOElement> eo_cox_for_dimension(int n) {
    GroupContext g(kind_for_dimension(n), rank_for_dimension(n));
    return eo_cox(g);
}

std::vector<SigmaOrbitDatum> jset_for_dimension(int n) {
    GroupContext g(kind_for_dimension(n), rank_for_dimension(n));
    return jset(g);
}

}  // namespace btstrata
