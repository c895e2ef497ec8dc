#include "btstrata/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

namespace btstrata {

bool is_affine(DiagramKind k) {
    return k == DiagramKind::OddCBC || k == DiagramKind::EvenBC;
}

std::string kind_name(DiagramKind k) {
    switch (k) {
        case DiagramKind::OddCBC: return "C-BC";
        case DiagramKind::EvenBC: return "B-C";
        case DiagramKind::FiniteB: return "B";
        case DiagramKind::FiniteD: return "D";
    }
    return "?";
}

SignedPerm SignedPerm::identity(int m) {
    SignedPerm p;
    p.img.resize(m);
    for (int i = 0; i < m; ++i) p.img[i] = i + 1;
    return p;
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (img[i] != i + 1) return false;
    return true;
}

SignedPerm SignedPerm::compose(const SignedPerm& other) const {
    // (this ∘ other)(e_i) = this(other(e_i))
    SignedPerm r;
    r.img.resize(rank());
    for (int i = 0; i < rank(); ++i) {
        int mid = other.img[i];
        int j = std::abs(mid) - 1;
        int out = img[j];
        r.img[i] = mid > 0 ? out : -out;
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.img.resize(rank());
    for (int i = 0; i < rank(); ++i) {
        int j = std::abs(img[i]) - 1;
        r.img[j] = img[i] > 0 ? i + 1 : -(i + 1);
    }
    return r;
}

size_t WeylEltHash::operator()(const WeylElt& e) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](long long v) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (auto v : e.t) mix(v);
    mix(e.sim);
    for (auto v : e.w.img) mix(v);
    return h;
}

GroupContext::GroupContext(DiagramKind kind, int m) : kind_(kind), m_(m) {
    if (is_affine(kind) && m < 2) throw std::invalid_argument("rank must be at least 2");
    if (!is_affine(kind) && m < 2) throw std::invalid_argument("rank must be at least 2");
    den_ = 2LL * (4 * m + 3);
    xi_.resize(m);
    switch (kind_) {
        case DiagramKind::OddCBC:
            // alcove 0 < x_1 < ... < x_m < 1/2
            for (int i = 0; i < m; ++i) xi_[i] = 2LL * (i + 1);
            break;
        case DiagramKind::EvenBC:
        case DiagramKind::FiniteB:
        case DiagramKind::FiniteD:
            // chamber x_1 > x_2 > ... > x_m > 0 (D uses only x_{m-1} > |x_m|,
            // the same point works)
            for (int i = 0; i < m; ++i) xi_[i] = 2LL * (m - i);
            break;
    }
    build_roots();
    build_simples();
    build_diagram();
}

void GroupContext::build_roots() {
    // Positive roots of the reduced echelonnage system; affine hyperplanes
    // are <alpha, x> + k = 0, k integral.
    auto vec = [this](std::initializer_list<std::pair<int, int>> terms) {
        std::vector<int> v(m_, 0);
        for (auto [idx, c] : terms) v[idx] = c;
        return v;
    };
    for (int i = 0; i < m_; ++i) {
        if (kind_ == DiagramKind::OddCBC) pos_roots_.push_back(vec({{i, 2}}));
        if (kind_ == DiagramKind::EvenBC || kind_ == DiagramKind::FiniteB)
            pos_roots_.push_back(vec({{i, 1}}));
    }
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j) {
            pos_roots_.push_back(vec({{i, 1}, {j, -1}}));
            pos_roots_.push_back(vec({{i, 1}, {j, 1}}));
        }
}

void GroupContext::build_simples() {
    auto make = [this](const std::vector<long long>& t, long long sim, SignedPerm w) {
        WeylElt e;
        e.t = t;
        e.sim = sim;
        e.w = std::move(w);
        return e;
    };
    std::vector<long long> zero(m_, 0);
    auto swap_perm = [this](int a, int b) {
        SignedPerm p = SignedPerm::identity(m_);
        p.img[a] = b + 1;
        p.img[b] = a + 1;
        return p;
    };
    auto flip_perm = [this](int a) {
        SignedPerm p = SignedPerm::identity(m_);
        p.img[a] = -(a + 1);
        return p;
    };

    switch (kind_) {
        case DiagramKind::OddCBC: {
            for (int i = 0; i <= m_; ++i) node_ids_.push_back(i);
            std::vector<long long> em(zero);
            em[m_ - 1] = 1;
            simples_[0] = make(em, 0, flip_perm(m_ - 1));  // reflect x_m = 1/2
            for (int i = 1; i <= m_ - 1; ++i)
                simples_[i] = make(zero, 0, swap_perm(m_ - 1 - i, m_ - i));
            simples_[m_] = make(zero, 0, flip_perm(0));  // reflect x_1 = 0
            tau_ = make(zero, 1, SignedPerm::identity(m_));
            has_tau_ = true;
            diagram_.special_nodes = {0, m_};
            break;
        }
        case DiagramKind::EvenBC: {
            for (int i = 0; i <= m_; ++i) node_ids_.push_back(i);
            // s_0 reflects x_1 + x_2 = 1
            SignedPerm w0 = SignedPerm::identity(m_);
            w0.img[0] = -2;
            w0.img[1] = -1;
            std::vector<long long> e12(zero);
            e12[0] = 1;
            e12[1] = 1;
            simples_[0] = make(e12, 0, w0);
            for (int i = 1; i <= m_ - 1; ++i)
                simples_[i] = make(zero, 0, swap_perm(i - 1, i));
            simples_[m_] = make(zero, 0, flip_perm(m_ - 1));  // reflect x_m = 0
            std::vector<long long> e1(zero);
            e1[0] = 1;
            tau_ = make(e1, 1, flip_perm(0));  // x -> (1 - x_1, x_2, ...)
            has_tau_ = true;
            diagram_.special_nodes = {0, 1};
            break;
        }
        case DiagramKind::FiniteB: {
            for (int i = 1; i <= m_; ++i) node_ids_.push_back(i);
            for (int i = 1; i <= m_ - 1; ++i)
                simples_[i] = make(zero, 0, swap_perm(i - 1, i));
            simples_[m_] = make(zero, 0, flip_perm(m_ - 1));
            break;
        }
        case DiagramKind::FiniteD: {
            for (int i = 1; i <= m_; ++i) node_ids_.push_back(i);
            for (int i = 1; i <= m_ - 1; ++i)
                simples_[i] = make(zero, 0, swap_perm(i - 1, i));
            SignedPerm wd = SignedPerm::identity(m_);
            wd.img[m_ - 2] = -m_;
            wd.img[m_ - 1] = -(m_ - 1);
            simples_[m_] = make(zero, 0, wd);  // e_{m-1} -> -e_m
            break;
        }
    }
}

void GroupContext::build_diagram() {
    diagram_.kind = kind_;
    diagram_.m = m_;
    diagram_.nodes = node_ids_;
    // Coxeter order of s_a s_b, computed honestly from the group.
    for (size_t a = 0; a < node_ids_.size(); ++a)
        for (size_t b = a + 1; b < node_ids_.size(); ++b) {
            int na = node_ids_[a], nb = node_ids_[b];
            WeylElt prod = mult(simple(na), simple(nb));
            WeylElt cur = prod;
            int order = 1;
            while (!(cur.w.is_identity() && cur.sim == 0 &&
                     std::all_of(cur.t.begin(), cur.t.end(), [](long long v) { return v == 0; }))) {
                cur = mult(cur, prod);
                ++order;
                if (order > 8) throw std::logic_error("unexpected Coxeter order");
            }
            if (order >= 3) diagram_.edges.push_back({na, nb, order});
        }
    for (int v : node_ids_) {
        diagram_.sigma_action[v] = v;
        diagram_.tau_action[v] = v;
    }
    if (has_tau_) diagram_.tau_action = omega_node_action(tau_);
}

const WeylElt& GroupContext::simple(int node) const {
    auto it = simples_.find(node);
    if (it == simples_.end()) throw std::out_of_range("no such simple reflection");
    return it->second;
}

WeylElt GroupContext::identity() const {
    WeylElt e;
    e.t.assign(m_, 0);
    e.sim = 0;
    e.w = SignedPerm::identity(m_);
    return e;
}

WeylElt GroupContext::translation(const std::vector<long long>& vec, long long sim) const {
    if (static_cast<int>(vec.size()) != m_) throw std::invalid_argument("bad vector size");
    WeylElt e = identity();
    e.t = vec;
    e.sim = sim;
    return e;
}

const WeylElt& GroupContext::tau() const {
    if (!has_tau_) throw std::logic_error("finite kinds have no tau");
    return tau_;
}

WeylElt GroupContext::mult(const WeylElt& a, const WeylElt& b) const {
    WeylElt r;
    r.t = a.t;
    for (int i = 0; i < m_; ++i) {
        int im = a.w.img[i];
        int j = std::abs(im) - 1;
        r.t[j] += (im > 0 ? b.t[i] : -b.t[i]);
    }
    r.sim = a.sim + b.sim;
    r.w = a.w.compose(b.w);
    return r;
}

WeylElt GroupContext::inverse(const WeylElt& a) const {
    WeylElt r;
    r.w = a.w.inverse();
    r.t.assign(m_, 0);
    for (int i = 0; i < m_; ++i) {
        int im = r.w.img[i];
        int j = std::abs(im) - 1;
        r.t[j] -= (im > 0 ? a.t[i] : -a.t[i]);
    }
    r.sim = -a.sim;
    return r;
}

WeylElt GroupContext::mult_simple_left(int node, const WeylElt& a) const {
    return mult(simple(node), a);
}

WeylElt GroupContext::mult_simple_right(const WeylElt& a, int node) const {
    return mult(a, simple(node));
}

std::vector<long long> GroupContext::act_on_point(const WeylElt& g,
                                                  const std::vector<long long>& pt) const {
    std::vector<long long> out(m_, 0);
    for (int i = 0; i < m_; ++i) {
        int im = g.w.img[i];
        int j = std::abs(im) - 1;
        out[j] = (im > 0 ? pt[i] : -pt[i]);
    }
    for (int i = 0; i < m_; ++i) out[i] += g.t[i] * den_;
    return out;
}

long long GroupContext::root_num(const std::vector<int>& root,
                                 const std::vector<long long>& pt) const {
    long long s = 0;
    for (int i = 0; i < m_; ++i) s += static_cast<long long>(root[i]) * pt[i];
    return s;
}

namespace {
long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

long long GroupContext::length(const WeylElt& x) const {
    std::vector<long long> gxi = act_on_point(x, xi_);
    long long len = 0;
    for (const auto& root : pos_roots_) {
        long long va = root_num(root, xi_);
        long long vb = root_num(root, gxi);
        if (is_affine(kind_)) {
            len += std::llabs(floor_div(vb, den_) - floor_div(va, den_));
        } else {
            if ((va > 0) != (vb > 0)) ++len;
        }
    }
    return len;
}

bool GroupContext::left_descent(int node, const WeylElt& x) const {
    return length(mult(simple(node), x)) < length(x);
}

bool GroupContext::right_descent(const WeylElt& x, int node) const {
    return length(mult(x, simple(node))) < length(x);
}

OmegaLabel GroupContext::omega(const WeylElt& x) const {
    switch (kind_) {
        case DiagramKind::OddCBC: return {x.sim, 0};
        case DiagramKind::EvenBC: {
            long long s = 0;
            for (auto v : x.t) s += v;
            return {x.sim, static_cast<int>(((s % 2) + 2) % 2)};
        }
        default: return {0, 0};
    }
}

GroupContext::Word GroupContext::reduced_word(const WeylElt& x) const {
    Word out;
    WeylElt cur = x;
    long long len = length(cur);
    while (len > 0) {
        bool found = false;
        for (int node : node_ids_) {
            WeylElt nxt = mult(simple(node), cur);
            long long nl = length(nxt);
            if (nl < len) {
                out.letters.push_back(node);
                cur = std::move(nxt);
                len = nl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no descent on element of positive length");
    }
    out.omega_part = cur;
    return out;
}

bool GroupContext::bruhat_leq(const WeylElt& x, const WeylElt& y) const {
    if (omega(x) != omega(y)) return false;
    WeylElt a = x, b = y;
    long long la = length(a), lb = length(b);
    while (true) {
        if (la > lb) return false;
        if (lb == 0) return true;  // same omega class and both length 0 => equal
        int node = -1;
        for (int n : node_ids_) {
            if (length(mult(simple(n), b)) < lb) {
                node = n;
                break;
            }
        }
        b = mult(simple(node), b);
        lb -= 1;
        WeylElt sa = mult(simple(node), a);
        long long lsa = length(sa);
        if (lsa < la) {
            a = std::move(sa);
            la = lsa;
        }
    }
}

std::map<int, int> GroupContext::omega_node_action(const WeylElt& omega_elt) const {
    if (length(omega_elt) != 0) throw std::invalid_argument("not a length-zero element");
    std::map<int, int> act;
    WeylElt inv = inverse(omega_elt);
    for (int node : node_ids_) {
        WeylElt conj = mult(mult(omega_elt, simple(node)), inv);
        int image = -1;
        for (int n2 : node_ids_)
            if (conj == simple(n2)) {
                image = n2;
                break;
            }
        if (image < 0) throw std::logic_error("length-zero element does not permute simples");
        act[node] = image;
    }
    return act;
}

int GroupContext::tau_sigma_node(int node) const {
    auto it = diagram_.tau_action.find(node);
    return it == diagram_.tau_action.end() ? node : it->second;
}

NodeSet GroupContext::tau_sigma_set(const NodeSet& s) const {
    NodeSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(tau_sigma_node(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeSet> GroupContext::tau_sigma_orbits() const {
    std::vector<NodeSet> orbits;
    std::set<int> seen;
    for (int v : node_ids_) {
        if (seen.count(v)) continue;
        NodeSet orb;
        int cur = v;
        while (!seen.count(cur)) {
            seen.insert(cur);
            orb.push_back(cur);
            cur = tau_sigma_node(cur);
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(orb);
    }
    return orbits;
}

NodeSet GroupContext::conjugate_node_set(const WeylElt& w, const NodeSet& s) const {
    NodeSet out;
    WeylElt inv = inverse(w);
    for (int v : s) {
        WeylElt conj = mult(mult(w, simple(v)), inv);
        for (int n2 : node_ids_)
            if (conj == simple(n2)) {
                out.push_back(n2);
                break;
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NodeSet GroupContext::support(const WeylElt& x) const {
    Word w = reduced_word(x);
    NodeSet s(w.letters.begin(), w.letters.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

NodeSet GroupContext::sigma_support(const WeylElt& x) const {
    NodeSet s = support(x);
    // close under the tau-sigma diagram action
    while (true) {
        NodeSet t = tau_sigma_set(s);
        NodeSet u;
        std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
        if (u == s) return s;
        s = std::move(u);
    }
}

bool GroupContext::is_sigma_coxeter(const WeylElt& x) const {
    // one letter per tau-sigma orbit of the sigma-support
    NodeSet supp = support(x);
    if (supp.empty()) return true;
    std::set<int> orbit_reps;
    for (int v : supp) {
        int cur = v, rep = v;
        do {
            rep = std::min(rep, cur);
            cur = tau_sigma_node(cur);
        } while (cur != v);
        orbit_reps.insert(rep);
    }
    Word w = reduced_word(x);
    return static_cast<long long>(w.letters.size()) ==
           static_cast<long long>(orbit_reps.size());
}

WeylElt GroupContext::min_double_coset_rep(const NodeSet& a, const WeylElt& x,
                                           const NodeSet& b) const {
    WeylElt cur = x;
    long long len = length(cur);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n : a) {
            WeylElt nxt = mult(simple(n), cur);
            long long nl = length(nxt);
            if (nl < len) {
                cur = std::move(nxt);
                len = nl;
                changed = true;
            }
        }
        for (int n : b) {
            WeylElt nxt = mult(cur, simple(n));
            long long nl = length(nxt);
            if (nl < len) {
                cur = std::move(nxt);
                len = nl;
                changed = true;
            }
        }
    }
    return cur;
}

bool GroupContext::is_min_double_coset_rep(const NodeSet& a, const WeylElt& x,
                                           const NodeSet& b) const {
    long long len = length(x);
    for (int n : a)
        if (length(mult(simple(n), x)) < len) return false;
    for (int n : b)
        if (length(mult(x, simple(n))) < len) return false;
    return true;
}

long long GroupContext::parabolic_longest_length(const NodeSet& j) const {
    if (is_affine(kind_) && static_cast<int>(j.size()) > m_)
        throw std::invalid_argument("parabolic must be proper in the affine case");
    WeylElt cur = identity();
    long long len = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int n : j) {
            WeylElt nxt = mult(cur, simple(n));
            long long nl = length(nxt);
            if (nl > len) {
                cur = std::move(nxt);
                len = nl;
                grew = true;
            }
        }
        if (len > 4096) throw std::logic_error("parabolic is not finite");
    }
    return len;
}

int GroupContext::diagram_distance(const NodeSet& from, int to) const {
    std::map<int, std::vector<int>> adj;
    for (const auto& e : diagram_.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::map<int, int> dist;
    std::deque<int> q;
    for (int v : from) {
        dist[v] = 0;
        q.push_back(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == to) return dist[v];
        for (int u : adj[v])
            if (!dist.count(u)) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    throw std::logic_error("diagram is disconnected");
}

long long GroupContext::length_by_hyperplane_enumeration(const WeylElt& x) const {
    // Enumerate affine roots <alpha, .> + k with |k| bounded by the point
    // coordinates and count sign changes one hyperplane at a time.
    std::vector<long long> gxi = act_on_point(x, xi_);
    long long B = 2;
    for (const auto& root : pos_roots_) {
        B = std::max(B, std::llabs(root_num(root, xi_)) / den_ + 2);
        B = std::max(B, std::llabs(root_num(root, gxi)) / den_ + 2);
    }
    long long len = 0;
    for (const auto& root : pos_roots_) {
        long long va = root_num(root, xi_);
        long long vb = root_num(root, gxi);
        if (is_affine(kind_)) {
            for (long long k = -B; k <= B; ++k) {
                long long fa = va + k * den_;
                long long fb = vb + k * den_;
                if ((fa > 0) != (fb > 0)) ++len;
            }
        } else {
            if ((va > 0) != (vb > 0)) ++len;
        }
    }
    return len;
}

}  // namespace btstrata
