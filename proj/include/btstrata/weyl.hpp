#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace btstrata {

// Diagram families. OddCBC / EvenBC are the two affine families (ramified
// unitary similitude groups in dimension n = 2m+1 resp. n = 2m); FiniteB /
// FiniteD are the finite Weyl groups of odd resp. even special orthogonal
// groups, used for Deligne-Lusztig dimension counts and as small test beds.
enum class DiagramKind { OddCBC, EvenBC, FiniteB, FiniteD };

bool is_affine(DiagramKind k);
std::string kind_name(DiagramKind k);

// Signed permutation of {1..m}: img[i] = +-(j+1) means e_{i+1} -> +- e_{j+1}.
struct SignedPerm {
    std::vector<int> img;

    static SignedPerm identity(int m);
    int rank() const { return static_cast<int>(img.size()); }
    bool is_identity() const;
    SignedPerm compose(const SignedPerm& other) const;  // this after other
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img == o.img; }
};

// Element of the (extended / finite) Weyl group stored as t^lambda * w.
// `t` is the vector part of lambda in Z^m, `sim` the similitude coordinate
// (always 0 in finite kinds). Multiplication follows
// t^a u * t^b v = t^{a + u(b)} (u v).
struct WeylElt {
    std::vector<long long> t;
    long long sim = 0;
    SignedPerm w;

    bool operator==(const WeylElt& o) const {
        return t == o.t && sim == o.sim && w == o.w;
    }
};

struct WeylEltHash {
    size_t operator()(const WeylElt& e) const;
};

// Omega-component label: image of an element in W~ / W_a.
// Odd affine kind: (sim, 0). Even affine kind: (sim, parity of sum of t).
// Finite kinds: (0, 0) always.
using OmegaLabel = std::pair<long long, int>;

using NodeSet = std::vector<int>;  // sorted node ids

struct LocalDynkinDiagram {
    DiagramKind kind;
    int m = 0;
    std::vector<int> nodes;                      // node ids
    std::vector<std::array<int, 3>> edges;       // {a, b, coxeter order m(a,b) >= 3}
    std::vector<int> special_nodes;
    std::map<int, int> tau_action;               // node permutation
    std::map<int, int> sigma_action;             // identity in this setting
};

// Immutable group context: everything needed to run exact alcove
// combinatorics for one diagram. Safe to share across threads.
class GroupContext {
  public:
    GroupContext(DiagramKind kind, int m);

    DiagramKind kind() const { return kind_; }
    int rank() const { return m_; }
    const std::vector<int>& node_ids() const { return node_ids_; }
    const WeylElt& simple(int node) const;
    const LocalDynkinDiagram& diagram() const { return diagram_; }

    WeylElt identity() const;
    WeylElt translation(const std::vector<long long>& vec, long long sim) const;
    // Length-zero generator: odd = pure similitude translation, even = the
    // diagram automorphism swapping s_0 and s_1 (with similitude 1).
    // Finite kinds have no tau.
    const WeylElt& tau() const;

    WeylElt mult(const WeylElt& a, const WeylElt& b) const;
    WeylElt inverse(const WeylElt& a) const;
    WeylElt mult_simple_left(int node, const WeylElt& a) const;
    WeylElt mult_simple_right(const WeylElt& a, int node) const;

    long long length(const WeylElt& x) const;
    bool left_descent(int node, const WeylElt& x) const;   // l(s x) < l(x)
    bool right_descent(const WeylElt& x, int node) const;  // l(x s) < l(x)

    OmegaLabel omega(const WeylElt& x) const;

    // Reduced word for the W_a-part plus the residual length-zero element:
    // x = s_{w[0]} ... s_{w[k-1]} * omega_part. Ties broken by smallest
    // node id with a left descent.
    struct Word {
        std::vector<int> letters;
        WeylElt omega_part;
    };
    Word reduced_word(const WeylElt& x) const;

    bool bruhat_leq(const WeylElt& x, const WeylElt& y) const;

    // Conjugation action of a length-zero element on nodes.
    std::map<int, int> omega_node_action(const WeylElt& omega_elt) const;

    // tau-sigma action on nodes (sigma acts trivially for these diagrams).
    int tau_sigma_node(int node) const;
    NodeSet tau_sigma_set(const NodeSet& s) const;
    std::vector<NodeSet> tau_sigma_orbits() const;

    // {}^{w}(S): keeps s' simple with w s w^{-1} = s', drops the rest.
    NodeSet conjugate_node_set(const WeylElt& w, const NodeSet& s) const;

    // Support of the W_a-part (letters of any reduced word) and its closure
    // under the tau-sigma action.
    NodeSet support(const WeylElt& x) const;
    NodeSet sigma_support(const WeylElt& x) const;
    bool is_sigma_coxeter(const WeylElt& x) const;

    // Minimal length representative of W_A x W_B (A, B proper node sets).
    WeylElt min_double_coset_rep(const NodeSet& a, const WeylElt& x, const NodeSet& b) const;
    bool is_min_double_coset_rep(const NodeSet& a, const WeylElt& x, const NodeSet& b) const;

    // Longest element length of the finite parabolic W_J; J must generate a
    // finite group (any proper subset of an affine diagram, anything finite).
    long long parabolic_longest_length(const NodeSet& j) const;

    // Graph distance on the diagram between node sets / nodes.
    int diagram_distance(const NodeSet& from, int to) const;

    // Independent oracle: count separating hyperplanes by enumerating affine
    // roots with bounded constant term. Used by tests only.
    long long length_by_hyperplane_enumeration(const WeylElt& x) const;

    // Base-point data (exposed for tests): numerators over denom().
    const std::vector<long long>& base_point() const { return xi_; }
    long long denom() const { return den_; }
    std::vector<long long> act_on_point(const WeylElt& g, const std::vector<long long>& pt) const;

  private:
    DiagramKind kind_;
    int m_;
    long long den_;
    std::vector<long long> xi_;
    std::vector<int> node_ids_;
    std::map<int, WeylElt> simples_;
    std::vector<std::vector<int>> pos_roots_;  // coefficient vectors
    LocalDynkinDiagram diagram_;
    WeylElt tau_;
    bool has_tau_ = false;

    void build_roots();
    void build_simples();
    void build_diagram();
    long long root_num(const std::vector<int>& root, const std::vector<long long>& pt) const;
};

}  // namespace btstrata
