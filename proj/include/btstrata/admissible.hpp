#pragma once

#include "btstrata/weyl.hpp"

namespace btstrata {

// Context sizes are given by the hermitian dimension n >= 3:
// n odd -> OddCBC with m = (n-1)/2, n even -> EvenBC with m = n/2.
DiagramKind kind_for_dimension(int n);
int rank_for_dimension(int n);

// Dominant double-coset representative of the translation part:
// absolute values sorted descending, similitude kept.
std::vector<long long> dominant_rep(const GroupContext& g, const WeylElt& x);

// The minuscule cocharacter class lambda_1 = (1, 0^{m-1}; 1).
WeylElt lambda_one(const GroupContext& g);
// lambda_0 = (0^m; 1).
WeylElt lambda_zero(const GroupContext& g);

// Maximal elements {t^{w_0(lambda)}} of the admissible set.
std::vector<WeylElt> adm_maxima(const GroupContext& g, const WeylElt& t_lambda);

// mu-admissible set: all w below some W_0-translate of t^lambda.
std::vector<WeylElt> admissible_set(const GroupContext& g, const WeylElt& t_lambda);

// Image in W_0 \ W~ / W_0, as dominant translation parts with similitude.
std::vector<std::vector<long long>> admissible_classes(const GroupContext& g,
                                                       const WeylElt& t_lambda);

bool in_admissible_set(const GroupContext& g, const std::vector<WeylElt>& maxima,
                       const WeylElt& x);

struct EOElement {
    WeylElt element;
    NodeSet support;        // sigma-support of the W_a-part
    bool is_sigma_coxeter;
};

struct SigmaOrbitDatum {
    NodeSet sigma;     // the orbit set Sigma
    NodeSet flat;      // Sigma-flat
    NodeSet sharp;     // Sigma-sharp
    int distance;      // d(Sigma)
    WeylElt w_sigma;
};

// Coxeter-type EO set, ordered by length. Computed from first principles:
// sigma-Coxeter elements with proper support, minimal in W_S \ W~ for
// S = all nodes except node 0, and admissible.
std::vector<EOElement> eo_cox(const GroupContext& g);

// Closed-form word lists (prefix products), used as golden values in tests
// and for display.
std::vector<std::vector<int>> eo_cox_words(const GroupContext& g);

// The index family J with flats, sharps, distances and w_Sigma.
std::vector<SigmaOrbitDatum> jset(const GroupContext& g);

// Convenience wrappers by hermitian dimension n.
std::vector<EOElement> eo_cox_for_dimension(int n);
std::vector<SigmaOrbitDatum> jset_for_dimension(int n);

}  // namespace btstrata
