#pragma once

#include <string>
#include <vector>

#include "planar7/blocks.hpp"
#include "planar7/embedding.hpp"
#include "planar7/rational.hpp"

namespace planar7 {

// Dual-counting audit over a normalized embedding: the face histogram above
// length 8, the small-block sums k1/k2/f_k, the T3 count L, and the reduced
// dual, together with the identities and bounds tying them to e(G) and f(G).
struct DualAudit {
    bool applicable = true;
    std::vector<std::string> hypothesis_violations;

    std::map<int, int> a;       // face length -> count, lengths >= 8 only
    long long sum_i_ai = 0;     // sum of i * a_i over i >= 8
    long long sum_ai = 0;       // number of (8+)-faces
    int k1 = 0, k2 = 0, f_k = 0;
    Rat L{0};                   // (sum_i_ai - k1) / 3
    bool l_integral = false;
    long long t3_count = 0;     // T3 blocks actually counted
    bool l_matches_t3 = false;

    bool eq2 = false;  // e(G) = 4*sum_i_ai - 3*k1 + k2
    bool eq3 = false;  // f(G) = 7/3*(sum_i_ai - k1) + sum_ai + f_k
    bool eq4 = false;  // f_k <= 4/9*k1 + 11/18*k2
    bool sum_fs_identity = false;  // sum of f_B over small blocks = f_k + k1/8

    long long v_hat = 0, e_hat = 0;
    bool dual_bipartite = false;
    bool t3_degrees_ok = false;        // every T3 node has >= 2 distinct face neighbors
    bool components_ok = false;        // v >= e/2 + 2 per component with an edge
    enum class Case { Case1, Case2, Case3 } which_case = Case::Case3;
    bool case_bound_ok = false;  // Eq.(1) / k1 >= 8 / deferred, by case

    DualGraph dual, reduced;
    bool all_ok() const;
    std::string to_text() const;
};

DualAudit dual_count_audit(const Embedding& emb);

struct FinalInequalityReport {
    bool applicable = true;
    Rat lhs{0}, rhs{0};          // raw route: e vs 18/7 v - 48/7
    bool raw_holds = false;
    bool audited_holds = false;  // via the audited quantities, case by case
    bool agree = false;
    std::string to_text() const;
};

// Verifies e(G) <= 18/7 v(G) - 48/7 twice: from raw counts and through the
// audited dual quantities; both routes must agree.
FinalInequalityReport final_inequality_check(const Embedding& emb, const DualAudit& aud);

}  // namespace planar7
