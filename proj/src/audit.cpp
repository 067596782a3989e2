#include "planar7/audit.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace planar7 {

bool DualAudit::all_ok() const {
    return applicable && l_integral && l_matches_t3 && eq2 && eq3 && eq4 && sum_fs_identity && dual_bipartite &&
           t3_degrees_ok && components_ok && case_bound_ok;
}

std::string DualAudit::to_text() const {
    std::ostringstream os;
    os << "dual-count audit\n";
    if (!applicable) {
        os << "inapplicable:";
        for (const auto& h : hypothesis_violations) os << " [" << h << "]";
        os << "\n";
    }
    os << "sum_ai " << sum_ai << " sum_i_ai " << sum_i_ai << " k1 " << k1 << " k2 " << k2 << " f_k " << f_k
       << "\n";
    os << "L " << rat_str(L) << " integral " << (l_integral ? "pass" : "FAIL") << " matches_t3 "
       << (l_matches_t3 ? "pass" : "FAIL") << "\n";
    os << "eq2 " << (eq2 ? "pass" : "FAIL") << " eq3 " << (eq3 ? "pass" : "FAIL") << " eq4 "
       << (eq4 ? "pass" : "FAIL") << " sum_fs " << (sum_fs_identity ? "pass" : "FAIL") << "\n";
    os << "dual v " << v_hat << " e " << e_hat << " bipartite " << (dual_bipartite ? "pass" : "FAIL")
       << " t3deg " << (t3_degrees_ok ? "pass" : "FAIL") << " components "
       << (components_ok ? "pass" : "FAIL") << "\n";
    os << "case " << (which_case == Case::Case1 ? 1 : which_case == Case::Case2 ? 2 : 3) << " bound "
       << (case_bound_ok ? "pass" : "FAIL") << "\n";
    return os.str();
}

DualAudit dual_count_audit(const Embedding& emb) {
    DualAudit a;
    const Graph& g = emb.graph();
    PreconditionReport pre = validate_preconditions(g);
    if (!pre.is_two_connected) a.hypothesis_violations.push_back("not 2-connected");
    if (pre.min_degree < 3) a.hypothesis_violations.push_back("min degree < 3");
    if (pre.min_adjacent_degree_sum < 7 && g.size() > 0)
        a.hypothesis_violations.push_back("adjacent degree sum < 7");
    if (g.order() < 8) a.hypothesis_violations.push_back("n < 8");
    if (find_cycle(g, 7)) a.hypothesis_violations.push_back("contains C7");
    if (!pre.is_two_connected) {
        a.applicable = false;
        return a;
    }
    auto blocks = partition_blocks(emb);
    auto sbs = small_block_sets(emb, blocks);
    auto targets = normalization_targets(emb, blocks, sbs);
    if (!targets.trivial_edges.empty() || !targets.small_set_ids.empty() || !targets.large_block_ids.empty())
        a.hypothesis_violations.push_back("not normalized");
    a.applicable = a.hypothesis_violations.empty();

    for (const auto& f : emb.faces()) {
        if (f.length() < 8) continue;
        a.a[f.length()]++;
        a.sum_ai++;
        a.sum_i_ai += f.length();
    }
    a.k1 = sbs.summary.k1;
    a.k2 = sbs.summary.k2;
    a.f_k = sbs.summary.f_k;
    a.L = Rat(a.sum_i_ai - a.k1, 3);
    a.l_integral = (a.sum_i_ai - a.k1) % 3 == 0 && a.L >= Rat(0);
    for (const auto& b : blocks)
        if (classify(b, emb) == BlockLabel::T3) a.t3_count++;
    a.l_matches_t3 = a.l_integral && a.L == Rat(a.t3_count);

    a.eq2 = Rat(g.size()) == Rat(4) * a.sum_i_ai - Rat(3) * a.k1 + Rat(a.k2);
    a.eq3 = Rat(emb.face_count()) == Rat(7, 3) * (Rat(a.sum_i_ai) - a.k1) + Rat(a.sum_ai) + Rat(a.f_k);
    a.eq4 = Rat(a.f_k) <= Rat(4, 9) * a.k1 + Rat(11, 18) * a.k2;
    Rat sum_fs(0);
    bool fs_ok = true;
    for (int bi : sbs.small_block_ids) {
        try {
            sum_fs += block_metrics(blocks[bi], emb).f_b;
        } catch (const std::exception&) {
            fs_ok = false;
        }
    }
    a.sum_fs_identity = fs_ok && sum_fs == Rat(a.f_k) + Rat(a.k1, 8);

    a.dual = build_dual(emb, blocks, sbs);
    a.reduced = reduce_dual(a.dual);
    a.v_hat = static_cast<long long>(a.reduced.nodes.size());
    a.e_hat = static_cast<long long>(a.reduced.edges.size());
    a.dual_bipartite = true;
    for (auto [x, y] : a.reduced.edges) {
        bool xt = a.reduced.nodes[x].kind == DualNode::Kind::T3Block;
        bool yt = a.reduced.nodes[y].kind == DualNode::Kind::T3Block;
        if (xt == yt) a.dual_bipartite = false;
    }
    // Each T3 node needs two distinct residual-face neighbors.
    {
        std::vector<int> deg(a.reduced.nodes.size(), 0);
        for (auto [x, y] : a.reduced.edges) {
            deg[x]++;
            deg[y]++;
        }
        a.t3_degrees_ok = true;
        for (size_t i = 0; i < a.reduced.nodes.size(); ++i)
            if (a.reduced.nodes[i].kind == DualNode::Kind::T3Block && deg[i] < 2) a.t3_degrees_ok = false;
    }
    // Component check: v >= e/2 + 2 whenever the component has an edge.
    {
        int nn = static_cast<int>(a.reduced.nodes.size());
        std::vector<int> parent(nn);
        for (int i = 0; i < nn; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto [x, y] : a.reduced.edges) parent[find(x)] = find(y);
        std::map<int, std::pair<long long, long long>> comp;  // root -> (v, e)
        for (int i = 0; i < nn; ++i) comp[find(i)].first++;
        for (auto [x, y] : a.reduced.edges) comp[find(x)].second++;
        a.components_ok = true;
        for (auto& [root, ve] : comp)
            if (ve.second >= 1 && Rat(ve.first) < Rat(ve.second, 2) + 2) a.components_ok = false;
    }

    if (a.v_hat >= 2) {
        a.which_case = DualAudit::Case::Case1;
        // Eq.(1): sum_ai <= 1/9 sum_i_ai + 1/18 k1 - 2/3.
        a.case_bound_ok = Rat(a.sum_ai) <= Rat(1, 9) * a.sum_i_ai + Rat(1, 18) * a.k1 - Rat(2, 3);
    } else if (a.v_hat == 1) {
        a.which_case = DualAudit::Case::Case2;
        // The single node is an (8+)-face whose length equals k1.
        bool is_face = a.reduced.nodes[0].kind == DualNode::Kind::ResidualFace;
        a.case_bound_ok = is_face && a.reduced.nodes[0].face_length == a.k1 && a.k1 >= 8;
    } else {
        a.which_case = DualAudit::Case::Case3;
        // No (8+)-faces and no T3s: defer to the 9/16 audit.
        a.case_bound_ok = audit_no_8face_inequality(emb).holds;
    }
    return a;
}

std::string FinalInequalityReport::to_text() const {
    std::ostringstream os;
    os << "final inequality: " << rat_str(lhs) << " <= " << rat_str(rhs) << " raw "
       << (raw_holds ? "pass" : "FAIL") << " audited " << (audited_holds ? "pass" : "FAIL") << " agree "
       << (agree ? "pass" : "FAIL") << "\n";
    return os.str();
}

FinalInequalityReport final_inequality_check(const Embedding& emb, const DualAudit& aud) {
    FinalInequalityReport r;
    r.applicable = aud.applicable;
    long long n = emb.graph().order(), e = emb.graph().size();
    r.lhs = Rat(e);
    r.rhs = Rat(18 * n - 48, 7);
    r.raw_holds = 7 * e <= 18 * n - 48;
    switch (aud.which_case) {
        case DualAudit::Case::Case1: {
            // v >= 14/9 sum_i_ai - 7/6 k1 + 7/18 k2 + 8/3 combined with the
            // exact identity e = 18/7 (that bound - 8/3).
            Rat bound = Rat(14, 9) * aud.sum_i_ai - Rat(7, 6) * aud.k1 + Rat(7, 18) * aud.k2 + Rat(8, 3);
            bool v_ok = Rat(n) >= bound;
            bool identity = Rat(e) == Rat(18, 7) * (bound - Rat(8, 3));
            r.audited_holds = v_ok && identity && aud.eq2 && aud.eq3 && aud.eq4 && aud.case_bound_ok;
            break;
        }
        case DualAudit::Case::Case2: {
            // e = k1 + k2 and v >= 2 + 5/9 k1 + 7/18 k2 with k1 >= 8.
            bool e_ok = Rat(e) == Rat(aud.k1) + Rat(aud.k2);
            Rat vbound = Rat(2) + Rat(5, 9) * aud.k1 + Rat(7, 18) * aud.k2;
            bool v_ok = Rat(n) >= vbound;
            bool tail = aud.k1 >= 8 && Rat(e) <= Rat(18, 7) * (vbound - Rat(8, 3));
            r.audited_holds = e_ok && v_ok && tail;
            break;
        }
        case DualAudit::Case::Case3: {
            // f <= 9/16 e gives e <= 16/7 v - 32/7 <= 18/7 v - 48/7 at v >= 8.
            bool nine16 = audit_no_8face_inequality(emb).holds;
            bool e_ok = 7 * e <= 16 * n - 32;
            r.audited_holds = nine16 && e_ok && n >= 8;
            break;
        }
    }
    r.agree = r.raw_holds == r.audited_holds || (r.raw_holds && !aud.applicable);
    return r;
}

}  // namespace planar7
