#include "sxp/sxp.hpp"

#include <algorithm>
#include <functional>

namespace sxp {

namespace {

// Iterate all r-multipartitions nub with taub componentwise contained and
// total added size n.
void for_each_outer_multipartition(const std::vector<Partition>& taub, int n,
                                   const std::function<void(const std::vector<Partition>&)>& fn) {
    int r = static_cast<int>(taub.size());
    std::vector<Partition> comps(r);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == r - 1) {
            for (const Partition& p :
                 partitions_of_containing(taub[i].size() + remaining, taub[i])) {
                comps[i] = p;
                fn(comps);
            }
            return;
        }
        for (int ni = 0; ni <= remaining; ++ni)
            for (const Partition& p : partitions_of_containing(taub[i].size() + ni, taub[i])) {
                comps[i] = p;
                rec(i + 1, remaining - ni);
            }
    };
    if (r == 0) return;
    rec(0, n);
}

} // namespace

SchurExpansion sxp_expand(const Partition& tau, const SkewShape& s, int r) {
    SchurExpansion out;
    auto taub = r_quotient(tau, r);
    for_each_outer_multipartition(taub, s.size(), [&](const std::vector<Partition>& nub) {
        std::vector<SkewShape> comps;
        comps.reserve(r);
        for (int i = 0; i < r; ++i) comps.emplace_back(nub[i], taub[i]);
        SkewMultiShape mshape(std::move(comps));
        Int c = lr_coefficient(s.outer(), append(mshape, s.inner()));
        if (c == 0) return;
        Partition nu = star(mshape, tau, r);
        out.add(nu, checked_mul(c, sgn_r(SkewShape(nu, tau), r)));
    });
    return out;
}

SchurExpansion sxp_classic(const Partition& lambda, int r) {
    SchurExpansion out;
    std::vector<Partition> empties(r);
    for_each_outer_multipartition(empties, lambda.size(), [&](const std::vector<Partition>& nub) {
        std::vector<SkewShape> comps;
        comps.reserve(r);
        for (const Partition& p : nub) comps.push_back(skew(p));
        SkewMultiShape mshape(std::move(comps));
        Int c = lr_coefficient(lambda, mshape);
        if (c == 0) return;
        Partition nu = star(mshape, Partition(), r);
        out.add(nu, checked_mul(c, sgn_r(skew(nu), r)));
    });
    return out;
}

SchurExpansion PipelineTrace::result() const {
    SchurExpansion out;
    for (const PipelineNuRecord& rec : by_nu) out.add(rec.nu, rec.coefficient);
    return out;
}

PipelineTrace pipeline_trace(const Partition& tau, const SkewShape& s, int r) {
    PipelineTrace trace;
    trace.tau = tau;
    trace.shape = s;
    trace.r = r;

    const Partition& lambda = s.outer();
    const Partition& mu = s.inner();
    int l = lambda.rows();

    // Jacobi-Trudi terms: g.lambda - mu with any negative entry dropped.
    for_each_jacobi_trudi_term(lambda, mu, l,
                               [&](const SignedPermutation& g, const Composition& alpha) {
                                   trace.terms.push_back({g, alpha});
                               });
    trace.jacobi_trudi_terms = static_cast<int>(trace.terms.size());

    // Ribbon tableau counts per term, grouped by output shape.
    std::map<Partition, std::vector<Int>> counts_by_nu;
    for (std::size_t t = 0; t < trace.terms.size(); ++t)
        for (const auto& [nu, cnt] : ribbon_tableau_counts(tau, trace.terms[t].alpha, r)) {
            auto& row = counts_by_nu[nu];
            row.resize(trace.terms.size(), 0);
            row[t] = cnt;
        }

    SkewTableau mu_tab = superstandard(mu);
    for (auto& [nu, row] : counts_by_nu) {
        row.resize(trace.terms.size(), 0);
        PipelineNuRecord rec;
        rec.nu = nu;
        rec.ribbon_tableaux_per_term = row;
        SkewShape over_tau(nu, tau);
        rec.sign = sgn_r(over_tau, r);
        SkewMultiShape quotient = skew_quotient(over_tau, r);
        SkewMultiShape appended = append(quotient, mu);

        // The involution acts on the union over terms of the appended
        // multitableaux; fixed points are the latticed ones.
        std::vector<MultiTableau> pool;
        for (const PipelineTermRecord& term : trace.terms)
            for (const MultiTableau& t : enumerate_multitableaux(quotient, term.alpha))
                pool.push_back(append(t, mu_tab));
        rec.summands = static_cast<Int>(pool.size());
        for (const MultiTableau& t : pool) {
            InvolutionStep step = ls_involution(t);
            if (step.fixed)
                rec.survivors += 1;
            else
                rec.cancelled += 1;
        }
        rec.coefficient = checked_mul(static_cast<Int>(rec.sign), rec.survivors);
        if (rec.summands != 0 || rec.coefficient != 0) trace.by_nu.push_back(std::move(rec));
    }
    return trace;
}

SchurExpansion schur_times_skew_lr(const Partition& tau, const SkewShape& s) {
    SchurExpansion out;
    int n = s.size();
    for (const Partition& nu : partitions_of_containing(tau.size() + n, tau)) {
        SkewMultiShape mshape({SkewShape(nu, tau), skew(s.inner())});
        Int c = lr_coefficient(s.outer(), mshape);
        if (c != 0) out.add(nu, c);
    }
    return out;
}

SchurExpansion skew_schur_lr(const SkewShape& s) {
    SchurExpansion out;
    for (const Partition& lambda : partitions_of(s.size())) {
        SkewMultiShape mshape({skew(lambda), skew(s.inner())});
        Int c = lr_coefficient(s.outer(), mshape);
        if (c != 0) out.add(lambda, c);
    }
    return out;
}

Int skew_skew_inner_lr(const SkewShape& nu_tau, const SkewShape& lambda_mu) {
    const Partition& lambda = lambda_mu.outer();
    const Partition& mu = lambda_mu.inner();
    int width = std::max(lambda.rows(), mu.rows());
    std::vector<int> diff(width);
    for (int i = 0; i < width; ++i) diff[i] = lambda.part(i) - mu.part(i);
    Composition cont(std::move(diff));
    if (!cont.is_proper()) return 0;
    SkewTableau mu_tab = superstandard(mu);
    Int n = 0;
    for (const SkewTableau& t : enumerate_ssyt(nu_tau, cont))
        if (is_latticed(append(MultiTableau({t}), mu_tab))) ++n;
    return n;
}

} // namespace sxp
