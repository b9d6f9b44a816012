// Acceptance suite: runs each release criterion and prints one PASS/FAIL
// line. The process exits with the number of failed criteria.
//
// Criterion 8 pins the published counterexample table verbatim, including a
// tableau count of 6 for the first row. That count is provably 7 (see the
// check's output), so the criterion reports an honest FAIL; every other
// criterion is expected green.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sxp/coplactic.hpp"
#include "sxp/frontier.hpp"
#include "sxp/literals.hpp"
#include "sxp/ribbon.hpp"
#include "sxp/sxp.hpp"
#include "sxp/symfunc.hpp"

using namespace sxp;

namespace {

int failures = 0;

struct Criterion {
    std::string detail;
    bool ok = true;
    long long checks = 0;

    void expect(bool cond, const std::string& message) {
        ++checks;
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += message;
        }
    }
};

void report(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    body(c);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  (%lld checks, %.1fs)  %s\n", number,
                c.ok ? "PASS" : "FAIL", c.checks, secs, title.c_str());
    if (!c.ok) {
        std::printf("              %s\n", c.detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<std::pair<Partition, Partition>> skew_universe() {
    // all lambda/mu with |lambda| <= 6, mu inside lambda, |lambda/mu| <= 4
    std::vector<std::pair<Partition, Partition>> out;
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = std::max(0, n - 4); m <= n; ++m)
                for (const Partition& mu : subpartitions_of_size(lambda, m))
                    out.emplace_back(lambda, mu);
    return out;
}

std::vector<Partition> taus_up_to(int t) {
    std::vector<Partition> out;
    for (int n = 0; n <= t; ++n)
        for (const Partition& tau : partitions_of(n)) out.push_back(tau);
    return out;
}

// shared with the ribbon implication criterion
long long cwl_rntl_checked = 0;
bool cwl_rntl_ok = true;

void check_cwl_implies_rntl(const RibbonTableau& T) {
    ++cwl_rntl_checked;
    if (is_latticed(column_word(T)) && !is_latticed(row_number_tableau(T).word()))
        cwl_rntl_ok = false;
}

std::vector<SkewShape> component_pool(int max_outer) {
    std::vector<SkewShape> pool;
    for (int n = 1; n <= max_outer; ++n)
        for (const Partition& outer : partitions_of(n))
            for (int m = 0; m < n; ++m)
                for (const Partition& inner : subpartitions_of_size(outer, m))
                    pool.emplace_back(outer, inner);
    return pool;
}

std::vector<SkewMultiShape> multishape_family(int total_max) {
    std::vector<SkewMultiShape> out;
    for (const SkewShape& a : component_pool(5))
        if (a.size() <= total_max) out.push_back(SkewMultiShape({a}));
    auto pool4 = component_pool(4);
    for (const SkewShape& a : pool4)
        for (const SkewShape& b : pool4)
            if (a.size() + b.size() <= total_max) out.push_back(SkewMultiShape({a, b}));
    auto pool3 = component_pool(3);
    for (const SkewShape& a : pool3)
        for (const SkewShape& b : pool3)
            for (const SkewShape& c : pool3)
                if (a.size() + b.size() + c.size() <= total_max)
                    out.push_back(SkewMultiShape({a, b, c}));
    return out;
}

} // namespace

int main() {
    report(1, "worked-example coefficients and stage counts", [](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        PipelineTrace tr1 = pipeline_trace(P({3, 2}), skew(P({3, 3})), 3);
        double s1 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(tr1.result().coefficient(P({6, 5, 5, 5, 2})) == 1,
                 "<s_(3,2)(s_(3,3) o p_3), s_(6,5,5,5,2)> != 1");
        c.expect(s1 < 1.0, "first evaluation took over a second");

        t0 = std::chrono::steady_clock::now();
        PipelineTrace tr2 = pipeline_trace(P({3, 2}), SkewShape(P({4, 3}), P({1})), 3);
        double s2 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(tr2.result().coefficient(P({6, 5, 5, 5, 2})) == 3,
                 "<s_(3,2)(s_(4,3)/(1) o p_3), s_(6,5,5,5,2)> != 3");
        c.expect(s2 < 1.0, "second evaluation took over a second");

        for (const PipelineNuRecord& rec : tr1.by_nu)
            if (rec.nu == P({6, 5, 5, 5, 2}))
                c.expect(rec.summands == 7 && rec.cancelled == 6 && rec.survivors == 1,
                         "stage counts differ from 7/6/1");
        for (const PipelineNuRecord& rec : tr2.by_nu)
            if (rec.nu == P({6, 5, 5, 5, 2}))
                c.expect(rec.summands == 5 && rec.cancelled == 2 && rec.survivors == 3,
                         "stage counts differ from 5/2/3");
    });

    report(2, "s_(2) o p_2 = s_4 - s_31 + s_22", [](Criterion& c) {
        SchurExpansion expect;
        expect.add(P({4}), 1);
        expect.add(P({3, 1}), -1);
        expect.add(P({2, 2}), 1);
        c.expect(sxp_classic(P({2}), 2) == expect, "expansion differs");
    });

    report(3, "the three star values", [](Criterion& c) {
        SkewMultiShape q({skew(P({1})), skew(P({})), SkewShape(P({2, 1}), P({1}))});
        c.expect(star(q, P({3, 2}), 3) == P({6, 5, 2, 1}), "star over (3,2)");
        c.expect(star(q, P({3}), 3) == P({6, 2, 2, 2}), "star over (3)");
        SkewMultiShape q2({skew(P({1})), skew(P({2})), SkewShape(P({1}), P({1}))});
        c.expect(star(q2, P({3, 2}), 3) == P({4, 4, 4, 1, 1}), "second star over (3,2)");
    });

    report(4, "ribbon tableau counts 4 / 3 / 1", [](Criterion& c) {
        SkewShape s(P({6, 5, 5, 5, 2}), P({3, 2}));
        c.expect(enumerate_ribbon_tableaux(s, Composition({3, 3}), 3).size() == 4, "(3,3)");
        c.expect(enumerate_ribbon_tableaux(s, Composition({2, 4}), 3).size() == 3, "(2,4)");
        c.expect(enumerate_ribbon_tableaux(s, Composition({1, 5}), 3).size() == 1, "(1,5)");
    });

    report(5, "expansion equals the brute-force oracle on the sweep", [](Criterion& c) {
        auto shapes = skew_universe();
        auto taus = taus_up_to(3);
        for (int r = 1; r <= 3; ++r)
            for (const auto& [lambda, mu] : shapes)
                for (const Partition& tau : taus) {
                    SkewShape s(lambda, mu);
                    bool same = sxp_expand(tau, s, r) == oracle_product_plethysm(tau, s, r);
                    c.expect(same, "mismatch at tau=" + to_literal(tau) + " shape=" +
                                       to_literal(s) + " r=" + std::to_string(r));
                    if (!same) return;
                }
        // fifty seeded r = 4 cases
        std::mt19937 rng(20260811);
        for (int trial = 0; trial < 50; ++trial) {
            const auto& [lambda, mu] = shapes[rng() % shapes.size()];
            const Partition& tau = taus[rng() % taus.size()];
            SkewShape s(lambda, mu);
            c.expect(sxp_expand(tau, s, 4) == oracle_product_plethysm(tau, s, 4),
                     "r=4 mismatch at tau=" + to_literal(tau) + " shape=" + to_literal(s));
        }
    });

    report(6, "involution suites, exhaustive at total size <= 7", [](Criterion& c) {
        for (const SkewMultiShape& shape : multishape_family(7)) {
            int n = shape.size();
            for (const Partition& lambda : partitions_of(n)) {
                int l = lambda.rows();
                std::map<MultiTableau, Composition> domain;
                for_each_jacobi_trudi_term(
                    lambda, Partition(), l,
                    [&](const SignedPermutation&, const Composition& alpha) {
                        for (const MultiTableau& t : enumerate_multitableaux(shape, alpha))
                            domain.emplace(t, alpha);
                    });
                for (const auto& [t, alpha] : domain) {
                    InvolutionStep step = ls_involution(t);
                    c.expect(step.fixed == is_latticed(t), "fixed set is not the latticed set");
                    if (step.fixed) continue;
                    InvolutionStep back = ls_involution(step.image);
                    c.expect(!back.fixed && back.image == t, "involution fails to return");
                    Word w = word(t);
                    int k = step.k;
                    PairingAnalysis p = analyze_pairing(w, k);
                    if (p.d() > 0) {
                        MultiTableau up = raising(t, k);
                        c.expect(lowering(up, k) == t, "lowering does not invert raising");
                        MultiTableau refl = reflection(raising(t, k), k);
                        c.expect(reflection(raising(refl, k), k) == t,
                                 "reflection-raising is not an involution");
                    }
                }
            }
        }

        // appended superstandard components stay fixed in the last slot
        for (const SkewMultiShape& base : multishape_family(4))
            for (int m = 1; m <= 3; ++m)
                for (const Partition& mu : partitions_of(m)) {
                    if (base.size() + m > 7) continue;
                    SkewTableau u = superstandard(mu);
                    for (const Partition& lambda : partitions_of(base.size() + m))
                        for_each_jacobi_trudi_term(
                            lambda, mu, lambda.rows(),
                            [&](const SignedPermutation&, const Composition& rest) {
                                for (const MultiTableau& t :
                                     enumerate_multitableaux(base, rest)) {
                                    InvolutionStep step = ls_involution(append(t, u));
                                    c.expect(step.image.components.back() == u,
                                             "appended component moved");
                                }
                            });
                }

        // shape-content involution: S o S = id (entries <= 5, contexts <= 5)
        for (int n = 1; n <= 7; ++n)
            for (const Partition& lambda : partitions_of(n))
                for (int m = 0; m < n; ++m)
                    for (const Partition& mu : subpartitions_of_size(lambda, m)) {
                        SkewShape s(lambda, mu);
                        if (s.size() > 7) continue;
                        std::vector<Composition> contents;
                        std::function<void(std::vector<int>&, int)> gen =
                            [&](std::vector<int>& acc, int rem) {
                                if (static_cast<int>(acc.size()) == 5) {
                                    if (rem == 0) contents.push_back(Composition(acc));
                                    return;
                                }
                                for (int v = 0; v <= rem; ++v) {
                                    acc.push_back(v);
                                    gen(acc, rem - v);
                                    acc.pop_back();
                                }
                            };
                        std::vector<int> acc;
                        gen(acc, s.size());
                        for (const Composition& cont : contents)
                            for (const SkewTableau& t : enumerate_rsyt(s, cont))
                                for (int b = 0; b <= 5; ++b)
                                    for (const Partition& beta : partitions_of(b)) {
                                        bool valid = true;
                                        for (int i = 0; i + 1 < 6; ++i)
                                            if (beta.part(i) + cont.entry(i) <
                                                beta.part(i + 1) + cont.entry(i + 1))
                                                valid = false;
                                        if (!valid) continue;
                                        SkewTableau image = shape_content_involution(t, beta);
                                        c.expect(shape_content_involution(image, mu) == t,
                                                 "S o S != id");
                                    }
                    }
    });

    report(7, "sign well-definedness and quotient bead-count stability", [](Criterion& c) {
        for (int n = 0; n <= 10; ++n)
            for (const Partition& nu : partitions_of(n))
                for (int r = 1; r <= 4; ++r) {
                    auto base = r_quotient(nu, r);
                    int b = canonical_bead_count(nu, r);
                    c.expect(r_quotient_with_beads(nu, r, b + r) == base &&
                                 r_quotient_with_beads(nu, r, b + 2 * r) == base,
                             "quotient moved with the bead count");
                    for (int m = 0; m <= nu.size(); ++m)
                        for (const Partition& tau : subpartitions_of_size(nu, m)) {
                            SkewShape s(nu, tau);
                            // every decomposition of the shape has the same sign,
                            // certified by exhaustive removal search
                            if (r == 1 && s.size() > 8) continue;
                            std::set<int> signs;
                            std::function<void(const Partition&, int)> rec =
                                [&](const Partition& cur, int sign) {
                                    if (cur == tau) {
                                        signs.insert(sign);
                                        return;
                                    }
                                    for (const Partition& next :
                                         subpartitions_of_size(cur, cur.size() - r)) {
                                        if (!cur.contains(next) || !next.contains(tau))
                                            continue;
                                        SkewShape step(cur, next);
                                        if (!is_border_strip(step)) continue;
                                        rec(next,
                                            strip_height(step) % 2 == 0 ? sign : -sign);
                                    }
                                };
                            rec(nu, 1);
                            int sign = sgn_r(s, r);
                            if (signs.empty())
                                c.expect(sign == 0, "sign nonzero without decomposition");
                            else
                                c.expect(signs.size() == 1 && sign == *signs.begin(),
                                         "sign depends on the decomposition");
                        }
                }
    });

    report(8, "counterexample table reproduced verbatim", [](Criterion& c) {
        auto rows = reproduce_table();
        const Int mult[] = {1, -1, 1, 1};
        const Int rt[] = {6, 9, 6, 2};
        const Int cwl[] = {0, 0, 0, 2};
        const Int rntl[] = {2, 0, 0, 2};
        for (int i = 0; i < 4; ++i) {
            std::ostringstream cell;
            cell << "row " << i + 1;
            c.expect(rows[i].mult == mult[i], cell.str() + " multiplicity");
            c.expect(rows[i].rt == rt[i],
                     cell.str() + ": pinned tableau count " + std::to_string(rt[i]) +
                         ", computed " + std::to_string(rows[i].rt) +
                         " (the count is provably 7: the quotient bijection image "
                         "SSYT(((2),(2),(2)),(3,3)) has size [x^3 y^3](x^2+xy+y^2)^3 = 7)");
            c.expect(rows[i].cwl == cwl[i], cell.str() + " CWL");
            c.expect(rows[i].rntl == rntl[i], cell.str() + " RNTL");
            for (const RibbonTableau& T : enumerate_ribbon_tableaux(
                     SkewShape(rows[i].nu, rows[i].tau),
                     Composition(rows[i].lambda.parts()), rows[i].r))
                check_cwl_implies_rntl(T);
        }
    });

    report(9, "two-ribbon rule: signed latticed-column-word counts", [](Criterion& c) {
        for (const Partition& tau : taus_up_to(3))
            for (int l = 0; 2 * l <= 10; ++l)
                for (const Partition& lambda : partitions_of(l)) {
                    SchurExpansion e = sxp_expand(tau, skew(lambda), 2);
                    for (const Partition& nu : partitions_of(tau.size() + 2 * l)) {
                        Int multiplicity = e.coefficient(nu);
                        if (!nu.contains(tau)) {
                            c.expect(multiplicity == 0, "coefficient outside tau");
                            continue;
                        }
                        SkewShape over(nu, tau);
                        Int cwl = 0;
                        for (const RibbonTableau& T : enumerate_ribbon_tableaux(
                                 over, Composition(lambda.parts()), 2)) {
                            if (is_latticed(column_word(T))) ++cwl;
                            check_cwl_implies_rntl(T);
                        }
                        Int expect = checked_mul(static_cast<Int>(sgn_r(over, 2)), cwl);
                        c.expect(multiplicity == expect,
                                 "mismatch at tau=" + to_literal(tau) + " lambda=" +
                                     to_literal(lambda) + " nu=" + to_literal(nu));
                    }
                }
    });

    report(10, "latticed column words force latticed row-number tableaux", [](Criterion& c) {
        // the oracle sweep's tableaux: its Jacobi-Trudi terms have arbitrary
        // composition weights of size <= 4, so sweep those, not just
        // partition weights
        std::vector<Composition> weights;
        std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& acc, int rem) {
            if (rem == 0 && !acc.empty()) weights.push_back(Composition(acc));
            for (int v = 1; v <= rem; ++v) {
                acc.push_back(v);
                gen(acc, rem - v);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        for (int n = 1; n <= 4; ++n) gen(acc, n);
        for (const Partition& tau : taus_up_to(3))
            for (int r = 1; r <= 3; ++r)
                for (const Composition& w : weights)
                    for (const auto& [nu, cnt] : ribbon_tableau_counts(tau, w, r))
                        for (const RibbonTableau& T :
                             enumerate_ribbon_tableaux(SkewShape(nu, tau), w, r))
                            check_cwl_implies_rntl(T);
        c.expect(cwl_rntl_ok, "implication failed");
        c.expect(cwl_rntl_checked > 20000,
                 "sweep too small: " + std::to_string(cwl_rntl_checked));
        c.checks += cwl_rntl_checked;

        // the explicit converse failure: column word 2112, row-number word 2211
        bool witness = false;
        for (const RibbonTableau& T :
             enumerate_ribbon_tableaux(skew(P({3, 3, 3, 3})), Composition({2, 2}), 3)) {
            Word cw = column_word(T);
            Word rw = row_number_tableau(T).word();
            if (cw == Word{2, 1, 1, 2} && rw == Word{2, 2, 1, 1} && !is_latticed(cw) &&
                is_latticed(rw))
                witness = true;
        }
        c.expect(witness, "converse-failure witness not found");
    });

    report(11, "row-number bound harness: r <= 3, n <= 6, 4 jobs", [](Criterion& c) {
        ConjectureOptions opt;
        opt.r_max = 3;
        opt.n_max = 6;
        opt.jobs = 4;
        opt.seed = 20260811;
        ConjectureReport rep = verify_conjecture(opt);
        c.expect(rep.violations == 0, "bound violated");
        c.expect(rep.audit_failures == 0, "oracle audit failed");
        c.expect(rep.b1_equality, "b = 1 cells missed equality");
        c.expect(rep.b1_cells > 0 && !rep.cells.empty(), "harness scanned nothing");
        c.checks += static_cast<long long>(rep.cells.size());
    });

    report(12, "permutation invariance of latticed counts, with shifts", [](Criterion& c) {
        for (const SkewMultiShape& shape : multishape_family(7)) {
            if (shape.length() < 2) continue;
            int n = shape.size();
            if (n > 7) continue;
            for (const Partition& lambda : partitions_of(n)) {
                Int base = lr_coefficient(lambda, shape);
                std::vector<int> idx(shape.length());
                for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
                while (std::next_permutation(idx.begin(), idx.end())) {
                    std::vector<SkewShape> comps;
                    for (int i : idx) comps.push_back(shape.components[i]);
                    c.expect(lr_coefficient(lambda, SkewMultiShape(comps)) == base,
                             "count moved under reordering");
                }
            }
        }

        // seven beads instead of six shift the quotient components rightward;
        // the latticed member of the worked example moves around but the
        // fourth multitableau stays unlatticed under every shift
        auto comp = [](std::vector<int> outer, std::vector<int> inner,
                       std::vector<std::vector<int>> rows) {
            return SkewTableau(SkewShape(Partition(outer), Partition(inner)), rows);
        };
        std::vector<MultiTableau> ts;
        ts.push_back(MultiTableau({comp({1}, {}, {{2}}), comp({2}, {}, {{1, 2}}),
                                   comp({2, 2}, {1}, {{1}, {1, 2}})}));
        ts.push_back(MultiTableau({comp({1}, {}, {{1}}), comp({2}, {}, {{2, 2}}),
                                   comp({2, 2}, {1}, {{1}, {1, 2}})}));
        ts.push_back(MultiTableau({comp({1}, {}, {{2}}), comp({2}, {}, {{1, 1}}),
                                   comp({2, 2}, {1}, {{1}, {2, 2}})}));
        ts.push_back(MultiTableau({comp({1}, {}, {{1}}), comp({2}, {}, {{1, 2}}),
                                   comp({2, 2}, {1}, {{1}, {2, 2}})}));
        auto base7 = r_quotient_with_beads(P({6, 5, 5, 5, 2}), 3, 7);
        auto base6 = r_quotient_with_beads(P({6, 5, 5, 5, 2}), 3, 6);
        c.expect(base7[0] == base6[2] && base7[1] == base6[0] && base7[2] == base6[1],
                 "seven beads did not shift the quotient");
        auto shift = [](const MultiTableau& t, int by) {
            std::vector<SkewTableau> comps;
            int m = t.length();
            for (int i = 0; i < m; ++i)
                comps.push_back(t.components[((i - by) % m + m) % m]);
            return MultiTableau(comps);
        };
        for (int i = 0; i < 4; ++i) {
            c.expect(is_latticed(shift(ts[i], 1)) == (i == 2), "one-shift lattice pattern");
            c.expect(is_latticed(shift(ts[i], 2)) == (i == 1), "two-shift lattice pattern");
        }
        for (int by = 0; by < 3; ++by)
            c.expect(!is_latticed(shift(ts[3], by)), "t4 became latticed");
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures;
}
