// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every comparison is exact rational equality; the time limits are the
// stated per-criterion runtime bounds.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "orbichi/euler.hpp"
#include "orbichi/gspace.hpp"
#include "orbichi/group.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/series.hpp"
#include "orbichi/verify.hpp"
#include "orbichi/wreath.hpp"

using namespace orbichi;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> check;
};

int transposition_of(const FiniteGroup& g) {
    for (int x = 1; x < g.order(); ++x)
        if (g.element_order(x) == 2) return x;
    return -1;
}

// A proper subgroup when one exists (cyclic over an involution, else trivial),
// so that G/K is a genuinely mixed orbit.
Subgroup proper_subgroup(const FiniteGroup& g) {
    int tau = transposition_of(g);
    if (tau >= 0) {
        Subgroup k = Subgroup::generated(g, std::vector<int>{tau});
        if (k.size() < g.order()) return k;
    }
    return Subgroup::trivial(g);
}

bool report_ok(const VerificationReport& r, std::string& why) {
    for (const auto& inst : r.instances)
        if (!inst.pass) {
            why = inst.description + (inst.detail.empty() ? "" : " [" + inst.detail + "]");
            return false;
        }
    return true;
}

// 1. The four closing counterexample series, bit-exact to order 2, plus the
//    two Tamanoi-type inequalities.
bool criterion_counterexamples(std::string& why) {
    return report_ok(verify_counterexamples(2), why);
}

// 2. Tamanoi at one-point spaces for five groups, k in {0,1,2}, N = 4.
bool criterion_tamanoi(std::string& why) {
    const std::vector<FiniteGroup> groups = {
        trivial_group(), cyclic_group(2), cyclic_group(3),
        direct_product(cyclic_group(2), cyclic_group(2)), symmetric_group(3)};
    int instances = 0;
    for (const auto& g : groups)
        for (int k = 0; k <= 2; ++k) {
            if (!report_ok(verify_tamanoi(g, k, 4), why)) {
                why = "G=" + g.label() + ", k=" + std::to_string(k) + ": " + why;
                return false;
            }
            ++instances;
        }
    if (instances != 15) {
        why = "expected 15 instances, ran " + std::to_string(instances);
        return false;
    }
    return true;
}

// 3. Macdonald for virtual spaces with chi in {-3..3}, N = 8.
bool criterion_macdonald(std::string& why) {
    return report_ok(verify_macdonald_sweep(-3, 3, 8), why);
}

// 4. Bryan-Fulman for A in {Z2, ZxZ2, Z^2}, chi in {-2..3}, N = 3.
bool criterion_bryan_fulman(std::string& why) {
    const std::vector<FgPresentation> as = {
        FgPresentation::cyclic(2),
        FgPresentation::product(FgPresentation::free_abelian(1), FgPresentation::cyclic(2)),
        FgPresentation::free_abelian(2)};
    for (const auto& a : as)
        for (long long chi = -2; chi <= 3; ++chi)
            if (!report_ok(verify_bryan_fulman(chi, a, 3), why)) {
                why = "A=" + a.label() + ", chi=" + std::to_string(chi) + ": " + why;
                return false;
            }
    return true;
}

// 5. Induction invariance along Z2 in Z4, Z2 in S3, S2 in S3 in S4, with
//    Z in {pt, G/K, 2-orbit} and A in {Z^2, Z2, ZxZ2}, plus the |W| oracle
//    (run inside verify_induction) and transitivity of the chain.
bool criterion_induction(std::string& why) {
    const std::vector<FgPresentation> as = {
        FgPresentation::free_abelian(2), FgPresentation::cyclic(2),
        FgPresentation::product(FgPresentation::free_abelian(1), FgPresentation::cyclic(2))};

    struct Chain {
        FiniteGroup g, h;
    };
    FiniteGroup s2 = symmetric_group(2), s3 = symmetric_group(3), s4 = symmetric_group(4);
    const std::vector<Chain> chains = {{cyclic_group(2), cyclic_group(4)},
                                       {cyclic_group(2), s3},
                                       {s2, s3},
                                       {s3, s4}};
    for (const auto& chain : chains) {
        std::vector<int> emb = find_embedding(chain.g, chain.h);
        std::vector<VirtualGSpace> zs = {point_space(chain.g)};
        Subgroup k = proper_subgroup(chain.g);
        zs.push_back(coset_space(chain.g, k));
        zs.push_back(disjoint_union(point_space(chain.g), coset_space(chain.g, k)));
        for (const auto& z : zs)
            for (const auto& a : as)
                if (!report_ok(verify_induction(z, chain.h, emb, a), why)) {
                    why = chain.g.label() + " in " + chain.h.label() + ", A=" + a.label() +
                          ": " + why;
                    return false;
                }
    }
    // transitivity of the S2 in S3 in S4 chain
    std::vector<int> e23 = find_embedding(s2, s3), e34 = find_embedding(s3, s4);
    std::vector<int> composed(s2.order());
    for (int i = 0; i < s2.order(); ++i) composed[i] = e34[e23[i]];
    for (const auto& a : as) {
        VirtualGSpace z = point_space(s2);
        Rational two_step = chi_A(induce(induce(z, s3, e23), s4, e34), a);
        Rational one_step = chi_A(induce(z, s4, composed), a);
        Rational direct = chi_A(z, a);
        if (!(two_step == one_step && one_step == direct)) {
            why = "transitivity failed for A=" + a.label();
            return false;
        }
    }
    return true;
}

// 6. Engine equivalence zeta_direct = zeta_cellwise to N = 3.
bool criterion_engines(std::string& why) {
    const std::vector<FgPresentation> as = {FgPresentation::free_abelian(1),
                                            FgPresentation::free_abelian(2),
                                            FgPresentation::cyclic(2)};
    for (const auto& g : {cyclic_group(2), symmetric_group(3)}) {
        Subgroup k = proper_subgroup(g);
        const std::vector<FiniteGSet> xs = {
            point_gset(g), regular_gset(g),
            disjoint_union(coset_gset(g, k), point_gset(g))};
        for (const auto& x : xs)
            for (const auto& a : as) {
                RationalSeries direct = zeta_direct(x, a, 3);
                RationalSeries cellwise = zeta_cellwise(x.to_virtual(), a, 3);
                if (auto m = RationalSeries::first_mismatch(direct, cellwise)) {
                    why = "G=" + g.label() + ", |X|=" + std::to_string(x.size()) +
                          ", A=" + a.label() + ": engines differ at t^" + std::to_string(*m) +
                          " (" + direct.at(*m).str() + " vs " + cellwise.at(*m).str() + ")";
                    return false;
                }
            }
    }
    return true;
}

// 7. Wreath conjugacy theory for (Z2,2), (Z2,3), (Z3,2), (S3,2).
bool criterion_conjugacy(std::string& why) {
    const std::vector<std::pair<FiniteGroup, int>> cases = {{cyclic_group(2), 2},
                                                            {cyclic_group(2), 3},
                                                            {cyclic_group(3), 2},
                                                            {symmetric_group(3), 2}};
    for (const auto& [g, n] : cases)
        if (!report_ok(verify_conjugacy_types(g, n), why)) {
            why = "G=" + g.label() + ", n=" + std::to_string(n) + ": " + why;
            return false;
        }
    return true;
}

// 8. Proposition-1 reduction on (pt, ZxZ, S3) and (pt, ZxZ2, Z2); Lemma 3 on
//    Z2 in Z4 and Z2 in Z2xZ2 for k in {0,1,2}.
bool criterion_prop_lemma(std::string& why) {
    if (!report_ok(verify_prop_product(point_space(symmetric_group(3)),
                                       FgPresentation::free_abelian(1),
                                       FgPresentation::free_abelian(1)),
                   why))
        return false;
    if (!report_ok(verify_prop_product(point_space(cyclic_group(2)),
                                       FgPresentation::free_abelian(1),
                                       FgPresentation::cyclic(2)),
                   why))
        return false;
    if (!report_ok(verify_lemma3(cyclic_group(4), {0, 2}, 1, 2), why)) return false;
    if (!report_ok(
            verify_lemma3(direct_product(cyclic_group(2), cyclic_group(2)), {0, 2}, 1, 2), why))
        return false;
    return true;
}

// 9. Definition equivalence chi^(Z^{k+1}) = chi^(k) on the whole catalog.
bool criterion_definitions(std::string& why) {
    const std::vector<FiniteGroup> groups = {
        trivial_group(), cyclic_group(2), cyclic_group(3),
        direct_product(cyclic_group(2), cyclic_group(2)), symmetric_group(3)};
    for (const auto& g : groups) {
        std::vector<VirtualGSpace> xs = {point_space(g), free_orbit_space(g)};
        int tau = transposition_of(g);
        if (tau >= 0)
            xs.push_back(coset_space(g, Subgroup::generated(g, std::vector<int>{tau})));
        xs.push_back(disjoint_union(xs[0], xs[1]));
        for (const auto& x : xs)
            for (int k = 0; k <= 2; ++k) {
                Rational via_homs = chi_A(x, FgPresentation::free_abelian(k + 1));
                Rational via_recursion = chi_k_recursive(x, k);
                if (via_homs != via_recursion) {
                    why = "G=" + g.label() + ", k=" + std::to_string(k) + ": " +
                          via_homs.str() + " != " + via_recursion.str();
                    return false;
                }
            }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"counterexample series bit-exact + Tamanoi-type inequalities", 1.0,
         criterion_counterexamples},
        {"Tamanoi identity, 5 groups x k in {0,1,2}, N=4", 300.0, criterion_tamanoi},
        {"Macdonald equation, chi in {-3..3}, N=8", 1.0, criterion_macdonald},
        {"Bryan-Fulman, A in {Z2, ZxZ2, Z^2}, chi in {-2..3}, N=3", 60.0,
         criterion_bryan_fulman},
        {"induction invariance + |W| double count on three chains", 60.0,
         criterion_induction},
        {"engine equivalence zeta_direct = zeta_cellwise, N=3", 300.0, criterion_engines},
        {"wreath conjugacy: types vs brute force on four instances", 120.0,
         criterion_conjugacy},
        {"Proposition-1 reduction and Lemma 3", 10.0, criterion_prop_lemma},
        {"definition equivalence chi^(A) vs chi^(k) on the catalog", 60.0,
         criterion_definitions},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.check(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed > c.time_limit_s) {
            ok = false;
            why = "exceeded time limit of " + std::to_string(c.time_limit_s) + " s";
        }
        std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), elapsed, why.empty() ? "" : " — ", why.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
