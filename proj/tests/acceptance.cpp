// Acceptance checks. Each criterion prints exactly one line:
//   criterion N: PASS - detail   /   criterion N: FAIL - detail
// The process exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "cone.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "sweep.hpp"

using namespace nsg;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Criterion {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            ok = false;
            why << what;
        }
    }
};

int run_cli_status(const std::string& args) {
    std::string cmd = std::string("\"") + NSG_BINARY + "\" " + args +
                      " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<i64>> random_tuples(size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<i64> pick_e(2, 6), pick_g(2, 200);
    std::vector<std::vector<i64>> out;
    while (out.size() < count) {
        i64 e = pick_e(rng);
        std::set<i64> gset;
        while ((i64)gset.size() < e) gset.insert(pick_g(rng));
        std::vector<i64> gens(gset.begin(), gset.end());
        try {
            NumericalSemigroup s(gens);
            out.push_back(s.generators());
        } catch (const SemigroupError&) {
        }
    }
    return out;
}

// shared fixed pool for criteria 4 and 7
const std::vector<std::vector<i64>>& pool500() {
    static std::vector<std::vector<i64>> pool =
        random_tuples(500, 0x5eed2026ull);
    return pool;
}

std::vector<FamilySpec> all_swept_specs() {
    std::vector<FamilySpec> specs = sweep_symmetric({4, 8}, {1, 3}, {1, 9});
    for (FamilySpec& f :
         sweep_almost_maximal({4, 7}, std::nullopt, std::nullopt))
        specs.push_back(std::move(f));
    for (FamilySpec& f : sweep_unbounded({4, 5}, std::nullopt))
        specs.push_back(std::move(f));
    return specs;
}

// 1: the worked example's full table and invariants, exactly, within 1s
Criterion criterion1() {
    Criterion c;
    auto t0 = clock_type::now();
    NumericalSemigroup s({9, 11, 35, 37});
    AnalysisReport r = analyze(s);
    std::vector<std::vector<i64>> want = {
        {0, 37, 11, 48, 22, 59, 33, 70, 35},
        {9, 37, 11, 48, 22, 59, 33, 70, 35},
        {18, 46, 20, 48, 22, 59, 33, 70, 44},
        {27, 55, 29, 57, 31, 59, 33, 70, 44},
        {36, 55, 38, 66, 40, 68, 42, 70, 44},
        {45, 55, 47, 66, 49, 77, 51, 79, 53},
        {54, 64, 56, 66, 58, 77, 60, 88, 62},
        {63, 73, 65, 75, 67, 77, 69, 88, 71},
        {72, 82, 74, 84, 76, 86, 78, 88, 80}};
    c.expect(r.frobenius == 61, "frobenius != 61");
    c.expect(r.reduction == 8, "reduction != 8");
    c.expect(r.table == want, "9x9 apery table differs");
    c.expect(r.apery == std::vector<i64>{0, 11, 22, 33, 35, 37, 48, 59, 70},
             "apery set differs");
    c.expect(r.decomposition.free_shifts ==
                 std::vector<i64>{0, 1, 2, 3, 4, 5, 6, 7, 8},
             "free shifts differ");
    c.expect(r.decomposition.torsion ==
                 std::vector<std::pair<i64, i64>>{
                     {1, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}},
             "torsion differs");
    c.expect(!r.cm, "cone wrongly Cohen-Macaulay");
    c.expect(r.symmetric, "not detected symmetric");
    c.expect(!r.homogeneous, "wrongly homogeneous");
    double dt = seconds_since(t0);
    c.expect(dt < 1.0, "took >= 1s");
    c.why << (c.ok ? "table, decomposition and flags exact" : "");
    c.why << " (" << dt << "s)";
    return c;
}

// 2: Hilbert function and numerator of the worked example; the published
// numerator's missing top coefficient is flagged as a known erratum
Criterion criterion2() {
    Criterion c;
    NumericalSemigroup s({9, 11, 35, 37});
    AperyTable t = apery_table(s);
    std::vector<i64> head = {1, 4, 5, 6, 7, 7, 7, 8};
    for (i64 n = 0; n <= 7; ++n)
        c.expect(hilbert_function(s, t, n) == head[(size_t)n],
                 "H(" + std::to_string(n) + ") wrong");
    for (i64 n = 8; n <= 20; ++n)
        c.expect(hilbert_function(s, t, n) == 9,
                 "H(" + std::to_string(n) + ") != 9");
    c.expect(hilbert_series(s, t).numerator ==
                 std::vector<i64>{1, 3, 1, 1, 1, 0, 0, 1, 1},
             "numerator wrong");
    DiscrepancyReport rep = verify_family(make_symmetric(4, 2, 2));
    c.expect(rep.verdict == Verdict::known_errata_only,
             "verdict not known_errata_only");
    c.expect(rep.entries.size() == 1 &&
                 rep.entries[0].aspect == "hilbert_numerator" &&
                 rep.entries[0].known,
             "numerator erratum not flagged as known");
    c.why << (c.ok ? "H(0..20), numerator and known-erratum flag exact" : "");
    return c;
}

// 3: Cohen-Macaulayness across all three family sweeps, within 60s
Criterion criterion3() {
    Criterion c;
    auto t0 = clock_type::now();
    std::vector<FamilySpec> sym = sweep_symmetric({4, 8}, {1, 3}, {1, 9});
    c.expect(sym.size() >= 40, "symmetric sweep too small");
    for (const FamilySpec& f : sym)
        c.expect(!is_tangent_cone_cm(NumericalSemigroup(f.gens)),
                 f.name() + " wrongly CM");
    std::vector<FamilySpec> am =
        sweep_almost_maximal({4, 7}, std::nullopt, std::nullopt);
    c.expect(am.size() == 80, "almost-maximal sweep size != 80");
    for (const FamilySpec& f : am)
        c.expect(is_tangent_cone_cm(NumericalSemigroup(f.gens)),
                 f.name() + " not CM");
    std::vector<FamilySpec> unb = sweep_unbounded({4, 5}, std::nullopt);
    c.expect(unb.size() == 8, "unbounded sweep size != 8");
    for (const FamilySpec& f : unb)
        c.expect(is_tangent_cone_cm(NumericalSemigroup(f.gens)),
                 f.name() + " not CM");
    double dt = seconds_since(t0);
    c.expect(dt < 60.0, "took >= 60s");
    c.why << (c.ok ? "never/always-CM verified on " +
                         std::to_string(sym.size() + am.size() + unb.size()) +
                         " specs"
                   : "");
    c.why << " (" << dt << "s)";
    return c;
}

// 4: the free/torsion decomposition reproduces the Hilbert series and has
// one free summand per residue class, on swept specs and 500 random tuples
Criterion criterion4() {
    Criterion c;
    i64 checked = 0;
    auto check_one = [&c, &checked](const std::vector<i64>& gens,
                                    const std::string& label) {
        NumericalSemigroup s(gens);
        AperyTable t = apery_table(s);
        ConeDecomposition d = cone_decomposition(t);
        c.expect((i64)d.free_shifts.size() == s.multiplicity(),
                 label + ": free count != multiplicity");
        c.expect(d.free_shifts.back() == t.reduction,
                 label + ": max free shift != reduction");
        c.expect(cone_hilbert_series(d) == hilbert_series(s, t),
                 label + ": decomposition series != hilbert series");
        ++checked;
    };
    for (const FamilySpec& f : all_swept_specs()) check_one(f.gens, f.name());
    for (const std::vector<i64>& gens : pool500())
        check_one(gens, "random tuple");
    c.why << (c.ok ? "series identity held on " + std::to_string(checked) +
                         " semigroups"
                   : "");
    return c;
}

// 5: published Apery sets match the engine on every swept spec, plus the
// block-by-block sets of the n=5, e=4 member
Criterion criterion5() {
    Criterion c;
    i64 checked = 0;
    for (const FamilySpec& f : all_swept_specs()) {
        NumericalSemigroup s(f.gens);
        std::vector<i64> pred = predict_family(f).apery_layout;
        std::sort(pred.begin(), pred.end());
        std::vector<i64> eng = s.apery_min();
        std::sort(eng.begin(), eng.end());
        c.expect(pred == eng, f.name() + ": predicted apery set differs");
        ++checked;
    }
    Prediction p = predict_family(make_unbounded(5, 4));
    auto slice = [&p](size_t from, size_t count) {
        std::vector<i64> v(p.apery_layout.begin() + (long)from,
                           p.apery_layout.begin() + (long)(from + count));
        std::sort(v.begin(), v.end());
        return v;
    };
    c.expect(p.apery_layout.size() == 35, "n=5 layout size != 35");
    c.expect(slice(1, 5) == std::vector<i64>{36, 72, 108, 144, 180},
             "block A1 differs");
    c.expect(slice(6, 5) == std::vector<i64>{41, 82, 123, 164, 205},
             "block A2 differs");
    c.expect(slice(11, 4) == std::vector<i64>{42, 84, 126, 168},
             "block A3 differs");
    c.expect(slice(15, 10) == std::vector<i64>{78, 114, 120, 150, 156, 162,
                                               186, 192, 198, 204},
             "block A4 differs");
    c.expect(slice(25, 10) == std::vector<i64>{83, 124, 125, 165, 166, 167,
                                               206, 207, 208, 209},
             "block A5 differs");
    c.why << (c.ok ? "apery sets exact on " + std::to_string(checked) +
                         " swept specs and the n=5 blocks"
                   : "");
    return c;
}

// 6: the audit isolates exactly the known errata, and the CLI exit codes
// distinguish tolerated from untolerated runs
Criterion criterion6() {
    Criterion c;
    for (i64 n = 5; n <= 7; ++n) {
        DiscrepancyReport rep = verify_family(make_unbounded(n, 4));
        c.expect(rep.verdict == Verdict::known_errata_only &&
                     rep.entries.size() == 1 &&
                     rep.entries[0].aspect == "order_counts" &&
                     rep.entries[0].known,
                 "unbounded n=" + std::to_string(n) +
                     ": expected exactly one known order-count mismatch");
    }
    DiscrepancyReport sym = verify_family(make_symmetric(4, 2, 2));
    c.expect(sym.verdict == Verdict::known_errata_only &&
                 sym.entries.size() == 1 &&
                 sym.entries[0].aspect == "hilbert_numerator",
             "worked example: expected exactly the numerator mismatch");
    int strict = run_cli_status("verify unbounded --e 4 --n 5..7");
    int tolerant =
        run_cli_status("verify unbounded --e 4 --n 5..7 --allow-known");
    c.expect(strict == 3, "strict CLI exit != 3 (got " +
                              std::to_string(strict) + ")");
    c.expect(tolerant == 2, "tolerant CLI exit != 2 (got " +
                                std::to_string(tolerant) + ")");
    int clean = run_cli_status("verify symmetric --e 4..5 --q 1 --d 1..3");
    c.expect(clean == 0,
             "clean CLI exit != 0 (got " + std::to_string(clean) + ")");
    c.why << (c.ok ? "audit isolates the errata; CLI exits 0/2/3 correct"
                   : "");
    return c;
}

// 7: property suite over the 500 random tuples, within 120s
Criterion criterion7() {
    Criterion c;
    auto t0 = clock_type::now();
    std::mt19937_64 rng(0xfeedface2026ull);
    for (const std::vector<i64>& gens : pool500()) {
        NumericalSemigroup s(gens);
        i64 a = s.multiplicity();
        const std::vector<i64>& ap = s.apery_min();
        bool ap_ok = ap[0] == 0;
        for (i64 r = 0; r < a && ap_ok; ++r)
            ap_ok = ap[(size_t)r] % a == r && s.contains(ap[(size_t)r]) &&
                    !s.contains(ap[(size_t)r] - a);
        c.expect(ap_ok, "apery residue/minimality failed");

        i64 bound = s.frobenius() + 2 * a;
        std::vector<char> member = oracle::member_table(gens, bound);
        i64 bad = 0;
        for (i64 x = 0; x <= bound; ++x)
            if (s.contains(x) != (member[(size_t)x] != 0)) ++bad;
        c.expect(bad == 0, "membership differs from the DP oracle");

        std::vector<i64> members;
        for (i64 x = 0; x <= bound; ++x)
            if (member[(size_t)x]) members.push_back(x);
        std::uniform_int_distribution<size_t> pick(0, members.size() - 1);
        i64 superadd_bad = 0;
        for (int k = 0; k < 200; ++k) {
            i64 x = members[pick(rng)], y = members[pick(rng)];
            if (s.order(x + y) < s.order(x) + s.order(y)) ++superadd_bad;
        }
        c.expect(superadd_bad == 0, "order superadditivity failed");

        AperyTable t = apery_table(s);
        i64 cell_bad = 0;
        for (size_t n = 0; n + 1 < t.rows.size(); ++n)
            for (size_t i = 0; i < (size_t)a; ++i) {
                i64 cur = t.rows[n][i], nxt = t.rows[n + 1][i];
                bool stays = s.order(cur) >= (i64)n + 1;
                if (nxt != (stays ? cur : cur + a)) ++cell_bad;
            }
        c.expect(cell_bad == 0, "apery-table step rule violated");

        if (is_tangent_cone_cm(s))
            c.expect(nondecreasing_check(s),
                     "CM cone with decreasing Hilbert function");
        if (!c.ok) break;
    }
    double dt = seconds_since(t0);
    c.expect(dt < 120.0, "took >= 120s");
    c.why << (c.ok ? "500 random semigroups passed all properties" : "");
    c.why << " (" << dt << "s)";
    return c;
}

// 8: within the symmetric sweep the Hilbert function never decreases, even
// though no member's tangent cone is Cohen-Macaulay
Criterion criterion8() {
    Criterion c;
    std::vector<FamilySpec> sym = sweep_symmetric({4, 8}, {1, 3}, {1, 9});
    for (const FamilySpec& f : sym)
        c.expect(nondecreasing_check(NumericalSemigroup(f.gens)),
                 f.name() + ": hilbert function decreases");
    c.why << (c.ok ? "hilbert function nondecreasing on all " +
                         std::to_string(sym.size()) + " symmetric specs"
                   : "");
    return c;
}

} // namespace

int main() {
    int failures = 0;
    Criterion (*checks[])() = {criterion1, criterion2, criterion3,
                               criterion4, criterion5, criterion6,
                               criterion7, criterion8};
    for (size_t i = 0; i < 8; ++i) {
        Criterion c = checks[i]();
        std::cout << "criterion " << (i + 1) << ": "
                  << (c.ok ? "PASS" : "FAIL") << " - " << c.why.str()
                  << "\n";
        if (!c.ok) ++failures;
    }
    return failures;
}
