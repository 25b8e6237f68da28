// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "chio/census_oracle.hpp"
#include "chio/failure_enum.hpp"
#include "chio/verify.hpp"

using namespace chio;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    bool pass = true;
    std::string note;

    void add(const CheckResult& r) {
        pass = pass && r.pass;
        if (!r.pass) note += (note.empty() ? "" : "; ") + r.name + ": " + r.detail;
    }
    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!ok) note += (note.empty() ? "" : "; ") + what;
    }
};

int failures = 0;

void report(int id, const std::string& title, const Criterion& c, double secs) {
    if (!c.pass) ++failures;
    std::printf("%s %d %s (%.1fs)%s%s\n", c.pass ? "PASS" : "FAIL", id, title.c_str(), secs, c.note.empty() ? "" : ": ",
                c.note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    const unsigned workers = default_workers();

    {
        Criterion c;
        const auto t0 = Clock::now();
        c.add(check_chio_identity(4));
        const double secs = seconds_since(t0);
        c.require(secs < 5.0, "identity at n=4 took longer than 5 s");
        report(1, "chio identity on all 4x4 sign matrices", c, secs);
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        c.add(check_fibres(3, 4));
        const auto t1 = Clock::now();
        c.add(check_fibres(4, 4));
        c.require(seconds_since(t1) < 30.0, "fibre census at n=4 took longer than 30 s");
        report(2, "census preimage counts equal fibre cardinalities at n=3,4", c, seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        for (int n = 4; n <= 6; ++n)
            for (int k = 4; k <= 6; ++k) {
                const auto t1 = Clock::now();
                c.add(check_failure_counts(k, n, workers));
                if (k == 6 && n == 6) c.require(seconds_since(t1) < 600.0, "k=6 n=6 enumeration took longer than 10 min");
            }
        for (int n = 6; n <= 8; ++n) c.add(check_h_identity(n));
        report(3, "failure counts and splits for k,n in {4,5,6}", c, seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        for (int n = 4; n <= 5; ++n)
            for (int k = 4; k <= 6; ++k) c.add(check_realizations(k, n, workers));
        c.add(check_relations_symbolic(3, 40));
        for (int n = 4; n <= 8; ++n) c.add(check_relations_numeric(n, workers));
        report(4, "realization tables at n=4,5 and linear relations for n=4..8", c, seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        for (int n = 2; n <= 4; ++n) c.add(check_rank_drop(n));
        c.add(check_rank_census(3, 3, workers));
        c.add(check_rank_census(4, 4, workers));
        report(5, "rank drop and rank level-set identities at (3,3) and (4,4)", c, seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        c.add(check_recipe(4, 6));
        c.add(check_recipe(5, 6));
        report(6, "recipe equals graph evaluation for dom<=6 at n=4,5", c, seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        c.add(check_averaging(3));
        report(7, "averaged measure equals lazy coin flip and forgotten signs are uniform at n=3", c,
               seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        c.add(check_transitivity(6));
        c.add(check_rigidity(6));
        c.add(check_rank_invariance(3));
        report(8, "switching orbits equal balanced signings; rank invariance on 3x3 patterns", c, seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        c.add(check_worst_ratio(3));
        c.add(check_worst_ratio(4));
        report(9, "worst-case ratio 2^((n-2)^2) attained only at the complete bipartite graph, n=3,4", c,
               seconds_since(t0));
    }
    {
        Criterion c;
        const auto t0 = Clock::now();
        const CountReport f1 = count_failures(6, 5, 1);
        const EmpiricalChio e1 = empirical_p_chio(4, 1);
        const RankCensus r1 = rank_census(4, 4, 1);
        const SingularReport s1 = singular_count(4, 1);
        for (unsigned w : {2U, 8U}) {
            const std::string tag = " differs at " + std::to_string(w) + " workers";
            c.require(count_failures(6, 5, w) == f1, "failure count" + tag);
            c.require(empirical_p_chio(4, w).counts == e1.counts, "preimage census" + tag);
            c.require(rank_census(4, 4, w) == r1, "rank census" + tag);
            const SingularReport s = singular_count(4, w);
            c.require(s.singular_sign == s1.singular_sign && s.q4_right_numerator == s1.q4_right_numerator,
                      "singular count" + tag);
        }
        VerifyOptions v;
        v.workers = 1;
        const std::string base = format_results(run_verify({"failures", "census"}, v));
        v.workers = 8;
        c.require(format_results(run_verify({"failures", "census"}, v)) == base, "verify report differs at 8 workers");
        report(10, "aggregates identical for 1, 2 and 8 workers", c, seconds_since(t0));
    }
    return failures == 0 ? 0 : 1;
}
