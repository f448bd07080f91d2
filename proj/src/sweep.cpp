#include "sweep.hpp"

namespace nsg {

namespace {

// exceptions must not escape an OpenMP region; fold them into the report
DiscrepancyReport safe_verify(const FamilySpec& spec) {
    try {
        return verify_family(spec);
    } catch (const std::exception& ex) {
        DiscrepancyReport r;
        r.spec = spec;
        r.verdict = Verdict::unexpected;
        r.entries.push_back({"engine", "verification completes",
                             std::string("exception: ") + ex.what(),
                             "engine-side failure, not a published value",
                             false});
        return r;
    }
}

} // namespace

std::vector<DiscrepancyReport> run_verifications(
    const std::vector<FamilySpec>& specs, bool parallel) {
    std::vector<DiscrepancyReport> out(specs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < (long)specs.size(); ++i)
            out[(size_t)i] = safe_verify(specs[(size_t)i]);
    } else {
        for (size_t i = 0; i < specs.size(); ++i)
            out[i] = safe_verify(specs[i]);
    }
    return out;
}

} // namespace nsg
