#include "render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nsg {

namespace {

std::string fmt_list(const std::vector<i64>& v, const char* sep = ", ") {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

std::string fmt_pairs(const std::vector<std::pair<i64, i64>>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << "(" << v[i].first << "," << v[i].second << ")";
    }
    return os.str();
}

void text_table(std::ostringstream& os,
                const std::vector<std::vector<i64>>& rows) {
    size_t label_w = 5; // "AP(S)"
    for (size_t n = 0; n < rows.size(); ++n)
        label_w = std::max(label_w, row_label((i64)n).size());
    size_t cell_w = 1;
    for (const auto& row : rows)
        for (i64 v : row)
            cell_w = std::max(cell_w, std::to_string(v).size());
    for (size_t n = 0; n < rows.size(); ++n) {
        os << "  " << std::left << std::setw((int)label_w)
           << row_label((i64)n) << std::right;
        for (i64 v : rows[n]) os << "  " << std::setw((int)cell_w) << v;
        os << "\n";
    }
}

std::vector<std::string> str_list(const std::vector<i64>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (i64 x : v) out.push_back(std::to_string(x));
    return out;
}

nlohmann::ordered_json json_table(const std::vector<std::vector<i64>>& rows) {
    nlohmann::ordered_json jt = nlohmann::ordered_json::array();
    for (const auto& row : rows) jt.push_back(str_list(row));
    return jt;
}

nlohmann::ordered_json json_decomposition(const ConeDecomposition& d) {
    nlohmann::ordered_json jd;
    jd["free"] = d.free_shifts;
    nlohmann::ordered_json jt = nlohmann::ordered_json::array();
    for (auto& [b, c] : d.torsion)
        jt.push_back(nlohmann::ordered_json::array({b, c}));
    jd["torsion"] = jt;
    return jd;
}

nlohmann::ordered_json json_ladders(const std::vector<LadderProfile>& ls) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& lp : ls) {
        nlohmann::ordered_json j;
        j["column"] = lp.column;
        nlohmann::ordered_json jl = nlohmann::ordered_json::array();
        for (auto& [s, e] : lp.landings)
            jl.push_back(nlohmann::ordered_json::array({s, e}));
        j["landings"] = jl;
        j["p"] = lp.p;
        j["d"] = lp.d;
        nlohmann::ordered_json jt = nlohmann::ordered_json::array();
        for (auto& [b, c] : lp.torsion)
            jt.push_back(nlohmann::ordered_json::array({b, c}));
        j["torsion"] = jt;
        out.push_back(j);
    }
    return out;
}

nlohmann::ordered_json json_entries(
    const std::vector<DiscrepancyEntry>& entries) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["aspect"] = e.aspect;
        j["paper"] = e.paper;
        j["computed"] = e.computed;
        j["citation"] = e.citation;
        out.push_back(j);
    }
    return out;
}

nlohmann::ordered_json json_params(const FamilySpec& spec) {
    nlohmann::ordered_json jp;
    switch (spec.kind) {
        case FamilyKind::symmetric:
            jp["e"] = spec.e;
            jp["q"] = spec.q;
            jp["d"] = spec.d;
            break;
        case FamilyKind::almost_maximal:
            jp["e"] = spec.e;
            jp["d"] = spec.d;
            jp["b"] = spec.b;
            break;
        case FamilyKind::unbounded:
            jp["n"] = spec.n;
            jp["e"] = spec.e;
            break;
    }
    return jp;
}

void text_entries(std::ostringstream& os,
                  const std::vector<DiscrepancyEntry>& entries) {
    for (const auto& e : entries) {
        os << "  [" << (e.known ? "known" : "UNEXPECTED") << "] " << e.aspect
           << ": published " << e.paper << " ; computed " << e.computed
           << " ; " << e.citation << "\n";
    }
}

} // namespace

std::string row_label(i64 n) {
    if (n == 0) return "AP(S)";
    if (n == 1) return "M";
    return std::to_string(n) + "M";
}

AnalysisReport analyze(const NumericalSemigroup& s) {
    AnalysisReport r;
    r.generators = s.generators();
    r.multiplicity = s.multiplicity();
    r.embedding_dimension = s.embedding_dimension();
    r.frobenius = s.frobenius();
    r.apery = s.apery_min();
    std::sort(r.apery.begin(), r.apery.end());
    AperyTable t = apery_table(s);
    r.reduction = t.reduction;
    r.table = t.rows;
    for (i64 i = 1; i < r.multiplicity; ++i)
        r.ladders.push_back(ladder_profile(t, i));
    r.decomposition = cone_decomposition(t);
    r.cm = r.decomposition.torsion.empty();
    for (i64 n = 0; n <= t.reduction + 2; ++n)
        r.hilbert.push_back(hilbert_function(s, t, n));
    r.numerator = hilbert_series(s, t).numerator;
    r.symmetric = s.is_symmetric();
    r.homogeneous = s.is_homogeneous();
    return r;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "generators: " << fmt_list(r.generators) << "\n";
    os << "multiplicity: " << r.multiplicity << "\n";
    os << "embedding dimension: " << r.embedding_dimension << "\n";
    os << "frobenius number: " << r.frobenius << "\n";
    os << "apery set: " << fmt_list(r.apery) << "\n";
    os << "reduction number: " << r.reduction << "\n";
    os << "apery table (columns by residue mod " << r.multiplicity << "):\n";
    text_table(os, r.table);
    os << "decomposition: free shifts [" << fmt_list(r.decomposition.free_shifts)
       << "], torsion [" << fmt_pairs(r.decomposition.torsion) << "]\n";
    os << "tangent cone Cohen-Macaulay: " << (r.cm ? "yes" : "no") << "\n";
    os << "hilbert function: " << fmt_list(r.hilbert) << ", ...\n";
    os << "hilbert numerator: [" << fmt_list(r.numerator) << "]\n";
    os << "symmetric: " << (r.symmetric ? "yes" : "no") << "\n";
    os << "homogeneous: " << (r.homogeneous ? "yes" : "no") << "\n";
    return os.str();
}

nlohmann::ordered_json render_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["generators"] = str_list(r.generators);
    j["multiplicity"] = std::to_string(r.multiplicity);
    j["embedding_dimension"] = r.embedding_dimension;
    j["frobenius"] = std::to_string(r.frobenius);
    j["apery_set"] = str_list(r.apery);
    j["reduction_number"] = r.reduction;
    j["apery_table"] = json_table(r.table);
    j["ladder_profiles"] = json_ladders(r.ladders);
    j["decomposition"] = json_decomposition(r.decomposition);
    j["cm"] = r.cm;
    j["hilbert_function"] = r.hilbert;
    j["hilbert_numerator"] = r.numerator;
    j["symmetric"] = r.symmetric;
    j["homogeneous"] = r.homogeneous;
    j["discrepancies"] = nlohmann::ordered_json::array();
    return j;
}

std::string render_csv(const std::vector<std::vector<i64>>& table) {
    std::ostringstream os;
    for (size_t n = 0; n < table.size(); ++n) {
        os << row_label((i64)n);
        for (i64 v : table[n]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::string render_table_text(const NumericalSemigroup& s,
                              const AperyTable& t) {
    std::ostringstream os;
    os << "generators: " << fmt_list(s.generators()) << "\n";
    os << "reduction number: " << t.reduction << "\n";
    os << "apery table (columns by residue mod " << t.multiplicity << "):\n";
    text_table(os, t.rows);
    return os.str();
}

nlohmann::ordered_json render_table_json(const NumericalSemigroup& s,
                                         const AperyTable& t) {
    nlohmann::ordered_json j;
    j["generators"] = str_list(s.generators());
    j["multiplicity"] = std::to_string(t.multiplicity);
    j["reduction_number"] = t.reduction;
    j["apery_table"] = json_table(t.rows);
    return j;
}

FamilyReport family_report(const FamilySpec& spec) {
    FamilyReport fr;
    fr.spec = spec;
    NumericalSemigroup s(spec.gens);
    fr.analysis = analyze(s);
    fr.prediction = predict_family(spec);
    fr.audit = verify_family(spec);
    AperyTable t{fr.analysis.multiplicity, fr.analysis.reduction,
                 fr.analysis.table};
    fr.layout_table = table_in_layout(t, fr.prediction.apery_layout);
    return fr;
}

std::string render_family_text(const FamilyReport& r) {
    std::ostringstream os;
    os << "family: " << r.spec.name() << "\n";
    if (r.spec.kind == FamilyKind::almost_maximal)
        os << "case: "
           << (r.spec.tag == AmCase::case_i
                   ? "i (b = (a-3)d mod a)"
                   : r.spec.tag == AmCase::case_ii ? "ii (b = (a-2)d mod a)"
                                                   : "uncovered")
           << "\n";
    os << "generators: " << fmt_list(r.analysis.generators) << "\n";
    os << "multiplicity: " << r.analysis.multiplicity << "\n";
    os << "embedding dimension: " << r.analysis.embedding_dimension << "\n";
    os << "frobenius number: " << r.analysis.frobenius << "\n";
    os << "apery set (published column order): "
       << fmt_list(r.prediction.apery_layout) << "\n";
    os << "reduction number: " << r.analysis.reduction << "\n";
    os << "apery table (published column order):\n";
    text_table(os, r.layout_table);
    os << "decomposition: free shifts ["
       << fmt_list(r.analysis.decomposition.free_shifts) << "], torsion ["
       << fmt_pairs(r.analysis.decomposition.torsion) << "]\n";
    os << "tangent cone Cohen-Macaulay: " << (r.analysis.cm ? "yes" : "no")
       << "\n";
    os << "hilbert function: " << fmt_list(r.analysis.hilbert) << ", ...\n";
    os << "hilbert numerator: [" << fmt_list(r.analysis.numerator) << "]\n";
    os << "symmetric: " << (r.analysis.symmetric ? "yes" : "no") << "\n";
    os << "homogeneous: " << (r.analysis.homogeneous ? "yes" : "no") << "\n";
    os << "published forms:\n";
    if (!r.prediction.order_counts.empty()) {
        os << "  order counts:";
        for (auto& [k, v] : r.prediction.order_counts)
            os << " " << k << ":" << v;
        os << "\n";
    }
    if (r.prediction.decomposition) {
        os << "  decomposition: free shifts ["
           << fmt_list(r.prediction.decomposition->free_shifts)
           << "], torsion ["
           << fmt_pairs(r.prediction.decomposition->torsion) << "]\n";
    }
    if (!r.prediction.hilbert_values.empty())
        os << "  hilbert function: " << fmt_list(r.prediction.hilbert_values)
           << "\n";
    if (!r.prediction.hilbert_numerator.empty())
        os << "  hilbert numerator: ["
           << fmt_list(r.prediction.hilbert_numerator) << "]\n";
    os << "verdict: " << verdict_name(r.audit.verdict) << "\n";
    text_entries(os, r.audit.entries);
    return os.str();
}

nlohmann::ordered_json render_family_json(const FamilyReport& r) {
    nlohmann::ordered_json j;
    j["family"] = family_kind_name(r.spec.kind);
    j["params"] = json_params(r.spec);
    if (r.spec.kind == FamilyKind::almost_maximal)
        j["case"] = r.spec.tag == AmCase::case_i
                        ? "i"
                        : r.spec.tag == AmCase::case_ii ? "ii" : "uncovered";
    j["generators"] = str_list(r.analysis.generators);
    j["multiplicity"] = std::to_string(r.analysis.multiplicity);
    j["embedding_dimension"] = r.analysis.embedding_dimension;
    j["frobenius"] = std::to_string(r.analysis.frobenius);
    j["apery_set"] = str_list(r.analysis.apery);
    j["apery_layout"] = str_list(r.prediction.apery_layout);
    j["reduction_number"] = r.analysis.reduction;
    j["apery_table"] = json_table(r.layout_table);
    j["ladder_profiles"] = json_ladders(r.analysis.ladders);
    j["decomposition"] = json_decomposition(r.analysis.decomposition);
    j["cm"] = r.analysis.cm;
    j["hilbert_function"] = r.analysis.hilbert;
    j["hilbert_numerator"] = r.analysis.numerator;
    j["symmetric"] = r.analysis.symmetric;
    j["homogeneous"] = r.analysis.homogeneous;
    nlohmann::ordered_json jp;
    jp["apery"] = str_list(r.prediction.apery_layout);
    if (!r.prediction.order_counts.empty()) {
        nlohmann::ordered_json jc;
        for (auto& [k, v] : r.prediction.order_counts)
            jc[std::to_string(k)] = v;
        jp["order_counts"] = jc;
    }
    if (r.prediction.decomposition)
        jp["decomposition"] = json_decomposition(*r.prediction.decomposition);
    if (!r.prediction.hilbert_values.empty())
        jp["hilbert_function"] = r.prediction.hilbert_values;
    if (!r.prediction.hilbert_numerator.empty())
        jp["hilbert_numerator"] = r.prediction.hilbert_numerator;
    j["prediction"] = jp;
    j["verdict"] = verdict_name(r.audit.verdict);
    j["discrepancies"] = json_entries(r.audit.entries);
    return j;
}

std::string render_verify_text(const std::vector<DiscrepancyReport>& reps) {
    std::ostringstream os;
    i64 clean = 0, known = 0, unexpected = 0;
    for (const auto& r : reps) {
        os << r.spec.name() << " <" << fmt_list(r.spec.gens, ",")
           << ">: " << verdict_name(r.verdict) << "\n";
        text_entries(os, r.entries);
        switch (r.verdict) {
            case Verdict::clean: ++clean; break;
            case Verdict::known_errata_only: ++known; break;
            case Verdict::unexpected: ++unexpected; break;
        }
    }
    os << "summary: total=" << reps.size() << " clean=" << clean
       << " known_errata_only=" << known << " unexpected=" << unexpected
       << "\n";
    return os.str();
}

nlohmann::ordered_json render_verify_json(
    const std::vector<DiscrepancyReport>& reps) {
    nlohmann::ordered_json out;
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    i64 clean = 0, known = 0, unexpected = 0;
    for (const auto& r : reps) {
        nlohmann::ordered_json j;
        j["family"] = family_kind_name(r.spec.kind);
        j["params"] = json_params(r.spec);
        j["generators"] = str_list(r.spec.gens);
        j["verdict"] = verdict_name(r.verdict);
        j["discrepancies"] = json_entries(r.entries);
        jr.push_back(j);
        switch (r.verdict) {
            case Verdict::clean: ++clean; break;
            case Verdict::known_errata_only: ++known; break;
            case Verdict::unexpected: ++unexpected; break;
        }
    }
    out["reports"] = jr;
    nlohmann::ordered_json js;
    js["total"] = reps.size();
    js["clean"] = clean;
    js["known_errata_only"] = known;
    js["unexpected"] = unexpected;
    out["summary"] = js;
    return out;
}

} // namespace nsg
