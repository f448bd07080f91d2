#ifndef NS_RENDER_HPP
#define NS_RENDER_HPP

// Report assembly and the three output formats. Text is for humans; JSON is
// canonical (fixed key order, semigroup-valued numbers as decimal strings so
// no consumer can truncate them); CSV carries the Apery table, one row per
// line with the row label (AP(S), M, 2M, ...) first.

#include <json.hpp>

#include "families.hpp"
#include "sweep.hpp"

namespace nsg {

struct AnalysisReport {
    std::vector<i64> generators;
    i64 multiplicity = 0;
    i64 embedding_dimension = 0;
    i64 frobenius = 0;
    std::vector<i64> apery; // sorted ascending
    i64 reduction = 0;
    std::vector<std::vector<i64>> table; // columns in residue order
    std::vector<LadderProfile> ladders;  // columns 1..multiplicity-1
    ConeDecomposition decomposition;
    bool cm = false;
    std::vector<i64> hilbert; // H(0..r+2)
    std::vector<i64> numerator;
    bool symmetric = false;
    bool homogeneous = false;
};

AnalysisReport analyze(const NumericalSemigroup& s);

std::string row_label(i64 n); // AP(S), M, 2M, ...

std::string render_text(const AnalysisReport& r);
nlohmann::ordered_json render_json(const AnalysisReport& r);
std::string render_csv(const std::vector<std::vector<i64>>& table);

// Table-only views used by the `table` subcommand.
std::string render_table_text(const NumericalSemigroup& s,
                              const AperyTable& t);
nlohmann::ordered_json render_table_json(const NumericalSemigroup& s,
                                         const AperyTable& t);

struct FamilyReport {
    FamilySpec spec;
    AnalysisReport analysis;
    Prediction prediction;
    DiscrepancyReport audit;
    std::vector<std::vector<i64>> layout_table; // engine table, published order
};

FamilyReport family_report(const FamilySpec& spec);

std::string render_family_text(const FamilyReport& r);
nlohmann::ordered_json render_family_json(const FamilyReport& r);

std::string render_verify_text(const std::vector<DiscrepancyReport>& reps);
nlohmann::ordered_json render_verify_json(
    const std::vector<DiscrepancyReport>& reps);

} // namespace nsg

#endif
