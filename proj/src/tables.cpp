#include "ctnorm/tables.hpp"

#include <cmath>
#include <exception>

#include "ctnorm/errors.hpp"
#include "ctnorm/roots.hpp"

namespace ctnorm {
namespace {

// Golden reference values (printed to 4 decimals in the source tables;
// trailing digits are truncated, so comparisons use absolute tolerances).

struct ThresholdRef {
    double p;
    std::int64_t n1;
    std::int64_t n2;
};
constexpr ThresholdRef kTable1[] = {
    {1.10, 8, 8},    {1.20, 10, 10},  {1.30, 13, 13},  {1.40, 20, 20},
    {1.50, 44, 44},  {1.51, 49, 50},  {1.52, 56, 57},  {1.53, 65, 66},
    {1.54, 76, 78},  {1.55, 92, 94},  {1.56, 115, 118},
};

struct DeltaPRef {
    double p;
    double delta_p;
};
constexpr DeltaPRef kTable2[] = {
    {1.10, 11.5839}, {1.15, 7.9001}, {1.20, 5.8018}, {1.25, 4.3471},
    {1.30, 3.2220},  {1.35, 2.2895}, {1.40, 1.4787},
};

struct EtaRef {
    double p;
    std::int64_t n;
    double eta;
    double tol;
};
// The (1.54, 77) reference looked suspect next to its neighbors, so it is
// compared at a looser 5e-3; recomputation actually agrees to ~1e-4.
constexpr EtaRef kTable3[] = {
    {1.51, 50, 1.2369, 1e-3},  {1.52, 57, 1.1900, 1e-3},  {1.53, 66, 1.1448, 1e-3},
    {1.54, 77, 1.4360, 5e-3},  {1.54, 78, 1.0739, 1e-3},  {1.55, 93, 1.4701, 1e-3},
    {1.55, 94, 1.1557, 1e-3},  {1.56, 116, 1.5451, 1e-3}, {1.56, 117, 1.2763, 1e-3},
    {1.56, 118, 1.0216, 1e-3},
};

TableComparison compare(std::string label, double computed, double reference, double tol) {
    const double diff = std::abs(computed - reference);
    const bool pass = tol == 0.0 ? diff == 0.0 : diff <= tol;
    return TableComparison{std::move(label), computed, reference, tol, pass};
}

void finish_row(TableArtifactRow& row) {
    row.pass = row.error.empty();
    for (const auto& c : row.checks) row.pass = row.pass && c.pass;
}

}  // namespace

TableArtifact reproduce_table(int table_id, const PrecisionPolicy& policy, double tol_override) {
    TableArtifact artifact;
    artifact.table_id = table_id;
    artifact.all_pass = true;

    switch (table_id) {
        case 1: {
            ThresholdCache cache(policy);
            for (const auto& ref : kTable1) {
                TableArtifactRow row;
                row.p = ref.p;
                try {
                    const ThresholdPair t = cache.get(ref.p);
                    row.checks.push_back(
                        compare("N1", static_cast<double>(t.n1), static_cast<double>(ref.n1), 0.0));
                    row.checks.push_back(
                        compare("N2", static_cast<double>(t.n2), static_cast<double>(ref.n2), 0.0));
                } catch (const std::exception& ex) {
                    row.error = ex.what();
                }
                finish_row(row);
                artifact.rows.push_back(std::move(row));
            }
            break;
        }
        case 2: {
            for (const auto& ref : kTable2) {
                TableArtifactRow row;
                row.p = ref.p;
                try {
                    const double tol = tol_override > 0.0 ? tol_override : 1e-3;
                    row.checks.push_back(compare("delta_p", find_delta_p(ref.p).value, ref.delta_p, tol));
                } catch (const std::exception& ex) {
                    row.error = ex.what();
                }
                finish_row(row);
                artifact.rows.push_back(std::move(row));
            }
            break;
        }
        case 3: {
            for (const auto& ref : kTable3) {
                TableArtifactRow row;
                row.p = ref.p;
                row.n = ref.n;
                try {
                    const double tol = tol_override > 0.0 ? tol_override : ref.tol;
                    row.checks.push_back(compare("eta", find_eta(ref.p, ref.n, policy).value, ref.eta, tol));
                } catch (const std::exception& ex) {
                    row.error = ex.what();
                }
                finish_row(row);
                artifact.rows.push_back(std::move(row));
            }
            break;
        }
        default:
            throw DomainError("reproduce_table: table id must be 1, 2 or 3");
    }

    for (const auto& row : artifact.rows) artifact.all_pass = artifact.all_pass && row.pass;
    return artifact;
}

}  // namespace ctnorm
