#include "cobweb/fnomial.hpp"

#include <ostream>

namespace cobweb {

FNomialReport fnomial(const FSequence& F, std::size_t n, std::size_t k) {
    if (k > n)
        throw InvalidRange("fnomial needs k <= n, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
    // n_F^{falling k} / k_F!, one canonical fraction per step.
    Rational value = 1;
    for (std::size_t i = 1; i <= k; ++i)
        value *= Rational(F.value(n - k + i), F.value(i));
    FNomialReport r;
    r.n = n;
    r.k = k;
    r.value = value;
    r.is_integer = is_integral(value);
    r.is_nonnegative = value >= 0;
    return r;
}

FNomialTable fnomial_table(const FSequence& F, std::size_t N) {
    FNomialTable table;
    table.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<FNomialReport> row;
        row.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            row.push_back(fnomial(F, n, k));
        table.push_back(std::move(row));
    }
    return table;
}

AdmissibilityReport is_admissible_upto(const FSequence& F, std::size_t N) {
    AdmissibilityReport report;
    report.sequence = F.name();
    report.bound = N;
    report.admissible = true;
    for (std::size_t n = 0; n <= N && report.admissible; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            FNomialReport r = fnomial(F, n, k);
            if (!r.is_integer || !r.is_nonnegative) {
                report.admissible = false;
                report.first_failure = AdmissibilityFailure{n, k, r.value};
                break;
            }
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const FNomialReport& r) {
    return nlohmann::ordered_json{
        {"n", r.n},
        {"k", r.k},
        {"numerator", numerator(r.value).str()},
        {"denominator", denominator(r.value).str()},
        {"is_integer", r.is_integer},
    };
}

nlohmann::ordered_json to_json(const FSequence& F, const FNomialTable& table) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& row : table)
        for (const auto& r : row)
            entries.push_back(to_json(r));
    return nlohmann::ordered_json{
        {"sequence", F.name()},
        {"N", table.empty() ? 0 : table.size() - 1},
        {"entries", std::move(entries)},
    };
}

nlohmann::ordered_json to_json(const AdmissibilityReport& r) {
    nlohmann::ordered_json doc{
        {"sequence", r.sequence},
        {"bound", r.bound},
        {"admissible", r.admissible},
    };
    if (r.first_failure) {
        doc["first_failure"] = nlohmann::ordered_json{
            {"n", r.first_failure->n},
            {"k", r.first_failure->k},
            {"numerator", numerator(r.first_failure->value).str()},
            {"denominator", denominator(r.first_failure->value).str()},
        };
    } else {
        doc["first_failure"] = nullptr;
    }
    return doc;
}

void write_table_csv(std::ostream& os, const FNomialTable& table) {
    os << "n,k,numerator,denominator,is_integer\n";
    for (const auto& row : table) {
        for (const auto& r : row) {
            os << r.n << ',' << r.k << ',' << numerator(r.value).str() << ','
               << denominator(r.value).str() << ',' << (r.is_integer ? "true" : "false")
               << '\n';
        }
    }
}

}  // namespace cobweb
