#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobweb/sequence.hpp"

namespace cobweb {

struct FNomialReport {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational value;              // n_F! / (k_F! (n-k)_F!), reduced
    bool is_integer = false;
    bool is_nonnegative = false;
};

// Evaluated as the falling factorial over k_F!, one reduced rational factor
// per step, so intermediates never outgrow the final fraction by much.
FNomialReport fnomial(const FSequence& F, std::size_t n, std::size_t k);

// Rows n = 0..N, entries k = 0..n.
using FNomialTable = std::vector<std::vector<FNomialReport>>;
FNomialTable fnomial_table(const FSequence& F, std::size_t N);

struct AdmissibilityFailure {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational value;
};

// Bounded verification only: admissible means no failure for 0 <= k <= n <= bound.
struct AdmissibilityReport {
    std::string sequence;
    std::size_t bound = 0;
    bool admissible = false;
    std::optional<AdmissibilityFailure> first_failure;  // lexicographically first (n, k)
};

AdmissibilityReport is_admissible_upto(const FSequence& F, std::size_t N);

nlohmann::ordered_json to_json(const FNomialReport& r);
nlohmann::ordered_json to_json(const FSequence& F, const FNomialTable& table);
nlohmann::ordered_json to_json(const AdmissibilityReport& r);

// Columns n,k,numerator,denominator,is_integer; header row; LF endings.
void write_table_csv(std::ostream& os, const FNomialTable& table);

}  // namespace cobweb
