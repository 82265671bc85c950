#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <json.hpp>

#include "cobweb/sequence.hpp"

namespace cobweb {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Linear operator on the truncated monomial basis {x^0..x^N}: column j holds
// the image of x^j cut off at degree N. All entries are exact rationals.
class PolyOperator {
public:
    explicit PolyOperator(RationalMatrix m);

    static PolyOperator zero(std::size_t trunc);
    static PolyOperator identity(std::size_t trunc);

    std::size_t trunc() const noexcept { return trunc_; }
    std::size_t dim() const noexcept { return trunc_ + 1; }
    const RationalMatrix& matrix() const noexcept { return mat_; }
    const Rational& entry(std::size_t row, std::size_t col) const;

    PolyOperator operator+(const PolyOperator& o) const;
    PolyOperator operator-(const PolyOperator& o) const;
    PolyOperator operator*(const PolyOperator& o) const;  // composition
    bool operator==(const PolyOperator& o) const;

    // Column j equals e_j for all j <= last_col.
    bool equals_identity_on_columns(std::size_t last_col) const;
    bool is_zero_on_columns(std::size_t last_col) const;

private:
    std::size_t trunc_;
    RationalMatrix mat_;
};

// d_F with d_F x^n = n_F x^{n-1} and d_F 1 = 0. For F = natural this is
// d/dx; for gaussian(q) it is the Jackson q-derivative on monomials.
PolyOperator f_derivative_op(const FSequence& F, std::size_t trunc);

// The conjugate raising operator, x_hat x^n = ((n+1)/(n+1)_F) x^{n+1}, the
// unique diagonal scaling with [d_F, x_hat] = id; the image of x^N truncates
// to zero.
PolyOperator x_hat_op(const FSequence& F, std::size_t trunc);

PolyOperator commutator(const PolyOperator& a, const PolyOperator& b);

// Univariate polynomial with exact rational coefficients, coeffs[i] * x^i.
// Trailing zero coefficients are trimmed; the zero polynomial keeps degree 0.
class PolySpec {
public:
    explicit PolySpec(std::vector<Rational> coeffs);

    // Comma-separated rationals, lowest degree first: "0,-1,0,1" is x^3 - x.
    static PolySpec parse(const std::string& csv);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const noexcept;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    PolySpec derivative() const;
    std::string to_string() const;  // canonical comma-separated echo

private:
    std::vector<Rational> coeffs_;
};

// sum f_i A^i by Horner evaluation, exact.
PolyOperator poly_of_op(const PolySpec& f, const PolyOperator& a);

struct GravesReport {
    std::string sequence;
    std::string poly;
    std::size_t trunc = 0;         // N
    std::size_t safe_columns = 0;  // columns 0..safe_columns-1 were checked
    Rational max_abs_residual;
    bool holds = false;            // residual exactly zero on the safe columns
};

// R = [f(d_F), x_hat_F] - f'(d_F), reported on the truncation-safe columns
// 0..N-deg(f)-1. Requires N >= deg(f) + 2.
GravesReport check_graves_identity(const PolySpec& f, const FSequence& F, std::size_t trunc);

nlohmann::ordered_json to_json(const PolyOperator& op);
nlohmann::ordered_json to_json(const GravesReport& r);

}  // namespace cobweb
