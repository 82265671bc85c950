#include "cobweb/operators.hpp"

#include <sstream>
#include <utility>

namespace cobweb {

PolyOperator::PolyOperator(RationalMatrix m) : trunc_(0), mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw DimensionMismatch("operator matrix must be square and non-empty");
    trunc_ = static_cast<std::size_t>(mat_.rows()) - 1;
}

PolyOperator PolyOperator::zero(std::size_t trunc) {
    const auto dim = static_cast<Eigen::Index>(trunc + 1);
    return PolyOperator(RationalMatrix::Zero(dim, dim));
}

PolyOperator PolyOperator::identity(std::size_t trunc) {
    const auto dim = static_cast<Eigen::Index>(trunc + 1);
    return PolyOperator(RationalMatrix::Identity(dim, dim));
}

const Rational& PolyOperator::entry(std::size_t row, std::size_t col) const {
    if (row >= dim() || col >= dim())
        throw InvalidRange("operator entry index outside matrix");
    return mat_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

namespace {

void require_same_trunc(const PolyOperator& a, const PolyOperator& b) {
    if (a.trunc() != b.trunc())
        throw DimensionMismatch("operators truncate at different degrees: " +
                                std::to_string(a.trunc()) + " vs " + std::to_string(b.trunc()));
}

}  // namespace

PolyOperator PolyOperator::operator+(const PolyOperator& o) const {
    require_same_trunc(*this, o);
    return PolyOperator(mat_ + o.mat_);
}

PolyOperator PolyOperator::operator-(const PolyOperator& o) const {
    require_same_trunc(*this, o);
    return PolyOperator(mat_ - o.mat_);
}

PolyOperator PolyOperator::operator*(const PolyOperator& o) const {
    require_same_trunc(*this, o);
    return PolyOperator(mat_ * o.mat_);
}

bool PolyOperator::operator==(const PolyOperator& o) const {
    if (trunc_ != o.trunc_)
        return false;
    for (Eigen::Index c = 0; c < mat_.cols(); ++c)
        for (Eigen::Index r = 0; r < mat_.rows(); ++r)
            if (mat_(r, c) != o.mat_(r, c))
                return false;
    return true;
}

bool PolyOperator::equals_identity_on_columns(std::size_t last_col) const {
    if (last_col >= dim())
        throw InvalidRange("column index outside matrix");
    for (Eigen::Index c = 0; c <= static_cast<Eigen::Index>(last_col); ++c)
        for (Eigen::Index r = 0; r < mat_.rows(); ++r)
            if (mat_(r, c) != Rational(r == c ? 1 : 0))
                return false;
    return true;
}

bool PolyOperator::is_zero_on_columns(std::size_t last_col) const {
    if (last_col >= dim())
        throw InvalidRange("column index outside matrix");
    for (Eigen::Index c = 0; c <= static_cast<Eigen::Index>(last_col); ++c)
        for (Eigen::Index r = 0; r < mat_.rows(); ++r)
            if (mat_(r, c) != 0)
                return false;
    return true;
}

PolyOperator f_derivative_op(const FSequence& F, std::size_t trunc) {
    const auto dim = static_cast<Eigen::Index>(trunc + 1);
    RationalMatrix m = RationalMatrix::Zero(dim, dim);
    for (std::size_t n = 1; n <= trunc; ++n)
        m(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n)) = Rational(F.value(n));
    return PolyOperator(std::move(m));
}

PolyOperator x_hat_op(const FSequence& F, std::size_t trunc) {
    const auto dim = static_cast<Eigen::Index>(trunc + 1);
    RationalMatrix m = RationalMatrix::Zero(dim, dim);
    for (std::size_t n = 0; n < trunc; ++n)
        m(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n)) =
            Rational(Integer(n + 1), F.value(n + 1));
    return PolyOperator(std::move(m));
}

PolyOperator commutator(const PolyOperator& a, const PolyOperator& b) {
    require_same_trunc(a, b);
    return PolyOperator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

// ---------------------------------------------------------------------------
// PolySpec

PolySpec::PolySpec(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(Rational(0));
}

bool PolySpec::is_zero() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0] == 0;
}

namespace {

Rational parse_rational_token(const std::string& token) {
    auto begin = token.find_first_not_of(" \t");
    auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw Error("empty coefficient in polynomial");
    std::string body = token.substr(begin, end - begin + 1);
    try {
        auto slash = body.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(body));
        Integer num(body.substr(0, slash));
        Integer den(body.substr(slash + 1));
        if (den == 0)
            throw Error("zero denominator in coefficient '" + body + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("bad rational coefficient '" + body + "'");
    }
}

}  // namespace

PolySpec PolySpec::parse(const std::string& csv) {
    std::vector<Rational> coeffs;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ','))
        coeffs.push_back(parse_rational_token(token));
    if (coeffs.empty())
        throw Error("polynomial needs at least one coefficient");
    return PolySpec(std::move(coeffs));
}

PolySpec PolySpec::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(Rational(Integer(i)) * coeffs_[i]);
    if (d.empty())
        d.push_back(Rational(0));
    return PolySpec(std::move(d));
}

std::string PolySpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0)
            out += ",";
        out += rational_to_string(coeffs_[i]);
    }
    return out;
}

PolyOperator poly_of_op(const PolySpec& f, const PolyOperator& a) {
    const auto dim = static_cast<Eigen::Index>(a.dim());
    RationalMatrix acc = RationalMatrix::Zero(dim, dim);
    const auto& coeffs = f.coefficients();
    for (std::size_t i = coeffs.size(); i > 0; --i) {
        acc = acc * a.matrix();
        for (Eigen::Index d = 0; d < dim; ++d)
            acc(d, d) += coeffs[i - 1];
    }
    return PolyOperator(std::move(acc));
}

GravesReport check_graves_identity(const PolySpec& f, const FSequence& F, std::size_t trunc) {
    const std::size_t d = f.degree();
    if (trunc < d + 2)
        throw TruncationTooSmall("need truncation degree >= deg(f) + 2 = " +
                                 std::to_string(d + 2) + ", got " + std::to_string(trunc));

    PolyOperator deriv = f_derivative_op(F, trunc);
    PolyOperator raise = x_hat_op(F, trunc);
    PolyOperator residual =
        commutator(poly_of_op(f, deriv), raise) - poly_of_op(f.derivative(), deriv);

    // Columns whose images never touch the truncated-away degrees.
    const std::size_t safe_last = trunc - d - 1;
    Rational max_abs = 0;
    const auto& m = residual.matrix();
    for (Eigen::Index c = 0; c <= static_cast<Eigen::Index>(safe_last); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            Rational a = boost::multiprecision::abs(m(r, c));
            if (a > max_abs)
                max_abs = a;
        }

    GravesReport report;
    report.sequence = F.name();
    report.poly = f.to_string();
    report.trunc = trunc;
    report.safe_columns = safe_last + 1;
    report.max_abs_residual = max_abs;
    report.holds = max_abs == 0;
    return report;
}

nlohmann::ordered_json to_json(const PolyOperator& op) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < op.dim(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < op.dim(); ++c)
            row.push_back(rational_to_fraction_string(op.entry(r, c)));
        rows.push_back(std::move(row));
    }
    return nlohmann::ordered_json{{"N", op.trunc()}, {"rows", std::move(rows)}};
}

nlohmann::ordered_json to_json(const GravesReport& r) {
    return nlohmann::ordered_json{
        {"f", r.poly},
        {"F", r.sequence},
        {"N", r.trunc},
        {"safe_columns", r.safe_columns},
        {"max_residual_numerator", numerator(r.max_abs_residual).str()},
        {"max_residual_denominator", denominator(r.max_abs_residual).str()},
    };
}

}  // namespace cobweb
