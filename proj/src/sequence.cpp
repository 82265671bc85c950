#include "cobweb/sequence.hpp"

#include <fstream>
#include <limits>
#include <utility>

namespace cobweb {

namespace {

Integer gaussian_value(long q, std::size_t k) {
    if (k == 0)
        return 1;
    Integer qq(q);
    return (boost::multiprecision::pow(qq, static_cast<unsigned>(k)) - 1) / (qq - 1);
}

Integer fibonacci_value(std::size_t k) {
    Integer a = 0, b = 1;  // F_0, F_1
    for (std::size_t i = 0; i < k; ++i) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return a;
}

}  // namespace

FSequence::FSequence(Kind kind, std::string name, long q, Integer f0,
                     std::vector<Integer> prefix)
    : kind_(kind), name_(std::move(name)), q_(q), f0_(std::move(f0)),
      prefix_(std::move(prefix)) {}

FSequence FSequence::natural() {
    return FSequence(Kind::natural, "natural", 0, 0, {});
}

FSequence FSequence::fibonacci() {
    return FSequence(Kind::fibonacci, "fibonacci", 0, 0, {});
}

FSequence FSequence::gaussian(long q) {
    if (q < 1)
        throw InvalidSequence("gaussian parameter q must be >= 1, got " + std::to_string(q));
    if (q == 1)
        return natural();  // (q^k - 1)/(q - 1) degenerates to k
    return FSequence(Kind::gaussian, "gaussian(q=" + std::to_string(q) + ")", q, 1, {});
}

FSequence FSequence::constant_one() {
    return FSequence(Kind::constant_one, "constant_one", 0, 1, {});
}

FSequence FSequence::custom(std::string name, Integer f0, std::vector<Integer> values) {
    if (f0 != 0 && f0 != 1)
        throw InvalidSequence("F_0 must be 0 or 1, got " + f0.str());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1)
            throw InvalidSequence("F_" + std::to_string(i + 1) + " = " + values[i].str() +
                                  " rejected: entries at positive index must be >= 1");
    }
    return FSequence(Kind::custom, std::move(name), 0, std::move(f0), std::move(values));
}

FSequence FSequence::from_json(const nlohmann::json& doc) {
    try {
        std::string name = doc.at("name").get<std::string>();
        auto f0 = Integer(doc.at("f0").get<long long>());
        std::vector<Integer> values;
        for (const auto& v : doc.at("values"))
            values.emplace_back(v.get<long long>());
        return custom(std::move(name), std::move(f0), std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSequence(std::string("bad sequence document: ") + e.what());
    }
}

FSequence FSequence::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidSequence("cannot open sequence file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSequence("cannot parse " + path + ": " + e.what());
    }
    return from_json(doc);
}

bool FSequence::defined_at(std::size_t k) const noexcept {
    return kind_ != Kind::custom || k == 0 || k <= prefix_.size();
}

std::size_t FSequence::defined_through() const noexcept {
    return kind_ == Kind::custom ? prefix_.size() : std::numeric_limits<std::size_t>::max();
}

Integer FSequence::value(std::size_t k) const {
    switch (kind_) {
    case Kind::natural:
        return Integer(k);
    case Kind::fibonacci:
        return fibonacci_value(k);
    case Kind::gaussian:
        return gaussian_value(q_, k);
    case Kind::constant_one:
        return 1;
    case Kind::custom:
        if (k == 0)
            return f0_;
        if (k > prefix_.size())
            throw IndexOutOfRange("sequence '" + name_ + "' defines F_1..F_" +
                                  std::to_string(prefix_.size()) + "; F_" + std::to_string(k) +
                                  " requested");
        return prefix_[k - 1];
    }
    throw Error("unreachable sequence kind");
}

Integer FSequence::f_factorial(std::size_t n) const {
    Integer acc = 1;
    for (std::size_t s = 1; s <= n; ++s)
        acc *= value(s);
    return acc;
}

Integer FSequence::falling_factorial(std::size_t n, std::size_t k) const {
    if (k > n)
        throw InvalidRange("falling factorial needs k <= n, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
    Integer acc = 1;
    for (std::size_t i = 0; i < k; ++i)
        acc *= value(n - i);
    return acc;
}

FSequence FSequence::permute_prefix(const std::vector<std::size_t>& sigma) const {
    const std::size_t n = sigma.size();
    std::vector<bool> seen(n, false);
    for (std::size_t image : sigma) {
        if (image < 1 || image > n)
            throw InvalidPermutation("image " + std::to_string(image) + " outside 1.." +
                                     std::to_string(n));
        if (seen[image - 1])
            throw InvalidPermutation("image " + std::to_string(image) + " repeated");
        seen[image - 1] = true;
    }
    std::vector<Integer> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        values.push_back(value(sigma[i]));
    return FSequence(Kind::custom, "sigma(" + name_ + ")", 0, value(0), std::move(values));
}

}  // namespace cobweb
