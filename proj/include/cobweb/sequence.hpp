#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobweb/errors.hpp"
#include "cobweb/numeric.hpp"

namespace cobweb {

// A natural-number-valued sequence F with indexed access k -> F_k.
//
// Entries at positive index are >= 1; F_0 is 0 or 1, and 0_F! == 1 either
// way (the exceptional case, as for Fibonacci). Built-in families are
// defined for every k; custom sequences hold an explicit finite prefix and
// reject access past it. Instances are immutable and safe to share across
// threads.
class FSequence {
public:
    enum class Kind { natural, fibonacci, gaussian, constant_one, custom };

    static FSequence natural();
    static FSequence fibonacci();
    // F_k = (q^k - 1)/(q - 1) with F_0 = 1; q == 1 collapses to natural.
    static FSequence gaussian(long q);
    static FSequence constant_one();
    static FSequence custom(std::string name, Integer f0, std::vector<Integer> values);

    // {"name": str, "f0": int, "values": [int, ...]}, values are F_1, F_2, ...
    static FSequence from_json(const nlohmann::json& doc);
    static FSequence from_json_file(const std::string& path);

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    long q() const noexcept { return q_; }

    bool defined_at(std::size_t k) const noexcept;
    // Largest index with a defined value; SIZE_MAX for built-ins.
    std::size_t defined_through() const noexcept;

    // F_k
    Integer value(std::size_t k) const;

    // n_F! = F_1 * F_2 * ... * F_n, with 0_F! = 1.
    Integer f_factorial(std::size_t n) const;

    // F_n * F_{n-1} * ... * F_{n-k+1}; k = 0 gives 1.
    Integer falling_factorial(std::size_t n, std::size_t k) const;

    // G with G_i = F_{sigma[i-1]} for 1 <= i <= N and G_0 = F_0, where sigma
    // lists the images of 1..N in order and must be a bijection on {1..N}.
    FSequence permute_prefix(const std::vector<std::size_t>& sigma) const;

private:
    FSequence(Kind kind, std::string name, long q, Integer f0, std::vector<Integer> prefix);

    Kind kind_;
    std::string name_;
    long q_ = 0;                   // gaussian only
    Integer f0_;
    std::vector<Integer> prefix_;  // custom only: F_1..F_len
};

}  // namespace cobweb
