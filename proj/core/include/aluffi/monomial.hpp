#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aluffi {

// Exponent vector of fixed length (= number of ring variables).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial one(std::size_t nvars);
    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

    std::size_t var_count() const noexcept { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;    // this | other
    // other | this must hold; returns the quotient this / other.
    Monomial divide(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

} // namespace aluffi
