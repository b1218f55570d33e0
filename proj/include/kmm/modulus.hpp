#pragma once

#include <cstdint>
#include <optional>

namespace kmm {

/// The divisor k. Valid values are 2..=128: k = 1 is the identity, and above
/// 128 fewer than three quotient levels remain.
class Modulus {
public:
    static constexpr int min_value = 2;
    static constexpr int max_value = 128;

    /// Throws kmm::Error(invalid_modulus) outside [min_value, max_value].
    explicit Modulus(int k);

    static std::optional<Modulus> try_make(int k) noexcept;

    constexpr int value() const noexcept { return k_; }

    friend bool operator==(Modulus, Modulus) = default;
    friend auto operator<=>(Modulus, Modulus) = default;

private:
    struct Unchecked {};
    constexpr Modulus(int k, Unchecked) noexcept : k_(k) {}

    int k_;
};

} // namespace kmm
