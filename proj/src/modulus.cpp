#include "kmm/modulus.hpp"

#include <string>

#include "kmm/error.hpp"

namespace kmm {

Modulus::Modulus(int k) : k_(k) {
    if (k < min_value || k > max_value)
        throw Error(ErrorCode::invalid_modulus,
                    "k must be in " + std::to_string(min_value) + ".." +
                        std::to_string(max_value) + ", got " + std::to_string(k));
}

std::optional<Modulus> Modulus::try_make(int k) noexcept {
    if (k < min_value || k > max_value) return std::nullopt;
    return Modulus(k, Unchecked{});
}

} // namespace kmm
