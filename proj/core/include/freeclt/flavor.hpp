#pragma once

#include <string>
#include <string_view>

namespace freeclt {

/// Which probability theory a computation lives in: classical (tensor
/// independence, all set partitions) or free (free independence,
/// noncrossing partitions).
enum class Flavor { classical, free };

std::string to_string(Flavor flavor);
/// Accepts "classical" or "free"; throws std::invalid_argument otherwise.
Flavor parse_flavor(std::string_view text);

}  // namespace freeclt
