#pragma once

#include <string>

namespace wander {

// The three published construction variants.
enum class TargetVariant {
    Wandering,    // escaping wandering chain B'_k -> B'_{k+1}
    Attracting,   // self-trapping B'_k -> B'_k
    CommonPath,   // A'_k funneled into B'_1
};

std::string to_string(TargetVariant v);
TargetVariant parse_variant(const std::string& name);

}  // namespace wander
