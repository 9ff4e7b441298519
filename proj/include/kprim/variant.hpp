#pragma once

#include <stdexcept>
#include <string>

namespace kprim {

// The three primitivity notions handled by the library.  "main" is the
// plain notion (no member divides a product of up to k distinct others),
// "lcm" replaces the product by a least common multiple, and "strong"
// allows repeated factors in the product.
enum class Variant { main, lcm, strong };

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::main:   return "main";
        case Variant::lcm:    return "lcm";
        case Variant::strong: return "strong";
    }
    return "?";
}

inline Variant variant_from_string(const std::string& s) {
    if (s == "main")   return Variant::main;
    if (s == "lcm")    return Variant::lcm;
    if (s == "strong") return Variant::strong;
    throw std::invalid_argument("unknown variant: " + s);
}

} // namespace kprim
