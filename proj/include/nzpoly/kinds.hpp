#pragma once

#include <string>

namespace nzpoly {

enum class CountKind {
    modular_flow,
    modular_tension,
    integral_flow,
    integral_tension,
};

std::string to_string(CountKind kind);
CountKind count_kind_from_string(const std::string& s);

inline bool is_flow_kind(CountKind k) {
    return k == CountKind::modular_flow || k == CountKind::integral_flow;
}
inline bool is_modular_kind(CountKind k) {
    return k == CountKind::modular_flow || k == CountKind::modular_tension;
}

} // namespace nzpoly
