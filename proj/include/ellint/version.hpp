#ifndef ELLINT_VERSION_HPP
#define ELLINT_VERSION_HPP

namespace ellint {

inline constexpr const char* version = "1.0.0";

}  // namespace ellint

#endif  // ELLINT_VERSION_HPP
