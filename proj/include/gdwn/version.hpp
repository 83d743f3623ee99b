#ifndef GDWN_VERSION_HPP
#define GDWN_VERSION_HPP

namespace gdwn {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace gdwn

#endif
