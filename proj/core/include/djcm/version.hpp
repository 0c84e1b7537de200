#ifndef DJCM_VERSION_HPP
#define DJCM_VERSION_HPP

#define DJCM_VERSION_STRING "1.0.0"

namespace djcm {
inline constexpr const char* version() { return DJCM_VERSION_STRING; }
}

#endif
