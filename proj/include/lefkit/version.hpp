#ifndef LEFKIT_VERSION_HPP
#define LEFKIT_VERSION_HPP

namespace lefkit {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
