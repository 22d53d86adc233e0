#ifndef SCS_VERSION_HPP
#define SCS_VERSION_HPP

namespace scs {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
