#ifndef INCENT_VERSION_HPP
#define INCENT_VERSION_HPP

namespace incent {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // INCENT_VERSION_HPP
