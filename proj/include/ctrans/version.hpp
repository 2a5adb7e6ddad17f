#ifndef CTRANS_VERSION_HPP
#define CTRANS_VERSION_HPP

namespace ctrans {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
