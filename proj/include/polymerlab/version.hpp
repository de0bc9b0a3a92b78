#ifndef POLYMERLAB_VERSION_HPP
#define POLYMERLAB_VERSION_HPP

namespace polymerlab {

inline constexpr const char* kVersion = "polymerlab 0.1.0";

}

#endif
