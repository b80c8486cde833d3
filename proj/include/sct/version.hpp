#pragma once

namespace sct {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever the enumeration algorithm or the interchange format
// changes; cache files carrying a different tag are ignored.
inline constexpr const char* kCacheVersion = "sct-cache-1";

}  // namespace sct
