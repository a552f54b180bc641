#ifndef GRIDBOND_VERSION_HPP
#define GRIDBOND_VERSION_HPP

namespace gridbond {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gridbond

#endif
