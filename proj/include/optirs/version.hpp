// SPDX-License-Identifier: Apache-2.0

#ifndef OPTIRS_VERSION_HPP
#define OPTIRS_VERSION_HPP

namespace optirs {
inline constexpr const char* version_string = "optirs 0.1.0";
}

#endif
