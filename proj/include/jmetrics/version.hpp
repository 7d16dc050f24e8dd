#pragma once

namespace jmetrics {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kStoreFormatVersion = 1;

}  // namespace jmetrics
