#pragma once

#include <string>

namespace genoq::emit {

// 17 significant digits round-trips any IEEE double and keeps machine
// output byte-stable across reruns.
std::string fmt_double(double v);

std::string json_escape(const std::string& s);

}  // namespace genoq::emit
