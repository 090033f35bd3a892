#pragma once

#include <gmpxx.h>

#include <string>

namespace assoc {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace assoc
