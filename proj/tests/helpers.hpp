#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "korselt/constructors.hpp"
#include "korselt/core.hpp"
#include "korselt/oracle.hpp"

namespace kt {

inline korselt::Int I(long v) { return korselt::Int(v); }

inline korselt::Rational rat(long num, long den = 1) {
    return {korselt::Int(num), korselt::Int(den)};
}

inline korselt::PrimePower pp(unsigned long q, unsigned long l) {
    return {korselt::Int(q), l};
}

inline std::vector<std::string> strs(const korselt::KorseltSet& set) {
    std::vector<std::string> out;
    for (const korselt::Rational& r : set.members()) out.push_back(r.str());
    return out;
}

inline std::vector<std::string> strs(const std::vector<korselt::Rational>& values) {
    std::vector<std::string> out;
    for (const korselt::Rational& r : values) out.push_back(r.str());
    return out;
}

inline std::vector<std::string> S(std::initializer_list<const char*> items) {
    return {items.begin(), items.end()};
}

} // namespace kt
