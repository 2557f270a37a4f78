#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "kstsp/families.hpp"
#include "kstsp/model.hpp"

namespace kstsp {

// Wire formats. Serialization is canonical: sorted keys, no insignificant
// whitespace, newline-terminated, so serialize(parse(s)) == s byte for byte.
// Parsers throw std::invalid_argument on malformed input.

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Solution parse_solution(const std::string& text);
std::string serialize_solution(const Solution& sol);

/// Accepts any document with "t1" and "t2" arrays (a solution file works).
std::pair<Tour, Tour> parse_tour_pair(const std::string& text);

std::string claims_csv(const std::vector<ClaimRow>& rows);

/// Seeded generator: both matrices drawn independently and uniformly from
/// [lo, hi], diagonal zero, asymmetric. Same seed, same instance, on every
/// platform (rejection sampling, no library distributions).
Instance random_instance(int n, int k, Cost lo, Cost hi, std::uint64_t seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace kstsp
