#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "josabpp/types.hpp"

namespace josabpp {

/// Schema version written into every instance and solution file. Loaders
/// reject files with a different version.
inline constexpr int kFormatVersion = 1;

/// Parses and validates an instance. Throws ParseError on malformed input
/// and ValidationError (with one entry per problem) on invariant violations:
/// non-positive or oversized article volumes, empty orders, dangling ids,
/// out-of-range locations, bad cross-aisle lists, supply < demand, ...
Instance load_instance(std::istream& in);
Instance load_instance_file(const std::filesystem::path& path);

/// Canonical serialization: keys sorted, arrays ordered by id, fixed number
/// formatting. save(load(save(x))) == save(x) byte for byte.
std::string save_instance(const Instance& instance);
void save_instance_file(const Instance& instance, const std::filesystem::path& path);

Solution load_solution(std::istream& in);
Solution load_solution_file(const std::filesystem::path& path);
std::string save_solution(const Solution& solution);
void save_solution_file(const Solution& solution, const std::filesystem::path& path);

}  // namespace josabpp
