#pragma once

#include "rufpp/model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rufpp {

/// A path plus its flows in arrival order; flow ids equal their positions.
struct Instance {
    PathInstance path;
    std::vector<Flow> flows;
};

/*
 * Instance text format:
 *   m
 *   c_1 ... c_m
 *   n
 *   s t sigma      (n lines, arrival order)
 * Numbers are decimals or p/q fractions. Blank lines and '#' comments are skipped.
 */
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& instance);

/*
 * Schedule text format: one "flow_index round_index" line per flow (both
 * 1-based, flow_index = position in the instance), then "rounds <count>".
 */
Schedule read_schedule(std::istream& in);
Schedule read_schedule_file(const std::string& path);
void write_schedule(std::ostream& out, const Schedule& schedule);

} // namespace rufpp
