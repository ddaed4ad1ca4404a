#pragma once

#include <iosfwd>
#include <string>

#include "mmo/engine.hpp"

namespace mmo {

/// Columns t, loss, reward_cum, theta_norm, eps_t, then w_i and g_i per
/// coordinate when d <= 8. Numbers use 17 significant digits; a missing
/// eps_t is an empty field.
void write_trace_csv(const Trace& trace, std::ostream& out);

/// Full-fidelity JSON; read_trace_json(write_trace_json(x)) == x bit for bit.
void write_trace_json(const Trace& trace, std::ostream& out);
Trace read_trace_json(std::istream& in);

void save_trace(const Trace& trace, const std::string& path, bool json);
Trace load_trace_json(const std::string& path);

}  // namespace mmo
