#pragma once

#include <stdexcept>
#include <string>

namespace hbtms {

/// Raised by scenario/config validation; carries the dotted field path
/// (e.g. "pcm.latent_heat") so the CLI can point at the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field_path, const std::string& what)
        : std::runtime_error(field_path + ": " + what), field_(std::move(field_path)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when the transient integration produces a non-finite value.
/// Names the first offending node and the simulation time.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::string node_id, double time_s)
        : std::runtime_error("non-finite state at node '" + node_id + "' at t=" +
                             std::to_string(time_s) + " s"),
          node_(std::move(node_id)), time_(time_s) {}

    const std::string& node() const noexcept { return node_; }
    double time() const noexcept { return time_; }

private:
    std::string node_;
    double time_;
};

} // namespace hbtms
