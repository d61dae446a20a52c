#pragma once

#include <string>

#include "vqaa/experiment.hpp"

namespace vqaa {

// Parses the JSON experiment document with sections
// {target, ansatz, optimizer, encoding, trials, seed, output}.
ExperimentSpec parse_experiment_json(const std::string& text);
ExperimentSpec load_experiment_file(const std::string& path);

std::string attack_result_json(const AttackResult& result);
std::string summary_json(const ExperimentSummary& summary);

}  // namespace vqaa
