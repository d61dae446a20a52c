#include "vqaa/config_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vqaa {

namespace {

using nlohmann::json;

TargetFamily parse_family(const std::string& name) {
  if (name == "sdes") return TargetFamily::SDes;
  if (name == "saes") return TargetFamily::SAes;
  if (name == "blowfish") return TargetFamily::BlowfishShard;
  if (name == "hash") return TargetFamily::Hash;
  throw std::invalid_argument("unknown target family: " + name);
}

OptMethod parse_method(const std::string& name) {
  if (name == "gd") return OptMethod::GradientDescent;
  if (name == "hyperspherical") return OptMethod::Hyperspherical;
  if (name == "plane-rotation") return OptMethod::PlaneRotation;
  throw std::invalid_argument("unknown optimizer method: " + name);
}

}  // namespace

ExperimentSpec parse_experiment_json(const std::string& text) {
  json doc = json::parse(text);
  ExperimentSpec spec;
  const json& target = doc.at("target");
  spec.family = parse_family(target.at("family").get<std::string>());
  spec.blowfish_key_bits = target.value("key_bits", spec.blowfish_key_bits);
  spec.prefix_fixed_bits = target.value("prefix_fixed_bits", spec.prefix_fixed_bits);
  spec.hash_document_bits = target.value("document_bits", spec.hash_document_bits);
  spec.hash_segment_bits = target.value("segment_bits", spec.hash_segment_bits);
  spec.hash_digest_bits = target.value("digest_bits", spec.hash_digest_bits);

  const json& ansatz = doc.at("ansatz");
  spec.ansatz.n_qubits = ansatz.at("n_qubits").get<int>();
  spec.ansatz.n_layers = ansatz.value("n_layers", spec.ansatz.n_layers);
  spec.ansatz.cnot_seed = ansatz.value("cnot_seed", spec.ansatz.cnot_seed);
  spec.ansatz.lambda_zero = ansatz.value("lambda_zero", spec.ansatz.lambda_zero);
  spec.ansatz.extra_cnots_per_layer =
      ansatz.value("extra_cnots_per_layer", spec.ansatz.extra_cnots_per_layer);

  if (doc.contains("optimizer")) {
    const json& opt = doc["optimizer"];
    spec.optimizer.method = parse_method(opt.value("method", "hyperspherical"));
    spec.optimizer.learning_rate = opt.value("learning_rate", spec.optimizer.learning_rate);
    spec.optimizer.fd_step = opt.value("fd_step", spec.optimizer.fd_step);
    spec.optimizer.rotation_angle = opt.value("rotation_angle", spec.optimizer.rotation_angle);
  }
  if (doc.contains("encoding"))
    spec.states_per_qubit = doc["encoding"].value("states_per_qubit", 1);

  spec.trials = doc.value("trials", spec.trials);
  spec.master_seed = doc.value("seed", spec.master_seed);
  spec.max_iterations = doc.value("max_iterations", spec.max_iterations);
  spec.optimizer.max_iterations = spec.max_iterations;
  spec.baseline = doc.value("baseline", spec.baseline);
  spec.out_dir = doc.value("output", spec.out_dir);
  spec.jobs = doc.value("jobs", spec.jobs);
  return spec;
}

ExperimentSpec load_experiment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_json(buf.str());
}

std::string attack_result_json(const AttackResult& result) {
  json doc;
  doc["success"] = result.success;
  if (result.recovered_key) doc["recovered_key_hex"] = result.recovered_key->to_hex();
  doc["iterations"] = result.iterations;
  doc["measurements"] = result.measurements;
  doc["wall_seconds"] = result.wall_seconds;
  return doc.dump();
}

std::string summary_json(const ExperimentSummary& summary) {
  json doc;
  doc["trials"] = summary.trials;
  doc["success_rate"] = summary.success_rate;
  doc["mean_iterations"] = summary.mean_iterations;
  doc["mean_measurements"] = summary.mean_measurements;
  doc["param_count"] = summary.param_count;
  if (summary.baseline_mean_trials > 0)
    doc["baseline_mean_trials"] = summary.baseline_mean_trials;
  doc["total_wall_seconds"] = summary.total_wall_seconds;
  return doc.dump();
}

}  // namespace vqaa
