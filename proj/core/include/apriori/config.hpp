#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "apriori/calibrate.hpp"
#include "apriori/estimates.hpp"
#include "apriori/solver.hpp"
#include "apriori/transforms.hpp"

namespace apriori {

/// Thrown by parse_config with every problem found, one message per line.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }

  private:
    std::vector<std::string> errors_;
};

struct ExperimentConfig {
    SimConfig sim;
    bool has_simulation = false;

    TransformParams transform;
    bool has_transform = false;

    EstimateParams check;
    std::vector<double> gamma_grid;
    double rtol = 5e-2;
    bool has_check = false;

    ConstantKind calib_kind = ConstantKind::commutator;
    int calib_trials = 32;
    std::uint64_t calib_seed = 1;
    int calib_n = 64;
    int calib_k = 3;
    double calib_p = 2.0;
    bool has_calibration = false;

    std::string out_dir = "out";
    bool emit_svg = true;
    bool emit_json = true;
};

/// Sectioned key = value text ([simulation], [transform], [check],
/// [calibration], [output]). Collects every error before throwing.
ExperimentConfig parse_config(const std::string& path);

}  // namespace apriori
