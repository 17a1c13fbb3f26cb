#pragma once

#include "carrylab/kernels.hpp"
#include "json.hpp"

// JSON round-trips for the sweep accumulators, used by the engine to
// checkpoint partial sweeps.

namespace carrylab::kernels {

nlohmann::ordered_json acc_to_json(const SetSweepAcc& acc);
SetSweepAcc set_acc_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json acc_to_json(const WindowSweepAcc& acc);
WindowSweepAcc window_acc_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json acc_to_json(const PairSweepAcc& acc);
PairSweepAcc pair_acc_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json acc_to_json(const SubsetSweepAcc& acc);
SubsetSweepAcc subset_acc_from_json(const nlohmann::ordered_json& j);

}  // namespace carrylab::kernels
