#pragma once

#include <cstddef>
#include <string_view>

namespace nnssim {

enum class NeuronStatus {
    Liquid,
    Staking,
    Dissolving,
};

std::string_view to_string(NeuronStatus status) noexcept;

/// One agent's neuron.
///
/// Liquid neurons have zero stake, delay and age. Staking neurons hold a
/// positive stake with a frozen delay of at least six months and accrue age.
/// Dissolving neurons count their delay down with age pinned at zero.
/// Rewards always land in `liquid_balance`.
struct NeuronState {
    std::size_t agent_id = 0;
    NeuronStatus status = NeuronStatus::Liquid;
    double stake = 0.0;
    double liquid_balance = 0.0;
    int dissolve_delay = 0;  // months
    int age = 0;             // months

    double holdings() const noexcept { return stake + liquid_balance; }

    friend bool operator==(const NeuronState&, const NeuronState&) = default;
};

}  // namespace nnssim
