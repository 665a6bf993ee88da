#pragma once

#include "lltext/dsc.hpp"
#include "lltext/grid.hpp"
#include "lltext/maps.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lltext {

enum class Activation { Logistic, Relu, Identity };

double activate(Activation act, double v);

/// Query/key gate of the attention branch. Tokens have `d` features.
struct AttentionParams {
    Grid w_q;  // [d,d]
    Grid w_k;  // [d,d]
    std::vector<double> b_q;
    std::vector<double> b_k;
    std::size_t d_k = 0;
    Activation activation = Activation::Logistic;

    std::size_t dim() const { return w_q.dim(0); }
};

struct AttentionTrace {
    /// Sum of each softmax row, one entry per token, appended per call.
    std::vector<double> row_sums;
};

/// softmax(act(V Wq^T + bq) act(V Wk^T + bk)^T / sqrt(d_k)) V over token rows
/// of `tokens` [N,d]. Rows are streamed so the N x N matrix is never stored.
Grid gated_attention(const Grid& tokens, const AttentionParams& params, AttentionTrace* trace = nullptr);

/// The full [N,N] attention matrix, for inspection in tests and tools.
Grid attention_matrix(const Grid& tokens, const AttentionParams& params);

/// [1,d,H,W] <-> [H*W,d] token rows (row-major over pixels).
Grid to_tokens(const Grid& features, std::size_t batch_index);
void from_tokens(const Grid& tokens, Grid& features, std::size_t batch_index);

struct ModulationBlockParams {
    std::size_t channels = 0;      // c, per input stream and per output
    Grid conv_weight;              // [c, 2c, 3, 3]
    std::vector<double> conv_bias; // [c]
    SnakePair snake;               // weights [c, 2c, L]
    AttentionParams attention;     // d = 2c
    Grid proj_weight;              // [c, 2c, 1, 1]
    std::vector<double> proj_bias; // [c]
    /// Drop the snake branch (replaced by zeros) for ablation checks.
    bool snake_enabled = true;
};

/// One perceptual modulation block: concat(C_i, F_prev) -> conv || snake ->
/// gated attention -> 1x1 projection back to c channels.
/// `name` labels errors ("level 2 block 0").
Grid modulation_block(const Grid& c_i, const Grid& f_prev, const ModulationBlockParams& params,
                      AttentionTrace* trace = nullptr, const std::string& name = "block");

struct DsfConfig {
    std::size_t channels = 256;
    std::size_t levels = 4;           // scales 1/4, 1/8, 1/16, 1/32
    std::size_t blocks_per_level = 1;
    std::size_t snake_length = 9;
    double snake_offset_bound = 1.0;
    Activation activation = Activation::Logistic;
    double init_range = 0.05;
};

/// Number of regression/score channels emitted by the head.
inline constexpr std::size_t kHeadChannels = 7;

struct DsfParams {
    DsfConfig config;
    /// blocks[level][k], level 0 is the finest (1/4) scale.
    std::vector<std::vector<ModulationBlockParams>> blocks;
    Grid head_weight;              // [7, c, 1, 1]
    std::vector<double> head_bias; // [7]

    static DsfParams seeded(const DsfConfig& config, std::uint64_t seed);
    static DsfParams zeros(const DsfConfig& config);

    NamedGrids to_sections() const;
    static DsfParams from_sections(const DsfConfig& config, const NamedGrids& sections);
};

struct DsfOutput {
    /// Fused features per level, finest first.
    std::vector<Grid> fused;
    /// [B,7,H/4,W/4]: text and centre maps (logistic) followed by x,y,h,w,theta.
    Grid head;
    AttentionTrace trace;

    GeometryMaps geometry(std::size_t batch_index = 0) const;
};

/// Top-down fusion of backbone features given finest first (1/4 ... 1/32).
DsfOutput dsf_forward(const std::vector<Grid>& backbone_feats, const DsfParams& params);

/// Four strided convolutions turning a [1,1,H,W] image into the 1/4..1/32
/// pyramid. Stand-in for a real backbone.
struct BackboneStub {
    std::size_t channels = 0;
    std::vector<Grid> weights;
    std::vector<std::vector<double>> biases;

    static BackboneStub seeded(std::size_t channels, std::uint64_t seed, double init_range = 0.05);
    std::vector<Grid> forward(const Grid& image) const;
};

namespace reference {
Grid gated_attention(const Grid& tokens, const AttentionParams& params);
}

} // namespace lltext
