#include "lltext/dsf.hpp"

#include "lltext/error.hpp"
#include "lltext/numgrid.hpp"
#include "lltext/parallel.hpp"
#include "lltext/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <type_traits>

namespace lltext {

double activate(Activation act, double v) {
    switch (act) {
    case Activation::Logistic:
        return sigmoid(v);
    case Activation::Relu:
        return v > 0.0 ? v : 0.0;
    case Activation::Identity:
        return v;
    }
    return v;
}

namespace {

void check_attention(const Grid& tokens, const AttentionParams& p, const std::string& where) {
    require_rank(tokens, 2, where + " tokens");
    require_rank(p.w_q, 2, where + " W_Q");
    require_rank(p.w_k, 2, where + " W_K");
    const std::size_t d = tokens.dim(1);
    if (p.w_q.dim(0) != d || p.w_q.dim(1) != d) throw ShapeError(where, "W_Q", "must be [d,d] with d = " + std::to_string(d));
    if (p.w_k.dim(0) != d || p.w_k.dim(1) != d) throw ShapeError(where, "W_K", "must be [d,d] with d = " + std::to_string(d));
    if (p.b_q.size() != d) throw ShapeError(where, "b_Q", "must have d entries");
    if (p.b_k.size() != d) throw ShapeError(where, "b_K", "must have d entries");
    if (p.d_k == 0) throw ShapeError(where, "d_k", "must be positive");
}

// act(tokens W^T + b), one row per token.
Grid gate(const Grid& tokens, const Grid& w, const std::vector<double>& b, Activation act) {
    const std::size_t n = tokens.dim(0), d = tokens.dim(1);
    Grid out({n, d});
    par::parallel_for(0, static_cast<std::int64_t>(n), [&](std::int64_t r) {
        const auto row = static_cast<std::size_t>(r);
        const double* v = tokens.data().data() + row * d;
        for (std::size_t j = 0; j < d; ++j) {
            const double* wr = w.data().data() + j * d;
            double acc = b[j];
            for (std::size_t i = 0; i < d; ++i) acc += wr[i] * v[i];
            out.at(row, j) = activate(act, acc);
        }
    });
    return out;
}

Grid uniform_grid(Grid::Shape shape, SeededUniform& rng, double range) {
    Grid g(std::move(shape));
    for (auto& v : g.data()) v = rng.next(-range, range);
    return g;
}

std::vector<double> uniform_vec(std::size_t n, SeededUniform& rng, double range) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.next(-range, range);
    return v;
}

ModulationBlockParams make_block(const DsfConfig& cfg, SeededUniform* rng) {
    const std::size_t c = cfg.channels, d = 2 * c, len = cfg.snake_length;
    auto grid = [&](Grid::Shape s) { return rng ? uniform_grid(std::move(s), *rng, cfg.init_range) : Grid(std::move(s)); };
    auto vec = [&](std::size_t n) { return rng ? uniform_vec(n, *rng, cfg.init_range) : std::vector<double>(n, 0.0); };
    ModulationBlockParams p;
    p.channels = c;
    p.conv_weight = grid({c, d, 3, 3});
    p.conv_bias = vec(c);
    p.snake.horizontal.axis = SnakeAxis::Horizontal;
    p.snake.horizontal.length = len;
    p.snake.horizontal.weights = grid({c, d, len});
    p.snake.horizontal.offset_bound = cfg.snake_offset_bound;
    p.snake.vertical.axis = SnakeAxis::Vertical;
    p.snake.vertical.length = len;
    p.snake.vertical.weights = grid({c, d, len});
    p.snake.vertical.offset_bound = cfg.snake_offset_bound;
    p.attention.w_q = grid({d, d});
    p.attention.w_k = grid({d, d});
    p.attention.b_q = vec(d);
    p.attention.b_k = vec(d);
    p.attention.d_k = d;
    p.attention.activation = cfg.activation;
    p.proj_weight = grid({c, d, 1, 1});
    p.proj_bias = vec(c);
    return p;
}

DsfParams make_params(const DsfConfig& cfg, SeededUniform* rng) {
    if (cfg.channels == 0) throw ShapeError("DsfParams", "channels", "must be positive");
    if (cfg.levels == 0) throw ShapeError("DsfParams", "levels", "must be positive");
    if (cfg.blocks_per_level == 0) throw ShapeError("DsfParams", "blocks_per_level", "must be positive");
    if (cfg.snake_length % 2 == 0) throw ShapeError("DsfParams", "snake_length", "must be odd");
    DsfParams p;
    p.config = cfg;
    p.blocks.resize(cfg.levels);
    for (auto& level : p.blocks) {
        for (std::size_t k = 0; k < cfg.blocks_per_level; ++k) level.push_back(make_block(cfg, rng));
    }
    p.head_weight = rng ? uniform_grid({kHeadChannels, cfg.channels, 1, 1}, *rng, cfg.init_range)
                        : Grid({kHeadChannels, cfg.channels, 1, 1});
    p.head_bias = rng ? uniform_vec(kHeadChannels, *rng, cfg.init_range) : std::vector<double>(kHeadChannels, 0.0);
    return p;
}

Grid vec_grid(const std::vector<double>& v) { return Grid({v.size()}, v); }

// Visits every parameter tensor with a stable name.
template <class Params, class F>
void visit_params(Params& p, F&& f) {
    for (std::size_t l = 0; l < p.blocks.size(); ++l) {
        for (std::size_t k = 0; k < p.blocks[l].size(); ++k) {
            auto& b = p.blocks[l][k];
            const std::string pre = "dsf.level" + std::to_string(l) + ".block" + std::to_string(k) + ".";
            f(pre + "conv.weight", b.conv_weight);
            f(pre + "conv.bias", b.conv_bias);
            f(pre + "snake_h.weight", b.snake.horizontal.weights);
            f(pre + "snake_v.weight", b.snake.vertical.weights);
            f(pre + "attn.w_q", b.attention.w_q);
            f(pre + "attn.w_k", b.attention.w_k);
            f(pre + "attn.b_q", b.attention.b_q);
            f(pre + "attn.b_k", b.attention.b_k);
            f(pre + "proj.weight", b.proj_weight);
            f(pre + "proj.bias", b.proj_bias);
        }
    }
    f(std::string("dsf.head.weight"), p.head_weight);
    f(std::string("dsf.head.bias"), p.head_bias);
}

} // namespace

Grid gated_attention(const Grid& tokens, const AttentionParams& params, AttentionTrace* trace) {
    check_attention(tokens, params, "gated_attention");
    const std::size_t n = tokens.dim(0), d = tokens.dim(1);
    const Grid q = gate(tokens, params.w_q, params.b_q, params.activation);
    const Grid k = gate(tokens, params.w_k, params.b_k, params.activation);
    const double scale = 1.0 / std::sqrt(static_cast<double>(params.d_k));
    Grid out({n, d});
    std::vector<double> sums(n, 0.0);
    par::parallel_for(0, static_cast<std::int64_t>(n), [&](std::int64_t r) {
        const auto row = static_cast<std::size_t>(r);
        std::vector<double> weights(n);
        const double* qr = q.data().data() + row * d;
        double peak = -std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < n; ++m) {
            const double* kr = k.data().data() + m * d;
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) s += qr[i] * kr[i];
            weights[m] = s * scale;
            peak = std::max(peak, weights[m]);
        }
        double total = 0.0;
        for (auto& w : weights) {
            w = std::exp(w - peak);
            total += w;
        }
        double row_sum = 0.0;
        double* o = out.data().data() + row * d;
        for (std::size_t m = 0; m < n; ++m) {
            const double w = weights[m] / total;
            row_sum += w;
            const double* v = tokens.data().data() + m * d;
            for (std::size_t i = 0; i < d; ++i) o[i] += w * v[i];
        }
        sums[row] = row_sum;
    });
    if (trace) trace->row_sums.insert(trace->row_sums.end(), sums.begin(), sums.end());
    return out;
}

Grid attention_matrix(const Grid& tokens, const AttentionParams& params) {
    check_attention(tokens, params, "attention_matrix");
    const std::size_t n = tokens.dim(0), d = tokens.dim(1);
    const Grid q = gate(tokens, params.w_q, params.b_q, params.activation);
    const Grid k = gate(tokens, params.w_k, params.b_k, params.activation);
    const double root = std::sqrt(static_cast<double>(params.d_k));
    Grid scores({n, n});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) s += q.at(a, i) * k.at(b, i);
            scores.at(a, b) = s / root;
        }
    return row_softmax(scores);
}

namespace reference {

Grid gated_attention(const Grid& tokens, const AttentionParams& params) {
    const Grid a = attention_matrix(tokens, params);
    const std::size_t n = tokens.dim(0), d = tokens.dim(1);
    Grid out({n, d});
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < d; ++i) {
            double acc = 0.0;
            for (std::size_t m = 0; m < n; ++m) acc += a.at(r, m) * tokens.at(m, i);
            out.at(r, i) = acc;
        }
    return out;
}

} // namespace reference

Grid to_tokens(const Grid& features, std::size_t batch_index) {
    require_rank(features, 4, "to_tokens");
    const std::size_t d = features.dim(1), h = features.dim(2), w = features.dim(3);
    Grid tokens({h * w, d});
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < w; ++x) tokens.at(y * w + x, c) = features.at(batch_index, c, y, x);
    return tokens;
}

void from_tokens(const Grid& tokens, Grid& features, std::size_t batch_index) {
    const std::size_t d = features.dim(1), h = features.dim(2), w = features.dim(3);
    if (tokens.dim(0) != h * w || tokens.dim(1) != d) throw ShapeError("from_tokens", "tokens", "size mismatch");
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < w; ++x) features.at(batch_index, c, y, x) = tokens.at(y * w + x, c);
}

Grid modulation_block(const Grid& c_i, const Grid& f_prev, const ModulationBlockParams& params,
                      AttentionTrace* trace, const std::string& name) {
    require_rank(c_i, 4, name + " C_i");
    require_rank(f_prev, 4, name + " F_prev");
    const std::size_t c = params.channels;
    if (c_i.dim(1) != c) throw ShapeError(name, "C_i channels", "expected " + std::to_string(c) + ", got " + std::to_string(c_i.dim(1)));
    if (f_prev.dim(1) != c) throw ShapeError(name, "F_prev channels", "expected " + std::to_string(c) + ", got " + std::to_string(f_prev.dim(1)));
    if (c_i.dim(0) != f_prev.dim(0) || c_i.dim(2) != f_prev.dim(2) || c_i.dim(3) != f_prev.dim(3)) {
        throw ShapeError(name, "F_prev spatial", shape_string(f_prev.shape()) + " does not match C_i " + shape_string(c_i.shape()));
    }
    if (params.attention.dim() != 2 * c) throw ShapeError(name, "attention d", "must equal 2 * channels");

    const Grid x = concat_channels(c_i, f_prev);
    const Grid conv = conv2d(x, params.conv_weight, params.conv_bias, 1, 1);
    if (conv.dim(1) != c) throw ShapeError(name, "conv branch", "must produce " + std::to_string(c) + " channels");
    Grid snake = params.snake_enabled ? dsc_pair_forward(x, params.snake) : Grid(conv.shape());
    if (snake.shape() != conv.shape()) throw ShapeError(name, "snake branch", "output " + shape_string(snake.shape()) + " differs from conv branch");
    const Grid v = concat_channels(conv, snake);

    Grid attended(v.shape());
    for (std::size_t b = 0; b < v.dim(0); ++b) {
        from_tokens(gated_attention(to_tokens(v, b), params.attention, trace), attended, b);
    }
    return conv2d(attended, params.proj_weight, params.proj_bias, 1, 0);
}

DsfParams DsfParams::seeded(const DsfConfig& config, std::uint64_t seed) {
    SeededUniform rng(seed);
    return make_params(config, &rng);
}

DsfParams DsfParams::zeros(const DsfConfig& config) { return make_params(config, nullptr); }

NamedGrids DsfParams::to_sections() const {
    NamedGrids out;
    visit_params(*this, [&](const std::string& name, auto& value) {
        if constexpr (std::is_same_v<std::decay_t<decltype(value)>, Grid>) {
            out.emplace_back(name, value);
        } else {
            out.emplace_back(name, vec_grid(value));
        }
    });
    return out;
}

DsfParams DsfParams::from_sections(const DsfConfig& config, const NamedGrids& sections) {
    std::map<std::string, const Grid*> by_name;
    for (const auto& [name, grid] : sections) by_name[name] = &grid;
    DsfParams p = zeros(config);
    visit_params(p, [&](const std::string& name, auto& value) {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw ShapeError("DsfParams", name, "section missing");
        const Grid& g = *it->second;
        if constexpr (std::is_same_v<std::decay_t<decltype(value)>, Grid>) {
            if (g.shape() != value.shape()) {
                throw ShapeError("DsfParams", name, "expected " + shape_string(value.shape()) + ", got " + shape_string(g.shape()));
            }
            value = g;
        } else {
            if (g.rank() != 1 || g.size() != value.size()) {
                throw ShapeError("DsfParams", name, "expected [" + std::to_string(value.size()) + "], got " + shape_string(g.shape()));
            }
            value.assign(g.data().begin(), g.data().end());
        }
    });
    return p;
}

GeometryMaps DsfOutput::geometry(std::size_t batch_index) const {
    const std::size_t h = head.dim(2), w = head.dim(3);
    auto plane = [&](std::size_t ch) {
        Grid g({h, w});
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < w; ++x) g.at(y, x) = head.at(batch_index, ch, y, x);
        return g;
    };
    return {plane(0), plane(1), plane(2), plane(3), plane(4), plane(5), plane(6)};
}

DsfOutput dsf_forward(const std::vector<Grid>& feats, const DsfParams& params) {
    const auto& cfg = params.config;
    if (feats.size() != cfg.levels || params.blocks.size() != cfg.levels) {
        throw ShapeError("dsf_forward", "levels", "expected " + std::to_string(cfg.levels) + " pyramid levels, got " +
                                                      std::to_string(feats.size()));
    }
    for (std::size_t l = 0; l < feats.size(); ++l) {
        const std::string where = "dsf_forward level " + std::to_string(l);
        require_rank(feats[l], 4, where);
        if (feats[l].dim(1) != cfg.channels) throw ShapeError(where, "channels", "expected " + std::to_string(cfg.channels));
        if (l + 1 < feats.size()) {
            const auto& coarse = feats[l + 1];
            require_rank(coarse, 4, "dsf_forward level " + std::to_string(l + 1));
            if (feats[l].dim(2) != 2 * coarse.dim(2) || feats[l].dim(3) != 2 * coarse.dim(3)) {
                throw ShapeError(where, "spatial", shape_string(feats[l].shape()) + " is not twice " + shape_string(coarse.shape()));
            }
            if (feats[l].dim(0) != coarse.dim(0)) throw ShapeError(where, "batch", "differs between levels");
        }
    }

    DsfOutput out;
    out.fused.resize(cfg.levels);
    Grid carried;
    for (std::size_t l = cfg.levels; l-- > 0;) {
        Grid f = (l + 1 == cfg.levels) ? Grid(feats[l].shape()) : upsample2x(carried);
        for (std::size_t k = 0; k < params.blocks[l].size(); ++k) {
            f = modulation_block(feats[l], f, params.blocks[l][k], &out.trace,
                                 "level " + std::to_string(l) + " block " + std::to_string(k));
        }
        out.fused[l] = f;
        carried = std::move(f);
    }

    out.head = conv2d(out.fused[0], params.head_weight, params.head_bias, 1, 0);
    const std::size_t plane = out.head.dim(2) * out.head.dim(3);
    for (std::size_t b = 0; b < out.head.dim(0); ++b) {
        for (std::size_t ch = 0; ch < 2; ++ch) {
            auto span = out.head.data().subspan((b * kHeadChannels + ch) * plane, plane);
            for (auto& v : span) v = sigmoid(v);
        }
    }
    return out;
}

BackboneStub BackboneStub::seeded(std::size_t channels, std::uint64_t seed, double init_range) {
    SeededUniform rng(seed);
    BackboneStub s;
    s.channels = channels;
    s.weights.push_back(uniform_grid({channels, 1, 5, 5}, rng, init_range));
    s.biases.push_back(uniform_vec(channels, rng, init_range));
    for (int i = 0; i < 3; ++i) {
        s.weights.push_back(uniform_grid({channels, channels, 3, 3}, rng, init_range));
        s.biases.push_back(uniform_vec(channels, rng, init_range));
    }
    return s;
}

std::vector<Grid> BackboneStub::forward(const Grid& image) const {
    require_rank(image, 4, "BackboneStub image");
    if (image.dim(2) % 32 != 0 || image.dim(3) % 32 != 0) {
        throw ShapeError("BackboneStub", "frame", "height and width must be multiples of 32");
    }
    auto relu = [](Grid g) {
        for (auto& v : g.data()) v = v > 0.0 ? v : 0.0;
        return g;
    };
    std::vector<Grid> levels;
    levels.push_back(relu(conv2d(image, weights[0], biases[0], 4, 2)));
    for (std::size_t i = 1; i < 4; ++i) levels.push_back(relu(conv2d(levels.back(), weights[i], biases[i], 2, 1)));
    return levels;
}

} // namespace lltext
