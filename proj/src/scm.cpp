#include "lltext/scm.hpp"

#include "lltext/error.hpp"
#include "lltext/numgrid.hpp"
#include "lltext/random.hpp"

namespace lltext {

PositionMask build_position_mask(std::span<const TextPolygon> polygons, std::size_t height, std::size_t width) {
    PositionMask out{Grid({height, width}), {polygons.begin(), polygons.end()}};
    for (const auto& p : polygons) {
        if (p.vertices.size() < 3) {
            throw GeometryError("build_position_mask: polygon needs at least 3 vertices, got " +
                                std::to_string(p.vertices.size()));
        }
    }
    for (const auto& p : polygons) rasterize_into(p, out.mask);
    return out;
}

Grid positional_embedding(std::size_t channels, std::size_t height, std::size_t width) {
    Grid e({channels, height, width});
    for (std::size_t c = 0; c < channels; ++c)
        for (std::size_t i = 0; i < height; ++i)
            for (std::size_t j = 0; j < width; ++j) {
                e.at(c, i, j) = c % 2 == 0 ? (static_cast<double>(i) + 0.5) / static_cast<double>(height)
                                           : (static_cast<double>(j) + 0.5) / static_cast<double>(width);
            }
    return e;
}

Grid merge_positional(const Grid& features, const Grid& embedding) {
    require_rank(features, 4, "merge_positional features");
    require_rank(embedding, 3, "merge_positional embedding");
    for (std::size_t a = 0; a < 3; ++a) {
        if (features.dim(a + 1) != embedding.dim(a)) {
            static const char* names[] = {"C", "H", "W"};
            throw ShapeError("merge_positional", names[a],
                             shape_string(features.shape()) + " vs embedding " + shape_string(embedding.shape()));
        }
    }
    Grid out(features.shape());
    const std::size_t per = embedding.size();
    for (std::size_t i = 0; i < features.size(); ++i) out[i] = features[i] + embedding[i % per];
    return out;
}

ScmDecoder ScmDecoder::seeded(std::size_t channels, std::uint64_t seed, double init_range) {
    if (channels < 2) throw ShapeError("ScmDecoder", "channels", "need at least 2");
    SeededUniform rng(seed);
    const std::size_t mid = channels / 2;
    auto fill = [&](Grid g) {
        for (auto& v : g.data()) v = rng.next(-init_range, init_range);
        return g;
    };
    ScmDecoder d;
    d.w1 = fill(Grid({mid, channels, 3, 3}));
    d.b1.resize(mid);
    for (auto& v : d.b1) v = rng.next(-init_range, init_range);
    d.w2 = fill(Grid({1, mid, 3, 3}));
    d.b2 = {rng.next(-init_range, init_range)};
    return d;
}

Grid ScmDecoder::forward(const Grid& features) const {
    Grid hidden = conv2d(features, w1, b1, 1, 1);
    for (auto& v : hidden.data()) v = v > 0.0 ? v : 0.0;
    return sigmoid(conv2d(hidden, w2, b2, 1, 1));
}

Grid scm_reconstruct(const Grid& features, const ScmDecoder& decoder) {
    require_rank(features, 4, "scm_reconstruct");
    const auto emb = positional_embedding(features.dim(1), features.dim(2), features.dim(3));
    const Grid decoded = decoder.forward(merge_positional(features, emb));
    Grid out({decoded.dim(2), decoded.dim(3)});
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = decoded[i];
    return out;
}

LossGrad loss_sr(const Grid& reconstruction, const PositionMask& target) {
    require_same_shape(reconstruction, target.mask, "loss_sr");
    LossGrad out{0.0, Grid(reconstruction.shape())};
    const double n = static_cast<double>(reconstruction.size());
    if (reconstruction.size() == 0) return out;
    for (std::size_t i = 0; i < reconstruction.size(); ++i) {
        const double e = reconstruction[i] - target.mask[i];
        out.loss += std::abs(e);
        out.grad[i] = e > 0.0 ? 1.0 / n : (e < 0.0 ? -1.0 / n : 0.0);
    }
    out.loss /= n;
    return out;
}

PairLossGrad loss_ss(const Grid& aux_feat, const Grid& main_feat) {
    require_same_shape(aux_feat, main_feat, "loss_ss");
    PairLossGrad out{0.0, Grid(aux_feat.shape()), Grid(aux_feat.shape())};
    if (aux_feat.size() == 0) return out;
    const double n = static_cast<double>(aux_feat.size());
    for (std::size_t i = 0; i < aux_feat.size(); ++i) {
        const double d = aux_feat[i] - main_feat[i];
        out.loss += d * d;
        out.grad_a[i] = 2.0 * d / n;
        out.grad_b[i] = -2.0 * d / n;
    }
    out.loss /= n;
    return out;
}

} // namespace lltext
