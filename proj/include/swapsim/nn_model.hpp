#pragma once

// NN workload model: per-layer byte/op accounting and the compute-vs-IO
// taxonomy used to reason about out-of-core execution on MCU-class hardware.
//
// A layer is summarized by four numbers: input/weight/output tensor bytes and
// arithmetic ops (one multiply-accumulate = 2 ops). Classification compares
// the layer's compute delay against its transfer delay on a given hardware
// profile via the normalized arithmetic intensity
//
//     N = (W / S_cpu) / (Q / S_io),   Q = input + weight + output bytes.
//
// N > 1 means the CPU is the bottleneck (compute-bound layer); N <= 1 means
// the transfer channel is (IO-bound layer). Layers that are a negligible
// fraction of both the network's total ops and total bytes are classed
// Insignificant and ignored by overhead analyses.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "swapsim/units.hpp"

namespace swapsim {

enum class LayerKind {
    kConv,
    kDepthwiseConv,
    kPointwiseConv,
    kFullyConnected,
    kRelu,
    kPool,
};

inline const char* to_string(LayerKind k) {
    switch (k) {
        case LayerKind::kConv: return "conv";
        case LayerKind::kDepthwiseConv: return "depthwise_conv";
        case LayerKind::kPointwiseConv: return "pointwise_conv";
        case LayerKind::kFullyConnected: return "fully_connected";
        case LayerKind::kRelu: return "relu";
        case LayerKind::kPool: return "pool";
    }
    return "?";
}

struct LayerSpec {
    std::string name;
    LayerKind kind{LayerKind::kConv};
    Bytes input_bytes{0};
    Bytes weight_bytes{0};  // 0 for relu/pool
    Bytes output_bytes{0};
    std::uint64_t ops{0};   // MACs count as 2

    // Q: bytes moved once per frame, pre-tiling. Weight re-reads introduced by
    // tiling are a scheduling concern, not a taxonomy one.
    Bytes moved_bytes() const { return input_bytes + weight_bytes + output_bytes; }

    void validate() const {
        if (name.empty()) throw ValidationError("layer has empty name");
        if (input_bytes == 0 || output_bytes == 0)
            throw ValidationError("layer '" + name + "': input/output bytes must be positive");
    }
};

struct NNSpec {
    std::string name;
    std::vector<LayerSpec> layers;

    std::uint64_t total_ops() const {
        std::uint64_t s = 0;
        for (const auto& l : layers) s += l.ops;
        return s;
    }
    Bytes total_moved_bytes() const {
        Bytes s = 0;
        for (const auto& l : layers) s += l.moved_bytes();
        return s;
    }
    Bytes total_weight_bytes() const {
        Bytes s = 0;
        for (const auto& l : layers) s += l.weight_bytes;
        return s;
    }
    Bytes total_output_bytes() const {
        Bytes s = 0;
        for (const auto& l : layers) s += l.output_bytes;
        return s;
    }
    // Minimum memory to run fully in-core: all weights plus the largest
    // in+out working set of any single layer.
    Bytes footprint_bytes() const {
        Bytes mx = 0;
        for (const auto& l : layers) mx = std::max(mx, l.input_bytes + l.output_bytes);
        return total_weight_bytes() + mx;
    }

    void validate() const {
        if (layers.empty()) throw ValidationError("network '" + name + "' has no layers");
        for (const auto& l : layers) l.validate();
        for (std::size_t i = 0; i < layers.size(); ++i)
            for (std::size_t j = i + 1; j < layers.size(); ++j)
                if (layers[i].name == layers[j].name)
                    throw ValidationError("duplicate layer name '" + layers[i].name + "'");
    }
};

struct PowerParams {
    double active_compute_watts{1.416};  // board busy computing
    double io_extra_watts{0.274};        // additional draw while the IO channel is busy
};

struct HardwareProfile {
    std::string name;
    double cpu_ops_per_sec{216e6};        // S_cpu; MCU range of interest is 64-480 MOPS
    double io_bytes_per_sec{20e6};        // S_io; DMA+SD path, 10-40 MB/s
    double io_fixed_overhead_sec{1e-3};   // per-transaction setup cost
    Bytes sram_bytes{512 * 1024};
    Bytes flash_capacity_bytes{64'000'000'000ull};  // external card, decimal GB as sold
    std::uint64_t flash_cell_cycles{10'000};
    PowerParams power{};

    void validate() const {
        if (cpu_ops_per_sec <= 0 || io_bytes_per_sec <= 0)
            throw ValidationError("hardware profile: rates must be positive");
        if (io_fixed_overhead_sec < 0)
            throw ValidationError("hardware profile: negative io overhead");
        if (sram_bytes == 0) throw ValidationError("hardware profile: zero SRAM");
    }
};

enum class LayerClass { kComputeBound, kIOBound, kInsignificant };

inline const char* to_string(LayerClass c) {
    switch (c) {
        case LayerClass::kComputeBound: return "compute-bound";
        case LayerClass::kIOBound: return "io-bound";
        case LayerClass::kInsignificant: return "insignificant";
    }
    return "?";
}

inline constexpr double kDefaultEpsilonFrac = 0.01;

inline double normalized_intensity(const LayerSpec& layer, const HardwareProfile& hw) {
    hw.validate();
    const Bytes q = layer.moved_bytes();
    if (q == 0)
        throw ValidationError("layer '" + layer.name + "': degenerate layer, Q = 0");
    const double compute_delay = static_cast<double>(layer.ops) / hw.cpu_ops_per_sec;
    const double io_delay = static_cast<double>(q) / hw.io_bytes_per_sec;
    return compute_delay / io_delay;
}

// Classification needs network totals to decide insignificance, so the owning
// NNSpec comes along. epsilon_frac must bound BOTH the ops share and the bytes
// share for a layer to drop out.
inline LayerClass classify_layer(const LayerSpec& layer, const NNSpec& nn,
                                 const HardwareProfile& hw,
                                 double epsilon_frac = kDefaultEpsilonFrac) {
    const double ops_frac =
        nn.total_ops() == 0 ? 0.0
                            : static_cast<double>(layer.ops) / static_cast<double>(nn.total_ops());
    const double bytes_frac = static_cast<double>(layer.moved_bytes()) /
                              static_cast<double>(nn.total_moved_bytes());
    if (ops_frac < epsilon_frac && bytes_frac < epsilon_frac) return LayerClass::kInsignificant;
    return normalized_intensity(layer, hw) > 1.0 ? LayerClass::kComputeBound
                                                 : LayerClass::kIOBound;
}

struct ClassCounts {
    int compute_bound{0};
    int io_bound{0};
    int insignificant{0};
};

inline std::vector<LayerClass> classify_layers(const NNSpec& nn, const HardwareProfile& hw,
                                               double epsilon_frac = kDefaultEpsilonFrac) {
    std::vector<LayerClass> out;
    out.reserve(nn.layers.size());
    for (const auto& l : nn.layers) out.push_back(classify_layer(l, nn, hw, epsilon_frac));
    return out;
}

inline ClassCounts classify_network(const NNSpec& nn, const HardwareProfile& hw,
                                    double epsilon_frac = kDefaultEpsilonFrac) {
    ClassCounts c;
    for (LayerClass lc : classify_layers(nn, hw, epsilon_frac)) {
        if (lc == LayerClass::kComputeBound) ++c.compute_bound;
        else if (lc == LayerClass::kIOBound) ++c.io_bound;
        else ++c.insignificant;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Workload derivation from structural layer shapes (int8 by default).
// ---------------------------------------------------------------------------

namespace detail {
inline void require_positive(long long v, const char* what, const std::string& layer) {
    if (v <= 0)
        throw ValidationError("layer '" + layer + "': " + what + " must be positive");
}
}  // namespace detail

struct ConvShape {
    int kernel{0};
    int in_channels{0};
    int out_channels{0};
    int groups{1};
    int in_h{0}, in_w{0};
    int out_h{0}, out_w{0};
    int elem_bytes{1};
};

inline LayerSpec derive_conv(const std::string& name, const ConvShape& s) {
    detail::require_positive(s.kernel, "kernel", name);
    detail::require_positive(s.in_channels, "in_channels", name);
    detail::require_positive(s.out_channels, "out_channels", name);
    detail::require_positive(s.groups, "groups", name);
    detail::require_positive(s.in_h, "in_h", name);
    detail::require_positive(s.in_w, "in_w", name);
    detail::require_positive(s.out_h, "out_h", name);
    detail::require_positive(s.out_w, "out_w", name);
    detail::require_positive(s.elem_bytes, "elem_bytes", name);
    if (s.in_channels % s.groups != 0)
        throw ValidationError("layer '" + name + "': groups must divide in_channels");
    const std::uint64_t k2 = static_cast<std::uint64_t>(s.kernel) * s.kernel;
    const std::uint64_t cig = static_cast<std::uint64_t>(s.in_channels / s.groups);
    const std::uint64_t macs =
        k2 * cig * s.out_channels * static_cast<std::uint64_t>(s.out_h) * s.out_w;
    LayerSpec l;
    l.name = name;
    l.kind = LayerKind::kConv;
    l.input_bytes = static_cast<Bytes>(s.in_h) * s.in_w * s.in_channels * s.elem_bytes;
    l.weight_bytes = k2 * cig * s.out_channels * s.elem_bytes;
    l.output_bytes = static_cast<Bytes>(s.out_h) * s.out_w * s.out_channels * s.elem_bytes;
    l.ops = 2 * macs;
    return l;
}

struct DepthwiseShape {
    int kernel{0};
    int channels{0};
    int in_h{0}, in_w{0};
    int out_h{0}, out_w{0};
    int elem_bytes{1};
};

inline LayerSpec derive_depthwise(const std::string& name, const DepthwiseShape& s) {
    detail::require_positive(s.kernel, "kernel", name);
    detail::require_positive(s.channels, "channels", name);
    detail::require_positive(s.in_h, "in_h", name);
    detail::require_positive(s.in_w, "in_w", name);
    detail::require_positive(s.out_h, "out_h", name);
    detail::require_positive(s.out_w, "out_w", name);
    const std::uint64_t k2 = static_cast<std::uint64_t>(s.kernel) * s.kernel;
    const std::uint64_t macs =
        k2 * s.channels * static_cast<std::uint64_t>(s.out_h) * s.out_w;
    LayerSpec l;
    l.name = name;
    l.kind = LayerKind::kDepthwiseConv;
    l.input_bytes = static_cast<Bytes>(s.in_h) * s.in_w * s.channels * s.elem_bytes;
    l.weight_bytes = k2 * s.channels * s.elem_bytes;
    l.output_bytes = static_cast<Bytes>(s.out_h) * s.out_w * s.channels * s.elem_bytes;
    l.ops = 2 * macs;
    return l;
}

struct PointwiseShape {
    int in_channels{0};
    int out_channels{0};
    int h{0}, w{0};  // 1x1 kernel, spatial dims unchanged
    int elem_bytes{1};
};

inline LayerSpec derive_pointwise(const std::string& name, const PointwiseShape& s) {
    detail::require_positive(s.in_channels, "in_channels", name);
    detail::require_positive(s.out_channels, "out_channels", name);
    detail::require_positive(s.h, "h", name);
    detail::require_positive(s.w, "w", name);
    const std::uint64_t macs = static_cast<std::uint64_t>(s.in_channels) * s.out_channels *
                               static_cast<std::uint64_t>(s.h) * s.w;
    LayerSpec l;
    l.name = name;
    l.kind = LayerKind::kPointwiseConv;
    l.input_bytes = static_cast<Bytes>(s.h) * s.w * s.in_channels * s.elem_bytes;
    l.weight_bytes = static_cast<Bytes>(s.in_channels) * s.out_channels * s.elem_bytes;
    l.output_bytes = static_cast<Bytes>(s.h) * s.w * s.out_channels * s.elem_bytes;
    l.ops = 2 * macs;
    return l;
}

struct FullyConnectedShape {
    int in_features{0};
    int out_features{0};
    int elem_bytes{1};
};

inline LayerSpec derive_fully_connected(const std::string& name, const FullyConnectedShape& s) {
    detail::require_positive(s.in_features, "in_features", name);
    detail::require_positive(s.out_features, "out_features", name);
    const std::uint64_t macs = static_cast<std::uint64_t>(s.in_features) * s.out_features;
    LayerSpec l;
    l.name = name;
    l.kind = LayerKind::kFullyConnected;
    l.input_bytes = static_cast<Bytes>(s.in_features) * s.elem_bytes;
    l.weight_bytes = macs * s.elem_bytes;
    l.output_bytes = static_cast<Bytes>(s.out_features) * s.elem_bytes;
    l.ops = 2 * macs;
    return l;
}

struct PoolShape {
    int window{0};
    int channels{0};
    int in_h{0}, in_w{0};
    int out_h{0}, out_w{0};
    int elem_bytes{1};
};

inline LayerSpec derive_pool(const std::string& name, const PoolShape& s) {
    detail::require_positive(s.window, "window", name);
    detail::require_positive(s.channels, "channels", name);
    detail::require_positive(s.in_h, "in_h", name);
    detail::require_positive(s.in_w, "in_w", name);
    detail::require_positive(s.out_h, "out_h", name);
    detail::require_positive(s.out_w, "out_w", name);
    LayerSpec l;
    l.name = name;
    l.kind = LayerKind::kPool;
    l.input_bytes = static_cast<Bytes>(s.in_h) * s.in_w * s.channels * s.elem_bytes;
    l.weight_bytes = 0;
    l.output_bytes = static_cast<Bytes>(s.out_h) * s.out_w * s.channels * s.elem_bytes;
    // one op per window element visited
    l.ops = static_cast<std::uint64_t>(s.window) * s.window * s.out_h * s.out_w * s.channels;
    return l;
}

inline LayerSpec derive_relu(const std::string& name, std::uint64_t elements, int elem_bytes = 1) {
    detail::require_positive(static_cast<long long>(elements), "elements", name);
    LayerSpec l;
    l.name = name;
    l.kind = LayerKind::kRelu;
    l.input_bytes = elements * elem_bytes;
    l.weight_bytes = 0;
    l.output_bytes = elements * elem_bytes;
    l.ops = elements;
    return l;
}

}  // namespace swapsim
