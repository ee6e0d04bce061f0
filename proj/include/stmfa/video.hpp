#pragma once

#include "stmfa/tensor.hpp"

#include <utility>

namespace stmfa {

// Rank-4 (T, H, W, C) clip. The universal carrier for input sequences,
// predictions and temporal sub-band stacks. value_range describes the
// nominal sample interval; clips produced by the scene renderer stay inside
// it, sub-band stacks generally do not.
class VideoTensor {
public:
    VideoTensor() = default;
    explicit VideoTensor(Tensor frames, std::pair<double, double> value_range = {0.0, 1.0});
    static VideoTensor zeros(std::size_t t, std::size_t h, std::size_t w, std::size_t c);

    std::size_t frame_count() const { return frames_.extent(0); }
    std::size_t height() const { return frames_.extent(1); }
    std::size_t width() const { return frames_.extent(2); }
    std::size_t channels() const { return frames_.extent(3); }
    std::size_t frame_numel() const { return height() * width() * channels(); }

    const Tensor& frames() const { return frames_; }
    Tensor& frames() { return frames_; }
    std::pair<double, double> value_range() const { return value_range_; }

    // Copy of frame t as an (H, W, C) tensor.
    Tensor frame(std::size_t t) const;
    void set_frame(std::size_t t, const Tensor& frame);

    // Frames [first, first + count) as a new clip.
    VideoTensor slice_time(std::size_t first, std::size_t count) const;

    bool within_range() const;

private:
    Tensor frames_;
    std::pair<double, double> value_range_{0.0, 1.0};
};

} // namespace stmfa
